#pragma once

#include <span>
#include <vector>

#include "relbound/spectrum.hpp"
#include "relbound/two_body.hpp"

namespace relbound {

/// Maps the relative distance r (fm) onto the dimensionless radial variable rho.
///
/// alpha_prime comes from the energy side, (m0 + m)/m · sqrt((mu0 + mu)|E'|)/ħc; a0 comes from
/// the Bohr-radius side, 2m/(m0 + m) · ħc/(|mu|·alpha), with rho = 2Z·r/(beta·a0). The two agree
/// only when beta, mu and |E'| belong to the same solved level.
struct RadialScale {
    double alpha_prime = 0.0;  ///< fm⁻¹
    double a0 = 0.0;           ///< fm
    double beta = 0.0;
    int Z = 1;

    double rho(double r_fm) const noexcept { return alpha_prime * r_fm; }
    double rho_from_a0(double r_fm) const noexcept { return 2.0 * Z * r_fm / (beta * a0); }
    /// Relative disagreement between the two definitions of rho.
    double consistency_gap() const noexcept;
};

/// Throws DomainError when the level has no binding (alpha = 0) or hbar_c ≤ 0.
RadialScale radial_scale(const TwoBodySystem& system, const SpectrumLevel& level, double hbar_c);

/// Terminating Frobenius series f(rho) = Σ b_ν rho^(s+ν), b_0 = 1.
struct SeriesSolution {
    double s = 1.0;
    std::vector<double> coeffs;  ///< b_0 … b_{n_r}
    double next_coeff = 0.0;     ///< b_{n_r+1} from the recurrence; zero when quantized
    double beta = 0.0;
    double d0 = 0.0;
    double zalpha = 0.0;
    int l = 0;

    int n_r() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    /// |b_{n_r+1}| / max|b_ν|.
    double termination_ratio() const;
    /// Σ b_ν rho^ν (the polynomial factor without rho^s).
    double polynomial(double rho) const;
};

/// Positive root of s(s - 1) = l(l + 1) - Zα² + 3d0/2 - d0/beta.
/// Throws SupercriticalError unless the radicand is positive (s > 1/2).
double exponent_s(int l, double zalpha, double d0, double beta);

/// b_0 = 1 and
///   b_{ν+1} = (s + ν - beta - d0/(2beta)) / ((s + ν)(s + ν + 1) - l(l + 1) + Zα² - 3d0/2 + d0/beta) · b_ν
/// for ν = 0 … n_r. Throws DegenerateSeriesError on a vanishing denominator.
SeriesSolution recurrence_coeffs(double s, double beta, double d0, double zalpha, int l, int n_r);

/// Series for a solved level (uses the level's beta and d0).
SeriesSolution series_for_level(const SpectrumLevel& level, double zalpha);

struct RadialSamples {
    std::vector<double> r;    ///< fm
    std::vector<double> rho;
    std::vector<double> R;    ///< fm^(-3/2), normalized on the grid
    double norm_factor = 0.0;    ///< multiplier applied to the raw series
    double tail_fraction = 0.0;  ///< exact mass beyond the last grid point over total
};

/// R(rho) = rho⁻¹ e^(-rho/2) f(rho) sampled on r_grid and scaled so the trapezoid estimate of
/// ∫ R² r² dr over the grid is 1. Throws DomainError for a non-increasing or non-positive grid
/// and TailGuardError when more than 1e-8 of the probability lies beyond the grid.
RadialSamples radial_wavefunction(const RadialScale& scale, const SeriesSolution& series,
                                  std::span<const double> r_grid);

/// Number of strict sign changes, ignoring exact zeros.
int node_count(std::span<const double> samples);

}  // namespace relbound
