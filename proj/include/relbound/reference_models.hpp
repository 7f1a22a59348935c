#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relbound/spectrum.hpp"
#include "relbound/two_body.hpp"

namespace relbound {

/// Two-particle Sommerfeld-type level
///   E = sqrt(m² + M² + 2mM / sqrt(1 + Zα²/(n_radial + epsilon + 1)²)).
/// epsilon is a free input; epsilon = l - sigma_l reproduces energy_normal exactly.
double connell_energy(double m, double M, double zalpha, double n_radial, double epsilon);

/// epsilon for which connell_energy matches the normal level with the given l and sigma_l.
inline double connell_epsilon(int l, double sigma_l) { return l - sigma_l; }

/// One-body Klein-Gordon Coulomb binding energy (positive):
///   m·(1 - (1 + Zα²/(n - δ_l)²)^(-1/2)),  δ_l = l + 1/2 - sqrt((l + 1/2)² - Zα²).
/// Throws SupercriticalError when Zα ≥ l + 1/2.
double kg_one_body_energy(double m, double zalpha, int n, int l);

/// Non-relativistic Bohr binding mu'·Zα²/(2n²).
double bohr_binding(double mu_prime, double zalpha, int n);

/// Partial sum of the expansion of the normal level in powers of m01/m02 (m01 the light
/// particle), with y = Zα²/beta²:
///   m02 + m01(1 + y)^(-1/2) + ½·m01·(m01/m02)·y(1 + y)^(-1) - ½·m01·(m01/m02)²·y(1 + y)^(-3/2)
/// num_terms ∈ [2, 4] selects how many of these terms are summed.
double pionic_hydrogen_series(const TwoBodySystem& system, const SpectrumLevel& level, int num_terms);

/// True when the mass ratio is small enough for the series to be meaningful (m01/m02 < 0.2).
bool series_applicable(const TwoBodySystem& system);

/// Abnormal level of an equal-mass Z = 1 pair: sqrt(2)·m·sqrt(1 - (1 + α²/(n - sigma_l)²)^(-1/2)).
double abnormal_particleium_spectrum(double m_particle, double alpha, int n, double sigma_l);
/// Leading-order form α·m/n of the same spectrum.
double abnormal_nonrel(double m_particle, double alpha, int n);

struct ComparisonRow {
    std::string label;
    double model_energy = 0.0;   ///< MeV
    double solver_energy = 0.0;  ///< MeV
    double gap = 0.0;            ///< model_energy - solver_energy
    std::optional<double> gap_order;  ///< log(|gap|/mu')/log(Zα); empty when gap or Zα is zero
};

ComparisonRow make_comparison_row(std::string label, double model_energy, double solver_energy,
                                  double mu_prime, double zalpha);

/// Solver level against Connell (epsilon = l - sigma_l), the one-body Klein-Gordon level of the
/// lighter particle, the Bohr level, and (for small mass ratios) the 2-, 3- and 4-term series.
std::vector<ComparisonRow> compare_level(const TwoBodySystem& system, const SpectrumLevel& level);

}  // namespace relbound
