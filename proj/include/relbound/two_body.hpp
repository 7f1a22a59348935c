#pragma once

#include <array>

namespace relbound {

/// Two particles bound by a Coulomb potential -Zα/r. Masses are rest energies in MeV.
///
/// alpha = 0 is accepted: it switches the coupling off and is the free-system limit.
class TwoBodySystem {
  public:
    /// Throws DomainError unless m01 > 0, m02 > 0, Z ≥ 1 and alpha ≥ 0.
    TwoBodySystem(double m01, double m02, int Z, double alpha);

    double m01() const noexcept { return m01_; }
    double m02() const noexcept { return m02_; }
    int Z() const noexcept { return Z_; }
    double alpha() const noexcept { return alpha_; }

    /// Total rest mass m01 + m02.
    double m0() const noexcept { return m01_ + m02_; }
    double zalpha() const noexcept { return Z_ * alpha_; }
    /// Non-relativistic reduced mass m01·m02/(m01 + m02).
    double nonrel_reduced_mass() const noexcept { return m01_ * m02_ / (m01_ + m02_); }
    /// Same system with the two particles exchanged.
    TwoBodySystem swapped() const { return {m02_, m01_, Z_, alpha_}; }

  private:
    double m01_;
    double m02_;
    int Z_;
    double alpha_;
};

/// Mass bookkeeping for one value of E' (kinetic plus potential energy).
struct MassAccounting {
    double m0 = 0.0;       ///< total rest mass
    double Eprime = 0.0;   ///< negative for bound states
    double m = 0.0;        ///< system mass m0 + E'
    double delta_m = 0.0;  ///< mass defect m0 - m
    double E = 0.0;        ///< total energy, numerically equal to m
    bool physical = true;  ///< false when m ≤ 0

    bool bound() const noexcept { return Eprime < 0.0; }
    double binding_energy() const noexcept { return -Eprime; }
};

struct ReducedMasses {
    double mu0 = 0.0;  ///< 2·m01·m02/(m0 + m)
    double mu = 0.0;   ///< mu0 + E'
};

MassAccounting system_mass(const TwoBodySystem& system, double Eprime);

/// Throws DomainError when m0 + m = 0.
ReducedMasses reduced_masses(const TwoBodySystem& system, double m, double Eprime);

/// Relative residuals of the three identities linking m, E', mu0 and mu:
///   (m01·mu + m02·mu0)/m01 + (m02·mu + m01·mu0)/m02 = 2m²/(m0 + m)
///   (m0 + m)·E' + 2·m01·m02 = (m0 + m)·mu
///   ((m0 + m)·E' + 2·m01·m02)² = (m0 + m)²·(mu0 + mu)·E' + 4·m01²·m02²
/// Throws InconsistentPairError when |m - (m0 + E')| > 1e-12·m0.
std::array<double, 3> identity_residuals(const TwoBodySystem& system, double m, double Eprime);

/// Velocity-based reduced mass for collinear motion; v1, v2 are signed fractions of c.
/// Throws DomainError when |v| ≥ 1.
double speed_type_reduced_mass(double m01, double m02, double v1, double v2);

/// E' = sqrt(p1² + m01²) - m01 + sqrt(p2² + m02²) - m02 + U, with momenta as |p|c in MeV.
double salpeter_dispersion(const TwoBodySystem& system, double p1, double p2, double U);

}  // namespace relbound
