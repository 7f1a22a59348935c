#pragma once

#include <stdexcept>
#include <string>

namespace relbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad input value (non-positive mass, invalid quantum numbers, speed >= c, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Catalog or constants file problem: missing file, malformed record, duplicate, lookup miss.
class CatalogError : public Error {
  public:
    using Error::Error;
};

/// Zα ≥ l + 1/2: the Frobenius radicand is negative and no real bound state exists.
class SupercriticalError : public Error {
  public:
    SupercriticalError(double zalpha, int l, const std::string& what)
        : Error(what), zalpha_(zalpha), l_(l) {}

    double zalpha() const noexcept { return zalpha_; }
    int l() const noexcept { return l_; }
    double critical_zalpha() const noexcept { return l_ + 0.5; }

  private:
    double zalpha_;
    int l_;
};

/// (m, E') pair with m != m0 + E'.
class InconsistentPairError : public Error {
  public:
    using Error::Error;
};

/// Self-consistent iteration failed: no convergence, negative radicand, or β ≤ 0.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& what, double sigma, int iterations)
        : Error(what), sigma_(sigma), iterations_(iterations) {}

    /// Iterate at which the failure was detected.
    double sigma() const noexcept { return sigma_; }
    int iterations() const noexcept { return iterations_; }

  private:
    double sigma_;
    int iterations_;
};

/// Degenerate recurrence denominator in the Frobenius coefficients.
class DegenerateSeriesError : public Error {
  public:
    using Error::Error;
};

/// Sampling grid does not capture the exponential tail of the wavefunction.
class TailGuardError : public Error {
  public:
    using Error::Error;
};

/// Shooting solver failures: empty bracket, no sign change, overflow, coefficient singularity.
class ShootingError : public Error {
  public:
    using Error::Error;
};

}  // namespace relbound
