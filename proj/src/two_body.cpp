#include "relbound/two_body.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relbound/errors.hpp"

namespace relbound {

namespace {

double rel_diff(double lhs, double rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0.0 ? 0.0 : (lhs - rhs) / scale;
}

// sqrt(p² + m²) - m without cancellation for p ≪ m.
double kinetic(double p, double m) {
    const double p2 = p * p;
    return p2 / (std::sqrt(p2 + m * m) + m);
}

}  // namespace

TwoBodySystem::TwoBodySystem(double m01, double m02, int Z, double alpha)
    : m01_(m01), m02_(m02), Z_(Z), alpha_(alpha) {
    if (!(m01 > 0.0) || !(m02 > 0.0) || !std::isfinite(m01) || !std::isfinite(m02)) {
        throw DomainError("rest masses must be positive and finite");
    }
    if (Z < 1) throw DomainError("charge number Z must be at least 1");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be non-negative");
}

MassAccounting system_mass(const TwoBodySystem& system, double Eprime) {
    MassAccounting acc;
    acc.m0 = system.m0();
    acc.Eprime = Eprime;
    acc.m = acc.m0 + Eprime;
    acc.delta_m = -Eprime;
    acc.E = acc.m;
    acc.physical = acc.m > 0.0;
    return acc;
}

ReducedMasses reduced_masses(const TwoBodySystem& system, double m, double Eprime) {
    const double denom = system.m0() + m;
    if (denom == 0.0) throw DomainError("reduced mass undefined: m0 + m = 0");
    ReducedMasses rm;
    rm.mu0 = 2.0 * system.m01() * system.m02() / denom;
    rm.mu = rm.mu0 + Eprime;
    return rm;
}

std::array<double, 3> identity_residuals(const TwoBodySystem& system, double m, double Eprime) {
    const double m0 = system.m0();
    if (std::abs(m - (m0 + Eprime)) > 1e-12 * m0) {
        std::ostringstream os;
        os.precision(17);
        os << "inconsistent (m, E') pair: m = " << m << " but m0 + E' = " << m0 + Eprime;
        throw InconsistentPairError(os.str());
    }
    const double m01 = system.m01();
    const double m02 = system.m02();
    const auto [mu0, mu] = reduced_masses(system, m, Eprime);
    const double s = m0 + m;

    const double lhs20 = (m01 * mu + m02 * mu0) / m01 + (m02 * mu + m01 * mu0) / m02;
    const double rhs20 = 2.0 * m * m / s;

    const double lhs21 = s * Eprime + 2.0 * m01 * m02;
    const double rhs21 = s * mu;

    const double lhs22 = lhs21 * lhs21;
    const double rhs22 = s * s * (mu0 + mu) * Eprime + 4.0 * m01 * m01 * m02 * m02;

    return {rel_diff(lhs20, rhs20), rel_diff(lhs21, rhs21), rel_diff(lhs22, rhs22)};
}

double speed_type_reduced_mass(double m01, double m02, double v1, double v2) {
    if (!(std::abs(v1) < 1.0) || !(std::abs(v2) < 1.0)) {
        throw DomainError("particle speeds must be below c");
    }
    if (!(m01 > 0.0) || !(m02 > 0.0)) throw DomainError("rest masses must be positive");
    const double m1 = m01 / std::sqrt(1.0 - v1 * v1);
    const double m2 = m02 / std::sqrt(1.0 - v2 * v2);
    return m1 * m2 / (m1 + m2) * (1.0 + v1 * v2);
}

double salpeter_dispersion(const TwoBodySystem& system, double p1, double p2, double U) {
    if (p1 < 0.0 || p2 < 0.0) throw DomainError("momentum magnitudes must be non-negative");
    return kinetic(p1, system.m01()) + kinetic(p2, system.m02()) + U;
}

}  // namespace relbound
