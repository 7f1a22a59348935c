#include "relbound/radial_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "relbound/errors.hpp"

namespace relbound {

namespace {

constexpr double kTailLimit = 1e-8;

// ∫_{rho_lo}^∞ rho^(2s) e^(-rho) P(rho)² d rho, with P = Σ b_ν rho^ν.
double weighted_tail(const SeriesSolution& series, double rho_lo) {
    const auto& b = series.coeffs;
    double sum = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double a = 2.0 * series.s + static_cast<double>(i + j) + 1.0;
            const double g = rho_lo > 0.0 ? boost::math::tgamma(a, rho_lo) : boost::math::tgamma(a);
            sum += b[i] * b[j] * g;
        }
    }
    return sum;
}

}  // namespace

double RadialScale::consistency_gap() const noexcept {
    const double other = 2.0 * Z / (beta * a0);
    return std::abs(alpha_prime - other) / std::max(std::abs(alpha_prime), std::abs(other));
}

RadialScale radial_scale(const TwoBodySystem& system, const SpectrumLevel& level, double hbar_c) {
    if (!(hbar_c > 0.0)) throw DomainError("hbar_c must be positive");
    if (!(system.alpha() > 0.0) || !(level.binding() > 0.0)) {
        throw DomainError("radial scale needs a bound level (alpha > 0, |E'| > 0)");
    }
    const double m0 = system.m0();
    const double m = level.m;
    RadialScale sc;
    sc.beta = level.beta;
    sc.Z = system.Z();
    sc.alpha_prime = (m0 + m) / m * std::sqrt((level.mu0 + level.mu) * level.binding()) / hbar_c;
    sc.a0 = 2.0 * m / (m0 + m) * hbar_c / (std::abs(level.mu) * system.alpha());
    return sc;
}

double SeriesSolution::termination_ratio() const {
    double biggest = 0.0;
    for (double b : coeffs) biggest = std::max(biggest, std::abs(b));
    return std::abs(next_coeff) / biggest;
}

double SeriesSolution::polynomial(double rho) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * rho + *it;
    return acc;
}

double exponent_s(int l, double zalpha, double d0, double beta) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    const double h = l + 0.5;
    const double radicand = h * h - zalpha * zalpha + 1.5 * d0 - d0 / beta;
    if (!(radicand > 0.0)) {
        std::ostringstream os;
        os << "Frobenius radicand " << radicand << " is not positive (Zα = " << zalpha << ", l = " << l
           << ", d0 = " << d0 << ")";
        throw SupercriticalError(zalpha, l, os.str());
    }
    return 0.5 + std::sqrt(radicand);
}

SeriesSolution recurrence_coeffs(double s, double beta, double d0, double zalpha, int l, int n_r) {
    if (n_r < 0) throw DomainError("radial quantum number must be non-negative");
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    SeriesSolution sol;
    sol.s = s;
    sol.beta = beta;
    sol.d0 = d0;
    sol.zalpha = zalpha;
    sol.l = l;
    sol.coeffs.reserve(static_cast<std::size_t>(n_r) + 1);

    const double shifted_beta = beta + d0 / (2.0 * beta);
    const double constant = -static_cast<double>(l) * (l + 1) + zalpha * zalpha - 1.5 * d0 + d0 / beta;
    double b = 1.0;
    sol.coeffs.push_back(b);
    for (int nu = 0; nu <= n_r; ++nu) {
        const double sn = s + nu;
        const double denom = sn * (sn + 1.0) + constant;
        if (std::abs(denom) <= 1e-12 * std::max(1.0, sn * (sn + 1.0))) {
            throw DegenerateSeriesError("vanishing recurrence denominator at nu = " + std::to_string(nu));
        }
        b *= (sn - shifted_beta) / denom;
        if (nu < n_r) {
            sol.coeffs.push_back(b);
        } else {
            sol.next_coeff = b;
        }
    }
    return sol;
}

SeriesSolution series_for_level(const SpectrumLevel& level, double zalpha) {
    const double s = exponent_s(level.qn.l, zalpha, level.d0, level.beta);
    return recurrence_coeffs(s, level.beta, level.d0, zalpha, level.qn.l, level.qn.n_r());
}

RadialSamples radial_wavefunction(const RadialScale& scale, const SeriesSolution& series,
                                  std::span<const double> r_grid) {
    if (r_grid.size() < 2) throw DomainError("radial grid needs at least two points");
    if (!(r_grid.front() > 0.0)) throw DomainError("radial grid must be positive");
    for (std::size_t i = 1; i < r_grid.size(); ++i) {
        if (!(r_grid[i] > r_grid[i - 1])) throw DomainError("radial grid must be strictly increasing");
    }
    if (!(scale.alpha_prime > 0.0)) throw DomainError("radial scale is degenerate");

    RadialSamples out;
    out.r.assign(r_grid.begin(), r_grid.end());
    out.rho.resize(r_grid.size());
    out.R.resize(r_grid.size());
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        const double rho = scale.rho(r_grid[i]);
        out.rho[i] = rho;
        out.R[i] = std::exp((series.s - 1.0) * std::log(rho) - 0.5 * rho) * series.polynomial(rho);
    }

    double integral = 0.0;
    for (std::size_t i = 1; i < out.r.size(); ++i) {
        const double a = out.R[i - 1] * out.r[i - 1];
        const double b = out.R[i] * out.r[i];
        integral += 0.5 * (a * a + b * b) * (out.r[i] - out.r[i - 1]);
    }
    if (!(integral > 0.0) || !std::isfinite(integral)) {
        throw DomainError("radial normalization integral is not positive");
    }

    const double ap3 = scale.alpha_prime * scale.alpha_prime * scale.alpha_prime;
    const double tail = weighted_tail(series, out.rho.back()) / ap3;
    out.tail_fraction = tail / (integral + tail);
    if (out.tail_fraction > kTailLimit) {
        const double total = weighted_tail(series, 0.0);
        double rho_needed = out.rho.back();
        while (weighted_tail(series, rho_needed) > 0.1 * kTailLimit * total) rho_needed += 1.0;
        std::ostringstream os;
        os.precision(6);
        os << "grid ends at r = " << out.r.back() << " fm (rho = " << out.rho.back() << ") but "
           << out.tail_fraction << " of the probability lies beyond it; extend the grid to at least r = "
           << rho_needed / scale.alpha_prime << " fm (rho = " << rho_needed << ")";
        throw TailGuardError(os.str());
    }

    out.norm_factor = 1.0 / std::sqrt(integral);
    for (double& v : out.R) v *= out.norm_factor;
    return out;
}

int node_count(std::span<const double> samples) {
    int count = 0;
    int last = 0;
    for (double v : samples) {
        const int sign = (v > 0.0) - (v < 0.0);
        if (sign == 0) continue;
        if (last != 0 && sign != last) ++count;
        last = sign;
    }
    return count;
}

}  // namespace relbound
