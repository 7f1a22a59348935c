#include "relbound/ode_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relbound/errors.hpp"
#include "relbound/spectrum.hpp"

namespace relbound {

namespace {

// Both equations are integrated in x = ln rho with state (u, v = du/dx):
//   du/dx = v,  dv/dx = p(rho)·v + q(rho)·u.
// The logarithmic variable keeps the 1/rho² terms bounded near the origin.
struct Coefficients {
    double p;
    double q;
};

struct ApproxEquation {
    double A;  // beta + d0/(2beta)
    double B;  // Zα² - l(l+1) - 3d0/2 + d0/beta

    Coefficients operator()(double rho) const { return {1.0, rho * rho * 0.25 - A * rho - B}; }
};

struct FullEquation {
    double beta;
    double kappa;  // d0/beta
    double z2;     // Zα²
    double ll;     // l(l+1)

    Coefficients operator()(double rho) const {
        const double rk = rho + kappa;
        const double half = rho + 0.5 * kappa;
        const double rho2 = rho * rho;
        const double bracket = 2.0 * kappa * rho + beta * rho2 * rho + 0.5 * beta * kappa * rho2 -
                               0.25 * rho2 * rho2 + half * half * z2 + 3.0 * kappa * kappa - rk * rk * ll;
        return {1.0 + 2.0 * kappa / rk, -bracket / (rk * rk)};
    }
};

struct State {
    double u;
    double v;
};

struct Grid {
    double x0;
    double h;
    int steps;
    int match;

    double rho(int i) const { return std::exp(x0 + h * i); }
};

struct Frobenius {
    double s;
    double b1;
    double b2;
};

Frobenius approx_start(const ApproxEquation& eq) {
    const double radicand = 0.25 - eq.B;
    if (!(radicand > 0.0)) {
        throw ShootingError("no regular Frobenius start: 1/4 - B = " + std::to_string(radicand));
    }
    Frobenius fr;
    fr.s = 0.5 + std::sqrt(radicand);
    fr.b1 = (fr.s - eq.A) / (fr.s * (fr.s + 1.0) + eq.B);
    fr.b2 = fr.b1 * (fr.s + 1.0 - eq.A) / ((fr.s + 1.0) * (fr.s + 2.0) + eq.B);
    return fr;
}

State start_state(const Frobenius& fr, double rho) {
    const double e = std::exp(-0.5 * rho);
    const double f = 1.0 + fr.b1 * rho + fr.b2 * rho * rho;
    const double df = fr.s + (fr.s + 1.0) * fr.b1 * rho + (fr.s + 2.0) * fr.b2 * rho * rho;  // rho·f'/rho^s
    const double u = e * f;  // common factor rho^s dropped; only ratios matter
    return {u, e * (df - 0.5 * rho * f)};
}

// Approximate-equation coefficients for a trial beta; used for the regular start and the
// asymptotic exponent of both equations.
struct ApproxParams {
    int l;
    double zalpha;
    double d0;

    ApproxEquation operator()(double beta) const {
        return {beta + d0 / (2.0 * beta),
                zalpha * zalpha - static_cast<double>(l) * (l + 1) - 1.5 * d0 + d0 / beta};
    }
};

struct ApproxFactory {
    ApproxParams params;
    ApproxEquation operator()(double beta) const { return params(beta); }
    double node_floor(double) const { return 0.0; }
};

struct FullFactory {
    ApproxParams params;
    FullEquation operator()(double beta) const {
        return {beta, params.d0 / beta, params.zalpha * params.zalpha,
                static_cast<double>(params.l) * (params.l + 1)};
    }
    // For l = 0 the full equation has complex indicial exponents below rho ~ d0/beta, so the
    // solution oscillates there and zeros in that region are not counted as nodes.
    double node_floor(double beta) const { return std::max(0.0, params.d0 / beta); }
};

struct Sweep {
    State at_match;
    int nodes;
};

template <class Eq>
State rk4_step(const Eq& eq, State y, double x, double h) {
    auto deriv = [&](double xx, State s) {
        const auto c = eq(std::exp(xx));
        return State{s.v, c.p * s.v + c.q * s.u};
    };
    const State k1 = deriv(x, y);
    const State k2 = deriv(x + 0.5 * h, {y.u + 0.5 * h * k1.u, y.v + 0.5 * h * k1.v});
    const State k3 = deriv(x + 0.5 * h, {y.u + 0.5 * h * k2.u, y.v + 0.5 * h * k2.v});
    const State k4 = deriv(x + h, {y.u + h * k3.u, y.v + h * k3.v});
    return {y.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
            y.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v)};
}

constexpr double kRescaleAbove = 1e150;

template <class Eq>
Sweep integrate(const Eq& eq, const Grid& g, State y, int from, int to, double node_floor) {
    const int dir = to > from ? 1 : -1;
    const double h = dir * g.h;
    int nodes = 0;
    for (int i = from; i != to; i += dir) {
        const State next = rk4_step(eq, y, g.x0 + g.h * i, h);
        if (!std::isfinite(next.u) || !std::isfinite(next.v)) {
            throw ShootingError("integration overflow near rho = " + std::to_string(g.rho(i)));
        }
        if ((next.u > 0.0) != (y.u > 0.0) && next.u != 0.0 && y.u != 0.0 &&
            std::min(g.rho(i), g.rho(i + dir)) > node_floor) {
            ++nodes;
        }
        y = next;
        const double mag = std::max(std::abs(y.u), std::abs(y.v));
        if (mag > kRescaleAbove) {
            y.u /= mag;
            y.v /= mag;
        }
    }
    return {y, nodes};
}

struct Shot {
    double wronskian;  // normalized, sign-carrying
    double mismatch;   // d/d rho log-derivative jump
    int nodes;
};

template <class EqFactory>
Shot shoot(const EqFactory& make_eq, double beta, const Grid& g) {
    const auto eq = make_eq(beta);
    const ApproxEquation approx = make_eq.params(beta);
    const Frobenius fr = approx_start(approx);
    const double rho_min = g.rho(0);
    const double rho_max = g.rho(g.steps);
    const double floor = make_eq.node_floor(beta);
    const auto out = integrate(eq, g, start_state(fr, rho_min), 0, g.match, floor);

    // Recessive start at rho_max: u ~ rho^A e^(-rho/2), so v = (A - rho/2)·u.
    const double A = approx.A;
    const auto in = integrate(eq, g, State{1e-200, (A - 0.5 * rho_max) * 1e-200}, g.steps, g.match, floor);

    const State a = out.at_match;
    const State b = in.at_match;
    const double na = std::hypot(a.u, a.v);
    const double nb = std::hypot(b.u, b.v);
    Shot shot;
    shot.wronskian = (a.u * b.v - b.u * a.v) / (na * nb);
    const double rho_m = g.rho(g.match);
    shot.mismatch = (a.v / a.u - b.v / b.u) / rho_m;
    shot.nodes = out.nodes + in.nodes;
    return shot;
}

Grid make_grid(const ShootingConfig& cfg, int n, double beta_est, const ApproxParams& params) {
    if (!(cfg.rho_min > 0.0)) throw ShootingError("rho_min must be positive");
    if (cfg.steps < 100) throw ShootingError("at least 100 integration steps are required");
    const double rho_max = cfg.rho_max.value_or(50.0 + 10.0 * n);
    if (!(rho_max > cfg.rho_min)) throw ShootingError("rho_max must exceed rho_min");

    double match = 0.0;
    if (cfg.match_point) {
        match = *cfg.match_point;
    } else {
        const auto eq = params(beta_est);
        match = 2.0 * eq.A + 2.0 * std::sqrt(std::max(0.0, eq.A * eq.A + eq.B));
    }
    if (!(match > cfg.rho_min && match < rho_max)) {
        throw ShootingError("match point must lie strictly inside (rho_min, rho_max)");
    }
    Grid g;
    g.x0 = std::log(cfg.rho_min);
    g.steps = cfg.steps;
    g.h = (std::log(rho_max) - g.x0) / cfg.steps;
    g.match = static_cast<int>(std::lround((std::log(match) - g.x0) / g.h));
    g.match = std::clamp(g.match, 1, g.steps - 1);
    return g;
}

template <class Factory>
EigenResult bisect(const Factory& factory, const ShootingConfig& cfg, int n_r, int l, double beta_est) {
    const int n = n_r + l + 1;
    const Grid g = make_grid(cfg, n, beta_est, factory.params);
    auto [lo, hi] = cfg.bracket.value_or(std::pair{std::max(beta_est - 0.45, 1e-3), beta_est + 0.45});
    if (!(lo < hi) || !(lo > 0.0)) throw ShootingError("bracket must satisfy 0 < lo < hi");

    double w_lo = shoot(factory, lo, g).wronskian;
    const double w_hi = shoot(factory, hi, g).wronskian;
    if (!(w_lo * w_hi < 0.0)) {
        std::ostringstream os;
        os << "no sign change of the matching function in bracket [" << lo << ", " << hi << "]";
        throw ShootingError(os.str());
    }
    int it = 0;
    while (hi - lo > cfg.bisection_tol * std::max(1.0, std::abs(lo))) {
        if (++it > cfg.max_bisections) throw ShootingError("bisection did not reach the tolerance");
        const double mid = 0.5 * (lo + hi);
        const double w = shoot(factory, mid, g).wronskian;
        if (w == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((w < 0.0) == (w_lo < 0.0)) {
            lo = mid;
            w_lo = w;
        } else {
            hi = mid;
        }
    }
    EigenResult res;
    res.beta_num = 0.5 * (lo + hi);
    const Shot final_shot = shoot(factory, res.beta_num, g);
    res.mismatch = final_shot.mismatch;
    res.node_count = final_shot.nodes;
    res.iterations = it;
    res.match_point = g.rho(g.match);
    return res;
}

}  // namespace

EigenResult shoot_eigenvalue_approx(int l, double zalpha, double d0, int n_r, const ShootingConfig& config) {
    if (l < 0 || n_r < 0) throw DomainError("quantum numbers must be non-negative");
    const double beta_est = n_r + l + 1 - sigma_l_zeroth(l, zalpha);
    return bisect(ApproxFactory{{l, zalpha, d0}}, config, n_r, l, beta_est);
}

EigenResult shoot_eigenvalue_full(int l, double zalpha, double d0, double beta_hint, int n_r,
                                  const ShootingConfig& config) {
    if (l < 0 || n_r < 0) throw DomainError("quantum numbers must be non-negative");
    if (!(beta_hint > 0.0)) throw DomainError("beta hint must be positive");
    const double rho_max = config.rho_max.value_or(50.0 + 10.0 * (n_r + l + 1));
    if (d0 < 0.0) {
        const double lo = config.bracket ? config.bracket->first : std::max(beta_hint - 0.45, 1e-3);
        const double hi = config.bracket ? config.bracket->second : beta_hint + 0.45;
        // 1 + d0/(beta·rho) = 0 at rho = -d0/beta; reject if that can fall inside the window.
        const double rho_sing_max = -d0 / lo;
        const double rho_sing_min = -d0 / hi;
        if (rho_sing_max >= config.rho_min && rho_sing_min <= rho_max) {
            throw ShootingError("coefficient singularity: 1 + d0/(beta·rho) vanishes inside the integration window");
        }
    }
    sigma_l_zeroth(l, zalpha);  // supercritical guard
    return bisect(FullFactory{{l, zalpha, d0}}, config, n_r, l, beta_hint);
}

BetaComparison compare_beta(double beta_closed, const EigenResult& result, double tolerance) {
    BetaComparison c;
    c.beta_closed = beta_closed;
    c.beta_num = result.beta_num;
    c.abs_gap = std::abs(result.beta_num - beta_closed);
    c.rel_gap = beta_closed != 0.0 ? c.abs_gap / std::abs(beta_closed) : c.abs_gap;
    c.tolerance = tolerance;
    c.pass = c.rel_gap <= tolerance;
    return c;
}

ApproximationGap approximation_gap(const EigenResult& approx, const EigenResult& full, double d0, double bound) {
    ApproximationGap gap;
    gap.beta_approx = approx.beta_num;
    gap.beta_full = full.beta_num;
    gap.rel_gap = std::abs(full.beta_num - approx.beta_num) / std::abs(approx.beta_num);
    gap.d0 = d0;
    gap.bound = bound;
    gap.constant = d0 != 0.0 ? gap.rel_gap / std::abs(d0) : 0.0;
    gap.pass = d0 != 0.0 ? gap.rel_gap <= bound * std::abs(d0) : gap.rel_gap <= 1e-12;
    return gap;
}

}  // namespace relbound
