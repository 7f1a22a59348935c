#include "relbound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "relbound/errors.hpp"

namespace relbound {

namespace {

constexpr const char* kOrbitalLetters = "SPDFGHIKLMNOQRTUVWXYZ";

std::string describe(double value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
}

// 1 - (1 + x)^(-1/2) without cancellation for small x.
double one_minus_c(double x) {
    const double sq = std::sqrt(1.0 + x);
    return x / (sq * (1.0 + sq));
}

void check_supercritical(int l, double zalpha) {
    if (zalpha >= l + 0.5) {
        std::ostringstream os;
        os << "supercritical coupling: Zα = " << zalpha << " ≥ l + 1/2 = " << l + 0.5 << " for l = " << l
           << "; no real bound state";
        throw SupercriticalError(zalpha, l, os.str());
    }
}

struct BranchMasses {
    double m;
    double Eprime;
};

BranchMasses branch_masses(const TwoBodySystem& sys, Branch branch, double zalpha, double beta) {
    const double m01 = sys.m01();
    const double m02 = sys.m02();
    const double m0 = sys.m0();
    const double x = zalpha * zalpha / (beta * beta);
    const double omc = one_minus_c(x);
    const double pair = 2.0 * m01 * m02 * omc;
    if (branch == Branch::Normal) {
        // m0² - m² = 2·m01·m02·(1 - c); divide by (m0 + m) to get |E'| without cancellation.
        const double m_rough = std::sqrt(m0 * m0 - pair);
        const double binding = pair / (m0 + m_rough);
        return {m0 - binding, -binding};
    }
    const double diff = m01 - m02;
    const double m = std::sqrt(diff * diff + pair);
    // m² - m0² = -2·m01·m02·(1 + c)
    return {m, -2.0 * m01 * m02 * (2.0 - omc) / (m0 + m)};
}

}  // namespace

QuantumNumbers::QuantumNumbers(int n_, int l_) : n(n_), l(l_) {
    if (n < 1) throw DomainError("principal quantum number n must be at least 1");
    if (l < 0 || l > n - 1) {
        throw DomainError("orbital quantum number l must satisfy 0 ≤ l ≤ n - 1 (n = " + std::to_string(n) +
                          ", l = " + std::to_string(l) + ")");
    }
}

std::string QuantumNumbers::label() const {
    std::string s = std::to_string(n);
    if (l < 21) {
        s += kOrbitalLetters[l];
    } else {
        s += "[l=" + std::to_string(l) + "]";
    }
    return s;
}

const char* to_string(Branch branch) { return branch == Branch::Normal ? "normal" : "abnormal"; }

const char* to_string(D0Policy policy) { return policy == D0Policy::FreezeZero ? "freeze" : "full"; }

Branch parse_branch(const std::string& text) {
    if (text == "normal") return Branch::Normal;
    if (text == "abnormal") return Branch::Abnormal;
    throw DomainError("unknown branch '" + text + "' (expected normal or abnormal)");
}

D0Policy parse_d0_policy(const std::string& text) {
    if (text == "freeze" || text == "freeze-zero") return D0Policy::FreezeZero;
    if (text == "full" || text == "full-iteration") return D0Policy::FullIteration;
    throw DomainError("unknown d0 policy '" + text + "' (expected freeze or full)");
}

void SolverConfig::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
    if (max_iter < 1) throw DomainError("max_iter must be at least 1");
    if (!(damping > 0.0 && damping <= 1.0)) throw DomainError("damping must lie in (0, 1]");
}

double sigma_l_zeroth(int l, double zalpha) {
    if (l < 0) throw DomainError("l must be non-negative");
    check_supercritical(l, zalpha);
    const double h = l + 0.5;
    const double z2 = zalpha * zalpha;
    return z2 / (h + std::sqrt(h * h - z2));
}

double sigma_update(int l, double zalpha, double d0, double beta) {
    const double h = l + 0.5;
    const double shift = zalpha * zalpha - 1.5 * d0 + d0 / beta;
    const double radicand = h * h - shift;
    if (!(radicand >= 0.0)) {
        throw ConvergenceError("negative radicand " + describe(radicand) + " in the sigma relation (d0 = " +
                                   describe(d0) + ", beta = " + describe(beta) + ")",
                               std::numeric_limits<double>::quiet_NaN(), 0);
    }
    // l + 1/2 + d0/(2β) - sqrt(h² - shift), rationalized.
    return d0 / (2.0 * beta) + shift / (h + std::sqrt(radicand));
}

double energy_normal(double m01, double m02, double zalpha, double beta) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    // m01² + 2·m01·m02·c + m02² = m0² - 2·m01·m02·(1 - c); exact at Zα = 0
    const double m0 = m01 + m02;
    return std::sqrt(m0 * m0 - 2.0 * m01 * m02 * one_minus_c(zalpha * zalpha / (beta * beta)));
}

double energy_abnormal(double m01, double m02, double zalpha, double beta) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    const double x = zalpha * zalpha / (beta * beta);
    const double diff = m01 - m02;
    // Same radicand as m01² - 2·m01·m02·c + m02², written as a sum of non-negative terms.
    const double radicand = diff * diff + 2.0 * m01 * m02 * one_minus_c(x);
    if (!(radicand >= 0.0)) throw DomainError("abnormal-branch radicand is negative");
    return std::sqrt(radicand);
}

double residual_quadratic_53(double Eabs, double mu0, double zalpha, double beta) {
    const double z2 = zalpha * zalpha;
    const double k = z2 + beta * beta;
    const double a = k * Eabs * Eabs;
    const double b = 2.0 * mu0 * k * Eabs;
    const double c = mu0 * mu0 * z2;
    const double norm = std::abs(a) + std::abs(b) + std::abs(c);
    return norm > 0.0 ? std::abs(a - b + c) / norm : 0.0;
}

double binding_from_beta(double mu, double mu0, double zalpha, double beta) {
    if (mu0 + mu == 0.0) throw DomainError("binding undefined: mu0 + mu = 0");
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    return zalpha * zalpha * mu * mu / ((mu0 + mu) * beta * beta);
}

SpectrumLevel level_at_sigma(const TwoBodySystem& system, QuantumNumbers qn, Branch branch, double sigma,
                             D0Policy abnormal_d0_policy) {
    const double zalpha = system.zalpha();
    SpectrumLevel lv;
    lv.qn = qn;
    lv.branch = branch;
    lv.sigma_l = sigma;
    lv.beta = qn.n - sigma;
    if (!(lv.beta > 0.0)) {
        throw ConvergenceError("beta = n - sigma is not positive (" + describe(lv.beta) + ")", sigma, 0);
    }
    const auto [m, Eprime] = branch_masses(system, branch, zalpha, lv.beta);
    lv.m = m;
    lv.E_n = m;
    lv.Eprime = Eprime;

    const double m0 = system.m0();
    const double c = 1.0 / std::sqrt(1.0 + zalpha * zalpha / (lv.beta * lv.beta));
    lv.mu0 = 2.0 * system.m01() * system.m02() / (m0 + m);
    lv.mu = branch == Branch::Normal ? lv.mu0 * c : -lv.mu0 * c;
    lv.D = lv.mu * (m0 + m) / (2.0 * m * m);
    const bool frozen = branch == Branch::Abnormal && abnormal_d0_policy == D0Policy::FreezeZero;
    lv.d0 = frozen ? 0.0 : 2.0 * zalpha * zalpha * lv.D;
    lv.residual_53 = zalpha > 0.0 ? residual_quadratic_53(-Eprime, lv.mu0, zalpha, lv.beta) : 0.0;
    return lv;
}

SpectrumLevel solve_level(const TwoBodySystem& system, QuantumNumbers qn, Branch branch, const SolverConfig& config) {
    config.validate();
    const double zalpha = system.zalpha();
    const int l = qn.l;
    double sigma = sigma_l_zeroth(l, zalpha);

    for (int it = 1; it <= config.max_iter; ++it) {
        SpectrumLevel lv;
        double next = 0.0;
        try {
            lv = level_at_sigma(system, qn, branch, sigma, config.abnormal_d0_policy);
            next = sigma_update(l, zalpha, lv.d0, lv.beta);
        } catch (const ConvergenceError& e) {
            throw ConvergenceError(std::string(e.what()) + " at iteration " + std::to_string(it) + ", sigma = " +
                                       describe(sigma),
                                   sigma, it);
        }
        const double step = next - sigma;
        if (!std::isfinite(next)) {
            throw ConvergenceError("sigma iterate is not finite at iteration " + std::to_string(it), sigma, it);
        }
        if (std::abs(step) <= config.rel_tol * std::max(1.0, std::abs(sigma))) {
            SpectrumLevel out = level_at_sigma(system, qn, branch, next, config.abnormal_d0_policy);
            out.iterations = it;
            out.converged = true;
            return out;
        }
        sigma += config.damping * step;
    }
    throw ConvergenceError("sigma iteration did not converge within " + std::to_string(config.max_iter) +
                               " iterations (" + qn.label() + ", " + to_string(branch) + " branch)",
                           sigma, config.max_iter);
}

double beta_closed_form(int l, double zalpha, double d0, int n_r, double rel_tol, int max_iter) {
    if (n_r < 0) throw DomainError("radial quantum number must be non-negative");
    const int n = n_r + l + 1;
    double beta = n - sigma_l_zeroth(l, zalpha);
    for (int it = 0; it < max_iter; ++it) {
        const double next = n - sigma_update(l, zalpha, d0, beta);
        if (!(next > 0.0)) throw ConvergenceError("beta left the positive axis", n - next, it);
        if (std::abs(next - beta) <= rel_tol * next) return next;
        beta = next;
    }
    throw ConvergenceError("closed-form beta did not converge", n - beta, max_iter);
}

}  // namespace relbound
