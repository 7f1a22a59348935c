#pragma once

#include <string>

#include "relbound/two_body.hpp"

namespace relbound {

/// Principal and orbital quantum numbers; the radial number is n - l - 1.
struct QuantumNumbers {
    int n = 1;
    int l = 0;

    /// Throws DomainError unless n ≥ 1 and 0 ≤ l ≤ n - 1.
    QuantumNumbers(int n, int l);

    int n_r() const noexcept { return n - l - 1; }
    /// Spectroscopic label such as "1S" or "3D".
    std::string label() const;
    friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Normal levels take mu > 0 and rise toward m0 with n; abnormal levels take mu < 0
/// and fall toward |m01 - m02|.
enum class Branch { Normal, Abnormal };

/// How d0 is treated on the abnormal branch, where D is large and negative.
enum class D0Policy {
    FreezeZero,     ///< d0 = 0; sigma stays at its zeroth-order value
    FullIteration,  ///< iterate d0 like the normal branch; failures are reported, not patched
};

const char* to_string(Branch branch);
const char* to_string(D0Policy policy);
Branch parse_branch(const std::string& text);
D0Policy parse_d0_policy(const std::string& text);

struct SolverConfig {
    double rel_tol = 1e-14;
    int max_iter = 200;
    D0Policy abnormal_d0_policy = D0Policy::FreezeZero;
    double damping = 1.0;  ///< sigma ← sigma + damping·(sigma' - sigma), in (0, 1]

    void validate() const;
};

/// One solved energy level. All energies and masses are in MeV.
struct SpectrumLevel {
    QuantumNumbers qn{1, 0};
    Branch branch = Branch::Normal;
    double sigma_l = 0.0;  ///< beta = n - sigma_l
    double beta = 0.0;
    double d0 = 0.0;  ///< coupling parameter actually used (0 on a frozen abnormal level)
    double D = 0.0;   ///< mu(m0 + m)/(2m²), always the computed value
    double mu0 = 0.0;
    double mu = 0.0;
    double m = 0.0;
    double E_n = 0.0;
    double Eprime = 0.0;
    int iterations = 0;
    double residual_53 = 0.0;
    bool converged = false;

    double binding() const noexcept { return -Eprime; }
};

/// Zeroth-order sigma with d0 = 0: l + 1/2 - sqrt((l + 1/2)² - Zα²).
/// Throws SupercriticalError when Zα ≥ l + 1/2.
double sigma_l_zeroth(int l, double zalpha);

/// One application of the sigma relation for given d0 and beta = n - sigma.
/// Throws ConvergenceError when the radicand is negative.
double sigma_update(int l, double zalpha, double d0, double beta);

/// Normal-branch total energy sqrt(m01² + 2·m01·m02·(1 + Zα²/β²)^(-1/2) + m02²).
double energy_normal(double m01, double m02, double zalpha, double beta);
/// Abnormal-branch total energy sqrt(m01² - 2·m01·m02·(1 + Zα²/β²)^(-1/2) + m02²).
double energy_abnormal(double m01, double m02, double zalpha, double beta);

/// Relative residual of (Zα² + β²)|E'|² - 2·mu0·(Zα² + β²)|E'| + mu0²·Zα² = 0,
/// divided by the sum of the magnitudes of its three terms (0 when all three vanish).
double residual_quadratic_53(double Eabs, double mu0, double zalpha, double beta);

/// |E'| = Zα²·mu²/((mu0 + mu)·β²). Throws DomainError when mu0 + mu = 0 or beta ≤ 0.
double binding_from_beta(double mu, double mu0, double zalpha, double beta);

/// Evaluates every level field in closed form from sigma alone. d0 is zero on the abnormal
/// branch under FreezeZero. iterations = 0 and converged = false in the result.
SpectrumLevel level_at_sigma(const TwoBodySystem& system, QuantumNumbers qn, Branch branch, double sigma,
                             D0Policy abnormal_d0_policy = D0Policy::FreezeZero);

/// Self-consistent solution of the coupled (sigma, d0, mu, m) relations.
SpectrumLevel solve_level(const TwoBodySystem& system, QuantumNumbers qn, Branch branch,
                          const SolverConfig& config = {});

/// beta satisfying beta + d0/(2beta) = n_r + s(beta) for a fixed external d0.
/// This is the closed-form eigenvalue the ODE shooting solver is checked against.
double beta_closed_form(int l, double zalpha, double d0, int n_r, double rel_tol = 1e-15, int max_iter = 500);

}  // namespace relbound
