#pragma once

#include <optional>
#include <utility>

namespace relbound {

/// Grid and search settings for the shooting solver. Unset optionals take level-dependent
/// defaults: rho_max = 50 + 10n, match point at the outer classical turning point, and a
/// bracket of ±0.45 around the zeroth-order beta.
struct ShootingConfig {
    double rho_min = 1e-6;
    std::optional<double> rho_max;
    int steps = 20000;  ///< RK4 steps across [rho_min, rho_max] on a logarithmic grid
    std::optional<double> match_point;
    std::optional<std::pair<double, double>> bracket;
    double bisection_tol = 1e-12;
    int max_bisections = 200;
};

struct EigenResult {
    double beta_num = 0.0;
    double mismatch = 0.0;  ///< jump in u'/u (d/d rho) across the match point at beta_num
    int node_count = 0;
    int iterations = 0;  ///< bisection steps
    double match_point = 0.0;
};

/// Shoots on the approximate radial equation
///   f'' - f' + [(beta + d0/(2beta))/rho + (Zα² - l(l+1) - 3d0/2 + d0/beta)/rho²] f = 0
/// integrated as u = e^(-rho/2) f, with d0 held fixed. Throws ShootingError on bracket failure
/// or overflow and SupercriticalError when no regular start exists.
EigenResult shoot_eigenvalue_approx(int l, double zalpha, double d0, int n_r, const ShootingConfig& config = {});

/// Shoots on the full radial equation for u (before the small-d0 simplification). Its
/// coefficients contain d0/(beta·rho); beta there is the current bisection iterate. The
/// outward start uses the regular Frobenius behaviour of the approximate equation.
/// Zero crossings below rho = d0/beta are not counted in node_count: for l = 0 the solution
/// oscillates there. Additionally throws ShootingError when 1 + d0/(beta·rho) vanishes inside
/// the window.
EigenResult shoot_eigenvalue_full(int l, double zalpha, double d0, double beta_hint, int n_r,
                                  const ShootingConfig& config = {});

struct BetaComparison {
    double beta_closed = 0.0;
    double beta_num = 0.0;
    double abs_gap = 0.0;
    double rel_gap = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Relative comparison |beta_num - beta_closed| / |beta_closed| against tolerance.
BetaComparison compare_beta(double beta_closed, const EigenResult& result, double tolerance = 1e-8);

/// Gap between the full-equation and approximate-equation eigenvalues, relative to beta_approx,
/// and its ratio to d0 (the constant C in |gap| ≤ C·d0).
struct ApproximationGap {
    double beta_approx = 0.0;
    double beta_full = 0.0;
    double rel_gap = 0.0;
    double d0 = 0.0;
    double constant = 0.0;  ///< rel_gap / |d0|; 0 when d0 = 0
    double bound = 10.0;
    bool pass = false;
};

ApproximationGap approximation_gap(const EigenResult& approx, const EigenResult& full, double d0,
                                   double bound = 10.0);

}  // namespace relbound
