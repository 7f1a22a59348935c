#include "relbound/reference_models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relbound/errors.hpp"

namespace relbound {

double connell_energy(double m, double M, double zalpha, double n_radial, double epsilon) {
    const double denom = n_radial + epsilon + 1.0;
    const double inner = 1.0 + zalpha * zalpha / (denom * denom);
    if (!(inner > 0.0)) throw DomainError("Connell formula: inner root argument must be positive");
    return std::sqrt(m * m + M * M + 2.0 * m * M / std::sqrt(inner));
}

double kg_one_body_energy(double m, double zalpha, int n, int l) {
    if (n < 1 || l < 0 || l >= n) throw DomainError("invalid quantum numbers for the Klein-Gordon level");
    const double h = l + 0.5;
    if (zalpha >= h) {
        std::ostringstream os;
        os << "supercritical coupling Zα = " << zalpha << " for l = " << l;
        throw SupercriticalError(zalpha, l, os.str());
    }
    const double z2 = zalpha * zalpha;
    const double delta = z2 / (h + std::sqrt(h * h - z2));
    const double nu = n - delta;
    const double x = z2 / (nu * nu);
    const double sq = std::sqrt(1.0 + x);
    return m * x / (sq * (1.0 + sq));
}

double bohr_binding(double mu_prime, double zalpha, int n) {
    if (n < 1) throw DomainError("n must be at least 1");
    return mu_prime * zalpha * zalpha / (2.0 * n * n);
}

bool series_applicable(const TwoBodySystem& system) {
    const double light = std::min(system.m01(), system.m02());
    const double heavy = std::max(system.m01(), system.m02());
    return light / heavy < 0.2;
}

double pionic_hydrogen_series(const TwoBodySystem& system, const SpectrumLevel& level, int num_terms) {
    if (num_terms < 2 || num_terms > 4) throw DomainError("num_terms must be 2, 3 or 4");
    const double light = std::min(system.m01(), system.m02());
    const double heavy = std::max(system.m01(), system.m02());
    const double ratio = light / heavy;
    const double zalpha = system.zalpha();
    const double y = zalpha * zalpha / (level.beta * level.beta);
    const double inv = 1.0 / (1.0 + y);
    const double c = std::sqrt(inv);

    double sum = heavy + light * c;
    if (num_terms >= 3) sum += 0.5 * light * ratio * y * inv;
    if (num_terms >= 4) sum -= 0.5 * light * ratio * ratio * y * inv * c;
    return sum;
}

double abnormal_particleium_spectrum(double m_particle, double alpha, int n, double sigma_l) {
    if (n < 1) throw DomainError("n must be at least 1");
    const double beta = n - sigma_l;
    const double x = alpha * alpha / (beta * beta);
    const double sq = std::sqrt(1.0 + x);
    const double one_minus_c = x / (sq * (1.0 + sq));
    return std::sqrt(2.0) * m_particle * std::sqrt(one_minus_c);
}

double abnormal_nonrel(double m_particle, double alpha, int n) {
    if (n < 1) throw DomainError("n must be at least 1");
    return alpha * m_particle / n;
}

ComparisonRow make_comparison_row(std::string label, double model_energy, double solver_energy, double mu_prime,
                                  double zalpha) {
    ComparisonRow row;
    row.label = std::move(label);
    row.model_energy = model_energy;
    row.solver_energy = solver_energy;
    row.gap = model_energy - solver_energy;
    if (row.gap != 0.0 && zalpha > 0.0 && zalpha < 1.0) {
        row.gap_order = std::log(std::abs(row.gap) / mu_prime) / std::log(zalpha);
    }
    return row;
}

std::vector<ComparisonRow> compare_level(const TwoBodySystem& system, const SpectrumLevel& level) {
    const double zalpha = system.zalpha();
    const double mu_prime = system.nonrel_reduced_mass();
    const double m0 = system.m0();
    const double light = std::min(system.m01(), system.m02());
    const int n = level.qn.n;
    const int l = level.qn.l;

    std::vector<ComparisonRow> rows;
    rows.push_back(make_comparison_row(
        "connell",
        connell_energy(system.m01(), system.m02(), zalpha, level.qn.n_r(), connell_epsilon(l, level.sigma_l)),
        level.E_n, mu_prime, zalpha));
    rows.push_back(make_comparison_row("kg_one_body", m0 - kg_one_body_energy(light, zalpha, n, l), level.E_n,
                                       mu_prime, zalpha));
    rows.push_back(make_comparison_row("bohr", m0 - bohr_binding(mu_prime, zalpha, n), level.E_n, mu_prime, zalpha));
    if (series_applicable(system)) {
        for (int terms = 2; terms <= 4; ++terms) {
            rows.push_back(make_comparison_row("series_" + std::to_string(terms),
                                               pionic_hydrogen_series(system, level, terms), level.E_n, mu_prime,
                                               zalpha));
        }
    }
    return rows;
}

}  // namespace relbound
