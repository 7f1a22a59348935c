#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "relbound/constants.hpp"
#include "relbound/errors.hpp"
#include "relbound/ode_verifier.hpp"
#include "relbound/radial_series.hpp"
#include "relbound/reference_models.hpp"
#include "relbound/spectrum.hpp"
#include "table.hpp"

namespace relbound::cli {

namespace {

// Anything the user can fix by changing flags or config files maps to exit 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::string catalog;
    std::string constants;
    std::string format = "pretty";
    std::string alpha;
};

struct PairOptions {
    std::string particle1;
    std::string particle2;
    int Z = 1;
};

struct SpectrumOptions {
    int n_max = 1;
    std::optional<int> l;
    std::string branch = "normal";
    std::string abnormal_d0 = "freeze";
    std::string tol = "1e-14";
    int max_iter = 200;
};

struct VerifyOptions {
    int n = 1;
    int l = 0;
    std::string which = "approx";
    std::string d0;
    std::vector<std::string> bracket;
    int steps = 20000;
    std::string tol = "1e-8";
};

struct LevelOptions {
    int n = 1;
    int l = 0;
};

struct WaveOptions {
    int n = 1;
    int l = 0;
    std::string r_max;
    int points = 2000;
    std::string branch = "normal";
};

double number(const std::string& text, const char* what) {
    try {
        return parse_double(text);
    } catch (const Error&) {
        throw UsageError(std::string("invalid number for ") + what + ": '" + text + "'");
    }
}

struct Context {
    Catalog catalog;
    PhysicalConstants constants;
    Format format = Format::Pretty;
};

Context load_context(const GlobalOptions& g) {
    Context ctx;
    try {
        ctx.format = parse_format(g.format);
        ctx.catalog = load_catalog(g.catalog.empty() ? default_catalog_path() : std::filesystem::path(g.catalog));
        ctx.constants =
            load_constants(g.constants.empty() ? default_constants_path() : std::filesystem::path(g.constants));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (!g.alpha.empty()) {
        const double a = number(g.alpha, "--alpha");
        // zero is allowed here: it is the free (non-interacting) limit
        if (!(a >= 0.0 && a < 0.01)) throw UsageError("--alpha must lie in [0, 0.01)");
        ctx.constants.alpha = a;
    }
    return ctx;
}

TwoBodySystem make_system(const Context& ctx, const PairOptions& p) {
    try {
        const auto& a = lookup_particle(ctx.catalog, p.particle1);
        const auto& b = lookup_particle(ctx.catalog, p.particle2);
        return TwoBodySystem(a.rest_energy, b.rest_energy, p.Z, ctx.constants.alpha);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

QuantumNumbers make_qn(int n, int l) {
    try {
        return QuantumNumbers(n, l);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

template <class T>
T parse_enum(T (*fn)(const std::string&), const std::string& text) {
    try {
        return fn(text);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

Cell opt_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumJob {
    QuantumNumbers qn;
    std::optional<SpectrumLevel> level;
    std::string error;
};

int cmd_spectrum(const Context& ctx, const PairOptions& pair, const SpectrumOptions& o, std::ostream& out,
                 std::ostream& err) {
    const TwoBodySystem sys = make_system(ctx, pair);
    if (o.n_max < 1) throw UsageError("--n-max must be at least 1");
    if (o.l && *o.l < 0) throw UsageError("--l must be non-negative");
    const Branch branch = parse_enum(parse_branch, o.branch);
    SolverConfig cfg;
    cfg.rel_tol = number(o.tol, "--tol");
    cfg.max_iter = o.max_iter;
    cfg.abnormal_d0_policy = parse_enum(parse_d0_policy, o.abnormal_d0);
    try {
        cfg.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }

    std::vector<SpectrumJob> jobs;
    for (int n = 1; n <= o.n_max; ++n) {
        for (int l = 0; l < n; ++l) {
            if (o.l && *o.l != l) continue;
            jobs.push_back({QuantumNumbers(n, l), std::nullopt, {}});
        }
    }

    // Rows are computed by a small worker pool; each worker writes only its own slot, so the
    // output order is the (n, l) order of `jobs` whatever the completion order.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                jobs[i].level = solve_level(sys, jobs[i].qn, branch, cfg);
            } catch (const std::exception& e) {
                jobs[i].error = e.what();
            }
        }
    };
    const std::size_t nthreads =
        std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
        worker();
    }

    Table table;
    table.columns = {"n",  "l",      "label", "branch", "sigma_l",    "beta",     "d0",          "D",
                     "mu0", "mu",    "m",     "E_n",    "Eprime",     "binding",  "binding_unit", "iterations",
                     "residual_53", "converged", "error"};
    bool failed = false;
    for (const auto& job : jobs) {
        std::vector<Cell> row{std::int64_t{job.qn.n}, std::int64_t{job.qn.l}, job.qn.label(),
                              std::string(to_string(branch))};
        if (job.level) {
            const auto& lv = *job.level;
            row.insert(row.end(), {lv.sigma_l, lv.beta, lv.d0, lv.D, lv.mu0, lv.mu, lv.m, lv.E_n, lv.Eprime,
                                   lv.binding(), format_energy_unit(lv.binding()),
                                   std::int64_t{lv.iterations}, lv.residual_53, lv.converged, std::monostate{}});
        } else {
            failed = true;
            row.resize(table.columns.size() - 2, std::monostate{});
            row.push_back(false);
            row.push_back(job.error);
            err << "error: " << job.qn.label() << " (n=" << job.qn.n << ", l=" << job.qn.l << "): " << job.error
                << '\n';
        }
        table.add_row(std::move(row));
    }
    write_table(table, ctx.format, out);
    return failed ? kExitCompute : kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Context& ctx, const PairOptions& pair, const VerifyOptions& o, std::ostream& out,
               std::ostream& err) {
    const TwoBodySystem sys = make_system(ctx, pair);
    const QuantumNumbers qn = make_qn(o.n, o.l);
    if (o.which != "approx" && o.which != "full" && o.which != "both") {
        throw UsageError("--which must be approx, full or both");
    }
    const double tol = number(o.tol, "--tol");
    ShootingConfig cfg;
    if (o.steps < 100) throw UsageError("--steps must be at least 100");
    cfg.steps = o.steps;
    if (!o.bracket.empty()) {
        if (o.bracket.size() != 2) throw UsageError("--bracket takes two values");
        cfg.bracket = std::pair{number(o.bracket[0], "--bracket"), number(o.bracket[1], "--bracket")};
    }

    const double zalpha = sys.zalpha();
    const int n_r = qn.n_r();
    double d0 = 0.0;
    if (!o.d0.empty()) {
        d0 = number(o.d0, "--d0");
    } else {
        d0 = solve_level(sys, qn, Branch::Normal).d0;
    }
    const double beta_closed = beta_closed_form(qn.l, zalpha, d0, n_r);

    Table table;
    table.columns = {"method", "beta_closed", "beta_num", "reference", "rel_gap", "bound", "constant",
                     "nodes",  "expected_nodes", "mismatch", "bisections", "match_point", "d0", "pass"};
    bool all_pass = true;

    std::optional<EigenResult> approx;
    if (o.which != "full") {
        approx = shoot_eigenvalue_approx(qn.l, zalpha, d0, n_r, cfg);
        const auto cmp = compare_beta(beta_closed, *approx, tol);
        const bool pass = cmp.pass && approx->node_count == n_r;
        all_pass = all_pass && pass;
        table.add_row({std::string("approx"), beta_closed, approx->beta_num, std::string("closed_form"), cmp.rel_gap,
                       tol, std::monostate{}, std::int64_t{approx->node_count}, std::int64_t{n_r}, approx->mismatch,
                       std::int64_t{approx->iterations}, approx->match_point, d0, pass});
    }
    if (o.which != "approx") {
        const double hint = approx ? approx->beta_num : beta_closed;
        const auto full = shoot_eigenvalue_full(qn.l, zalpha, d0, hint, n_r, cfg);
        EigenResult reference;
        reference.beta_num = beta_closed;
        if (approx) reference = *approx;
        const auto gap = approximation_gap(reference, full, d0);
        const bool pass = gap.pass && full.node_count == n_r;
        all_pass = all_pass && pass;
        table.add_row({std::string("full"), beta_closed, full.beta_num,
                       std::string(approx ? "approx" : "closed_form"), gap.rel_gap,
                       d0 != 0.0 ? gap.bound * std::abs(d0) : 1e-12, gap.constant, std::int64_t{full.node_count},
                       std::int64_t{n_r}, full.mismatch, std::int64_t{full.iterations}, full.match_point, d0, pass});
    }
    write_table(table, ctx.format, out);
    if (!all_pass) {
        err << "verification failed for " << qn.label() << '\n';
        return kExitCompute;
    }
    return kExitOk;
}

// ---- compare --------------------------------------------------------------

int cmd_compare(const Context& ctx, const PairOptions& pair, const LevelOptions& o, std::ostream& out) {
    const TwoBodySystem sys = make_system(ctx, pair);
    const QuantumNumbers qn = make_qn(o.n, o.l);
    const auto level = solve_level(sys, qn, Branch::Normal);
    const auto rows = compare_level(sys, level);

    Table table;
    table.columns = {"label", "model_energy", "solver_energy", "gap", "rel_gap", "gap_order"};
    for (const auto& r : rows) {
        table.add_row({r.label, r.model_energy, r.solver_energy, r.gap, r.gap / r.solver_energy,
                       opt_cell(r.gap_order)});
    }
    write_table(table, ctx.format, out);
    return kExitOk;
}

// ---- wavefunction ---------------------------------------------------------

int cmd_wavefunction(const Context& ctx, const PairOptions& pair, const WaveOptions& o, std::ostream& out,
                     std::ostream& err) {
    const TwoBodySystem sys = make_system(ctx, pair);
    const QuantumNumbers qn = make_qn(o.n, o.l);
    const Branch branch = parse_enum(parse_branch, o.branch);
    if (o.points < 2) throw UsageError("--points must be at least 2");

    const auto level = solve_level(sys, qn, branch);
    const auto scale = radial_scale(sys, level, ctx.constants.hbar_c);
    const auto series = series_for_level(level, sys.zalpha());

    double r_max = 0.0;
    if (!o.r_max.empty()) {
        r_max = number(o.r_max, "--r-max");
        if (!(r_max > 0.0)) throw UsageError("--r-max must be positive");
    } else {
        r_max = (40.0 + 4.0 * (series.s + qn.n_r())) / scale.alpha_prime;
    }
    std::vector<double> grid(static_cast<std::size_t>(o.points));
    for (int i = 0; i < o.points; ++i) grid[static_cast<std::size_t>(i)] = r_max * (i + 1) / o.points;

    const auto samples = radial_wavefunction(scale, series, grid);
    const int nodes = node_count(samples.R);

    Table table;
    table.columns = {"r_fm", "rho", "R"};
    table.comments = {"nodes=" + std::to_string(nodes), "level=" + qn.label() + " branch=" + to_string(branch),
                      "alpha_prime_per_fm=" + format_number(scale.alpha_prime),
                      "tail_fraction=" + format_number(samples.tail_fraction)};
    for (std::size_t i = 0; i < samples.r.size(); ++i) table.add_row({samples.r[i], samples.rho[i], samples.R[i]});
    if (ctx.format == Format::Json) {
        for (const auto& c : table.comments) err << "# " << c << '\n';
    }
    write_table(table, ctx.format, out);
    return kExitOk;
}

void add_pair(CLI::App* sub, PairOptions& p) {
    sub->add_option("particle1", p.particle1, "first particle (catalog name)")->required();
    sub->add_option("particle2", p.particle2, "second particle (catalog name)")->required();
    sub->add_option("--Z", p.Z, "nuclear charge number multiplying alpha")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Relativistic two-body Coulomb bound states", "relbound"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--catalog", g.catalog, "particle catalog file (env RELBOUND_CATALOG)");
    app.add_option("--constants", g.constants, "constants file (env RELBOUND_CONSTANTS)");
    app.add_option("--format", g.format, "output format: csv, json or pretty")->capture_default_str();
    app.add_option("--alpha", g.alpha, "override the fine-structure constant (0 gives the free limit)");

    PairOptions pair;

    SpectrumOptions so;
    auto* spectrum = app.add_subcommand("spectrum", "energy levels for n = 1..n-max");
    add_pair(spectrum, pair);
    spectrum->add_option("--n-max", so.n_max, "highest principal quantum number")->capture_default_str();
    spectrum->add_option("--l", so.l, "only this orbital quantum number");
    spectrum->add_option("--branch", so.branch, "normal or abnormal")->capture_default_str();
    spectrum->add_option("--abnormal-d0", so.abnormal_d0, "freeze or full")->capture_default_str();
    spectrum->add_option("--tol", so.tol, "relative convergence tolerance on sigma")->capture_default_str();
    spectrum->add_option("--max-iter", so.max_iter, "iteration cap")->capture_default_str();

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "check the closed-form beta against ODE shooting");
    add_pair(verify, pair);
    verify->add_option("--n", vo.n)->capture_default_str();
    verify->add_option("--l", vo.l)->capture_default_str();
    verify->add_option("--which", vo.which, "approx, full or both")->capture_default_str();
    verify->add_option("--d0", vo.d0, "use this d0 instead of the solved level's");
    verify->add_option("--bracket", vo.bracket, "beta search interval LO HI")->expected(2);
    verify->add_option("--steps", vo.steps, "RK4 steps")->capture_default_str();
    verify->add_option("--tol", vo.tol, "relative tolerance for the approx comparison")->capture_default_str();

    LevelOptions co;
    auto* compare = app.add_subcommand("compare", "solver level against reference spectra");
    add_pair(compare, pair);
    compare->add_option("--n", co.n)->capture_default_str();
    compare->add_option("--l", co.l)->capture_default_str();

    WaveOptions wo;
    auto* wave = app.add_subcommand("wavefunction", "sampled normalized radial function R(r)");
    add_pair(wave, pair);
    wave->add_option("--n", wo.n)->capture_default_str();
    wave->add_option("--l", wo.l)->capture_default_str();
    wave->add_option("--r-max", wo.r_max, "outer radius in fm (default: automatic)");
    wave->add_option("--points", wo.points)->capture_default_str();
    wave->add_option("--branch", wo.branch, "normal or abnormal")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Context ctx = load_context(g);
        if (*spectrum) return cmd_spectrum(ctx, pair, so, out, err);
        if (*verify) return cmd_verify(ctx, pair, vo, out, err);
        if (*compare) return cmd_compare(ctx, pair, co, out);
        if (*wave) return cmd_wavefunction(ctx, pair, wo, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCompute;
    }
    return kExitUsage;
}

}  // namespace relbound::cli
