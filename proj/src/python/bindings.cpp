#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relbound/constants.hpp"
#include "relbound/errors.hpp"
#include "relbound/ode_verifier.hpp"
#include "relbound/radial_series.hpp"
#include "relbound/reference_models.hpp"
#include "relbound/spectrum.hpp"
#include "relbound/two_body.hpp"

namespace py = pybind11;
using namespace relbound;

namespace {

void bind_errors(py::module_& m) {
    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<CatalogError>(m, "CatalogError", base);
    py::register_exception<SupercriticalError>(m, "SupercriticalError", base);
    py::register_exception<InconsistentPairError>(m, "InconsistentPairError", base);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
    py::register_exception<DegenerateSeriesError>(m, "DegenerateSeriesError", base);
    py::register_exception<TailGuardError>(m, "TailGuardError", base);
    py::register_exception<ShootingError>(m, "ShootingError", base);
}

void bind_catalog(py::module_& m) {
    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def(py::init([](double alpha, double hbar_c) {
                 PhysicalConstants c{alpha, hbar_c};
                 c.validate();
                 return c;
             }),
             py::arg("alpha"), py::arg("hbar_c"))
        .def_readwrite("alpha", &PhysicalConstants::alpha)
        .def_readwrite("hbar_c", &PhysicalConstants::hbar_c)
        .def("validate", &PhysicalConstants::validate);

    py::class_<ParticleSpec>(m, "ParticleSpec")
        .def_readonly("name", &ParticleSpec::name)
        .def_readonly("rest_energy", &ParticleSpec::rest_energy)
        .def_readonly("charge", &ParticleSpec::charge)
        .def_property_readonly("spin", [](const ParticleSpec& p) { return p.spin.str(); })
        .def("__repr__", [](const ParticleSpec& p) {
            return "ParticleSpec('" + p.name + "', " + format_double_roundtrip(p.rest_energy) + " MeV)";
        });

    py::class_<Catalog>(m, "Catalog")
        .def("__len__", &Catalog::size)
        .def_property_readonly("entries", &Catalog::entries)
        .def("lookup", &lookup_particle, py::arg("name"), py::return_value_policy::copy)
        .def("format", &format_catalog);

    m.def("parse_catalog", [](const std::string& text) { return parse_catalog(text); }, py::arg("text"));
    m.def("load_catalog", [](const std::string& path) { return load_catalog(path); }, py::arg("path"));
    m.def("load_constants", [](const std::string& path) { return load_constants(path); }, py::arg("path"));
    m.def("default_catalog", [] { return load_catalog(default_catalog_path()); });
    m.def("default_constants", [] { return load_constants(default_constants_path()); });
}

void bind_two_body(py::module_& m) {
    py::class_<TwoBodySystem>(m, "TwoBodySystem")
        .def(py::init<double, double, int, double>(), py::arg("m01"), py::arg("m02"), py::arg("Z"),
             py::arg("alpha"))
        .def_property_readonly("m01", &TwoBodySystem::m01)
        .def_property_readonly("m02", &TwoBodySystem::m02)
        .def_property_readonly("Z", &TwoBodySystem::Z)
        .def_property_readonly("alpha", &TwoBodySystem::alpha)
        .def_property_readonly("m0", &TwoBodySystem::m0)
        .def_property_readonly("zalpha", &TwoBodySystem::zalpha)
        .def_property_readonly("nonrel_reduced_mass", &TwoBodySystem::nonrel_reduced_mass)
        .def("swapped", &TwoBodySystem::swapped);

    py::class_<MassAccounting>(m, "MassAccounting")
        .def_readonly("m0", &MassAccounting::m0)
        .def_readonly("Eprime", &MassAccounting::Eprime)
        .def_readonly("m", &MassAccounting::m)
        .def_readonly("delta_m", &MassAccounting::delta_m)
        .def_readonly("E", &MassAccounting::E)
        .def_readonly("physical", &MassAccounting::physical);
    py::class_<ReducedMasses>(m, "ReducedMasses")
        .def_readonly("mu0", &ReducedMasses::mu0)
        .def_readonly("mu", &ReducedMasses::mu);

    m.def("system_mass", &system_mass, py::arg("system"), py::arg("Eprime"));
    m.def("reduced_masses", &reduced_masses, py::arg("system"), py::arg("m"), py::arg("Eprime"));
    m.def("identity_residuals", &identity_residuals, py::arg("system"), py::arg("m"), py::arg("Eprime"));
    m.def("speed_type_reduced_mass", &speed_type_reduced_mass, py::arg("m01"), py::arg("m02"), py::arg("v1"),
          py::arg("v2"));
    m.def("salpeter_dispersion", &salpeter_dispersion, py::arg("system"), py::arg("p1"), py::arg("p2"),
          py::arg("U"));
}

void bind_spectrum(py::module_& m) {
    py::enum_<Branch>(m, "Branch").value("Normal", Branch::Normal).value("Abnormal", Branch::Abnormal);
    py::enum_<D0Policy>(m, "D0Policy")
        .value("FreezeZero", D0Policy::FreezeZero)
        .value("FullIteration", D0Policy::FullIteration);

    py::class_<QuantumNumbers>(m, "QuantumNumbers")
        .def(py::init<int, int>(), py::arg("n"), py::arg("l"))
        .def_readonly("n", &QuantumNumbers::n)
        .def_readonly("l", &QuantumNumbers::l)
        .def_property_readonly("n_r", &QuantumNumbers::n_r)
        .def("label", &QuantumNumbers::label);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &SolverConfig::rel_tol)
        .def_readwrite("max_iter", &SolverConfig::max_iter)
        .def_readwrite("abnormal_d0_policy", &SolverConfig::abnormal_d0_policy)
        .def_readwrite("damping", &SolverConfig::damping);

    py::class_<SpectrumLevel>(m, "SpectrumLevel")
        .def_readonly("qn", &SpectrumLevel::qn)
        .def_readonly("branch", &SpectrumLevel::branch)
        .def_readonly("sigma_l", &SpectrumLevel::sigma_l)
        .def_readonly("beta", &SpectrumLevel::beta)
        .def_readonly("d0", &SpectrumLevel::d0)
        .def_readonly("D", &SpectrumLevel::D)
        .def_readonly("mu0", &SpectrumLevel::mu0)
        .def_readonly("mu", &SpectrumLevel::mu)
        .def_readonly("m", &SpectrumLevel::m)
        .def_readonly("E_n", &SpectrumLevel::E_n)
        .def_readonly("Eprime", &SpectrumLevel::Eprime)
        .def_readonly("iterations", &SpectrumLevel::iterations)
        .def_readonly("residual_53", &SpectrumLevel::residual_53)
        .def_readonly("converged", &SpectrumLevel::converged)
        .def_property_readonly("binding", &SpectrumLevel::binding);

    m.def(
        "solve_level",
        [](const TwoBodySystem& s, int n, int l, Branch branch, const SolverConfig& cfg) {
            return solve_level(s, {n, l}, branch, cfg);
        },
        py::arg("system"), py::arg("n"), py::arg("l"), py::arg("branch") = Branch::Normal,
        py::arg("config") = SolverConfig{});
    m.def("sigma_l_zeroth", &sigma_l_zeroth, py::arg("l"), py::arg("zalpha"));
    m.def("energy_normal", &energy_normal, py::arg("m01"), py::arg("m02"), py::arg("zalpha"), py::arg("beta"));
    m.def("energy_abnormal", &energy_abnormal, py::arg("m01"), py::arg("m02"), py::arg("zalpha"), py::arg("beta"));
    m.def("residual_quadratic_53", &residual_quadratic_53, py::arg("Eabs"), py::arg("mu0"), py::arg("zalpha"),
          py::arg("beta"));
    m.def("binding_from_beta", &binding_from_beta, py::arg("mu"), py::arg("mu0"), py::arg("zalpha"),
          py::arg("beta"));
    m.def("beta_closed_form", &beta_closed_form, py::arg("l"), py::arg("zalpha"), py::arg("d0"), py::arg("n_r"),
          py::arg("rel_tol") = 1e-15, py::arg("max_iter") = 500);
}

void bind_radial(py::module_& m) {
    py::class_<RadialScale>(m, "RadialScale")
        .def_readonly("alpha_prime", &RadialScale::alpha_prime)
        .def_readonly("a0", &RadialScale::a0)
        .def_readonly("beta", &RadialScale::beta)
        .def("rho", &RadialScale::rho)
        .def("consistency_gap", &RadialScale::consistency_gap);
    py::class_<SeriesSolution>(m, "SeriesSolution")
        .def_readonly("s", &SeriesSolution::s)
        .def_readonly("coeffs", &SeriesSolution::coeffs)
        .def_readonly("next_coeff", &SeriesSolution::next_coeff)
        .def("termination_ratio", &SeriesSolution::termination_ratio)
        .def("polynomial", &SeriesSolution::polynomial);
    py::class_<RadialSamples>(m, "RadialSamples")
        .def_readonly("r", &RadialSamples::r)
        .def_readonly("rho", &RadialSamples::rho)
        .def_readonly("R", &RadialSamples::R)
        .def_readonly("norm_factor", &RadialSamples::norm_factor)
        .def_readonly("tail_fraction", &RadialSamples::tail_fraction);

    m.def("radial_scale", &radial_scale, py::arg("system"), py::arg("level"), py::arg("hbar_c"));
    m.def("exponent_s", &exponent_s, py::arg("l"), py::arg("zalpha"), py::arg("d0"), py::arg("beta"));
    m.def("recurrence_coeffs", &recurrence_coeffs, py::arg("s"), py::arg("beta"), py::arg("d0"), py::arg("zalpha"),
          py::arg("l"), py::arg("n_r"));
    m.def("series_for_level", &series_for_level, py::arg("level"), py::arg("zalpha"));
    m.def(
        "radial_wavefunction",
        [](const RadialScale& sc, const SeriesSolution& ser, const std::vector<double>& r) {
            return radial_wavefunction(sc, ser, r);
        },
        py::arg("scale"), py::arg("series"), py::arg("r_grid"));
    m.def("node_count", [](const std::vector<double>& v) { return node_count(v); }, py::arg("samples"));
}

void bind_verifier(py::module_& m) {
    py::class_<ShootingConfig>(m, "ShootingConfig")
        .def(py::init<>())
        .def_readwrite("rho_min", &ShootingConfig::rho_min)
        .def_readwrite("rho_max", &ShootingConfig::rho_max)
        .def_readwrite("steps", &ShootingConfig::steps)
        .def_readwrite("match_point", &ShootingConfig::match_point)
        .def_readwrite("bracket", &ShootingConfig::bracket)
        .def_readwrite("bisection_tol", &ShootingConfig::bisection_tol)
        .def_readwrite("max_bisections", &ShootingConfig::max_bisections);
    py::class_<EigenResult>(m, "EigenResult")
        .def_readonly("beta_num", &EigenResult::beta_num)
        .def_readonly("mismatch", &EigenResult::mismatch)
        .def_readonly("node_count", &EigenResult::node_count)
        .def_readonly("iterations", &EigenResult::iterations)
        .def_readonly("match_point", &EigenResult::match_point);
    py::class_<BetaComparison>(m, "BetaComparison")
        .def_readonly("beta_closed", &BetaComparison::beta_closed)
        .def_readonly("beta_num", &BetaComparison::beta_num)
        .def_readonly("abs_gap", &BetaComparison::abs_gap)
        .def_readonly("rel_gap", &BetaComparison::rel_gap)
        .def_readonly("tolerance", &BetaComparison::tolerance)
        .def_readonly("passed", &BetaComparison::pass);
    py::class_<ApproximationGap>(m, "ApproximationGap")
        .def_readonly("beta_approx", &ApproximationGap::beta_approx)
        .def_readonly("beta_full", &ApproximationGap::beta_full)
        .def_readonly("rel_gap", &ApproximationGap::rel_gap)
        .def_readonly("d0", &ApproximationGap::d0)
        .def_readonly("constant", &ApproximationGap::constant)
        .def_readonly("bound", &ApproximationGap::bound)
        .def_readonly("passed", &ApproximationGap::pass);

    m.def("shoot_eigenvalue_approx", &shoot_eigenvalue_approx, py::arg("l"), py::arg("zalpha"), py::arg("d0"),
          py::arg("n_r"), py::arg("config") = ShootingConfig{});
    m.def("shoot_eigenvalue_full", &shoot_eigenvalue_full, py::arg("l"), py::arg("zalpha"), py::arg("d0"),
          py::arg("beta_hint"), py::arg("n_r"), py::arg("config") = ShootingConfig{});
    m.def("compare_beta", &compare_beta, py::arg("beta_closed"), py::arg("result"), py::arg("tolerance") = 1e-8);
    m.def("approximation_gap", &approximation_gap, py::arg("approx"), py::arg("full"), py::arg("d0"),
          py::arg("bound") = 10.0);
}

void bind_reference(py::module_& m) {
    py::class_<ComparisonRow>(m, "ComparisonRow")
        .def_readonly("label", &ComparisonRow::label)
        .def_readonly("model_energy", &ComparisonRow::model_energy)
        .def_readonly("solver_energy", &ComparisonRow::solver_energy)
        .def_readonly("gap", &ComparisonRow::gap)
        .def_readonly("gap_order", &ComparisonRow::gap_order);

    m.def("connell_energy", &connell_energy, py::arg("m"), py::arg("M"), py::arg("zalpha"), py::arg("n_radial"),
          py::arg("epsilon"));
    m.def("connell_epsilon", &connell_epsilon, py::arg("l"), py::arg("sigma_l"));
    m.def("kg_one_body_energy", &kg_one_body_energy, py::arg("m"), py::arg("zalpha"), py::arg("n"), py::arg("l"));
    m.def("bohr_binding", &bohr_binding, py::arg("mu_prime"), py::arg("zalpha"), py::arg("n"));
    m.def("pionic_hydrogen_series", &pionic_hydrogen_series, py::arg("system"), py::arg("level"),
          py::arg("num_terms"));
    m.def("series_applicable", &series_applicable, py::arg("system"));
    m.def("abnormal_particleium_spectrum", &abnormal_particleium_spectrum, py::arg("m_particle"), py::arg("alpha"),
          py::arg("n"), py::arg("sigma_l"));
    m.def("abnormal_nonrel", &abnormal_nonrel, py::arg("m_particle"), py::arg("alpha"), py::arg("n"));
    m.def("compare_level", &compare_level, py::arg("system"), py::arg("level"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Relativistic two-body Coulomb bound states";
    bind_errors(m);
    bind_catalog(m);
    bind_two_body(m);
    bind_spectrum(m);
    bind_radial(m);
    bind_verifier(m);
    bind_reference(m);
}
