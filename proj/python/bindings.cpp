// Python bindings for the spheroid core: surfaces, spectra, first-order
// shifts, the grid oracle, and the self-check suites.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spheroid/free_particle.hpp"
#include "spheroid/geometry.hpp"
#include "spheroid/level_table.hpp"
#include "spheroid/numerics.hpp"
#include "spheroid/oracle.hpp"
#include "spheroid/oscillator.hpp"
#include "spheroid/specfun.hpp"
#include "spheroid/validate.hpp"

namespace py = pybind11;

using namespace spheroid;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum spectra on a sphere and on the near-sphere spheroid";

    py::register_exception<numerics::ConvergenceError>(m, "ConvergenceError");
    py::register_exception<oracle::ResolutionError>(m, "ResolutionError");

    py::enum_<Coupling>(m, "Coupling")
        .value("squared", Coupling::squared)
        .value("literal", Coupling::literal);

    py::enum_<Sheet>(m, "Sheet").value("upper", Sheet::upper).value("lower", Sheet::lower);

    py::class_<SurfaceParams>(m, "SurfaceParams")
        .def_static("from_radii", &SurfaceParams::from_radii, py::arg("a"), py::arg("b"))
        .def_static("from_curvature", &SurfaceParams::from_curvature, py::arg("lam"),
                    py::arg("eps"))
        .def_readonly("a", &SurfaceParams::a)
        .def_readonly("b", &SurfaceParams::b)
        .def_readonly("lam", &SurfaceParams::lambda)
        .def_readonly("eps", &SurfaceParams::eps)
        .def("is_sphere", &SurfaceParams::is_sphere)
        .def("__repr__", [](const SurfaceParams& s) {
            return "SurfaceParams(lam=" + format_sig12(s.lambda) + ", eps=" + format_sig12(s.eps) +
                   ")";
        });

    py::class_<TangentPoint>(m, "TangentPoint")
        .def(py::init([](double x, double y) { return TangentPoint{x, y}; }), py::arg("x"),
             py::arg("y"))
        .def_readonly("x", &TangentPoint::x)
        .def_readonly("y", &TangentPoint::y)
        .def("rho", &TangentPoint::rho)
        .def("phi", &TangentPoint::phi)
        .def("chi", &TangentPoint::chi, py::arg("surface"));

    py::class_<numerics::QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("rel_tol", &numerics::QuadratureSpec::rel_tol)
        .def_readwrite("abs_tol", &numerics::QuadratureSpec::abs_tol)
        .def_readwrite("base_order", &numerics::QuadratureSpec::base_order)
        .def_readwrite("max_depth", &numerics::QuadratureSpec::max_depth);

    py::class_<LevelRow>(m, "LevelRow")
        .def_readonly("n", &LevelRow::n)
        .def_readonly("l", &LevelRow::l)
        .def_readonly("e0", &LevelRow::e0)
        .def_readonly("de1", &LevelRow::de1)
        .def_readonly("de1_cross", &LevelRow::de1_cross)
        .def_readonly("de1_err_est", &LevelRow::de1_err_est)
        .def("total", &LevelRow::total);

    py::class_<LevelAggregate>(m, "LevelAggregate")
        .def_readonly("n", &LevelAggregate::n)
        .def_readonly("width", &LevelAggregate::width)
        .def_readonly("sublevels_nominal", &LevelAggregate::sublevels_nominal)
        .def_readonly("sublevels_distinct", &LevelAggregate::sublevels_distinct);

    py::class_<LevelTable>(m, "LevelTable")
        .def_readonly("rows", &LevelTable::rows)
        .def_readonly("aggregates", &LevelTable::aggregates)
        .def("mean_width", &LevelTable::mean_width, py::arg("n_cut"))
        .def("to_csv", [](const LevelTable& t) { return to_csv(t); });

    // Free particle on the surface.
    auto mf = m.def_submodule("free", "Free-particle basis and spectra");
    py::class_<free_particle::FreeState>(mf, "FreeState")
        .def(py::init<int, const SurfaceParams&>(), py::arg("n"), py::arg("surface"))
        .def_readonly("n", &free_particle::FreeState::n)
        .def_readonly("surface", &free_particle::FreeState::surface)
        .def("norm_a", &free_particle::FreeState::norm_a);
    mf.def("energy0", &free_particle::energy0, py::arg("n"), py::arg("surface"));
    mf.def("wavefunction", &free_particle::wavefunction, py::arg("state"), py::arg("point"));
    mf.def("radial_wavefunction", &free_particle::radial_wavefunction, py::arg("state"),
           py::arg("chi"));
    mf.def("shift1_closed", &free_particle::shift1_closed, py::arg("state"));
    mf.def("shift1_quadrature", &free_particle::shift1_quadrature, py::arg("state"),
           py::arg("spec") = numerics::QuadratureSpec{});
    mf.def("offdiag_element", &free_particle::offdiag_element, py::arg("m"), py::arg("n"),
           py::arg("surface"), py::arg("spec") = numerics::QuadratureSpec{});
    mf.def("spectrum", &free_particle::spectrum, py::arg("n_max"), py::arg("surface"),
           py::arg("spec") = numerics::QuadratureSpec{});

    // Isotropic oscillator on the surface.
    auto mo = m.def_submodule("osc", "Oscillator states, energies and shifts");
    py::class_<osc::OscParams>(mo, "OscParams")
        .def(py::init<double, const SurfaceParams&, Coupling>(), py::arg("omega"),
             py::arg("surface"), py::arg("coupling") = Coupling::squared)
        .def_readonly("omega", &osc::OscParams::omega)
        .def_readonly("surface", &osc::OscParams::surface)
        .def_readonly("coupling", &osc::OscParams::coupling)
        .def("g", &osc::OscParams::g)
        .def("big_omega", &osc::OscParams::big_omega)
        .def("beta", &osc::OscParams::beta);
    py::class_<osc::OscState>(mo, "OscState")
        .def(py::init<int, int>(), py::arg("n"), py::arg("l"))
        .def_readonly("n", &osc::OscState::n)
        .def_readonly("l", &osc::OscState::l)
        .def("abs_l", &osc::OscState::abs_l)
        .def("k_r", &osc::OscState::k_r);
    py::class_<osc::RadialState>(mo, "RadialState")
        .def(py::init<const osc::OscState&, const osc::OscParams&,
                      const numerics::QuadratureSpec&>(),
             py::arg("state"), py::arg("params"), py::arg("spec") = numerics::QuadratureSpec{})
        .def("__call__", &osc::RadialState::operator(), py::arg("chi"))
        .def("derivative_chi", &osc::RadialState::derivative_chi, py::arg("chi"))
        .def("derivative_x", &osc::RadialState::derivative_x, py::arg("x"))
        .def("norm", &osc::RadialState::norm);
    py::class_<osc::NormalizationCheck>(mo, "NormalizationCheck")
        .def_readonly("n_quadrature_radial", &osc::NormalizationCheck::n_quadrature_radial)
        .def_readonly("n_quadrature_full", &osc::NormalizationCheck::n_quadrature_full)
        .def_readonly("n_closed", &osc::NormalizationCheck::n_closed)
        .def_readonly("rel_dev", &osc::NormalizationCheck::rel_dev)
        .def_readonly("azimuthal_convention_factor",
                      &osc::NormalizationCheck::azimuthal_convention_factor)
        .def_readonly("pass_", &osc::NormalizationCheck::pass);
    mo.def("energy0", &osc::energy0, py::arg("state"), py::arg("params"));
    mo.def("norm_constant", &osc::norm_constant, py::arg("state"), py::arg("params"),
           py::arg("spec") = numerics::QuadratureSpec{});
    mo.def("norm_constant_closed", &osc::norm_constant_closed, py::arg("state"),
           py::arg("params"));
    mo.def("check_normalization", &osc::check_normalization, py::arg("state"), py::arg("params"),
           py::arg("spec") = numerics::QuadratureSpec{}, py::arg("tol") = 1e-8);
    mo.def("radial_wavefunction", &osc::radial_wavefunction, py::arg("state"), py::arg("params"),
           py::arg("chi"));
    mo.def("radial_derivative", &osc::radial_derivative, py::arg("state"), py::arg("params"),
           py::arg("x"));
    mo.def("shift_kinetic", &osc::shift_kinetic, py::arg("state"), py::arg("params"),
           py::arg("spec") = numerics::QuadratureSpec{});
    mo.def("shift_kinetic_xform", &osc::shift_kinetic_xform, py::arg("state"), py::arg("params"),
           py::arg("spec") = numerics::QuadratureSpec{});
    mo.def("shift_potential", &osc::shift_potential, py::arg("state"), py::arg("params"),
           py::arg("spec") = numerics::QuadratureSpec{});
    mo.def("shift_total", &osc::shift_total, py::arg("state"), py::arg("params"),
           py::arg("spec") = numerics::QuadratureSpec{});
    mo.def("level_table", &osc::level_table, py::arg("n_max"), py::arg("params"),
           py::arg("spec") = numerics::QuadratureSpec{});

    // Grid oracle: independent finite-volume route.
    auto mr = m.def_submodule("oracle", "Finite-volume cross-checks of the closed forms");
    py::enum_<oracle::PotentialKind>(mr, "PotentialKind")
        .value("free_particle", oracle::PotentialKind::free_particle)
        .value("oscillator", oracle::PotentialKind::oscillator);
    py::enum_<oracle::BoundaryKind>(mr, "BoundaryKind")
        .value("neumann", oracle::BoundaryKind::neumann)
        .value("dirichlet", oracle::BoundaryKind::dirichlet);
    py::class_<oracle::RadialProblem>(mr, "RadialProblem")
        .def(py::init<>())
        .def_readwrite("m", &oracle::RadialProblem::m)
        .def_readwrite("potential", &oracle::RadialProblem::potential)
        .def_readwrite("omega", &oracle::RadialProblem::omega)
        .def_readwrite("coupling", &oracle::RadialProblem::coupling)
        .def_readwrite("surface", &oracle::RadialProblem::surface)
        .def_readwrite("n_grid", &oracle::RadialProblem::n_grid)
        .def_readwrite("boundary", &oracle::RadialProblem::boundary)
        .def_readwrite("offset", &oracle::RadialProblem::offset);
    py::class_<oracle::SectorCheck>(mr, "SectorCheck")
        .def_readonly("sector", &oracle::SectorCheck::sector)
        .def_readonly("grid", &oracle::SectorCheck::grid)
        .def_readonly("computed", &oracle::SectorCheck::computed)
        .def_readonly("reference", &oracle::SectorCheck::reference)
        .def_readonly("rel_err", &oracle::SectorCheck::rel_err)
        .def_readonly("pass_", &oracle::SectorCheck::pass)
        .def_readonly("gates", &oracle::SectorCheck::gates);
    py::class_<oracle::OracleReport>(mr, "OracleReport")
        .def_readonly("sectors", &oracle::OracleReport::sectors)
        .def_readonly("pass_", &oracle::OracleReport::pass)
        .def_readonly("note", &oracle::OracleReport::note)
        .def("to_json", [](const oracle::OracleReport& r) { return oracle::to_json(r); });
    mr.def("lowest_eigenvalues", &oracle::lowest_eigenvalues, py::arg("problem"), py::arg("k"));
    mr.def("validate_free", &oracle::validate_free, py::arg("surface"), py::arg("m_max"),
           py::arg("k_eigs"), py::arg("n_grid") = 4000);
    mr.def("validate_osc", &oracle::validate_osc, py::arg("surface"), py::arg("omega"),
           py::arg("l_max"), py::arg("n_grid") = 4000);
    mr.def(
        "grid_shift_osc",
        [](const osc::OscState& st, const osc::OscParams& p, int n_grid) {
            oracle::RadialProblem rp;
            rp.m = st.abs_l();
            rp.potential = oracle::PotentialKind::oscillator;
            rp.omega = p.omega;
            rp.coupling = p.coupling;
            rp.surface = p.surface;
            rp.n_grid = n_grid;
            rp.boundary = oracle::BoundaryKind::dirichlet;
            return oracle::grid_shift(st, p, rp);
        },
        py::arg("state"), py::arg("params"), py::arg("n_grid") = 4000);
    mr.def(
        "grid_shift_free",
        [](const free_particle::FreeState& st, int n_grid) {
            oracle::RadialProblem rp;
            rp.m = st.n;
            rp.potential = oracle::PotentialKind::free_particle;
            rp.surface = st.surface;
            rp.n_grid = n_grid;
            return oracle::grid_shift(st, rp);
        },
        py::arg("state"), py::arg("n_grid") = 4000);

    // Special functions used by the closed forms.
    auto ms = m.def_submodule("specfun", "Gamma, Jacobi and hypergeometric kernels");
    ms.def("log_gamma", &specfun::log_gamma, py::arg("x"));
    ms.def("gamma_fn", &specfun::gamma_fn, py::arg("x"));
    ms.def("pochhammer", &specfun::pochhammer, py::arg("a"), py::arg("k"));
    ms.def("hyp2f1_terminating", &specfun::hyp2f1_terminating, py::arg("neg_deg"), py::arg("b"),
           py::arg("c"), py::arg("z"));
    ms.def(
        "jacobi_p",
        [](int degree, double alpha, double beta, double x) {
            return specfun::jacobi_p({degree, alpha, beta}, x);
        },
        py::arg("degree"), py::arg("alpha"), py::arg("beta"), py::arg("x"));
    ms.def(
        "jacobi_p_deriv",
        [](int degree, double alpha, double beta, double x, int order) {
            return specfun::jacobi_p_deriv({degree, alpha, beta}, x, order);
        },
        py::arg("degree"), py::arg("alpha"), py::arg("beta"), py::arg("x"), py::arg("order"));
    ms.def("wallis_integral", &specfun::wallis_integral, py::arg("n"));

    // Quadrature and eigenvalue kernels.
    auto mn = m.def_submodule("numerics", "Quadrature and tridiagonal eigenvalues");
    mn.def(
        "integrate",
        [](const std::function<double(double)>& f, double lo, double hi,
           const numerics::QuadratureSpec& spec) {
            const auto r = numerics::integrate(f, lo, hi, spec);
            return py::make_tuple(r.value, r.err_est);
        },
        py::arg("f"), py::arg("lo"), py::arg("hi"),
        py::arg("spec") = numerics::QuadratureSpec{});
    mn.def("eig_tridiag", &numerics::eig_tridiag, py::arg("diag"), py::arg("offdiag"),
           py::arg("k_lowest"));

    // Geometry helpers.
    auto mg = m.def_submodule("geometry", "Charts, metrics and the classical split");
    mg.def(
        "metric_tangent",
        [](const TangentPoint& t, const SurfaceParams& s) {
            const MetricTensor2 g = metric_tangent(t, s);
            return py::make_tuple(g.g11, g.g12, g.g22);
        },
        py::arg("point"), py::arg("surface"));
    mg.def("potential_osc", &potential_osc, py::arg("point"), py::arg("surface"),
           py::arg("omega"));
    mg.def("sphere_measure", &sphere_measure, py::arg("rho"), py::arg("surface"));
    mg.def(
        "classical_hamiltonians",
        [](double x, double y, double vx, double vy, const SurfaceParams& s, double omega) {
            const HamiltonianParts h = classical_hamiltonians({x, y, vx, vy}, s, omega);
            return py::make_tuple(h.h_exact, h.h0_osc, h.h_eps);
        },
        py::arg("x"), py::arg("y"), py::arg("vx"), py::arg("vy"), py::arg("surface"),
        py::arg("omega"));

    // Self-check suites as a JSON report.
    m.def(
        "validate_json",
        [](const std::vector<std::string>& suites) {
            return validate::to_json(validate::run(suites));
        },
        py::arg("suites") = std::vector<std::string>{});
    m.def("suite_names", &validate::suite_names);
}
