// Python bindings for the chemotaxis pattern-formation toolkit. Exposes the
// main operations of each module; vectors cross the boundary as lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chemopat/config.hpp"
#include "chemopat/errors.hpp"
#include "chemopat/galerkin.hpp"
#include "chemopat/model.hpp"
#include "chemopat/solver.hpp"
#include "chemopat/spectral.hpp"
#include "chemopat/stability.hpp"
#include "chemopat/version.hpp"

namespace py = pybind11;
using namespace chemopat;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Linear stability, 1-D simulation, spectral decomposition and "
              "truncated-Fourier steady states for chemotactic patterns";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<SingularityError>(m, "SingularityError", PyExc_RuntimeError);
    py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_RuntimeError);
    py::register_exception<RegimeError>(m, "RegimeError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<BlowUpError>(m, "BlowUpError", PyExc_RuntimeError);

    // ---- model ----
    py::enum_<Variant>(m, "Variant")
        .value("M1", Variant::M1)
        .value("M2", Variant::M2)
        .value("M3", Variant::M3)
        .value("M4", Variant::M4)
        .value("M5", Variant::M5)
        .value("M6", Variant::M6)
        .value("M7", Variant::M7)
        .value("M8", Variant::M8)
        .value("M9", Variant::M9);
    m.def("parse_variant", &parse_variant, py::arg("name"));
    m.def("variant_name", [](Variant v) { return std::string(variant_name(v)); },
          py::arg("variant"));

    py::class_<ModelSpec>(m, "ModelSpec")
        .def(py::init([](Variant variant, double D, double chi0, double r, double nu,
                         double nu1, double nu2, double n0) {
                 ModelSpec spec{variant, D, chi0, r, nu, nu1, nu2, n0};
                 spec.validate();
                 return spec;
             }),
             py::arg("variant") = Variant::M3, py::arg("D") = 1.0,
             py::arg("chi0") = 1.9, py::arg("r") = 0.1, py::arg("nu") = 0.0,
             py::arg("nu1") = 0.0, py::arg("nu2") = 0.0, py::arg("n0") = 1.0)
        .def_readwrite("variant", &ModelSpec::variant)
        .def_readwrite("D", &ModelSpec::D)
        .def_readwrite("chi0", &ModelSpec::chi0)
        .def_readwrite("r", &ModelSpec::r)
        .def_readwrite("nu", &ModelSpec::nu)
        .def_readwrite("nu1", &ModelSpec::nu1)
        .def_readwrite("nu2", &ModelSpec::nu2)
        .def_readwrite("n0", &ModelSpec::n0)
        .def("validate", &ModelSpec::validate)
        .def("__repr__", [](const ModelSpec& s) {
            return "ModelSpec(variant=" + std::string(variant_name(s.variant)) +
                   ", D=" + std::to_string(s.D) + ", chi0=" + std::to_string(s.chi0) +
                   ", r=" + std::to_string(s.r) + ")";
        });
    m.def("m3_defaults", &m3_defaults);
    m.def("chi_at", &chi_at, py::arg("model"), py::arg("n"), py::arg("c"));

    // ---- stability ----
    py::class_<Band>(m, "Band")
        .def_readonly("k1_sq", &Band::k1_sq)
        .def_readonly("k2_sq", &Band::k2_sq);
    py::enum_<Classification>(m, "Classification")
        .value("HomogeneousStable", Classification::HomogeneousStable)
        .value("TravellingWave", Classification::TravellingWave)
        .value("TuringUnstable", Classification::TuringUnstable);
    py::class_<StabilityReport>(m, "StabilityReport")
        .def_readonly("rt", &StabilityReport::rt)
        .def_readonly("band", &StabilityReport::band)
        .def_readonly("k_av_sq", &StabilityReport::k_av_sq)
        .def_readonly("k_star_sq", &StabilityReport::k_star_sq)
        .def_readonly("lambda_explicit", &StabilityReport::lambda_explicit)
        .def_readonly("lambda_implicit", &StabilityReport::lambda_implicit)
        .def_readonly("classification", &StabilityReport::classification);
    m.def("instability_factor", &instability_factor, py::arg("model"));
    m.def("growth_rate", &growth_rate, py::arg("model"), py::arg("k_sq"));
    m.def("unstable_band", &unstable_band, py::arg("model"));
    m.def("wavelength_explicit", &wavelength_explicit, py::arg("model"));
    m.def("wavelength_implicit", &wavelength_implicit, py::arg("model"));
    m.def("fastest_growing_mode", &fastest_growing_mode, py::arg("model"));
    m.def("classify", &classify, py::arg("model"));
    m.def("analyze", &analyze, py::arg("model"));

    // ---- solver ----
    py::class_<Grid1D>(m, "Grid1D")
        .def(py::init<double, int>(), py::arg("length"), py::arg("ncells"))
        .def_static("with_spacing", &Grid1D::with_spacing, py::arg("length"),
                    py::arg("target_dx") = 0.05, py::arg("min_cells") = 8)
        .def_readonly("length", &Grid1D::length)
        .def_readonly("ncells", &Grid1D::ncells)
        .def("dx", &Grid1D::dx)
        .def("x", &Grid1D::x, py::arg("i"));
    py::class_<SimulationState>(m, "SimulationState")
        .def_readonly("grid", &SimulationState::grid)
        .def_readonly("t", &SimulationState::t)
        .def_readonly("n", &SimulationState::n)
        .def_readonly("c", &SimulationState::c);
    py::enum_<InitialCondition::Kind>(m, "ICKind")
        .value("Homogeneous", InitialCondition::Kind::Homogeneous)
        .value("Stimulus", InitialCondition::Kind::Stimulus)
        .value("FrontSeed", InitialCondition::Kind::FrontSeed)
        .value("Custom", InitialCondition::Kind::Custom);
    py::class_<InitialCondition>(m, "InitialCondition")
        .def(py::init<>())
        .def_readwrite("kind", &InitialCondition::kind)
        .def_readwrite("base_n", &InitialCondition::base_n)
        .def_readwrite("base_c", &InitialCondition::base_c)
        .def_readwrite("stimulus_value", &InitialCondition::stimulus_value)
        .def_readwrite("stimulus_width", &InitialCondition::stimulus_width)
        .def_readwrite("front_extent", &InitialCondition::front_extent)
        .def_readwrite("n", &InitialCondition::n)
        .def_readwrite("c", &InitialCondition::c);
    py::enum_<Scheme>(m, "Scheme")
        .value("Explicit", Scheme::Explicit)
        .value("SemiImplicit", Scheme::SemiImplicit);
    py::class_<SolverOptions>(m, "SolverOptions")
        .def(py::init<>())
        .def_readwrite("scheme", &SolverOptions::scheme)
        .def_readwrite("dt", &SolverOptions::dt)
        .def_readwrite("negative_tol", &SolverOptions::negative_tol);
    py::class_<BlowUpDiagnostic>(m, "BlowUpDiagnostic")
        .def_readonly("t", &BlowUpDiagnostic::t)
        .def_readonly("x", &BlowUpDiagnostic::x)
        .def_readonly("reason", &BlowUpDiagnostic::reason);
    py::class_<RunResult>(m, "RunResult")
        .def_readonly("snapshots", &RunResult::snapshots)
        .def_readonly("failure", &RunResult::failure);
    py::class_<StationaryOptions>(m, "StationaryOptions")
        .def(py::init<>())
        .def_readwrite("tol", &StationaryOptions::tol)
        .def_readwrite("t_max", &StationaryOptions::t_max)
        .def_readwrite("delta", &StationaryOptions::delta)
        .def_readwrite("solver", &StationaryOptions::solver);
    py::class_<StationaryResult>(m, "StationaryResult")
        .def_readonly("state", &StationaryResult::state)
        .def_readonly("converged", &StationaryResult::converged)
        .def_readonly("rate", &StationaryResult::rate)
        .def_readonly("failure", &StationaryResult::failure);
    m.def("initial_state", &initial_state, py::arg("ic"), py::arg("grid"));
    m.def("step", &step, py::arg("state"), py::arg("model"), py::arg("dt"),
          py::arg("options") = SolverOptions{});
    m.def("run", &run, py::arg("model"), py::arg("grid"), py::arg("ic"),
          py::arg("snapshot_times"), py::arg("options") = SolverOptions{});
    m.def("run_to_stationary", &run_to_stationary, py::arg("model"), py::arg("grid"),
          py::arg("ic"), py::arg("options") = StationaryOptions{});
    m.def("front_position", &front_position, py::arg("state"), py::arg("level"));
    m.def(
        "front_speed",
        [](const std::vector<SimulationState>& snapshots, double level) {
            return front_speed(snapshots, level);
        },
        py::arg("snapshots"), py::arg("level") = 0.5);

    // ---- spectral ----
    py::class_<SpectralSeries>(m, "SpectralSeries")
        .def(py::init([](double length, std::vector<double> alpha,
                         std::vector<double> beta) {
                 SpectralSeries s;
                 s.length = length;
                 s.alpha = std::move(alpha);
                 s.beta = std::move(beta);
                 return s;
             }),
             py::arg("length"), py::arg("alpha"),
             py::arg("beta") = std::vector<double>{})
        .def_readonly("length", &SpectralSeries::length)
        .def_readonly("alpha", &SpectralSeries::alpha)
        .def_readonly("beta", &SpectralSeries::beta);
    m.def(
        "cosine_coefficients",
        [](const std::vector<double>& values, const Grid1D& grid, int modes) {
            return cosine_coefficients(values, grid, modes);
        },
        py::arg("values"), py::arg("grid"), py::arg("modes"));
    m.def("decompose", &decompose, py::arg("state"), py::arg("modes"));
    m.def(
        "reconstruct",
        [](const std::vector<double>& coeffs, const Grid1D& grid) {
            return reconstruct(coeffs, grid);
        },
        py::arg("coeffs"), py::arg("grid"));
    m.def(
        "discrepancy",
        [](const SpectralSeries& series, const SimulationState& ref) {
            return discrepancy(series, ref);
        },
        py::arg("series"), py::arg("ref"));
    py::class_<DomainSweepRow>(m, "DomainSweepRow")
        .def_readonly("length", &DomainSweepRow::length)
        .def_readonly("converged", &DomainSweepRow::converged)
        .def_readonly("rate", &DomainSweepRow::rate)
        .def_readonly("alpha", &DomainSweepRow::alpha)
        .def_readonly("note", &DomainSweepRow::note);
    py::class_<DomainSweepOptions>(m, "DomainSweepOptions")
        .def(py::init<>())
        .def_readwrite("l_min", &DomainSweepOptions::l_min)
        .def_readwrite("l_max", &DomainSweepOptions::l_max)
        .def_readwrite("l_step", &DomainSweepOptions::l_step)
        .def_readwrite("modes", &DomainSweepOptions::modes)
        .def_readwrite("dx", &DomainSweepOptions::dx)
        .def_readwrite("ic", &DomainSweepOptions::ic)
        .def_readwrite("relax", &DomainSweepOptions::relax)
        .def_readwrite("jobs", &DomainSweepOptions::jobs);
    m.def("domain_sweep", &domain_sweep, py::arg("model"), py::arg("options"));
    py::class_<CharacteristicLength>(m, "CharacteristicLength")
        .def_readonly("length0", &CharacteristicLength::length0)
        .def_readonly("alpha_max", &CharacteristicLength::alpha_max)
        .def_readonly("amplitude", &CharacteristicLength::amplitude)
        .def_readonly("mode", &CharacteristicLength::mode);
    m.def(
        "characteristic_length",
        [](const std::vector<DomainSweepRow>& rows, int mode) {
            return characteristic_length(rows, mode);
        },
        py::arg("rows"), py::arg("mode") = 1);

    // ---- galerkin ----
    py::class_<GalerkinSystem>(m, "GalerkinSystem")
        .def(py::init([](int modes, double k, double D, double chi0, double r) {
                 GalerkinSystem sys{modes, k, D, chi0, r};
                 sys.validate();
                 return sys;
             }),
             py::arg("modes") = 3, py::arg("k") = kPi / 5.5, py::arg("D") = 1.0,
             py::arg("chi0") = 1.9, py::arg("r") = 0.1)
        .def_readwrite("modes", &GalerkinSystem::modes)
        .def_readwrite("k", &GalerkinSystem::k)
        .def_readwrite("D", &GalerkinSystem::D)
        .def_readwrite("chi0", &GalerkinSystem::chi0)
        .def_readwrite("r", &GalerkinSystem::r);
    py::enum_<Branch>(m, "Branch")
        .value("Homogeneous0", Branch::Homogeneous0)
        .value("Homogeneous1", Branch::Homogeneous1)
        .value("PatternPlus", Branch::PatternPlus)
        .value("PatternMinus", Branch::PatternMinus);
    py::class_<GalerkinSolution>(m, "GalerkinSolution")
        .def_readonly("alpha", &GalerkinSolution::alpha)
        .def_readonly("beta", &GalerkinSolution::beta)
        .def_readonly("residual_norm", &GalerkinSolution::residual_norm)
        .def_readonly("iterations", &GalerkinSolution::iterations)
        .def_readonly("branch", &GalerkinSolution::branch);
    m.def(
        "galerkin_residual",
        [](const GalerkinSystem& sys, const std::vector<double>& alpha) {
            return residual(sys, alpha);
        },
        py::arg("system"), py::arg("alpha"));
    m.def(
        "galerkin_solve",
        [](const GalerkinSystem& sys, const std::vector<double>& guess) {
            return solve(sys, guess);
        },
        py::arg("system"), py::arg("guess"));
    m.def("solve_m1_closed_form", &solve_m1_closed_form, py::arg("system"));
    m.def("solve_pattern_branch", &solve_pattern_branch, py::arg("system"));
    py::class_<WavelengthPrediction>(m, "WavelengthPrediction")
        .def_readonly("k_star", &WavelengthPrediction::k_star)
        .def_readonly("length0", &WavelengthPrediction::length0)
        .def_readonly("alpha_max", &WavelengthPrediction::alpha_max)
        .def_readonly("alpha", &WavelengthPrediction::alpha);
    m.def("predict_wavelength_amplitude", &predict_wavelength_amplitude,
          py::arg("system"));
}
