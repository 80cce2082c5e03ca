// chemopat: linear stability, 1-D simulation, spectral decomposition and
// truncated-Fourier steady states for chemotactic pattern formation.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chemopat/config.hpp"
#include "chemopat/csv.hpp"
#include "chemopat/errors.hpp"
#include "chemopat/galerkin.hpp"
#include "chemopat/model.hpp"
#include "chemopat/recipes.hpp"
#include "chemopat/solver.hpp"
#include "chemopat/spectral.hpp"
#include "chemopat/stability.hpp"
#include "chemopat/version.hpp"

namespace {

using namespace chemopat;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// Model flags shared by every subcommand, bound through the parent app so a
// flat key=value config file (and CHEMOPAT_* environment variables) can set
// them once for all subcommands.
void add_model_options(CLI::App& app, ModelOptions& opts)
{
    app.add_option("--variant", opts.variant, "model variant (M1..M9)")
        ->envname("CHEMOPAT_VARIANT")
        ->capture_default_str();
    app.add_option("--D", opts.D, "cell/chemical diffusivity ratio")
        ->envname("CHEMOPAT_D")
        ->capture_default_str();
    app.add_option("--chi0", opts.chi0, "chemotactic sensitivity scale")
        ->envname("CHEMOPAT_CHI0")
        ->capture_default_str();
    app.add_option("--r", opts.r, "dimensionless growth rate")
        ->envname("CHEMOPAT_R")
        ->capture_default_str();
    app.add_option("--nu", opts.nu, "receptor offset (variants M7, M8)")
        ->envname("CHEMOPAT_NU");
    app.add_option("--nu1", opts.nu1, "numerator offset (variant M9)")
        ->envname("CHEMOPAT_NU1");
    app.add_option("--nu2", opts.nu2, "denominator offset (variant M9)")
        ->envname("CHEMOPAT_NU2");
    app.add_option("--n0", opts.n0, "uniform density for variants without kinetics")
        ->envname("CHEMOPAT_N0");
}

std::string opt_cell(const std::optional<double>& v)
{
    return v ? format_double(*v) : std::string();
}

void print_table(const Table& table)
{
    for (std::size_t i = 0; i < table.header.size(); ++i)
        std::cout << (i ? "," : "") << table.header[i];
    std::cout << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? "," : "") << row[i];
        std::cout << '\n';
    }
}

void emit_table(const Table& table, const std::string& out_path,
                const std::string& command,
                const std::vector<std::pair<std::string, std::string>>& params)
{
    if (out_path.empty()) {
        print_table(table);
        return;
    }
    write_csv(out_path, table);
    write_manifest(out_path + ".manifest.json", command, params, {out_path});
}

std::vector<std::string> stability_cells(const StabilityReport& rep)
{
    auto cell = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string();
    };
    auto band_cell = [&rep](bool upper) {
        return rep.band ? format_double(upper ? rep.band->k2_sq : rep.band->k1_sq)
                        : std::string();
    };
    return {format_double(rep.rt),
            band_cell(false),
            band_cell(true),
            cell(rep.k_av_sq),
            cell(rep.k_star_sq),
            cell(rep.lambda_explicit),
            cell(rep.lambda_implicit),
            std::string(classification_name(rep.classification))};
}

const std::vector<std::string> kStabilityHeader = {
    "rt",        "k1_sq",          "k2_sq",           "k_av_sq",
    "k_star_sq", "lambda_explicit", "lambda_implicit", "class"};

std::vector<std::pair<std::string, std::string>> model_params(const ModelOptions& mo)
{
    return {{"variant", mo.variant}, {"D", format_double(mo.D)},
            {"chi0", format_double(mo.chi0)}, {"r", format_double(mo.r)},
            {"nu", opt_cell(mo.nu)}, {"nu1", opt_cell(mo.nu1)},
            {"nu2", opt_cell(mo.nu2)}, {"n0", opt_cell(mo.n0)}};
}

// ---- subcommand wiring ----------------------------------------------------

struct Cli {
    CLI::App app{"chemotaxis pattern-formation toolkit"};
    ModelOptions model;
    int rc = kExitOk;

    Cli()
    {
        app.require_subcommand(1);
        app.fallthrough();
        app.set_version_flag("--version", kVersion);
        app.set_config("--config", "", "flat key=value parameter file");
        add_model_options(app, model);

        add_stability();
        add_stability_sweep();
        add_simulate();
        add_front_speed();
        add_decompose();
        add_length_sweep();
        add_galerkin();
        add_galerkin_sweep();
        add_reproduce();
    }

    // Wraps a subcommand body with the error-to-exit-code policy.
    template <typename F>
    auto guarded(F body)
    {
        return [this, body] {
            try {
                body();
            } catch (const ConfigError& e) {
                std::cerr << "configuration error: " << e.what() << '\n';
                rc = kExitConfig;
            } catch (const std::invalid_argument& e) {
                std::cerr << "configuration error: " << e.what() << '\n';
                rc = kExitConfig;
            } catch (const Error& e) {
                std::cerr << "numerical failure: " << e.what() << '\n';
                rc = kExitNumerical;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                rc = kExitNumerical;
            }
        };
    }

    void add_stability()
    {
        auto* cmd = app.add_subcommand(
            "stability", "classify the uniform state and report band/wavelengths");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "write the CSV here instead of stdout");
        cmd->callback(guarded([this, out] {
            const ModelSpec m = build_model(model);
            Table t;
            t.header = kStabilityHeader;
            t.rows.push_back(stability_cells(analyze(m)));
            emit_table(t, *out, "stability", model_params(model));
        }));
    }

    void add_stability_sweep()
    {
        auto* cmd = app.add_subcommand(
            "stability-sweep", "stability report for a range of one parameter");
        struct Args {
            std::string param = "chi0";
            double from = 0.0, to = 1.0, step = 0.1;
            std::string out;
        };
        auto a = std::make_shared<Args>();
        cmd->add_option("--param", a->param, "parameter to vary: D, chi0 or r")
            ->capture_default_str();
        cmd->add_option("--from", a->from, "first value")->required();
        cmd->add_option("--to", a->to, "last value")->required();
        cmd->add_option("--step", a->step, "increment")->capture_default_str();
        cmd->add_option("--out", a->out, "write the CSV here instead of stdout");
        cmd->callback(guarded([this, a] {
            if (!(a->step > 0.0))
                throw ConfigError("--step must be > 0");
            if (a->to < a->from)
                throw ConfigError("--to must be >= --from");
            Table t;
            t.header = {a->param};
            t.header.insert(t.header.end(), kStabilityHeader.begin(),
                            kStabilityHeader.end());
            const int count =
                static_cast<int>(std::floor((a->to - a->from) / a->step + 1e-9)) + 1;
            for (int i = 0; i < count; ++i) {
                const double value = a->from + i * a->step;
                ModelOptions mo = model;
                if (a->param == "D")
                    mo.D = value;
                else if (a->param == "chi0")
                    mo.chi0 = value;
                else if (a->param == "r")
                    mo.r = value;
                else
                    throw ConfigError("--param must be one of: D, chi0, r");
                const ModelSpec m = build_model(mo);
                std::vector<std::string> cells = {format_double(value)};
                const auto rep = stability_cells(analyze(m));
                cells.insert(cells.end(), rep.begin(), rep.end());
                t.rows.push_back(std::move(cells));
            }
            auto params = model_params(model);
            params.emplace_back("param", a->param);
            params.emplace_back("from", format_double(a->from));
            params.emplace_back("to", format_double(a->to));
            params.emplace_back("step", format_double(a->step));
            emit_table(t, a->out, "stability-sweep", params);
        }));
    }

    struct SimArgs {
        double length = 50.0;
        double dx = 0.05;
        std::vector<double> times;
        std::string ic = "front";
        std::string ic_file;
        double base_n = 1.0;
        double stim_value = 1.2;
        double stim_width = 1.0;
        double front_extent = 1.0;
        std::string scheme = "explicit";
        double dt = 0.0;
        std::string out_dir = ".";
    };

    void add_simulate()
    {
        auto* cmd = app.add_subcommand(
            "simulate", "integrate the model and write profile snapshots");
        auto a = std::make_shared<SimArgs>();
        cmd->add_option("--length", a->length, "domain length")->capture_default_str();
        cmd->add_option("--dx", a->dx, "target grid spacing")->capture_default_str();
        cmd->add_option("--snapshots", a->times, "times to record (comma separated)")
            ->required()
            ->delimiter(',');
        cmd->add_option("--ic", a->ic,
                        "initial condition: front, stimulus, homogeneous, custom")
            ->capture_default_str();
        cmd->add_option("--ic-file", a->ic_file, "profile CSV for --ic custom");
        cmd->add_option("--base-n", a->base_n, "background density")
            ->capture_default_str();
        cmd->add_option("--stimulus-value", a->stim_value,
                        "density inside the stimulus window")
            ->capture_default_str();
        cmd->add_option("--stimulus-width", a->stim_width, "stimulus window width")
            ->capture_default_str();
        cmd->add_option("--front-extent", a->front_extent,
                        "length of the seeded region for --ic front")
            ->capture_default_str();
        cmd->add_option("--scheme", a->scheme, "explicit or semi-implicit")
            ->capture_default_str();
        cmd->add_option("--dt", a->dt, "time step (0 = scheme default)")
            ->capture_default_str();
        cmd->add_option("--out-dir", a->out_dir, "directory for snapshot CSVs")
            ->capture_default_str();
        cmd->callback(guarded([this, a] {
            const ModelSpec m = build_model(model);
            const InitialCondition ic = make_ic(*a);
            SolverOptions solver;
            solver.scheme = parse_scheme(a->scheme);
            solver.dt = a->dt;
            const Grid1D grid = Grid1D::with_spacing(a->length, a->dx);
            const RunResult result = run(m, grid, ic, a->times, solver);

            std::filesystem::create_directories(a->out_dir);
            std::vector<std::string> files;
            for (const SimulationState& s : result.snapshots) {
                std::string path =
                    a->out_dir + "/snapshot_t" + format_double(s.t) + ".csv";
                write_profile_csv(path, s);
                files.push_back(std::move(path));
            }
            auto params = model_params(model);
            params.emplace_back("length", format_double(a->length));
            params.emplace_back("dx", format_double(a->dx));
            params.emplace_back("ic", a->ic);
            params.emplace_back("scheme", a->scheme);
            params.emplace_back("dt", format_double(a->dt));
            std::vector<std::string> notes;
            if (result.failure) {
                std::ostringstream os;
                os << result.failure->reason << " at t = " << result.failure->t
                   << ", x = " << result.failure->x;
                notes.push_back(os.str());
            }
            write_manifest(a->out_dir + "/manifest.json", "simulate", params, files,
                           notes);
            if (result.failure)
                throw BlowUpError(result.failure->reason, result.failure->t,
                                  result.failure->x);
        }));
    }

    static InitialCondition make_ic(const SimArgs& a)
    {
        InitialCondition ic;
        if (a.ic == "front") {
            ic.kind = InitialCondition::Kind::FrontSeed;
            ic.front_extent = a.front_extent;
        } else if (a.ic == "stimulus") {
            ic.kind = InitialCondition::Kind::Stimulus;
            ic.base_n = a.base_n;
            ic.stimulus_value = a.stim_value;
            ic.stimulus_width = a.stim_width;
        } else if (a.ic == "homogeneous") {
            ic.kind = InitialCondition::Kind::Homogeneous;
            ic.base_n = a.base_n;
        } else if (a.ic == "custom") {
            if (a.ic_file.empty())
                throw ConfigError("--ic custom requires --ic-file");
            const SimulationState s = read_profile_csv(a.ic_file);
            ic.kind = InitialCondition::Kind::Custom;
            ic.n = s.n;
            ic.c = s.c;
        } else {
            throw ConfigError(
                "--ic must be one of: front, stimulus, homogeneous, custom");
        }
        return ic;
    }

    void add_front_speed()
    {
        auto* cmd = app.add_subcommand(
            "front-speed", "fit an invasion speed to recorded snapshots");
        struct Args {
            std::vector<std::string> files;
            double level = 0.5;
        };
        auto a = std::make_shared<Args>();
        cmd->add_option("files", a->files, "snapshot CSVs named snapshot_t<time>.csv")
            ->required()
            ->expected(-2);
        cmd->add_option("--level", a->level, "density level tracked by the fit")
            ->capture_default_str();
        cmd->callback(guarded([a] {
            std::vector<SimulationState> states;
            for (const std::string& path : a->files) {
                SimulationState s = read_profile_csv(path);
                const std::string name = std::filesystem::path(path).filename().string();
                const auto pos = name.rfind("_t");
                if (pos == std::string::npos)
                    throw ConfigError("cannot read a time from file name '" + name +
                                      "' (expected ..._t<time>.csv)");
                try {
                    s.t = std::stod(name.substr(pos + 2));
                } catch (const std::exception&) {
                    throw ConfigError("cannot read a time from file name '" + name + "'");
                }
                states.push_back(std::move(s));
            }
            std::sort(states.begin(), states.end(),
                      [](const auto& x, const auto& y) { return x.t < y.t; });
            Table t;
            t.header = {"level", "snapshots", "speed"};
            t.rows.push_back({format_double(a->level),
                              std::to_string(states.size()),
                              format_double(front_speed(states, a->level))});
            print_table(t);
        }));
    }

    void add_decompose()
    {
        auto* cmd = app.add_subcommand(
            "decompose", "cosine coefficients of a stored profile");
        struct Args {
            std::string in;
            int modes = 6;
            std::string out;
        };
        auto a = std::make_shared<Args>();
        cmd->add_option("--in", a->in, "profile CSV (columns x, n[, c])")->required();
        cmd->add_option("--modes", a->modes, "highest mode index")->capture_default_str();
        cmd->add_option("--out", a->out, "write the CSV here instead of stdout");
        cmd->callback(guarded([a] {
            const SimulationState s = read_profile_csv(a->in);
            const SpectralSeries series = decompose(s, a->modes);
            Table t;
            t.header = {"mode", "alpha", "beta"};
            for (int j = 0; j <= a->modes; ++j)
                t.rows.push_back({std::to_string(j), format_double(series.alpha[j]),
                                  format_double(series.beta[j])});
            emit_table(t, a->out, "decompose",
                       {{"in", a->in}, {"modes", std::to_string(a->modes)}});
        }));
    }

    void add_length_sweep()
    {
        auto* cmd = app.add_subcommand(
            "length-sweep",
            "relax on a range of domain lengths and record the spectra");
        struct Args {
            double l_min = 4.0, l_max = 8.0, l_step = 0.25;
            int modes = 6;
            double dx = 0.05;
            double tol = 1e-7;
            double t_max = 5000.0;
            std::string scheme = "semi-implicit";
            int jobs = 1;
            std::string out_dir = ".";
        };
        auto a = std::make_shared<Args>();
        cmd->add_option("--l-min", a->l_min, "first length")->capture_default_str();
        cmd->add_option("--l-max", a->l_max, "last length")->capture_default_str();
        cmd->add_option("--l-step", a->l_step, "length increment")->capture_default_str();
        cmd->add_option("--modes", a->modes, "highest recorded mode")
            ->capture_default_str();
        cmd->add_option("--dx", a->dx, "target grid spacing")->capture_default_str();
        cmd->add_option("--tol", a->tol, "stationarity tolerance")->capture_default_str();
        cmd->add_option("--t-max", a->t_max, "time budget per length")
            ->capture_default_str();
        cmd->add_option("--scheme", a->scheme, "explicit or semi-implicit")
            ->capture_default_str();
        cmd->add_option("--jobs", a->jobs, "worker threads")
            ->envname("CHEMOPAT_JOBS")
            ->capture_default_str();
        cmd->add_option("--out-dir", a->out_dir, "directory for sweep.csv and summary.csv")
            ->capture_default_str();
        cmd->callback(guarded([this, a] {
            const ModelSpec m = build_model(model);
            DomainSweepOptions sweep;
            sweep.l_min = a->l_min;
            sweep.l_max = a->l_max;
            sweep.l_step = a->l_step;
            sweep.modes = a->modes;
            sweep.dx = a->dx;
            sweep.jobs = a->jobs;
            sweep.relax.tol = a->tol;
            sweep.relax.t_max = a->t_max;
            sweep.relax.solver.scheme = parse_scheme(a->scheme);
            const auto rows = domain_sweep(m, sweep);

            Table t;
            t.header = {"L", "converged", "rate"};
            for (int j = 0; j <= a->modes; ++j)
                t.header.push_back("alpha" + std::to_string(j));
            t.header.push_back("note");
            for (const DomainSweepRow& row : rows) {
                std::vector<std::string> cells = {format_double(row.length),
                                                  row.converged ? "1" : "0",
                                                  format_double(row.rate)};
                for (int j = 0; j <= a->modes; ++j)
                    cells.push_back(j < static_cast<int>(row.alpha.size())
                                        ? format_double(row.alpha[j])
                                        : std::string());
                cells.push_back(row.note);
                t.rows.push_back(std::move(cells));
            }
            std::filesystem::create_directories(a->out_dir);
            const std::string sweep_path = a->out_dir + "/sweep.csv";
            write_csv(sweep_path, t);

            Table summary;
            summary.header = {"mode", "length0", "alpha_max", "amplitude"};
            std::vector<std::string> notes;
            for (int mode : {1, 2}) {
                if (mode > a->modes)
                    continue;
                try {
                    const CharacteristicLength cl = characteristic_length(rows, mode);
                    summary.rows.push_back({std::to_string(mode),
                                            format_double(cl.length0),
                                            format_double(cl.alpha_max),
                                            format_double(cl.amplitude)});
                } catch (const Error& e) {
                    notes.push_back("mode " + std::to_string(mode) + ": " + e.what());
                }
            }
            const std::string summary_path = a->out_dir + "/summary.csv";
            write_csv(summary_path, summary);

            auto params = model_params(model);
            params.emplace_back("l_min", format_double(a->l_min));
            params.emplace_back("l_max", format_double(a->l_max));
            params.emplace_back("l_step", format_double(a->l_step));
            params.emplace_back("modes", std::to_string(a->modes));
            params.emplace_back("dx", format_double(a->dx));
            params.emplace_back("tol", format_double(a->tol));
            params.emplace_back("t_max", format_double(a->t_max));
            params.emplace_back("scheme", a->scheme);
            write_manifest(a->out_dir + "/manifest.json", "length-sweep", params,
                           {sweep_path, summary_path}, notes);
            print_table(summary);
        }));
    }

    void add_galerkin()
    {
        auto* cmd = app.add_subcommand(
            "galerkin", "projected steady-state coefficients at one wavenumber");
        struct Args : GalArgs {
            std::string out;
        };
        auto a = std::make_shared<Args>();
        cmd->add_option("--modes", a->modes, "truncation order M")->capture_default_str();
        cmd->add_option("--length", a->length, "half-pattern length (k = pi/L)")
            ->capture_default_str();
        cmd->add_option("--wavenumber", a->wavenumber,
                        "fundamental wavenumber (overrides --length)");
        cmd->add_option("--out", a->out, "write the CSV here instead of stdout");
        cmd->callback(guarded([this, a] {
            const GalerkinSystem sys = make_system(*a);
            const GalerkinSolution sol = solve_pattern_branch(sys);
            Table t;
            t.header = {"M"};
            for (int j = 0; j <= a->modes; ++j)
                t.header.push_back("alpha" + std::to_string(j));
            t.header.push_back("residual");
            std::vector<std::string> cells = {std::to_string(a->modes)};
            for (double v : sol.alpha)
                cells.push_back(format_double(v));
            cells.push_back(format_double(sol.residual_norm));
            t.rows.push_back(std::move(cells));
            emit_table(t, a->out, "galerkin", galerkin_params(*a));
        }));
    }

    struct GalArgs {
        int modes = 3;
        double length = 5.5;
        double wavenumber = 0.0;
    };

    GalerkinSystem make_system(const GalArgs& a) const
    {
        GalerkinSystem sys;
        sys.modes = a.modes;
        sys.k = a.wavenumber > 0.0 ? a.wavenumber : kPi / a.length;
        const ModelSpec m = build_model(model); // surfaces flag errors early
        if (m.variant != Variant::M3)
            throw ConfigError("the projected system covers the logistic variant M3 "
                              "only; got --variant " + model.variant);
        sys.D = m.D;
        sys.chi0 = m.chi0;
        sys.r = m.r;
        sys.validate();
        return sys;
    }

    std::vector<std::pair<std::string, std::string>> galerkin_params(const GalArgs& a) const
    {
        auto params = model_params(model);
        params.emplace_back("modes", std::to_string(a.modes));
        params.emplace_back("length", format_double(a.length));
        params.emplace_back("wavenumber", format_double(a.wavenumber));
        return params;
    }

    void add_galerkin_sweep()
    {
        auto* cmd = app.add_subcommand(
            "galerkin-sweep", "track the pattern branch across a parameter range");
        struct Args : GalArgs {
            std::string param = "k";
            double from = 0.0, to = 1.0, step = 0.1;
            std::string out;
        };
        auto a = std::make_shared<Args>();
        cmd->add_option("--modes", a->modes, "truncation order M")->capture_default_str();
        cmd->add_option("--length", a->length, "half-pattern length (k = pi/L)")
            ->capture_default_str();
        cmd->add_option("--param", a->param, "parameter to vary: k, D, chi0 or r")
            ->capture_default_str();
        cmd->add_option("--from", a->from, "first value")->required();
        cmd->add_option("--to", a->to, "last value")->required();
        cmd->add_option("--step", a->step, "increment magnitude")->capture_default_str();
        cmd->add_option("--out", a->out, "write the CSV here instead of stdout");
        cmd->callback(guarded([this, a] {
            const GalerkinSystem base = make_system(*a);
            const SweepParameter param = parse_sweep_parameter(a->param);
            const auto rows = continuation_sweep(base, param, a->from, a->to, a->step);
            Table t;
            t.header = {a->param};
            for (int j = 0; j <= a->modes; ++j)
                t.header.push_back("alpha" + std::to_string(j));
            t.header.push_back("residual");
            t.header.push_back("branch");
            for (const ContinuationRow& row : rows) {
                std::vector<std::string> cells = {format_double(row.value)};
                for (double v : row.solution.alpha)
                    cells.push_back(format_double(v));
                cells.push_back(format_double(row.solution.residual_norm));
                cells.emplace_back(branch_name(row.solution.branch));
                t.rows.push_back(std::move(cells));
            }
            auto params = galerkin_params(*a);
            params.emplace_back("param", a->param);
            params.emplace_back("from", format_double(a->from));
            params.emplace_back("to", format_double(a->to));
            params.emplace_back("step", format_double(a->step));
            emit_table(t, a->out, "galerkin-sweep", params);
        }));
    }

    void add_reproduce()
    {
        auto* cmd = app.add_subcommand(
            "reproduce", "regenerate a canned survey dataset (CSV + manifest)");
        struct Args {
            std::string target;
            std::string out_dir = ".";
            double dx = 0.05;
            int jobs = 1;
        };
        auto a = std::make_shared<Args>();
        std::string targets;
        for (Recipe r : all_recipes())
            targets += (targets.empty() ? "" : ", ") + std::string(recipe_name(r));
        cmd->add_option("target", a->target, "one of: " + targets)->required();
        cmd->add_option("--out-dir", a->out_dir, "output directory")
            ->capture_default_str();
        cmd->add_option("--dx", a->dx, "grid spacing for the simulations involved")
            ->capture_default_str();
        cmd->add_option("--jobs", a->jobs, "worker threads for sweep targets")
            ->envname("CHEMOPAT_JOBS")
            ->capture_default_str();
        cmd->callback(guarded([a] {
            ReproduceOptions opts;
            opts.out_dir = a->out_dir;
            opts.dx = a->dx;
            opts.jobs = a->jobs;
            const ReproduceResult result = run_reproduce(parse_recipe(a->target), opts);
            for (const std::string& f : result.files)
                std::cout << f << '\n';
            for (const std::string& n : result.notes)
                std::cerr << "note: " << n << '\n';
        }));
    }
};

} // namespace

int main(int argc, char** argv)
{
    Cli cli;
    try {
        cli.app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }
    return cli.rc;
}
