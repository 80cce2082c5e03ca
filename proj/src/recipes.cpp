#include "chemopat/recipes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <span>
#include <sstream>
#include <stdexcept>

#include "chemopat/csv.hpp"
#include "chemopat/errors.hpp"
#include "chemopat/galerkin.hpp"
#include "chemopat/solver.hpp"
#include "chemopat/spectral.hpp"
#include "chemopat/stability.hpp"

namespace chemopat {

namespace {

constexpr struct {
    Recipe recipe;
    const char* name;
} kRecipeNames[] = {
    {Recipe::Wave, "wave"},
    {Recipe::Boundaries, "boundaries"},
    {Recipe::Gallery, "gallery"},
    {Recipe::Wavelengths, "wavelengths"},
    {Recipe::LengthSweep, "lengthsweep"},
    {Recipe::Spectra, "spectra"},
    {Recipe::Panels, "panels"},
    {Recipe::CoefficientTable, "table"},
};

// Accumulates outputs and manifest content while a recipe runs.
struct Emitter {
    std::string dir;
    std::string command;
    ReproduceResult result;
    std::vector<std::pair<std::string, std::string>> params;

    explicit Emitter(const ReproduceOptions& opts, std::string_view target)
        : dir(opts.out_dir), command(std::string("reproduce ") + std::string(target))
    {
        std::filesystem::create_directories(dir);
        param("dx", format_double(opts.dx));
    }

    std::string path(const std::string& name) const { return dir + "/" + name; }

    void param(const std::string& key, const std::string& value)
    {
        params.emplace_back(key, value);
    }

    void table(const std::string& name, const Table& t)
    {
        const std::string p = path(name);
        write_csv(p, t);
        result.files.push_back(p);
    }

    void profile(const std::string& name, const SimulationState& s)
    {
        const std::string p = path(name);
        write_profile_csv(p, s);
        result.files.push_back(p);
    }

    void note(const std::string& text) { result.notes.push_back(text); }

    void manifest()
    {
        const std::string p = path("manifest.json");
        write_manifest(p, command, params, result.files, result.notes);
        result.files.push_back(p);
    }
};

ModelSpec default_model()
{
    return m3_defaults();
}

std::vector<std::string> number_row(std::initializer_list<double> values)
{
    std::vector<std::string> row;
    row.reserve(values.size());
    for (double v : values)
        row.push_back(format_double(v));
    return row;
}

// A short label for a parameter value, safe inside file names. Rounded to
// six significant digits so grid arithmetic noise stays out of names.
std::string value_tag(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    std::string s(buf);
    for (char& ch : s)
        if (ch == '+')
            ch = 'p';
    return s;
}

void recipe_wave(Emitter& em, const ReproduceOptions& opts)
{
    ModelSpec m = default_model();
    m.chi0 = 1.7; // below the pattern threshold: a pure invasion wave
    const double length = 200.0;
    const std::vector<double> times = {0.0, 50.0, 100.0, 150.0, 200.0};
    em.param("variant", std::string(variant_name(m.variant)));
    em.param("D", format_double(m.D));
    em.param("chi0", format_double(m.chi0));
    em.param("r", format_double(m.r));
    em.param("length", format_double(length));
    em.param("scheme", "semi-implicit");
    em.param("ic", "front");

    SolverOptions solver;
    solver.scheme = Scheme::SemiImplicit;
    const Grid1D grid = Grid1D::with_spacing(length, opts.dx);
    const RunResult run_result = run(m, grid, InitialCondition{}, times, solver);
    for (const SimulationState& s : run_result.snapshots)
        em.profile("wave_t" + value_tag(s.t) + ".csv", s);
    if (run_result.failure)
        em.note("run failed: " + run_result.failure->reason);
    em.note(std::string("classification: ") + std::string(classification_name(classify(m))));

    Table speed;
    speed.header = {"level", "speed"};
    if (run_result.snapshots.size() >= 3) {
        // Drop the initial condition: the front needs a moment to form.
        std::span<const SimulationState> moving(run_result.snapshots.data() + 1,
                                                run_result.snapshots.size() - 1);
        speed.rows.push_back(number_row({0.5, front_speed(moving, 0.5)}));
    }
    em.table("wave_speed.csv", speed);
}

void recipe_boundaries(Emitter& em, const ReproduceOptions&)
{
    // chi(n,c) scales linearly with chi0 in every variant, so the critical
    // sensitivity is chi0 / R_T evaluated at any chi0; use chi0 = 1.
    auto critical = [](double D, double r) {
        ModelSpec m = default_model();
        m.D = D;
        m.r = r;
        m.chi0 = 1.0;
        return 1.0 / instability_factor(m);
    };
    em.param("variant", "M3");

    Table vs_d;
    vs_d.header = {"D", "chi0_crit"};
    for (int i = 0; i <= 60; ++i) {
        const double D = 0.05 * i;
        vs_d.rows.push_back(number_row({D, critical(D, 0.1)}));
    }
    em.table("boundary_vs_D.csv", vs_d);

    Table vs_r;
    vs_r.header = {"r", "chi0_crit"};
    for (int i = 0; i <= 100; ++i) {
        const double r = 0.01 * i;
        vs_r.rows.push_back(number_row({r, critical(1.0, r)}));
    }
    em.table("boundary_vs_r.csv", vs_r);
}

void recipe_gallery(Emitter& em, const ReproduceOptions& opts)
{
    const double length = 11.0;
    em.param("length", format_double(length));
    em.param("chi0", "1.9");
    em.param("D", "1");
    em.param("r", "0.1");
    em.param("nu", "0.2");

    for (int vi = 0; vi < 9; ++vi) {
        ModelSpec m = default_model();
        m.variant = static_cast<Variant>(vi);
        m.nu = 0.2;
        m.nu1 = 0.2;
        m.nu2 = 0.2;
        const bool logistic = variant_has_kinetics(m.variant);
        const bool singular_at_zero = m.variant == Variant::M4 ||
                                      m.variant == Variant::M5 ||
                                      m.variant == Variant::M6;
        // A sensitivity that survives n -> 0 keeps draining empty cells, so
        // seeding those variants with a vacuum region is ill-posed; perturb a
        // uniform background instead. The same goes for conserved-mass
        // variants, where a front seed would fix the wrong mean density.
        const bool vacuum_safe = chi_at(m, 0.0, 1.0) == 0.0;
        InitialCondition ic;
        if (logistic && vacuum_safe) {
            ic.kind = InitialCondition::Kind::FrontSeed;
        } else {
            ic.kind = InitialCondition::Kind::Stimulus;
            ic.base_n = 1.0;
            ic.stimulus_value = 1.2;
            ic.stimulus_width = 1.0;
        }
        // 1/c sensitivities cannot start from a chemical-free state.
        ic.base_c = singular_at_zero ? 1.0 : 0.0;
        StationaryOptions relax;
        relax.t_max = 2000.0;
        // The constant-sensitivity variant has no saturation mechanism and is
        // expected to collapse; integrate it explicitly so the failure is
        // caught cleanly.
        relax.solver.scheme =
            m.variant == Variant::M1 ? Scheme::Explicit : Scheme::SemiImplicit;

        const std::string tag(variant_name(m.variant));
        try {
            const Grid1D grid = Grid1D::with_spacing(length, opts.dx);
            const StationaryResult sr = run_to_stationary(m, grid, ic, relax);
            if (sr.failure) {
                std::ostringstream os;
                os << tag << ": " << sr.failure->reason << " at t = "
                   << format_double(sr.failure->t) << ", x = "
                   << format_double(sr.failure->x) << "; no profile written";
                em.note(os.str());
                continue;
            }
            em.profile("profile_" + tag + ".csv", sr.state);
            if (!sr.converged)
                em.note(tag + ": not stationary by t = " + format_double(relax.t_max));
        } catch (const Error& e) {
            em.note(tag + ": " + e.what() + "; no profile written");
        }
    }
}

void recipe_wavelengths(Emitter& em, const ReproduceOptions&)
{
    auto emit = [&em](const std::string& file, const std::string& column,
                      auto&& modify, double lo, double hi, double step) {
        Table t;
        t.header = {column, "lambda_explicit", "lambda_implicit"};
        for (double v = lo; v <= hi + 1e-12; v += step) {
            ModelSpec m = default_model();
            modify(m, v);
            const StabilityReport rep = analyze(m);
            if (!rep.lambda_explicit)
                continue; // outside the patterning regime
            t.rows.push_back(number_row({v, *rep.lambda_explicit, *rep.lambda_implicit}));
        }
        em.table(file, t);
    };
    emit("wavelength_vs_chi0.csv", "chi0", [](ModelSpec& m, double v) { m.chi0 = v; },
         1.75, 3.0, 0.025);
    emit("wavelength_vs_D.csv", "D", [](ModelSpec& m, double v) { m.D = v; },
         0.05, 1.11, 0.02);
    emit("wavelength_vs_r.csv", "r", [](ModelSpec& m, double v) { m.r = v; },
         0.005, 0.14, 0.0025);
}

Table sweep_table(const std::vector<DomainSweepRow>& rows, int modes)
{
    Table t;
    t.header = {"L", "converged", "rate"};
    for (int j = 0; j <= modes; ++j)
        t.header.push_back("alpha" + std::to_string(j));
    for (const DomainSweepRow& row : rows) {
        std::vector<std::string> cells = {format_double(row.length),
                                          row.converged ? "1" : "0",
                                          format_double(row.rate)};
        for (int j = 0; j <= modes; ++j)
            cells.push_back(j < static_cast<int>(row.alpha.size())
                                ? format_double(row.alpha[j])
                                : std::string());
        t.rows.push_back(std::move(cells));
    }
    return t;
}

void recipe_lengthsweep(Emitter& em, const ReproduceOptions& opts)
{
    DomainSweepOptions sweep;
    sweep.l_min = 1.0;
    sweep.l_max = 25.0;
    sweep.l_step = 0.25;
    sweep.modes = 10;
    sweep.dx = opts.dx;
    sweep.jobs = opts.jobs;
    sweep.relax.solver.scheme = Scheme::SemiImplicit;
    em.param("l_min", format_double(sweep.l_min));
    em.param("l_max", format_double(sweep.l_max));
    em.param("l_step", format_double(sweep.l_step));
    em.param("modes", std::to_string(sweep.modes));
    em.param("stationary_tol", format_double(sweep.relax.tol));
    em.param("scheme", "semi-implicit");

    const ModelSpec m = default_model();
    const auto rows = domain_sweep(m, sweep);
    em.table("sweep.csv", sweep_table(rows, sweep.modes));

    Table summary;
    summary.header = {"mode", "length0", "alpha_max", "amplitude"};
    for (int mode : {1, 2}) {
        try {
            const CharacteristicLength cl = characteristic_length(rows, mode);
            summary.rows.push_back(
                number_row({static_cast<double>(mode), cl.length0, cl.alpha_max,
                            cl.amplitude}));
        } catch (const Error& e) {
            em.note("mode " + std::to_string(mode) + ": " + e.what());
        }
    }
    em.table("summary.csv", summary);
}

void recipe_spectra(Emitter& em, const ReproduceOptions& opts)
{
    const double length = 5.5;
    em.param("length", format_double(length));
    const int max_modes = 6;

    Table trunc;
    trunc.header = {"M"};
    for (int j = 0; j <= max_modes; ++j)
        trunc.header.push_back("alpha" + std::to_string(j));
    trunc.header.push_back("residual");
    for (int M = 1; M <= max_modes; ++M) {
        GalerkinSystem sys;
        sys.modes = M;
        sys.k = kPi / length;
        const GalerkinSolution sol = solve_pattern_branch(sys);
        std::vector<std::string> cells = {std::to_string(M)};
        for (int j = 0; j <= max_modes; ++j)
            cells.push_back(j <= M ? format_double(sol.alpha[j]) : std::string());
        cells.push_back(format_double(sol.residual_norm));
        trunc.rows.push_back(std::move(cells));
    }
    em.table("truncation.csv", trunc);

    // Coefficients of the six-harmonic solution as the domain length moves.
    GalerkinSystem base;
    base.modes = max_modes;
    const double k_hi = kPi / 4.0, k_lo = kPi / 8.0;
    const auto curve =
        continuation_sweep(base, SweepParameter::WaveNumber, k_hi, k_lo, (k_hi - k_lo) / 80.0);
    Table gal;
    gal.header = {"L"};
    for (int j = 0; j <= max_modes; ++j)
        gal.header.push_back("alpha" + std::to_string(j));
    for (const ContinuationRow& row : curve) {
        std::vector<std::string> cells = {format_double(kPi / row.value)};
        for (double a : row.solution.alpha)
            cells.push_back(format_double(a));
        gal.rows.push_back(std::move(cells));
    }
    em.table("galerkin_vs_length.csv", gal);

    DomainSweepOptions sweep;
    sweep.l_min = 4.0;
    sweep.l_max = 8.0;
    sweep.l_step = 0.5;
    sweep.modes = max_modes;
    sweep.dx = opts.dx;
    sweep.jobs = opts.jobs;
    sweep.relax.solver.scheme = Scheme::SemiImplicit;
    const auto rows = domain_sweep(default_model(), sweep);
    em.table("simulation_vs_length.csv", sweep_table(rows, max_modes));
}

void recipe_panels(Emitter& em, const ReproduceOptions& opts)
{
    struct Family {
        const char* name;
        std::vector<double> values;
        void (*modify)(ModelSpec&, double);
        std::vector<int> profile_at; // indices whose stationary profile is kept
    };
    auto linspace = [](double lo, double hi, int count) {
        std::vector<double> v(count);
        for (int i = 0; i < count; ++i)
            v[i] = lo + (hi - lo) * i / (count - 1);
        return v;
    };
    const Family families[] = {
        {"chi0", linspace(1.80, 2.52, 10), [](ModelSpec& m, double v) { m.chi0 = v; },
         {0, 4, 9}},
        {"D", linspace(0.30, 1.11, 10), [](ModelSpec& m, double v) { m.D = v; },
         {0, 4, 9}},
        {"r", linspace(0.02, 0.13, 10), [](ModelSpec& m, double v) { m.r = v; },
         {0, 4, 9}},
    };
    const int modes = 3;
    em.param("modes", std::to_string(modes));
    em.param("points_per_panel", "10");

    for (const Family& family : families) {
        Table wl;
        wl.header = {family.name, "length0_galerkin", "lambda_implicit", "length0_sim",
                     "alpha_max_sim"};
        Table coeffs;
        coeffs.header = {family.name};
        for (int j = 0; j <= modes; ++j)
            coeffs.header.push_back("galerkin_alpha" + std::to_string(j));
        for (int j = 0; j <= modes + 1; ++j)
            coeffs.header.push_back("sim_alpha" + std::to_string(j));

        for (std::size_t vi = 0; vi < family.values.size(); ++vi) {
            const double value = family.values[vi];
            ModelSpec m = default_model();
            family.modify(m, value);

            GalerkinSystem sys;
            sys.modes = modes;
            sys.D = m.D;
            sys.chi0 = m.chi0;
            sys.r = m.r;
            const WavelengthPrediction pred = predict_wavelength_amplitude(sys);
            const double lambda_implicit = wavelength_implicit(m);

            // Locate the preferred half-pattern length in simulation with a
            // window centred on the projected prediction.
            DomainSweepOptions sweep;
            sweep.l_step = 0.5;
            sweep.l_min = std::max(1.5, std::floor(0.5 * pred.length0 / sweep.l_step) *
                                            sweep.l_step);
            sweep.l_max = std::ceil((1.9 * pred.length0 + 0.25) / sweep.l_step) *
                          sweep.l_step;
            sweep.modes = modes + 1;
            sweep.dx = opts.dx;
            sweep.jobs = opts.jobs;
            sweep.relax.tol = 1e-6;
            sweep.relax.t_max = 3000.0;
            sweep.relax.solver.scheme = Scheme::SemiImplicit;
            const auto rows = domain_sweep(m, sweep);

            double length0_sim = std::nan("");
            double alpha_max_sim = std::nan("");
            const DomainSweepRow* best = nullptr;
            try {
                const CharacteristicLength cl = characteristic_length(rows, 1);
                length0_sim = cl.length0;
                alpha_max_sim = cl.alpha_max;
                for (const DomainSweepRow& row : rows)
                    if (row.converged && !row.alpha.empty() &&
                        (!best || row.alpha[1] > best->alpha[1]))
                        best = &row;
            } catch (const Error& e) {
                em.note(std::string(family.name) + " = " + format_double(value) + ": " +
                        e.what());
            }

            wl.rows.push_back(
                number_row({value, pred.length0, lambda_implicit, length0_sim,
                            alpha_max_sim}));

            std::vector<std::string> crow = {format_double(value)};
            for (double a : pred.alpha)
                crow.push_back(format_double(a));
            for (int j = 0; j <= modes + 1; ++j)
                crow.push_back(best ? format_double(best->alpha[j]) : std::string());
            coeffs.rows.push_back(std::move(crow));

            if (best && std::find(family.profile_at.begin(), family.profile_at.end(),
                                  static_cast<int>(vi)) != family.profile_at.end()) {
                StationaryOptions relax = sweep.relax;
                const Grid1D grid = Grid1D::with_spacing(best->length, opts.dx,
                                                         std::max(8, 4 * sweep.modes));
                const StationaryResult sr = run_to_stationary(m, grid, sweep.ic, relax);
                if (!sr.failure)
                    em.profile(std::string("profile_") + family.name + "_" +
                                   value_tag(value) + ".csv",
                               sr.state);
            }
        }
        em.table(std::string("wavelength_vs_") + family.name + ".csv", wl);
        em.table(std::string("coefficients_vs_") + family.name + ".csv", coeffs);
    }
}

void recipe_table(Emitter& em, const ReproduceOptions& opts)
{
    const double length = 5.5;
    em.param("length", format_double(length));
    em.param("scheme", "semi-implicit");
    Table t;
    t.header = {"source", "alpha0", "alpha1", "alpha2", "alpha3", "alpha4"};

    StationaryOptions relax;
    relax.solver.scheme = Scheme::SemiImplicit;
    const Grid1D grid = Grid1D::with_spacing(length, opts.dx, 32);
    const StationaryResult sr =
        run_to_stationary(default_model(), grid, InitialCondition{}, relax);
    if (sr.failure) {
        em.note("simulation failed: " + sr.failure->reason);
    } else {
        const auto alpha = cosine_coefficients(sr.state.n, grid, 4);
        std::vector<std::string> row = {"simulation"};
        for (double a : alpha)
            row.push_back(format_double(a));
        t.rows.push_back(std::move(row));
    }

    for (int M = 1; M <= 4; ++M) {
        GalerkinSystem sys;
        sys.modes = M;
        sys.k = kPi / length;
        const GalerkinSolution sol = solve_pattern_branch(sys);
        std::vector<std::string> row = {"M=" + std::to_string(M)};
        for (int j = 0; j <= 4; ++j)
            row.push_back(j <= M ? format_double(sol.alpha[j]) : std::string());
        t.rows.push_back(std::move(row));
    }
    em.table("coefficients.csv", t);
}

} // namespace

Recipe parse_recipe(std::string_view name)
{
    for (const auto& entry : kRecipeNames)
        if (name == entry.name)
            return entry.recipe;
    std::ostringstream os;
    os << "unknown reproduce target '" << name << "' (expected one of:";
    for (const auto& entry : kRecipeNames)
        os << ' ' << entry.name;
    os << ')';
    throw std::invalid_argument(os.str());
}

std::string_view recipe_name(Recipe r)
{
    for (const auto& entry : kRecipeNames)
        if (entry.recipe == r)
            return entry.name;
    return "?";
}

std::vector<Recipe> all_recipes()
{
    std::vector<Recipe> out;
    for (const auto& entry : kRecipeNames)
        out.push_back(entry.recipe);
    return out;
}

ReproduceResult run_reproduce(Recipe recipe, const ReproduceOptions& opts)
{
    if (!(opts.dx > 0.0))
        throw std::invalid_argument("grid spacing must be positive");
    if (opts.jobs < 1)
        throw std::invalid_argument("worker count must be >= 1");
    Emitter em(opts, recipe_name(recipe));
    try {
        switch (recipe) {
        case Recipe::Wave:
            recipe_wave(em, opts);
            break;
        case Recipe::Boundaries:
            recipe_boundaries(em, opts);
            break;
        case Recipe::Gallery:
            recipe_gallery(em, opts);
            break;
        case Recipe::Wavelengths:
            recipe_wavelengths(em, opts);
            break;
        case Recipe::LengthSweep:
            recipe_lengthsweep(em, opts);
            break;
        case Recipe::Spectra:
            recipe_spectra(em, opts);
            break;
        case Recipe::Panels:
            recipe_panels(em, opts);
            break;
        case Recipe::CoefficientTable:
            recipe_table(em, opts);
            break;
        }
    } catch (const Error& e) {
        // Keep whatever was produced and record why the recipe stopped.
        em.note(std::string("recipe aborted: ") + e.what());
        em.manifest();
        throw;
    }
    em.manifest();
    return std::move(em.result);
}

} // namespace chemopat
