#ifndef CHEMOPAT_SOLVER_HPP
#define CHEMOPAT_SOLVER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chemopat/model.hpp"

namespace chemopat {

// Uniform cell-centered grid on [0, L] with zero-flux boundaries.
struct Grid1D {
    double length = 0.0;
    int ncells = 0;

    Grid1D() = default;
    Grid1D(double length, int ncells); // throws std::invalid_argument

    double dx() const { return length / ncells; }
    double x(int i) const { return (i + 0.5) * dx(); }

    // Grid with spacing as close to target_dx as possible without exceeding
    // it, and at least min_cells cells.
    static Grid1D with_spacing(double length, double target_dx = 0.05,
                               int min_cells = 8);

    bool operator==(const Grid1D&) const = default;
};

struct SimulationState {
    Grid1D grid;
    double t = 0.0;
    std::vector<double> n; // cell density, one value per cell
    std::vector<double> c; // chemoattractant concentration
};

// Initial profiles. Non-custom kinds set c = base_c everywhere (variants
// whose sensitivity is singular at c = 0 need base_c > 0).
struct InitialCondition {
    enum class Kind {
        Homogeneous, // n = base_n everywhere
        Stimulus,    // n = base_n plus a centered rectangular perturbation
        FrontSeed,   // n = 1 on [0, front_extent), 0 beyond; seeds an invasion front
        Custom,      // profiles supplied in n and c below
    };

    Kind kind = Kind::FrontSeed;
    double base_n = 1.0;
    double base_c = 0.0;
    double stimulus_value = 1.2; // plateau value inside the stimulus window
    double stimulus_width = 1.0;
    double front_extent = 1.0;
    std::vector<double> n; // Custom only
    std::vector<double> c; // Custom only
};

SimulationState initial_state(const InitialCondition& ic, const Grid1D& grid);

enum class Scheme {
    Explicit,     // forward Euler, flux form; dt <= 0.2 dx^2 / max(D, 1)
    SemiImplicit, // backward-Euler diffusion/decay, explicit transport
};

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name); // throws std::invalid_argument

struct SolverOptions {
    Scheme scheme = Scheme::Explicit;
    // Time step; 0 picks the scheme default (explicit: the diffusive bound
    // above; semi-implicit: advective CFL 0.35 capped at 0.05, re-evaluated
    // every step).
    double dt = 0.0;
    double negative_tol = 1e-9; // tolerated round-off undershoot in n, c
};

// Result of integrating to a fixed horizon. On a numerical failure the
// snapshots collected so far are kept and `failure` describes the event.
struct BlowUpDiagnostic {
    double t = 0.0;
    double x = 0.0;
    std::string reason;
};

struct RunResult {
    std::vector<SimulationState> snapshots;
    std::optional<BlowUpDiagnostic> failure;
};

// Advances the state by one step of size dt. Throws BlowUpError when the
// update produces a non-finite value or a negative density/concentration
// beyond negative_tol.
void step(SimulationState& state, const ModelSpec& m, double dt,
          const SolverOptions& opts = {});

// Integrates from t = 0 and records the state at each requested time
// (sorted, deduplicated; each hit exactly by shortening the final step).
RunResult run(const ModelSpec& m, const Grid1D& grid, const InitialCondition& ic,
              std::vector<double> snapshot_times, const SolverOptions& opts = {});

// Integrates until max_i |n_i(t + delta) - n_i(t)| / delta < tol, sampling
// every delta time units, or until t_max.
struct StationaryResult {
    SimulationState state;
    bool converged = false;
    double rate = 0.0; // last sampled change rate
    std::optional<BlowUpDiagnostic> failure;
};

struct StationaryOptions {
    double tol = 1e-7;
    double t_max = 5000.0;
    double delta = 1.0; // sampling interval for the change rate
    SolverOptions solver;
};

StationaryResult run_to_stationary(const ModelSpec& m, const Grid1D& grid,
                                   const InitialCondition& ic,
                                   const StationaryOptions& opts = {});

// Front position: rightmost downward crossing of n through `level`, linearly
// interpolated between cell centers. Throws RegimeError when a snapshot has
// no crossing.
double front_position(const SimulationState& state, double level);

// Least-squares slope of the front position against time over the snapshots.
// Needs at least two snapshots at distinct times.
double front_speed(std::span<const SimulationState> snapshots, double level = 0.5);

} // namespace chemopat

#endif
