#include "chemopat/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chemopat/errors.hpp"
#include "numeric.hpp"

namespace chemopat {

Grid1D::Grid1D(double length_, int ncells_) : length(length_), ncells(ncells_)
{
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("grid length must be positive and finite");
    if (ncells < 8)
        throw std::invalid_argument("grid needs at least 8 cells");
}

Grid1D Grid1D::with_spacing(double length, double target_dx, int min_cells)
{
    if (!(target_dx > 0.0))
        throw std::invalid_argument("grid spacing must be positive");
    const int n = std::max(min_cells, static_cast<int>(std::ceil(length / target_dx)));
    return Grid1D(length, n);
}

SimulationState initial_state(const InitialCondition& ic, const Grid1D& grid)
{
    if (grid.ncells < 8)
        throw std::invalid_argument("grid needs at least 8 cells");
    SimulationState s;
    s.grid = grid;
    s.t = 0.0;
    s.n.assign(grid.ncells, ic.base_n);
    s.c.assign(grid.ncells, ic.base_c);
    switch (ic.kind) {
    case InitialCondition::Kind::Homogeneous:
        break;
    case InitialCondition::Kind::Stimulus: {
        const double lo = 0.5 * (grid.length - ic.stimulus_width);
        const double hi = 0.5 * (grid.length + ic.stimulus_width);
        for (int i = 0; i < grid.ncells; ++i)
            if (grid.x(i) > lo && grid.x(i) < hi)
                s.n[i] = ic.stimulus_value;
        break;
    }
    case InitialCondition::Kind::FrontSeed:
        for (int i = 0; i < grid.ncells; ++i)
            s.n[i] = grid.x(i) < ic.front_extent ? 1.0 : 0.0;
        break;
    case InitialCondition::Kind::Custom:
        if (static_cast<int>(ic.n.size()) != grid.ncells ||
            static_cast<int>(ic.c.size()) != grid.ncells)
            throw std::invalid_argument("custom initial profiles must match the grid size");
        s.n = ic.n;
        s.c = ic.c;
        break;
    }
    for (double v : s.n)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("initial density must be finite and non-negative");
    for (double v : s.c)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("initial concentration must be finite and non-negative");
    return s;
}

std::string_view scheme_name(Scheme s)
{
    return s == Scheme::Explicit ? "explicit" : "semi-implicit";
}

Scheme parse_scheme(std::string_view name)
{
    if (name == "explicit")
        return Scheme::Explicit;
    if (name == "semi-implicit" || name == "semi_implicit" || name == "semi")
        return Scheme::SemiImplicit;
    throw std::invalid_argument("unknown scheme '" + std::string(name) +
                                "' (expected 'explicit' or 'semi-implicit')");
}

namespace {

struct Workspace {
    std::vector<double> dn, dc;        // right-hand sides
    std::vector<double> diag, upper, rhs; // tridiagonal solves
};

// Largest stable forward-Euler step for the diffusion part.
double explicit_dt(const ModelSpec& m, const Grid1D& grid)
{
    const double dx = grid.dx();
    return 0.2 * dx * dx / std::max(m.D, 1.0);
}

// Peak advective slope |chi c_x| over the faces; used for the semi-implicit
// CFL condition.
double max_drift(const SimulationState& s, const ModelSpec& m)
{
    const int nx = s.grid.ncells;
    const double inv_dx = 1.0 / s.grid.dx();
    double vmax = 0.0;
    for (int i = 0; i + 1 < nx; ++i) {
        const double nf = 0.5 * (s.n[i] + s.n[i + 1]);
        const double cf = 0.5 * (s.c[i] + s.c[i + 1]);
        const double cx = (s.c[i + 1] - s.c[i]) * inv_dx;
        vmax = std::max(vmax, std::abs(chi_at(m, nf, cf) * cx));
    }
    return vmax;
}

double semi_implicit_dt(const SimulationState& s, const ModelSpec& m)
{
    const double vmax = max_drift(s, m);
    const double cap = 0.05;
    if (vmax <= 0.0)
        return cap;
    return std::min(cap, 0.35 * s.grid.dx() / vmax);
}

double pick_dt(const SimulationState& s, const ModelSpec& m, const SolverOptions& opts)
{
    if (opts.dt > 0.0)
        return opts.dt;
    return opts.scheme == Scheme::Explicit ? explicit_dt(m, s.grid)
                                           : semi_implicit_dt(s, m);
}

// Full right-hand side of both equations in flux form. Zero-flux boundaries
// fall out of treating the two boundary faces as carrying no flux. The
// mirror image of a state produces the exact mirror image of the update, so
// symmetric data stays symmetric to the last bit.
void flux_form_rhs(const SimulationState& s, const ModelSpec& m, Workspace& w,
                   bool include_diffusion)
{
    const int nx = s.grid.ncells;
    const double inv_dx = 1.0 / s.grid.dx();
    const bool logistic = logistic_active(m);
    w.dn.resize(nx);
    w.dc.resize(nx);
    double flux_n_prev = 0.0; // total n-flux through the left face of cell i
    double flux_c_prev = 0.0;
    for (int i = 0; i < nx; ++i) {
        double flux_n_next = 0.0;
        double flux_c_next = 0.0;
        if (i + 1 < nx) {
            const double ngrad = (s.n[i + 1] - s.n[i]) * inv_dx;
            const double cgrad = (s.c[i + 1] - s.c[i]) * inv_dx;
            const double nf = 0.5 * (s.n[i] + s.n[i + 1]);
            const double cf = 0.5 * (s.c[i] + s.c[i + 1]);
            flux_n_next = chi_at(m, nf, cf) * cgrad;
            if (include_diffusion)
                flux_n_next -= m.D * ngrad;
            flux_c_next = include_diffusion ? cgrad : 0.0;
        }
        w.dn[i] = -(flux_n_next - flux_n_prev) * inv_dx;
        if (logistic)
            w.dn[i] += m.r * s.n[i] * (1.0 - s.n[i]);
        w.dc[i] = (flux_c_next - flux_c_prev) * inv_dx + s.n[i];
        if (include_diffusion)
            w.dc[i] -= s.c[i];
        flux_n_prev = flux_n_next;
        flux_c_prev = flux_c_next;
    }
}

// Solves (I - mu T) u = rhs where T is the zero-flux Laplacian stencil and
// `extra` adds a uniform decay term to the diagonal. Thomas algorithm; the
// matrix is strictly diagonally dominant.
void tridiagonal_diffusion_solve(std::vector<double>& u, const std::vector<double>& rhs,
                                 double mu, double extra, Workspace& w)
{
    const int nx = static_cast<int>(rhs.size());
    w.diag.resize(nx);
    w.upper.resize(nx);
    w.rhs = rhs;
    for (int i = 0; i < nx; ++i) {
        const int neighbors = (i > 0 ? 1 : 0) + (i + 1 < nx ? 1 : 0);
        w.diag[i] = 1.0 + extra + mu * neighbors;
        w.upper[i] = -mu;
    }
    for (int i = 1; i < nx; ++i) {
        const double factor = -mu / w.diag[i - 1];
        w.diag[i] -= factor * w.upper[i - 1];
        w.rhs[i] -= factor * w.rhs[i - 1];
    }
    u.resize(nx);
    u[nx - 1] = w.rhs[nx - 1] / w.diag[nx - 1];
    for (int i = nx - 2; i >= 0; --i)
        u[i] = (w.rhs[i] - w.upper[i] * u[i + 1]) / w.diag[i];
}

void check_state(const SimulationState& s, const SolverOptions& opts)
{
    for (int i = 0; i < s.grid.ncells; ++i) {
        if (!std::isfinite(s.n[i]) || !std::isfinite(s.c[i]))
            throw BlowUpError("non-finite value", s.t, s.grid.x(i));
        if (s.n[i] < -opts.negative_tol)
            throw BlowUpError("negative density", s.t, s.grid.x(i));
        if (s.c[i] < -opts.negative_tol)
            throw BlowUpError("negative concentration", s.t, s.grid.x(i));
    }
}

void advance(SimulationState& s, const ModelSpec& m, double dt,
             const SolverOptions& opts, Workspace& w)
{
    const int nx = s.grid.ncells;
    if (opts.scheme == Scheme::Explicit) {
        flux_form_rhs(s, m, w, /*include_diffusion=*/true);
        for (int i = 0; i < nx; ++i) {
            s.n[i] += dt * w.dn[i];
            s.c[i] += dt * w.dc[i];
        }
    } else {
        // Transport and reactions explicit, diffusion and decay implicit.
        flux_form_rhs(s, m, w, /*include_diffusion=*/false);
        const double inv_dx = 1.0 / s.grid.dx();
        const double mu = dt * inv_dx * inv_dx;
        for (int i = 0; i < nx; ++i)
            w.dn[i] = s.n[i] + dt * w.dn[i];
        tridiagonal_diffusion_solve(s.n, w.dn, m.D * mu, 0.0, w);
        for (int i = 0; i < nx; ++i)
            w.dc[i] = s.c[i] + dt * w.dc[i];
        tridiagonal_diffusion_solve(s.c, w.dc, mu, dt, w);
    }
    s.t += dt;
    check_state(s, opts);
}

std::vector<double> clean_times(std::vector<double> times)
{
    if (times.empty())
        throw std::invalid_argument("at least one snapshot time is required");
    for (double t : times)
        if (!(t >= 0.0) || !std::isfinite(t))
            throw std::invalid_argument("snapshot times must be finite and >= 0");
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

// Integrates in place to the target time, shortening the last step to land on
// it exactly.
void integrate_to(SimulationState& s, const ModelSpec& m, double target,
                  const SolverOptions& opts, Workspace& w)
{
    while (s.t < target) {
        const double dt = std::min(pick_dt(s, m, opts), target - s.t);
        if (dt < 1e-14 * std::max(1.0, std::abs(s.t))) {
            s.t = target; // remaining gap is below time resolution
            break;
        }
        advance(s, m, dt, opts, w);
    }
}

} // namespace

void step(SimulationState& state, const ModelSpec& m, double dt, const SolverOptions& opts)
{
    m.validate();
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("time step must be positive and finite");
    if (static_cast<int>(state.n.size()) != state.grid.ncells ||
        static_cast<int>(state.c.size()) != state.grid.ncells)
        throw std::invalid_argument("state profiles must match the grid size");
    Workspace w;
    advance(state, m, dt, opts, w);
}

RunResult run(const ModelSpec& m, const Grid1D& grid, const InitialCondition& ic,
              std::vector<double> snapshot_times, const SolverOptions& opts)
{
    m.validate();
    const std::vector<double> times = clean_times(std::move(snapshot_times));
    RunResult result;
    SimulationState s = initial_state(ic, grid);
    Workspace w;
    try {
        for (double target : times) {
            integrate_to(s, m, target, opts, w);
            result.snapshots.push_back(s);
        }
    } catch (const BlowUpError& e) {
        result.failure = BlowUpDiagnostic{e.t, e.x, e.reason};
    }
    return result;
}

StationaryResult run_to_stationary(const ModelSpec& m, const Grid1D& grid,
                                   const InitialCondition& ic,
                                   const StationaryOptions& opts)
{
    m.validate();
    if (!(opts.tol > 0.0))
        throw std::invalid_argument("stationarity tolerance must be positive");
    if (!(opts.delta > 0.0))
        throw std::invalid_argument("sampling interval must be positive");
    if (!(opts.t_max > 0.0))
        throw std::invalid_argument("time horizon must be positive");

    StationaryResult result;
    SimulationState s = initial_state(ic, grid);
    Workspace w;
    std::vector<double> prev = s.n;
    try {
        while (s.t < opts.t_max) {
            const double target = std::min(s.t + opts.delta, opts.t_max);
            const double elapsed = target - s.t;
            integrate_to(s, m, target, opts.solver, w);
            double change = 0.0;
            for (int i = 0; i < grid.ncells; ++i)
                change = std::max(change, std::abs(s.n[i] - prev[i]));
            result.rate = change / elapsed;
            if (result.rate < opts.tol) {
                result.converged = true;
                break;
            }
            prev = s.n;
        }
    } catch (const BlowUpError& e) {
        result.failure = BlowUpDiagnostic{e.t, e.x, e.reason};
    }
    result.state = std::move(s);
    return result;
}

double front_position(const SimulationState& state, double level)
{
    const int nx = state.grid.ncells;
    for (int i = nx - 2; i >= 0; --i) {
        if (state.n[i] >= level && state.n[i + 1] < level) {
            const double frac = (state.n[i] - level) / (state.n[i] - state.n[i + 1]);
            return state.grid.x(i) + frac * state.grid.dx();
        }
    }
    std::ostringstream os;
    os << "no front: the density profile at t = " << state.t
       << " never crosses level " << level << " downward";
    throw RegimeError(os.str());
}

double front_speed(std::span<const SimulationState> snapshots, double level)
{
    if (snapshots.size() < 2)
        throw std::invalid_argument("front speed needs at least two snapshots");
    std::vector<double> t, x;
    t.reserve(snapshots.size());
    x.reserve(snapshots.size());
    for (const SimulationState& s : snapshots) {
        t.push_back(s.t);
        x.push_back(front_position(s, level));
    }
    const double span = *std::max_element(t.begin(), t.end()) -
                        *std::min_element(t.begin(), t.end());
    if (!(span > 0.0))
        throw std::invalid_argument("front speed needs snapshots at distinct times");
    return detail::least_squares_slope(t, x);
}

} // namespace chemopat
