#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "chemopat/errors.hpp"
#include "chemopat/model.hpp"
#include "chemopat/solver.hpp"
#include "chemopat/spectral.hpp"

using namespace chemopat;

namespace {

double mean(const std::vector<double>& v)
{
    return std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
}

double max_asymmetry(const std::vector<double>& v)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < v.size() / 2; ++i)
        worst = std::max(worst, std::abs(v[i] - v[v.size() - 1 - i]));
    return worst;
}

// A state whose density ramps linearly from 1 down to 0 across the domain,
// placing the level-0.5 crossing at a known position.
SimulationState ramp_state(double front_at, double t, const Grid1D& grid)
{
    SimulationState s;
    s.grid = grid;
    s.t = t;
    s.n.resize(grid.ncells);
    s.c.assign(grid.ncells, 0.0);
    for (int i = 0; i < grid.ncells; ++i) {
        const double v = 0.5 - (grid.x(i) - front_at); // slope -1 through the front
        s.n[i] = std::clamp(v, 0.0, 1.0);
    }
    return s;
}

} // namespace

TEST_SUITE_BEGIN("solver");

TEST_CASE("grid construction and spacing helper")
{
    const Grid1D g(5.5, 110);
    CHECK(g.dx() == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(g.x(0) == doctest::Approx(0.025).epsilon(1e-14));
    CHECK(g.x(109) == doctest::Approx(5.475).epsilon(1e-14));

    CHECK(Grid1D::with_spacing(5.5, 0.05).ncells == 110);
    CHECK(Grid1D::with_spacing(0.2, 0.05).ncells == 8); // floor of 8 cells
    CHECK(Grid1D::with_spacing(1.0, 0.3).ncells == 8);

    CHECK_THROWS_AS(Grid1D(0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(-1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D::with_spacing(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("initial conditions: the four kinds")
{
    const Grid1D grid(10.0, 100);

    SUBCASE("homogeneous")
    {
        InitialCondition ic;
        ic.kind = InitialCondition::Kind::Homogeneous;
        ic.base_n = 0.7;
        ic.base_c = 0.3;
        const SimulationState s = initial_state(ic, grid);
        CHECK(s.t == 0.0);
        CHECK(*std::min_element(s.n.begin(), s.n.end()) == 0.7);
        CHECK(*std::max_element(s.n.begin(), s.n.end()) == 0.7);
        CHECK(s.c.front() == 0.3);
    }
    SUBCASE("centered stimulus")
    {
        InitialCondition ic;
        ic.kind = InitialCondition::Kind::Stimulus;
        ic.base_n = 1.0;
        ic.stimulus_value = 1.2;
        ic.stimulus_width = 1.0;
        const SimulationState s = initial_state(ic, grid);
        // Cells inside (4.5, 5.5) carry the plateau; everything else the base.
        for (int i = 0; i < grid.ncells; ++i) {
            const bool inside = grid.x(i) > 4.5 && grid.x(i) < 5.5;
            CHECK(s.n[i] == (inside ? 1.2 : 1.0));
        }
        CHECK(max_asymmetry(s.n) == 0.0);
    }
    SUBCASE("front seed honors the background concentration")
    {
        InitialCondition ic;
        ic.kind = InitialCondition::Kind::FrontSeed;
        ic.front_extent = 2.0;
        ic.base_c = 0.4;
        const SimulationState s = initial_state(ic, grid);
        for (int i = 0; i < grid.ncells; ++i)
            CHECK(s.n[i] == (grid.x(i) < 2.0 ? 1.0 : 0.0));
        CHECK(s.c.back() == 0.4);
    }
    SUBCASE("custom profiles are validated")
    {
        InitialCondition ic;
        ic.kind = InitialCondition::Kind::Custom;
        ic.n.assign(100, 1.0);
        ic.c.assign(100, 0.5);
        CHECK_NOTHROW(initial_state(ic, grid));

        ic.n.resize(99);
        CHECK_THROWS_AS(initial_state(ic, grid), std::invalid_argument);
        ic.n.assign(100, -0.5);
        CHECK_THROWS_AS(initial_state(ic, grid), std::invalid_argument);
        ic.n.assign(100, 1.0);
        ic.c[3] = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(initial_state(ic, grid), std::invalid_argument);
    }
}

TEST_CASE("scheme names parse both ways")
{
    CHECK(parse_scheme("explicit") == Scheme::Explicit);
    CHECK(parse_scheme("semi-implicit") == Scheme::SemiImplicit);
    CHECK(parse_scheme("semi") == Scheme::SemiImplicit);
    CHECK(scheme_name(Scheme::SemiImplicit) == "semi-implicit");
    CHECK_THROWS_AS(parse_scheme("midpoint"), std::invalid_argument);
}

TEST_CASE("homogeneous steady states are exact fixed points of both schemes")
{
    const Grid1D grid(5.5, 110);
    for (Scheme scheme : {Scheme::Explicit, Scheme::SemiImplicit}) {
        CAPTURE(scheme_name(scheme));
        SolverOptions opts;
        opts.scheme = scheme;

        // Logistic carrying-capacity state (1,1).
        ModelSpec m = m3_defaults();
        InitialCondition ic;
        ic.kind = InitialCondition::Kind::Homogeneous;
        ic.base_n = 1.0;
        ic.base_c = 1.0;
        SimulationState s = initial_state(ic, grid);
        for (int it = 0; it < 25; ++it)
            step(s, m, 1e-3, opts);
        for (double v : s.n)
            CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
        for (double v : s.c)
            CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

        // No-kinetics uniform state (n0, n0).
        ModelSpec m2 = m3_defaults();
        m2.variant = Variant::M2;
        m2.n0 = 0.6;
        ic.base_n = 0.6;
        ic.base_c = 0.6;
        s = initial_state(ic, grid);
        for (int it = 0; it < 25; ++it)
            step(s, m2, 1e-3, opts);
        for (double v : s.n)
            CHECK(v == doctest::Approx(0.6).epsilon(1e-14));
    }
}

TEST_CASE("cell mass is conserved without kinetics")
{
    ModelSpec m = m3_defaults();
    m.variant = Variant::M2; // f = 0: total mass is invariant
    const Grid1D grid(8.0, 160);
    InitialCondition ic;
    ic.kind = InitialCondition::Kind::Stimulus;
    ic.base_c = 1.0;

    for (Scheme scheme : {Scheme::Explicit, Scheme::SemiImplicit}) {
        CAPTURE(scheme_name(scheme));
        SolverOptions opts;
        opts.scheme = scheme;
        SimulationState s0 = initial_state(ic, grid);
        const double mass0 = mean(s0.n);
        RunResult res = run(m, grid, ic, {3.0}, opts);
        REQUIRE_FALSE(res.failure.has_value());
        REQUIRE(res.snapshots.size() == 1);
        CHECK(std::abs(mean(res.snapshots[0].n) - mass0) < 1e-12);
    }
}

TEST_CASE("mirror-symmetric data stays mirror-symmetric")
{
    const ModelSpec m = m3_defaults();
    const Grid1D grid(5.5, 110);
    InitialCondition ic;
    ic.kind = InitialCondition::Kind::Stimulus;
    ic.base_c = 1.0; // start near the uniform state so the pattern grows symmetrically

    SUBCASE("explicit scheme: exact to the last bit")
    {
        RunResult res = run(m, grid, ic, {2.0}, {});
        REQUIRE_FALSE(res.failure.has_value());
        CHECK(max_asymmetry(res.snapshots[0].n) == 0.0);
        CHECK(max_asymmetry(res.snapshots[0].c) == 0.0);
    }
    SUBCASE("semi-implicit scheme: to rounding noise")
    {
        SolverOptions opts;
        opts.scheme = Scheme::SemiImplicit;
        RunResult res = run(m, grid, ic, {2.0}, opts);
        REQUIRE_FALSE(res.failure.has_value());
        CHECK(max_asymmetry(res.snapshots[0].n) < 1e-12);
        CHECK(max_asymmetry(res.snapshots[0].c) < 1e-12);
    }
}

TEST_CASE("snapshot times are sorted, deduplicated and hit exactly")
{
    const ModelSpec m = m3_defaults();
    const Grid1D grid(5.5, 110);
    InitialCondition ic;
    ic.kind = InitialCondition::Kind::Homogeneous;
    ic.base_c = 1.0;

    RunResult res = run(m, grid, ic, {1.0, 0.25, 1.0, 0.0}, {});
    REQUIRE_FALSE(res.failure.has_value());
    REQUIRE(res.snapshots.size() == 3);
    CHECK(res.snapshots[0].t == 0.0);
    CHECK(res.snapshots[1].t == 0.25);
    CHECK(res.snapshots[2].t == 1.0);

    CHECK_THROWS_AS(run(m, grid, ic, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(run(m, grid, ic, {-1.0}, {}), std::invalid_argument);
}

TEST_CASE("density draining below zero is reported as a blow-up")
{
    // With a density-independent sensitivity the chemotactic flux keeps
    // pulling mass out of empty cells, so a vacuum region next to a curved
    // concentration profile goes negative within a step or two.
    ModelSpec m = m3_defaults();
    m.variant = Variant::M1;
    const Grid1D grid(10.0, 100);
    InitialCondition ic;
    ic.kind = InitialCondition::Kind::Custom;
    ic.n.assign(100, 0.0);
    ic.c.resize(100);
    for (int i = 0; i < 100; ++i) {
        if (grid.x(i) > 5.0)
            ic.n[i] = 1.0;
        ic.c[i] = grid.x(i) * grid.x(i) / 100.0; // c_xx > 0 in the vacuum
    }

    SUBCASE("step throws a typed error")
    {
        SimulationState s = initial_state(ic, grid);
        CHECK_THROWS_AS(
            [&] {
                for (int it = 0; it < 100; ++it)
                    step(s, m, 1e-3, {});
            }(),
            BlowUpError);
    }
    SUBCASE("run keeps partial results and a diagnostic")
    {
        RunResult res = run(m, grid, ic, {0.0, 50.0}, {});
        REQUIRE(res.failure.has_value());
        CHECK(res.failure->reason.find("negative") != std::string::npos);
        CHECK(res.failure->t >= 0.0);
        CHECK(res.failure->x >= 0.0);
        REQUIRE(res.snapshots.size() == 1); // the t = 0 snapshot survived
        CHECK(res.snapshots[0].t == 0.0);
    }
}

TEST_CASE("non-finite values are reported as a blow-up")
{
    const ModelSpec m = m3_defaults();
    const Grid1D grid(5.5, 110);
    InitialCondition ic;
    ic.kind = InitialCondition::Kind::Homogeneous;
    ic.base_c = 1.0;
    SimulationState s = initial_state(ic, grid);
    s.n[40] = std::numeric_limits<double>::quiet_NaN();
    try {
        step(s, m, 1e-3, {});
        FAIL("expected a blow-up");
    } catch (const BlowUpError& e) {
        CHECK(std::string(e.what()).find("non-finite") != std::string::npos);
        CHECK(e.reason == "non-finite value");
    }
}

TEST_CASE("relaxation finds the half-spike and both schemes agree on it")
{
    const ModelSpec m = m3_defaults();
    const Grid1D grid(5.5, 110);
    InitialCondition ic; // front seed

    StationaryOptions opts;
    opts.tol = 1e-7;
    opts.t_max = 2000.0;
    const StationaryResult expl = run_to_stationary(m, grid, ic, opts);
    REQUIRE_FALSE(expl.failure.has_value());
    CHECK(expl.converged);
    CHECK(expl.rate < opts.tol);

    // One half-spike, peaked against the left boundary; the trough value is
    // the alternating coefficient sum, roughly 0.61.
    const auto& n = expl.state.n;
    CHECK(n.front() == *std::max_element(n.begin(), n.end()));
    CHECK(n.back() == *std::min_element(n.begin(), n.end()));
    CHECK(n.front() > 1.5);
    CHECK(n.back() < 0.65);

    StationaryOptions semi = opts;
    semi.solver.scheme = Scheme::SemiImplicit;
    const StationaryResult impl = run_to_stationary(m, grid, ic, semi);
    REQUIRE_FALSE(impl.failure.has_value());
    CHECK(impl.converged);

    const SpectralSeries a = decompose(expl.state, 4);
    const SpectralSeries b = decompose(impl.state, 4);
    for (int i = 0; i <= 4; ++i)
        CHECK(a.alpha[i] == doctest::Approx(b.alpha[i]).epsilon(2e-4));
    // Frozen reference for the first harmonic of the stationary half-spike.
    CHECK(a.alpha[1] == doctest::Approx(0.40330).epsilon(2e-4));
}

TEST_CASE("stationarity options are validated")
{
    const ModelSpec m = m3_defaults();
    const Grid1D grid(5.5, 110);
    InitialCondition ic;
    StationaryOptions opts;
    opts.tol = 0.0;
    CHECK_THROWS_AS(run_to_stationary(m, grid, ic, opts), std::invalid_argument);
    opts = {};
    opts.delta = -1.0;
    CHECK_THROWS_AS(run_to_stationary(m, grid, ic, opts), std::invalid_argument);
    opts = {};
    opts.t_max = 0.0;
    CHECK_THROWS_AS(run_to_stationary(m, grid, ic, opts), std::invalid_argument);
}

TEST_CASE("front position interpolates the rightmost downward crossing")
{
    const Grid1D grid(20.0, 400);
    const SimulationState s = ramp_state(7.3, 0.0, grid);
    CHECK(front_position(s, 0.5) == doctest::Approx(7.3).epsilon(1e-12));

    SimulationState flat = s;
    std::fill(flat.n.begin(), flat.n.end(), 1.0);
    CHECK_THROWS_AS(front_position(flat, 0.5), RegimeError);
}

TEST_CASE("front speed is the least-squares slope of the crossing position")
{
    const Grid1D grid(40.0, 800);
    std::vector<SimulationState> snaps;
    for (double t : {10.0, 20.0, 30.0, 40.0})
        snaps.push_back(ramp_state(3.0 + 0.5 * t, t, grid));
    CHECK(front_speed(snaps, 0.5) == doctest::Approx(0.5).epsilon(1e-12));

    snaps.resize(1);
    CHECK_THROWS_AS(front_speed(snaps, 0.5), std::invalid_argument);
    snaps.push_back(ramp_state(8.0, 10.0, grid)); // duplicate time
    CHECK_THROWS_AS(front_speed(snaps, 0.5), std::invalid_argument);
}

TEST_CASE("step argument validation")
{
    const ModelSpec m = m3_defaults();
    const Grid1D grid(5.5, 110);
    InitialCondition ic;
    ic.kind = InitialCondition::Kind::Homogeneous;
    SimulationState s = initial_state(ic, grid);
    CHECK_THROWS_AS(step(s, m, 0.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(step(s, m, -1e-3, {}), std::invalid_argument);
    s.n.resize(50);
    CHECK_THROWS_AS(step(s, m, 1e-3, {}), std::invalid_argument);
}

TEST_SUITE_END();
