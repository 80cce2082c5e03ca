#include <doctest.h>

#include <cmath>
#include <vector>

#include "chemopat/errors.hpp"
#include "chemopat/model.hpp"
#include "chemopat/solver.hpp"
#include "chemopat/spectral.hpp"

using namespace chemopat;

namespace {

// Samples a cosine series at the cell centers of `grid`.
std::vector<double> sample_series(const std::vector<double>& coeffs, const Grid1D& grid)
{
    std::vector<double> v(grid.ncells);
    for (int i = 0; i < grid.ncells; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            s += coeffs[j] * std::cos(double(j) * kPi * grid.x(i) / grid.length);
        v[i] = s;
    }
    return v;
}

DomainSweepRow synthetic_row(double length, double alpha1, double alpha2 = 0.0)
{
    DomainSweepRow row;
    row.length = length;
    row.converged = true;
    row.alpha = {1.0, alpha1, alpha2};
    return row;
}

} // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("midpoint sampling recovers cosine coefficients exactly")
{
    const Grid1D grid(4.0, 64);
    const std::vector<double> truth = {0.9, 0.4, -0.15, 0.05, 0.0125};
    const std::vector<double> profile = sample_series(truth, grid);
    const std::vector<double> got = cosine_coefficients(profile, grid, 4);
    REQUIRE(got.size() == 5);
    for (int j = 0; j <= 4; ++j)
        CHECK(got[j] == doctest::Approx(truth[j]).epsilon(1e-13));

    // Requesting more modes than the profile contains yields zeros.
    const std::vector<double> wide = cosine_coefficients(profile, grid, 8);
    for (int j = 5; j <= 8; ++j)
        CHECK(std::abs(wide[j]) < 1e-13);
}

TEST_CASE("argument validation for coefficient extraction")
{
    const Grid1D grid(4.0, 64);
    std::vector<double> profile(64, 1.0);
    CHECK_THROWS_AS(cosine_coefficients(std::vector<double>(63, 1.0), grid, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(cosine_coefficients(profile, grid, -1), std::invalid_argument);
    // 64 cells resolve at most mode 16 under the 4-cells-per-mode rule.
    CHECK_NOTHROW(cosine_coefficients(profile, grid, 16));
    CHECK_THROWS_AS(cosine_coefficients(profile, grid, 17), std::invalid_argument);
}

TEST_CASE("mirror tiling maps mode i on L to mode 2i on 2L")
{
    const Grid1D grid(5.5, 110);
    const std::vector<double> truth = {0.9, 0.4, -0.15, 0.05};
    const std::vector<double> profile = sample_series(truth, grid);

    const Grid1D doubled(11.0, 220);
    std::vector<double> tiled(220);
    for (int i = 0; i < 110; ++i) {
        tiled[i] = profile[i];
        tiled[219 - i] = profile[i];
    }
    const std::vector<double> got = cosine_coefficients(tiled, doubled, 6);
    CHECK(got[0] == doctest::Approx(truth[0]).epsilon(1e-13));
    CHECK(got[2] == doctest::Approx(truth[1]).epsilon(1e-13));
    CHECK(got[4] == doctest::Approx(truth[2]).epsilon(1e-13));
    CHECK(got[6] == doctest::Approx(truth[3]).epsilon(1e-13));
    CHECK(std::abs(got[1]) < 1e-13);
    CHECK(std::abs(got[3]) < 1e-13);
    CHECK(std::abs(got[5]) < 1e-13);
}

TEST_CASE("decompose handles both fields and reconstruct inverts it")
{
    const Grid1D grid(4.0, 64);
    SimulationState s;
    s.grid = grid;
    s.n = sample_series({0.9, 0.4, -0.15}, grid);
    s.c = sample_series({0.8, 0.2, 0.0}, grid);

    const SpectralSeries series = decompose(s, 2);
    CHECK(series.length == 4.0);
    CHECK(series.alpha[1] == doctest::Approx(0.4).epsilon(1e-13));
    CHECK(series.beta[1] == doctest::Approx(0.2).epsilon(1e-13));

    const std::vector<double> back = reconstruct(series.alpha, grid);
    for (int i = 0; i < grid.ncells; ++i)
        CHECK(back[i] == doctest::Approx(s.n[i]).epsilon(1e-12));
}

TEST_CASE("discrepancy is the integrated squared difference")
{
    const Grid1D grid(4.0, 64);
    SimulationState s;
    s.grid = grid;
    s.n = sample_series({0.9, 0.4, 0.1}, grid);
    s.c.assign(64, 0.0);

    // Truncating at mode 1 leaves exactly the 0.1 cos(2 pi x / L) tail, whose
    // squared integral over the domain is 0.1^2 L / 2.
    const SpectralSeries series = decompose(s, 1);
    CHECK(discrepancy(series, s) == doctest::Approx(0.01 * 4.0 / 2.0).epsilon(1e-12));

    // The two-profile overload agrees with the hand-computed sum.
    std::vector<double> a(64, 1.0), b(64, 0.75);
    CHECK(discrepancy(a, b, grid) == doctest::Approx(0.0625 * 4.0).epsilon(1e-12));

    SimulationState other = s;
    other.grid = Grid1D(5.0, 64);
    CHECK_THROWS_AS(discrepancy(s, other), std::invalid_argument);

    SpectralSeries wrong = series;
    wrong.length = 5.0;
    CHECK_THROWS_AS(discrepancy(wrong, s), std::invalid_argument);
}

TEST_CASE("characteristic length: parabola refinement on synthetic rows")
{
    // alpha_1(L) = 0.4 - 0.3 (L - 5.4)^2 peaks at exactly L = 5.4.
    std::vector<DomainSweepRow> rows;
    for (double L = 4.6; L < 6.3; L += 0.4)
        rows.push_back(synthetic_row(L, 0.4 - 0.3 * (L - 5.4) * (L - 5.4)));

    const CharacteristicLength cl = characteristic_length(rows, 1);
    CHECK(cl.mode == 1);
    CHECK(cl.length0 == doctest::Approx(5.4).epsilon(1e-12));
    CHECK(cl.alpha_max == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(cl.amplitude == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("characteristic length: second mode scales by the mode index")
{
    // alpha_2 peaks at L = 10.8; the length per half-pattern is half that.
    std::vector<DomainSweepRow> rows;
    for (double L = 9.6; L < 12.1; L += 0.6)
        rows.push_back(synthetic_row(L, 0.1, 0.4 - 0.1 * (L - 10.8) * (L - 10.8)));

    const CharacteristicLength cl = characteristic_length(rows, 2);
    CHECK(cl.length0 == doctest::Approx(5.4).epsilon(1e-12));
    CHECK(cl.alpha_max == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("characteristic length: boundary peaks and dead sweeps are refused")
{
    std::vector<DomainSweepRow> rows;
    for (double L = 5.4; L < 6.7; L += 0.4) // decreasing from the first row on
        rows.push_back(synthetic_row(L, 0.4 - 0.3 * (L - 5.4) * (L - 5.4)));
    CHECK_THROWS_AS(characteristic_length(rows, 1), RegimeError);
    CHECK_THROWS_WITH_AS(characteristic_length(rows, 1),
                         doctest::Contains("boundary"), RegimeError);

    for (auto& row : rows)
        row.converged = false;
    CHECK_THROWS_AS(characteristic_length(rows, 1), RegimeError);

    CHECK_THROWS_AS(characteristic_length(rows, 0), std::invalid_argument);
}

TEST_CASE("characteristic length: unusable neighbour falls back to the raw row")
{
    // True peak at L = 5.5, off the sampled lengths; the best row is L = 5.4.
    std::vector<DomainSweepRow> rows;
    for (double L = 4.6; L < 6.3; L += 0.4)
        rows.push_back(synthetic_row(L, 0.4 - 0.3 * (L - 5.5) * (L - 5.5)));

    const CharacteristicLength refined = characteristic_length(rows, 1);
    CHECK(refined.length0 == doctest::Approx(5.5).epsilon(1e-12));

    rows[1].converged = false; // left neighbour of the peak row
    const CharacteristicLength raw = characteristic_length(rows, 1);
    CHECK(raw.length0 == doctest::Approx(5.4).epsilon(1e-12));
    CHECK(raw.alpha_max == doctest::Approx(0.4 - 0.3 * 0.01).epsilon(1e-12));
}

TEST_CASE("domain sweep relaxes each length and is deterministic across workers")
{
    const ModelSpec m = m3_defaults();
    DomainSweepOptions opts;
    opts.l_min = 5.0;
    opts.l_max = 6.0;
    opts.l_step = 0.5;
    opts.modes = 2;
    opts.relax.tol = 1e-6;
    opts.relax.t_max = 1500.0;

    const auto rows = domain_sweep(m, opts);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.converged);
        CHECK(row.note.empty());
        REQUIRE(row.alpha.size() == 3);
        CHECK(row.alpha[0] > 0.85);
        CHECK(row.alpha[0] < 1.0);
    }
    // The first harmonic is strongest near the preferred length of ~5.4.
    CHECK(rows[1].alpha[1] > rows[2].alpha[1]);
    CHECK(rows[1].alpha[1] == doctest::Approx(0.403).epsilon(5e-3));

    DomainSweepOptions par = opts;
    par.jobs = 3;
    const auto rows2 = domain_sweep(m, par);
    REQUIRE(rows2.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows2[i].length == rows[i].length);
        CHECK(rows2[i].alpha == rows[i].alpha); // bitwise equal
    }
}

TEST_CASE("domain sweep argument validation")
{
    const ModelSpec m = m3_defaults();
    DomainSweepOptions opts;
    opts.l_min = 0.0;
    CHECK_THROWS_AS(domain_sweep(m, opts), std::invalid_argument);
    opts = {};
    opts.l_max = 1.0;
    CHECK_THROWS_AS(domain_sweep(m, opts), std::invalid_argument);
    opts = {};
    opts.modes = 0;
    CHECK_THROWS_AS(domain_sweep(m, opts), std::invalid_argument);
    opts = {};
    opts.jobs = 0;
    CHECK_THROWS_AS(domain_sweep(m, opts), std::invalid_argument);
}

TEST_SUITE_END();
