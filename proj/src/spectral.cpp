#include "chemopat/spectral.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "chemopat/errors.hpp"
#include "numeric.hpp"

namespace chemopat {

std::vector<double> cosine_coefficients(std::span<const double> values,
                                        const Grid1D& grid, int modes)
{
    if (static_cast<int>(values.size()) != grid.ncells)
        throw std::invalid_argument("profile does not match the grid size");
    if (modes < 0)
        throw std::invalid_argument("mode count must be >= 0");
    if (modes >= 1 && grid.ncells < 4 * modes) {
        std::ostringstream os;
        os << "grid too coarse for mode " << modes << ": need at least " << 4 * modes
           << " cells, have " << grid.ncells;
        throw std::invalid_argument(os.str());
    }
    std::vector<double> coeffs(modes + 1, 0.0);
    const int nx = grid.ncells;
    for (int i = 0; i < nx; ++i)
        coeffs[0] += values[i];
    coeffs[0] /= nx;
    for (int j = 1; j <= modes; ++j) {
        const double w = j * kPi / grid.length;
        double s = 0.0;
        for (int i = 0; i < nx; ++i)
            s += values[i] * std::cos(w * grid.x(i));
        coeffs[j] = 2.0 * s / nx;
    }
    return coeffs;
}

SpectralSeries decompose(const SimulationState& state, int modes)
{
    SpectralSeries series;
    series.length = state.grid.length;
    series.alpha = cosine_coefficients(state.n, state.grid, modes);
    series.beta = cosine_coefficients(state.c, state.grid, modes);
    return series;
}

std::vector<double> reconstruct(std::span<const double> coeffs, const Grid1D& grid)
{
    std::vector<double> values(grid.ncells, 0.0);
    for (int i = 0; i < grid.ncells; ++i) {
        const double x = grid.x(i);
        double s = 0.0;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            s += coeffs[j] * std::cos(j * kPi * x / grid.length);
        values[i] = s;
    }
    return values;
}

double discrepancy(std::span<const double> a, std::span<const double> b,
                   const Grid1D& grid)
{
    if (static_cast<int>(a.size()) != grid.ncells ||
        static_cast<int>(b.size()) != grid.ncells)
        throw std::invalid_argument("profiles do not match the grid size");
    double s = 0.0;
    for (int i = 0; i < grid.ncells; ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return s * grid.dx();
}

double discrepancy(const SimulationState& a, const SimulationState& b)
{
    if (!(a.grid == b.grid))
        throw std::invalid_argument("states live on different grids");
    return discrepancy(a.n, b.n, a.grid);
}

double discrepancy(const SpectralSeries& series, const SimulationState& ref)
{
    const double L = ref.grid.length;
    if (std::abs(series.length - L) > 1e-12 * std::max(1.0, L))
        throw std::invalid_argument("series and state cover different lengths");
    return discrepancy(reconstruct(series.alpha, ref.grid), ref.n, ref.grid);
}

std::vector<DomainSweepRow> domain_sweep(const ModelSpec& m,
                                         const DomainSweepOptions& opts)
{
    m.validate();
    if (!(opts.l_min > 0.0) || !(opts.l_max >= opts.l_min) || !(opts.l_step > 0.0))
        throw std::invalid_argument("domain sweep needs 0 < l_min <= l_max and l_step > 0");
    if (opts.modes < 1)
        throw std::invalid_argument("domain sweep needs at least one mode");
    if (opts.jobs < 1)
        throw std::invalid_argument("worker count must be >= 1");

    const int count =
        static_cast<int>(std::floor((opts.l_max - opts.l_min) / opts.l_step + 1e-9)) + 1;
    std::vector<DomainSweepRow> rows(count);

    auto compute_row = [&](int idx) {
        DomainSweepRow& row = rows[idx];
        row.length = opts.l_min + idx * opts.l_step;
        try {
            const Grid1D grid =
                Grid1D::with_spacing(row.length, opts.dx, std::max(8, 4 * opts.modes));
            const StationaryResult sr = run_to_stationary(m, grid, opts.ic, opts.relax);
            row.converged = sr.converged;
            row.rate = sr.rate;
            if (sr.failure) {
                std::ostringstream os;
                os << sr.failure->reason << " at t = " << sr.failure->t
                   << ", x = " << sr.failure->x;
                row.note = os.str();
                row.converged = false;
            } else {
                row.alpha = cosine_coefficients(sr.state.n, grid, opts.modes);
                if (!row.converged)
                    row.note = "not stationary by t_max";
            }
        } catch (const Error& e) {
            row.converged = false;
            row.note = e.what();
        }
    };

    if (opts.jobs == 1 || count == 1) {
        for (int i = 0; i < count; ++i)
            compute_row(i);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                compute_row(i);
        };
        std::vector<std::thread> pool;
        const int threads = std::min(opts.jobs, count);
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (std::thread& th : pool)
            th.join();
    }
    return rows;
}

CharacteristicLength characteristic_length(std::span<const DomainSweepRow> rows,
                                           int mode)
{
    if (mode < 1)
        throw std::invalid_argument("mode index must be >= 1");
    auto usable = [&](const DomainSweepRow& row) {
        return row.converged && static_cast<int>(row.alpha.size()) > mode;
    };
    int best = -1;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (usable(rows[i]) && (best < 0 || rows[i].alpha[mode] > rows[best].alpha[mode]))
            best = static_cast<int>(i);
    if (best < 0)
        throw RegimeError("no converged sweep rows to locate a maximum in");
    if (best == 0 || best + 1 == static_cast<int>(rows.size())) {
        std::ostringstream os;
        os << "mode-" << mode << " coefficient peaks at the sweep boundary (L = "
           << rows[best].length << "); widen the length range";
        throw RegimeError(os.str());
    }

    CharacteristicLength result;
    result.mode = mode;
    const DomainSweepRow& mid = rows[best];
    const DomainSweepRow& left = rows[best - 1];
    const DomainSweepRow& right = rows[best + 1];
    if (usable(left) && usable(right)) {
        const double h = 0.5 * (right.length - left.length);
        const auto vertex = detail::parabola_vertex(mid.length, h, left.alpha[mode],
                                                    mid.alpha[mode], right.alpha[mode]);
        result.length0 = vertex.x / mode;
        result.alpha_max = vertex.y;
    } else {
        result.length0 = mid.length / mode;
        result.alpha_max = mid.alpha[mode];
    }
    result.amplitude = 2.0 * result.alpha_max;
    return result;
}

} // namespace chemopat
