#ifndef CHEMOPAT_SPECTRAL_HPP
#define CHEMOPAT_SPECTRAL_HPP

#include <span>
#include <string>
#include <vector>

#include "chemopat/model.hpp"
#include "chemopat/solver.hpp"

namespace chemopat {

// Coefficients of a zero-flux profile in the cosine basis cos(j pi x / L):
//
//   u(x) ~ sum_j coeff[j] cos(j pi x / L),   j = 0..modes
//
// computed by midpoint quadrature on the cell-centered grid.
struct SpectralSeries {
    double length = 0.0;
    std::vector<double> alpha; // density coefficients, size modes + 1
    std::vector<double> beta;  // concentration coefficients, size modes + 1
};

// Cosine coefficients of one profile. Throws std::invalid_argument when the
// profile does not match the grid or the grid is too coarse to resolve the
// requested modes (fewer than 4 cells per highest mode).
std::vector<double> cosine_coefficients(std::span<const double> values,
                                        const Grid1D& grid, int modes);

// Both profiles of a state at once.
SpectralSeries decompose(const SimulationState& state, int modes);

// Evaluates the truncated series at the cell centers of `grid`.
std::vector<double> reconstruct(std::span<const double> coeffs, const Grid1D& grid);

// Integrated squared difference between two profiles on the same grid.
double discrepancy(std::span<const double> a, std::span<const double> b,
                   const Grid1D& grid);

// Same for the density profiles of two states; the grids must be identical.
double discrepancy(const SimulationState& a, const SimulationState& b);

// Integrated squared difference between the reconstructed series and the
// density profile of `ref`; the series and ref must cover the same length.
double discrepancy(const SpectralSeries& series, const SimulationState& ref);

// Relaxes the model on a range of domain lengths and records the stationary
// cosine coefficients of each. Rows that fail to converge (or blow up) are
// kept and flagged rather than aborting the sweep.
struct DomainSweepRow {
    double length = 0.0;
    bool converged = false;
    double rate = 0.0;          // final stationarity measure
    std::vector<double> alpha;  // empty when the run failed numerically
    std::string note;           // diagnostic for failed rows
};

struct DomainSweepOptions {
    double l_min = 4.0;
    double l_max = 8.0;
    double l_step = 0.25;
    int modes = 6;
    double dx = 0.05;
    InitialCondition ic{};      // FrontSeed by default
    StationaryOptions relax{};
    int jobs = 1;               // worker threads; rows stay deterministic
};

std::vector<DomainSweepRow> domain_sweep(const ModelSpec& m,
                                         const DomainSweepOptions& opts);

// Preferred pattern scale read off a sweep: the domain length maximizing the
// chosen mode's coefficient, refined by a parabola through the neighbouring
// rows. Throws RegimeError when the maximum sits on the sweep boundary or no
// converged rows exist.
struct CharacteristicLength {
    double length0 = 0.0;    // length per half-pattern: L* / mode
    double alpha_max = 0.0;  // refined coefficient at the maximum
    double amplitude = 0.0;  // 2 alpha_max, the peak-to-trough estimate
    int mode = 1;
};

CharacteristicLength characteristic_length(std::span<const DomainSweepRow> rows,
                                           int mode = 1);

} // namespace chemopat

#endif
