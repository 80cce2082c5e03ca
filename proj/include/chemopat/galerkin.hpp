#ifndef CHEMOPAT_GALERKIN_HPP
#define CHEMOPAT_GALERKIN_HPP

#include <span>
#include <vector>

#include "chemopat/model.hpp"

namespace chemopat {

// Steady-state cosine-series approximation of the logistic chemotaxis system
// (the M3 form): n ~ sum alpha_i cos(i k x), c ~ sum beta_i cos(i k x) with
// i = 0..modes and k the fundamental wavenumber pi / L. The concentration
// equation is linear and eliminated exactly, leaving modes+1 polynomial
// equations in alpha.
struct GalerkinSystem {
    int modes = 3;          // truncation order M
    double k = kPi / 5.5;   // fundamental wavenumber
    double D = 1.0;
    double chi0 = 1.9;
    double r = 0.1;

    void validate() const; // throws std::invalid_argument
};

// Cosine coefficient j of the pointwise product of two cosine series:
//   (sum a_i cos(i k x)) (sum b_m cos(m k x)) -> coefficient of cos(j k x).
double project_quadratic(std::span<const double> a, std::span<const double> b, int j);

// Cosine coefficient j of d/dx( (sum a_i cos) * d/dx(sum b_m cos) ) / k^2,
// i.e. the chemotactic transport term with the common -k^2 factored out.
double project_chemotaxis(std::span<const double> a, std::span<const double> b, int j);

// Concentration coefficients implied by the density coefficients:
// beta_i = alpha_i / (1 + (i k)^2).
std::vector<double> beta_from_alpha(std::span<const double> alpha, double k);

// Residual of the modes+1 projected steady-state equations at alpha
// (beta eliminated). Size modes + 1.
std::vector<double> residual(const GalerkinSystem& sys, std::span<const double> alpha);

// Jacobian of the residual, row-major (modes+1)^2.
std::vector<double> jacobian(const GalerkinSystem& sys, std::span<const double> alpha);

enum class Branch {
    Homogeneous0, // alpha = (0, 0, ...): the empty state
    Homogeneous1, // alpha = (1, 0, ...): the uniform carrying-capacity state
    PatternPlus,  // first nonzero harmonic positive
    PatternMinus, // first nonzero harmonic negative
};

std::string_view branch_name(Branch b);

struct GalerkinSolution {
    std::vector<double> alpha;
    std::vector<double> beta;
    double residual_norm = 0.0; // max-norm of the residual at alpha
    int iterations = 0;
    Branch branch = Branch::Homogeneous1;
};

// Newton iteration from `guess` until the residual max-norm drops below
// 1e-12 (at most 100 steps). Throws ConvergenceError when the iteration
// stalls, diverges or hits a singular Jacobian.
GalerkinSolution solve(const GalerkinSystem& sys, std::span<const double> guess);

// The one-harmonic truncation in closed form: both uniform states, plus the
// pattern pair when its alpha_0 lies in [0, 1]. Uses sys.k, D, chi0, r and
// ignores sys.modes.
std::vector<GalerkinSolution> solve_m1_closed_form(const GalerkinSystem& sys);

// Closed-form one-harmonic pattern branch (the alpha_1 >= 0 representative).
// real == false when no such branch exists at this wavenumber.
struct OneModePattern {
    bool real = false;
    double alpha0 = 0.0;
    double alpha1 = 0.0;
};

OneModePattern one_mode_pattern(const GalerkinSystem& sys);

// Pattern branch at the requested truncation, found by laddering the
// closed-form one-harmonic solution up one mode at a time (each level seeds
// the next). Returns the alpha_1 >= 0 representative. When no pattern exists
// at this wavenumber the returned branch is one of the uniform states.
GalerkinSolution solve_pattern_branch(const GalerkinSystem& sys);

// Tracks the pattern branch while one parameter moves across a range;
// each solution seeds the next solve, re-laddering after any failure.
enum class SweepParameter { WaveNumber, Diffusion, Sensitivity, Growth };

SweepParameter parse_sweep_parameter(std::string_view name);
std::string_view sweep_parameter_name(SweepParameter p);

struct ContinuationRow {
    double value = 0.0;
    GalerkinSolution solution;
};

std::vector<ContinuationRow> continuation_sweep(const GalerkinSystem& base,
                                                SweepParameter param, double from,
                                                double to, double step);

// The wavenumber inside the linearly unstable band maximizing the pattern's
// first-harmonic coefficient, located by golden-section search (|dk| <= 1e-6).
// Throws RegimeError when the uniform state has no unstable band.
struct WavelengthPrediction {
    double k_star = 0.0;
    double length0 = 0.0;    // pi / k_star, the half-pattern length
    double alpha_max = 0.0; // first harmonic at the optimum
    std::vector<double> alpha;
};

WavelengthPrediction predict_wavelength_amplitude(const GalerkinSystem& sys);

} // namespace chemopat

#endif
