#include "chemopat/galerkin.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chemopat/errors.hpp"
#include "chemopat/stability.hpp"
#include "numeric.hpp"

namespace chemopat {

void GalerkinSystem::validate() const
{
    if (modes < 1)
        throw std::invalid_argument("truncation order must be >= 1");
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::invalid_argument("wavenumber must be positive and finite");
    if (!(D >= 0.0))
        throw std::invalid_argument("D must be >= 0");
    if (!(r > 0.0))
        throw std::invalid_argument("the projected system needs logistic kinetics (r > 0)");
    if (!std::isfinite(chi0))
        throw std::invalid_argument("chi0 must be finite");
}

double project_quadratic(std::span<const double> a, std::span<const double> b, int j)
{
    if (a.size() != b.size())
        throw std::invalid_argument("series lengths differ");
    if (j < 0)
        throw std::invalid_argument("harmonic index must be >= 0");
    const int n = static_cast<int>(a.size());
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int m = 0; m < n; ++m) {
            const double w = 0.5 * a[i] * b[m];
            if (i + m == j)
                s += w;
            if (i - m == j || m - i == j)
                s += w;
        }
    }
    return s;
}

double project_chemotaxis(std::span<const double> a, std::span<const double> b, int j)
{
    if (a.size() != b.size())
        throw std::invalid_argument("series lengths differ");
    if (j < 0)
        throw std::invalid_argument("harmonic index must be >= 0");
    if (j == 0)
        return 0.0; // the transport term is a pure divergence
    const int n = static_cast<int>(a.size());
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int m = 1; m < n; ++m) {
            const double w = 0.5 * j * m * a[i] * b[m];
            if (i + m == j)
                s += w;
            if (m - i == j)
                s += w;
            if (i - m == j)
                s -= w;
        }
    }
    return s;
}

std::vector<double> beta_from_alpha(std::span<const double> alpha, double k)
{
    std::vector<double> beta(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const double ik = static_cast<double>(i) * k;
        beta[i] = alpha[i] / (1.0 + ik * ik);
    }
    return beta;
}

std::vector<double> residual(const GalerkinSystem& sys, std::span<const double> alpha)
{
    sys.validate();
    if (static_cast<int>(alpha.size()) != sys.modes + 1)
        throw std::invalid_argument("coefficient vector must have modes + 1 entries");
    const std::vector<double> beta = beta_from_alpha(alpha, sys.k);
    std::vector<double> res(sys.modes + 1);
    const double k_sq = sys.k * sys.k;
    for (int j = 0; j <= sys.modes; ++j) {
        double v = sys.r * (alpha[j] - project_quadratic(alpha, alpha, j));
        if (j > 0) {
            v -= sys.D * j * j * k_sq * alpha[j];
            v += sys.chi0 * k_sq * project_chemotaxis(alpha, beta, j);
        }
        res[j] = v;
    }
    return res;
}

std::vector<double> jacobian(const GalerkinSystem& sys, std::span<const double> alpha)
{
    sys.validate();
    const int n = sys.modes + 1;
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("coefficient vector must have modes + 1 entries");
    const std::vector<double> beta = beta_from_alpha(alpha, sys.k);
    const double k_sq = sys.k * sys.k;
    std::vector<double> J(n * n, 0.0);
    std::vector<double> unit(n, 0.0);
    for (int l = 0; l < n; ++l) {
        unit[l] = 1.0;
        const std::vector<double> unit_beta = beta_from_alpha(unit, sys.k);
        for (int j = 0; j < n; ++j) {
            // d/dalpha_l of the quadratic term uses bilinearity and symmetry.
            double v = sys.r * ((j == l ? 1.0 : 0.0) -
                                2.0 * project_quadratic(unit, alpha, j));
            if (j > 0) {
                if (j == l)
                    v -= sys.D * j * j * k_sq;
                v += sys.chi0 * k_sq * (project_chemotaxis(unit, beta, j) +
                                        project_chemotaxis(alpha, unit_beta, j));
            }
            J[j * n + l] = v;
        }
        unit[l] = 0.0;
    }
    return J;
}

std::string_view branch_name(Branch b)
{
    switch (b) {
    case Branch::Homogeneous0:
        return "homogeneous-0";
    case Branch::Homogeneous1:
        return "homogeneous-1";
    case Branch::PatternPlus:
        return "pattern+";
    case Branch::PatternMinus:
        return "pattern-";
    }
    return "?";
}

namespace {

constexpr double kResidualTol = 1e-12;
constexpr double kBranchTol = 1e-10;

double max_norm(std::span<const double> v)
{
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

Branch classify_branch(std::span<const double> alpha)
{
    for (std::size_t i = 1; i < alpha.size(); ++i) {
        if (std::abs(alpha[i]) > kBranchTol)
            return alpha[i] > 0.0 ? Branch::PatternPlus : Branch::PatternMinus;
    }
    return alpha[0] < 0.5 ? Branch::Homogeneous0 : Branch::Homogeneous1;
}

GalerkinSolution finish(const GalerkinSystem& sys, std::vector<double> alpha,
                        int iterations)
{
    GalerkinSolution sol;
    sol.residual_norm = max_norm(residual(sys, alpha));
    sol.beta = beta_from_alpha(alpha, sys.k);
    sol.alpha = std::move(alpha);
    sol.iterations = iterations;
    sol.branch = classify_branch(sol.alpha);
    return sol;
}

// Flips the sign of every odd harmonic: the x -> L - x reflection, an exact
// symmetry of the projected equations.
void reflect(std::vector<double>& alpha)
{
    for (std::size_t i = 1; i < alpha.size(); i += 2)
        alpha[i] = -alpha[i];
}

} // namespace

GalerkinSolution solve(const GalerkinSystem& sys, std::span<const double> guess)
{
    sys.validate();
    const int n = sys.modes + 1;
    if (static_cast<int>(guess.size()) != n)
        throw std::invalid_argument("initial guess must have modes + 1 entries");
    std::vector<double> alpha(guess.begin(), guess.end());
    for (int iter = 0; iter <= 100; ++iter) {
        const std::vector<double> res = residual(sys, alpha);
        const double norm = max_norm(res);
        if (norm < kResidualTol)
            return finish(sys, std::move(alpha), iter);
        if (!std::isfinite(norm) || norm > 1e8) {
            std::ostringstream os;
            os << "Newton iteration diverged (residual " << norm << " after " << iter
               << " steps)";
            throw ConvergenceError(os.str());
        }
        const std::vector<double> delta = detail::solve_dense(jacobian(sys, alpha), res);
        for (int i = 0; i < n; ++i)
            alpha[i] -= delta[i];
    }
    throw ConvergenceError("Newton iteration did not reach the residual tolerance "
                           "within 100 steps");
}

OneModePattern one_mode_pattern(const GalerkinSystem& sys)
{
    sys.validate();
    const double k_sq = sys.k * sys.k;
    const double denom = sys.chi0 * k_sq - 2.0 * sys.r * (1.0 + k_sq);
    OneModePattern p;
    if (denom == 0.0)
        return p;
    const double alpha0 = (sys.D * k_sq - sys.r) * (1.0 + k_sq) / denom;
    if (!(alpha0 >= 0.0) || !(alpha0 <= 1.0))
        return p;
    p.real = true;
    p.alpha0 = alpha0;
    p.alpha1 = std::sqrt(2.0 * alpha0 * (1.0 - alpha0));
    return p;
}

std::vector<GalerkinSolution> solve_m1_closed_form(const GalerkinSystem& sys)
{
    GalerkinSystem one = sys;
    one.modes = 1;
    std::vector<GalerkinSolution> out;
    out.push_back(finish(one, {0.0, 0.0}, 0));
    out.push_back(finish(one, {1.0, 0.0}, 0));
    const OneModePattern p = one_mode_pattern(one);
    if (p.real && p.alpha1 > 0.0) {
        out.push_back(finish(one, {p.alpha0, p.alpha1}, 0));
        out.push_back(finish(one, {p.alpha0, -p.alpha1}, 0));
    }
    return out;
}

GalerkinSolution solve_pattern_branch(const GalerkinSystem& sys)
{
    sys.validate();
    const OneModePattern p = one_mode_pattern(sys);
    std::vector<double> seed{p.real ? p.alpha0 : 1.0, p.real ? p.alpha1 : 0.0};
    GalerkinSolution sol;
    for (int m = 1; m <= sys.modes; ++m) {
        seed.resize(m + 1, 0.0);
        GalerkinSystem level = sys;
        level.modes = m;
        sol = solve(level, seed);
        seed = sol.alpha;
    }
    if (sol.branch == Branch::PatternMinus) {
        reflect(sol.alpha);
        sol.beta = beta_from_alpha(sol.alpha, sys.k);
        sol.branch = Branch::PatternPlus;
    }
    return sol;
}

SweepParameter parse_sweep_parameter(std::string_view name)
{
    if (name == "k" || name == "wavenumber")
        return SweepParameter::WaveNumber;
    if (name == "D" || name == "diffusion")
        return SweepParameter::Diffusion;
    if (name == "chi0" || name == "sensitivity")
        return SweepParameter::Sensitivity;
    if (name == "r" || name == "growth")
        return SweepParameter::Growth;
    throw std::invalid_argument("unknown sweep parameter '" + std::string(name) +
                                "' (expected k, D, chi0 or r)");
}

std::string_view sweep_parameter_name(SweepParameter p)
{
    switch (p) {
    case SweepParameter::WaveNumber:
        return "k";
    case SweepParameter::Diffusion:
        return "D";
    case SweepParameter::Sensitivity:
        return "chi0";
    case SweepParameter::Growth:
        return "r";
    }
    return "?";
}

namespace {

GalerkinSystem with_parameter(GalerkinSystem sys, SweepParameter param, double value)
{
    switch (param) {
    case SweepParameter::WaveNumber:
        sys.k = value;
        break;
    case SweepParameter::Diffusion:
        sys.D = value;
        break;
    case SweepParameter::Sensitivity:
        sys.chi0 = value;
        break;
    case SweepParameter::Growth:
        sys.r = value;
        break;
    }
    return sys;
}

} // namespace

std::vector<ContinuationRow> continuation_sweep(const GalerkinSystem& base,
                                                SweepParameter param, double from,
                                                double to, double step)
{
    if (!(step > 0.0) || !std::isfinite(from) || !std::isfinite(to))
        throw std::invalid_argument("continuation needs finite endpoints and step > 0");
    const double dir = to >= from ? 1.0 : -1.0;
    const int count = static_cast<int>(std::floor(std::abs(to - from) / step + 1e-9)) + 1;

    std::vector<ContinuationRow> rows;
    rows.reserve(count);
    const GalerkinSolution* prev = nullptr;
    for (int i = 0; i < count; ++i) {
        const double value = from + dir * i * step;
        const GalerkinSystem sys = with_parameter(base, param, value);
        ContinuationRow row;
        row.value = value;
        if (prev && (prev->branch == Branch::PatternPlus ||
                     prev->branch == Branch::PatternMinus)) {
            try {
                row.solution = solve(sys, prev->alpha);
            } catch (const ConvergenceError&) {
                row.solution = solve_pattern_branch(sys);
            }
        } else {
            row.solution = solve_pattern_branch(sys);
        }
        rows.push_back(std::move(row));
        prev = &rows.back().solution;
    }
    return rows;
}

WavelengthPrediction predict_wavelength_amplitude(const GalerkinSystem& sys)
{
    sys.validate();
    ModelSpec m;
    m.variant = Variant::M3;
    m.D = sys.D;
    m.chi0 = sys.chi0;
    m.r = sys.r;
    const auto band = unstable_band(m);
    if (!band)
        throw RegimeError("no unstable band: the uniform state damps every wavenumber");
    if (std::isinf(band->k2_sq))
        throw RegimeError("unstable band is unbounded at D = 0; no interior optimum");
    const double k_lo = std::sqrt(band->k1_sq) + 1e-9;
    const double k_hi = std::sqrt(band->k2_sq);

    auto first_harmonic = [&](double k) {
        GalerkinSystem at = sys;
        at.k = k;
        const GalerkinSolution sol = solve_pattern_branch(at);
        return sol.branch == Branch::PatternPlus ? sol.alpha[1] : 0.0;
    };
    const double k_star = detail::golden_max(first_harmonic, k_lo, k_hi, 1e-6);

    WavelengthPrediction pred;
    pred.k_star = k_star;
    pred.length0 = kPi / k_star;
    GalerkinSystem at = sys;
    at.k = k_star;
    const GalerkinSolution sol = solve_pattern_branch(at);
    pred.alpha = sol.alpha;
    pred.alpha_max = sol.alpha[1];
    return pred;
}

} // namespace chemopat
