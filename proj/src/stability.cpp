#include "chemopat/stability.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "numeric.hpp"

namespace chemopat {

namespace {

// Sensitivity and decay rate entering every stability formula: both are
// evaluated at the uniform state the perturbation rides on.
struct Linearization {
    double chi_eff; // chi(n*, c*)
    double r_eff;   // -df/dn at n*, always >= 0 for the supported kinetics
};

Linearization linearize(const ModelSpec& m)
{
    const SteadyState at = pattern_steady_state(m);
    return {chi_at(m, at.n, at.c), -dfdn_at(m, at.n)};
}

} // namespace

CharacteristicMatrix characteristic_matrix(const ModelSpec& m, double k_sq, SteadyState at)
{
    m.validate();
    CharacteristicMatrix M;
    M.a11 = -m.D * k_sq + dfdn_at(m, at.n);
    M.a12 = chi_at(m, at.n, at.c) * k_sq;
    M.a21 = 1.0;
    M.a22 = -k_sq - 1.0;
    return M;
}

CharacteristicMatrix characteristic_matrix(const ModelSpec& m, double k_sq)
{
    return characteristic_matrix(m, k_sq, pattern_steady_state(m));
}

double growth_rate(const ModelSpec& m, double k_sq)
{
    const CharacteristicMatrix M = characteristic_matrix(m, k_sq);
    const double tr = M.trace();
    const double disc = tr * tr - 4.0 * M.det();
    if (disc >= 0.0)
        return 0.5 * (tr + std::sqrt(disc));
    return 0.5 * tr; // complex pair: real part
}

double instability_factor(const ModelSpec& m)
{
    m.validate();
    const Linearization lin = linearize(m);
    const double denom = m.D + lin.r_eff + 2.0 * std::sqrt(m.D * lin.r_eff);
    if (denom == 0.0) {
        std::ostringstream os;
        os << "instability factor undefined: D = 0 and the kinetics contribute no decay "
              "(variant "
           << variant_name(m.variant) << ")";
        throw DegenerateError(os.str());
    }
    return lin.chi_eff / denom;
}

std::optional<Band> unstable_band(const ModelSpec& m)
{
    const double rt = instability_factor(m); // validates and handles D = r = 0
    if (!(rt > 1.0))
        return std::nullopt;
    const Linearization lin = linearize(m);
    if (m.D == 0.0) {
        // det M < 0 for all k^2 above r_eff / (chi_eff - r_eff); no upper edge.
        const double lo = lin.r_eff / (lin.chi_eff - lin.r_eff);
        return Band{lo, std::numeric_limits<double>::infinity()};
    }
    // Roots of D k^4 + (D + r_eff - chi_eff) k^2 + r_eff in the variable k^2.
    const double b = m.D + lin.r_eff - lin.chi_eff;
    const double disc = b * b - 4.0 * m.D * lin.r_eff;
    const double root = std::sqrt(disc);
    return Band{(-b - root) / (2.0 * m.D), (-b + root) / (2.0 * m.D)};
}

double wavelength_explicit(const ModelSpec& m)
{
    m.validate();
    if (m.D == 0.0)
        throw DegenerateError("explicit wavelength estimate undefined at D = 0");
    const Linearization lin = linearize(m);
    const double excess = lin.chi_eff - m.D - lin.r_eff;
    if (!(excess > 0.0)) {
        std::ostringstream os;
        os << "explicit wavelength estimate needs chi(n*, c*) > D + r*; got chi = "
           << lin.chi_eff << ", D + r* = " << m.D + lin.r_eff;
        throw RegimeError(os.str());
    }
    return kPi * std::sqrt(2.0 * m.D / excess);
}

double fastest_growing_mode(const ModelSpec& m)
{
    const auto band = unstable_band(m);
    if (!band)
        throw RegimeError("no unstable band: the uniform state damps every wavenumber");
    if (std::isinf(band->k2_sq))
        throw RegimeError("growth rate has no interior maximum at D = 0");
    return detail::golden_max([&](double k_sq) { return growth_rate(m, k_sq); },
                              band->k1_sq, band->k2_sq, 1e-10);
}

double wavelength_implicit(const ModelSpec& m)
{
    return kPi / std::sqrt(fastest_growing_mode(m));
}

std::string_view classification_name(Classification c)
{
    switch (c) {
    case Classification::HomogeneousStable:
        return "homogeneous-stable";
    case Classification::TravellingWave:
        return "travelling-wave";
    case Classification::TuringUnstable:
        return "turing-unstable";
    }
    return "?";
}

Classification classify(const ModelSpec& m)
{
    const double rt = instability_factor(m);
    if (rt > 1.0)
        return Classification::TuringUnstable;
    if (logistic_active(m))
        return Classification::TravellingWave;
    return Classification::HomogeneousStable;
}

StabilityReport analyze(const ModelSpec& m)
{
    StabilityReport rep;
    rep.rt = instability_factor(m);
    rep.classification = classify(m);
    rep.band = unstable_band(m);
    if (rep.band && !std::isinf(rep.band->k2_sq)) {
        rep.k_av_sq = 0.5 * (rep.band->k1_sq + rep.band->k2_sq);
        rep.lambda_explicit = kPi / std::sqrt(*rep.k_av_sq);
        rep.k_star_sq = fastest_growing_mode(m);
        rep.lambda_implicit = kPi / std::sqrt(*rep.k_star_sq);
    }
    return rep;
}

} // namespace chemopat
