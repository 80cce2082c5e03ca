#include "chemopat/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chemopat/errors.hpp"

namespace chemopat {

namespace {

constexpr std::array<std::string_view, 9> kVariantNames = {
    "M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8", "M9"};

} // namespace

std::string_view variant_name(Variant v)
{
    return kVariantNames[static_cast<int>(v)];
}

Variant parse_variant(std::string_view name)
{
    for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
        if (name == kVariantNames[i])
            return static_cast<Variant>(i);
    }
    throw std::invalid_argument("unknown model variant '" + std::string(name) +
                                "' (expected M1..M9)");
}

bool variant_has_kinetics(Variant v)
{
    switch (v) {
    case Variant::M1:
    case Variant::M2:
    case Variant::M4:
        return false;
    default:
        return true;
    }
}

bool logistic_active(const ModelSpec& m)
{
    return variant_has_kinetics(m.variant) && m.r > 0.0;
}

void ModelSpec::validate() const
{
    if (!(D >= 0.0))
        throw std::invalid_argument("D must be >= 0");
    if (!std::isfinite(chi0))
        throw std::invalid_argument("chi0 must be finite");
    if (!(r >= 0.0))
        throw std::invalid_argument("r must be >= 0");
    if (!(nu >= 0.0) || !(nu1 >= 0.0) || !(nu2 >= 0.0))
        throw std::invalid_argument("nu, nu1, nu2 must be >= 0");
    if (!logistic_active(*this) && !(n0 > 0.0)) {
        std::ostringstream msg;
        msg << "variant " << variant_name(variant);
        if (variant_has_kinetics(variant))
            msg << " with r = 0";
        msg << " has no kinetics and needs n0 > 0 (got " << n0 << ")";
        throw std::invalid_argument(msg.str());
    }
}

ModelSpec m3_defaults()
{
    return ModelSpec{};
}

DimensionlessGroups nondimensionalize(const DimensionalParams& p)
{
    if (!(p.Dc > 0.0))
        throw std::invalid_argument("Dc must be > 0 to nondimensionalize");
    if (!(p.p > 0.0))
        throw std::invalid_argument("p must be > 0 to nondimensionalize");
    if (!(p.k_cap > 0.0))
        throw std::invalid_argument("k_cap must be > 0 to nondimensionalize");
    if (!(p.Dn >= 0.0) || !(p.r0 >= 0.0))
        throw std::invalid_argument("Dn and r0 must be >= 0");
    return {p.Dn / p.Dc,
            p.chi_tilde * p.h * p.k_cap / (p.Dc * p.p),
            p.r0 * p.k_cap / p.p};
}

double chi_at(const ModelSpec& m, double n, double c)
{
    auto positive_denominator = [&](double denom, const char* label) {
        if (!(denom > 0.0)) {
            std::ostringstream msg;
            msg << "chi(" << variant_name(m.variant) << ") singular: " << label
                << " = " << denom << " at n = " << n << ", c = " << c;
            throw SingularityError(msg.str());
        }
        return denom;
    };

    switch (m.variant) {
    case Variant::M1:
        return m.chi0;
    case Variant::M2:
    case Variant::M3:
        return m.chi0 * n;
    case Variant::M4:
    case Variant::M5:
        return m.chi0 / positive_denominator(c, "c");
    case Variant::M6:
        return m.chi0 * n / positive_denominator(c, "c");
    case Variant::M7:
        return m.chi0 * n / positive_denominator(c + m.nu, "c + nu");
    case Variant::M8: {
        const double d = positive_denominator(c + m.nu, "c + nu");
        return m.chi0 * n / (d * d);
    }
    case Variant::M9:
        return m.chi0 * (n + m.nu1) / positive_denominator(c + m.nu2, "c + nu2");
    }
    throw std::logic_error("unreachable variant");
}

Kinetics kinetics_at(const ModelSpec& m, double n, double c)
{
    const double f = logistic_active(m) ? m.r * n * (1.0 - n) : 0.0;
    return {f, n - c};
}

double dfdn_at(const ModelSpec& m, double n)
{
    return logistic_active(m) ? m.r * (1.0 - 2.0 * n) : 0.0;
}

std::vector<SteadyState> homogeneous_steady_states(const ModelSpec& m)
{
    if (logistic_active(m))
        return {{0.0, 0.0}, {1.0, 1.0}};
    return {{m.n0, m.n0}};
}

SteadyState pattern_steady_state(const ModelSpec& m)
{
    return logistic_active(m) ? SteadyState{1.0, 1.0} : SteadyState{m.n0, m.n0};
}

} // namespace chemopat
