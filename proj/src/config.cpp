#include "chemopat/config.hpp"

#include <cmath>
#include <sstream>

namespace chemopat {

namespace {

void require_finite(double v, const char* flag)
{
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << flag << " must be finite";
        throw ConfigError(os.str());
    }
}

void reject(const std::optional<double>& value, const char* flag,
            const std::string& variant, const char* why)
{
    if (value) {
        std::ostringstream os;
        os << flag << " does not apply to variant " << variant << ": " << why;
        throw ConfigError(os.str());
    }
}

double require_positive(const std::optional<double>& value, const char* flag,
                        const std::string& variant, const char* role)
{
    if (!value) {
        std::ostringstream os;
        os << "variant " << variant << " requires " << flag << " (" << role << ")";
        throw ConfigError(os.str());
    }
    if (!(*value > 0.0) || !std::isfinite(*value)) {
        std::ostringstream os;
        os << flag << " must be > 0 for variant " << variant;
        throw ConfigError(os.str());
    }
    return *value;
}

} // namespace

ModelSpec build_model(const ModelOptions& opts)
{
    ModelSpec spec;
    try {
        spec.variant = parse_variant(opts.variant);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    require_finite(opts.D, "--D");
    require_finite(opts.chi0, "--chi0");
    require_finite(opts.r, "--r");
    if (opts.D < 0.0)
        throw ConfigError("--D must be >= 0");
    if (opts.r < 0.0)
        throw ConfigError("--r must be >= 0");
    spec.D = opts.D;
    spec.chi0 = opts.chi0;
    spec.r = opts.r;

    const std::string& v = opts.variant;
    switch (spec.variant) {
    case Variant::M7:
    case Variant::M8:
        spec.nu = require_positive(opts.nu, "--nu", v, "receptor offset in chi");
        reject(opts.nu1, "--nu1", v, "it is the M9 numerator offset");
        reject(opts.nu2, "--nu2", v, "it is the M9 denominator offset");
        break;
    case Variant::M9:
        spec.nu1 = require_positive(opts.nu1, "--nu1", v, "numerator offset in chi");
        spec.nu2 = require_positive(opts.nu2, "--nu2", v, "denominator offset in chi");
        reject(opts.nu, "--nu", v, "M9 uses --nu1/--nu2 instead");
        break;
    default:
        reject(opts.nu, "--nu", v, "its sensitivity has no receptor offset");
        reject(opts.nu1, "--nu1", v, "it is the M9 numerator offset");
        reject(opts.nu2, "--nu2", v, "it is the M9 denominator offset");
        break;
    }

    if (variant_has_kinetics(spec.variant) && spec.r > 0.0) {
        reject(opts.n0, "--n0", v, "logistic kinetics pin the uniform density at 1");
    } else if (opts.n0) {
        if (!(*opts.n0 > 0.0) || !std::isfinite(*opts.n0))
            throw ConfigError("--n0 must be > 0");
        spec.n0 = *opts.n0;
    } else {
        spec.n0 = 1.0;
    }

    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what()); // backstop; should be unreachable
    }
    return spec;
}

} // namespace chemopat
