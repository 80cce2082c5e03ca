#ifndef CHEMOPAT_CONFIG_HPP
#define CHEMOPAT_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "chemopat/model.hpp"

namespace chemopat {

// Bad user-supplied configuration (flags, config files). Distinct from the
// numerical Error family so callers can map it to a different exit status.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Model parameters as they arrive from flags / config files, before
// validation. Optional fields distinguish "not given" from "given as 0".
struct ModelOptions {
    std::string variant = "M3";
    double D = 1.0;
    double chi0 = 1.9;
    double r = 0.1;
    std::optional<double> nu;  // M7, M8
    std::optional<double> nu1; // M9
    std::optional<double> nu2; // M9
    std::optional<double> n0;  // variants without kinetics (M1, M2, M4)
};

// Turns raw options into a validated ModelSpec. Throws ConfigError with
// messages that name the offending flag, including:
//  - unknown variant names,
//  - offsets (--nu/--nu1/--nu2) missing where the variant needs them or
//    supplied where it does not,
//  - --n0 on variants whose kinetics pin the uniform state at 1,
//  - out-of-range numbers.
ModelSpec build_model(const ModelOptions& opts);

} // namespace chemopat

#endif
