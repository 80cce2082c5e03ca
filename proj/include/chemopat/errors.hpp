#ifndef CHEMOPAT_ERRORS_HPP
#define CHEMOPAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chemopat {

// Base class for every domain error thrown by this library. Plumbing misuse
// (wrong vector sizes, mismatched grids, bad argument ranges) throws
// std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The chemotactic sensitivity was evaluated where its denominator is <= 0
// (variants with 1/c, 1/(c+nu), ... dependence). Never clamped.
class SingularityError : public Error {
public:
    using Error::Error;
};

// The requested quantity is undefined for this parameter combination,
// e.g. the instability factor at D = r = 0.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// The operation needs the pattern-forming regime (unstable band present)
// and the parameters are outside it.
class RegimeError : public Error {
public:
    using Error::Error;
};

// An iterative solve (Newton, continuation) failed to converge, or its
// Jacobian became singular.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Time integration produced non-finite values, or a field went negative
// beyond tolerance. Carries when and where it first happened.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& reason_, double t_, double x_)
        : Error(reason_ + " at t = " + std::to_string(t_) + ", x = " + std::to_string(x_)),
          t(t_), x(x_), reason(reason_)
    {
    }
    double t;
    double x;
    std::string reason;
};

} // namespace chemopat

#endif
