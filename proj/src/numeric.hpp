#ifndef CHEMOPAT_SRC_NUMERIC_HPP
#define CHEMOPAT_SRC_NUMERIC_HPP

// Small internal numeric utilities shared by the library implementation.
// Not installed; the public API never exposes these.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "chemopat/errors.hpp"

namespace chemopat::detail {

// Golden-section maximization of a unimodal function on [lo, hi].
// Stops when the bracket is narrower than tol; ties drift toward lo.
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol)
{
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Least-squares slope of y against x.
inline double least_squares_slope(std::span<const double> x, std::span<const double> y)
{
    const std::size_t n = x.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

// Vertex of the parabola through (x0-h, y1), (x0, y2), (x0+h, y3).
// Falls back to the middle sample when the three points are not concave.
struct ParabolaVertex {
    double x;
    double y;
};

inline ParabolaVertex parabola_vertex(double x0, double h, double y1, double y2, double y3)
{
    const double curv = y1 - 2.0 * y2 + y3;
    if (!(curv < 0.0))
        return {x0, y2};
    const double x = x0 - 0.5 * h * (y3 - y1) / curv;
    const double y = y2 - (y3 - y1) * (y3 - y1) / (8.0 * curv);
    return {x, y};
}

// Solves the dense system A x = b with partial pivoting; A is row-major n*n
// and both arguments are consumed. Throws ConvergenceError on a (numerically)
// singular matrix.
inline std::vector<double> solve_dense(std::vector<double> A, std::vector<double> b)
{
    const std::size_t n = b.size();
    double amax = 0.0;
    for (double v : A)
        amax = std::max(amax, std::abs(v));
    const double tiny = 1e-14 * std::max(amax, 1.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::abs(A[row * n + col]) > std::abs(A[piv * n + col]))
                piv = row;
        if (std::abs(A[piv * n + col]) < tiny)
            throw ConvergenceError("singular matrix in dense solve");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(A[col * n + j], A[piv * n + j]);
            std::swap(b[col], b[piv]);
        }
        const double inv = 1.0 / A[col * n + col];
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = A[row * n + col] * inv;
            if (factor == 0.0)
                continue;
            for (std::size_t j = col; j < n; ++j)
                A[row * n + j] -= factor * A[col * n + j];
            b[row] -= factor * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= A[i * n + j] * x[j];
        x[i] = s / A[i * n + i];
    }
    return x;
}

} // namespace chemopat::detail

#endif
