#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace spincover {

using Complex = std::complex<double>;

/// Arithmetic comparison tolerance used throughout the library.
inline constexpr double kArithmeticTolerance = 1e-12;

/// |x - y| scaled by max(1, |x|, |y|), so values near zero compare absolutely.
inline double relative_error(double x, double y) {
    return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

inline double relative_error(Complex x, Complex y) {
    return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

inline bool approx_equal(double x, double y, double tol = kArithmeticTolerance) {
    return relative_error(x, y) <= tol;
}

inline bool approx_equal(Complex x, Complex y, double tol = kArithmeticTolerance) {
    return relative_error(x, y) <= tol;
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace spincover
