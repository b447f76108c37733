#pragma once

#include <cmath>

#include "spincover/covering.hpp"
#include "spincover/lorentz.hpp"
#include "spincover/pauli.hpp"
#include "spincover/sampling.hpp"

namespace spincover::test {

inline constexpr Complex I{0.0, 1.0};

/// Boost along e1 with rapidity alpha.
inline Matrix4 boost_x(double alpha) {
    Matrix4 t = identity4();
    t[0][0] = t[1][1] = std::cosh(alpha);
    t[0][1] = t[1][0] = std::sinh(alpha);
    return t;
}

/// Half-angle spin matrix [[cosh(a/2), sinh(a/2)], [sinh(a/2), cosh(a/2)]].
inline SpinMatrix half_angle_x(double alpha) {
    const double c = std::cosh(alpha / 2), s = std::sinh(alpha / 2);
    return {c, s, s, c};
}

/// Smallest entrywise relative error between a and either of +-b.
inline double error_up_to_sign(const SpinMatrix& a, const SpinMatrix& b) {
    return std::min(max_relative_error(a, b), max_relative_error(a, -b));
}

} // namespace spincover::test
