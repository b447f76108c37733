#pragma once

#include <random>

#include "spincover/covering.hpp"
#include "spincover/minkowski.hpp"

namespace spincover {

/// Seeded generator for property tests; no global state.
using Rng = std::mt19937_64;

/// 2x2 matrix with independent standard normal real and imaginary parts.
SpinMatrix random_spin_matrix(Rng& rng);

/// Random element of SL(2, C): a normal sample with |det| >= 1e-3, divided
/// by the principal square root of its determinant.
UnitSpinMatrix random_unit_spin(Rng& rng);

/// Components drawn uniformly from [-scale, scale].
FourVector random_four_vector(Rng& rng, double scale = 10.0);

} // namespace spincover
