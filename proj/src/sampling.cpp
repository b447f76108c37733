#include "spincover/sampling.hpp"

#include <cmath>

namespace spincover {

SpinMatrix random_spin_matrix(Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    auto draw = [&] {
        const double re = normal(rng);
        return Complex(re, normal(rng));
    };
    const Complex a00 = draw(), a01 = draw(), a10 = draw(), a11 = draw();
    return {a00, a01, a10, a11};
}

UnitSpinMatrix random_unit_spin(Rng& rng) {
    for (;;) {
        const SpinMatrix m = random_spin_matrix(rng);
        const Complex d = det2(m);
        if (std::abs(d) < 1e-3)
            continue;
        return UnitSpinMatrix(m / std::sqrt(d));
    }
}

FourVector random_four_vector(Rng& rng, double scale) {
    std::uniform_real_distribution<double> uniform(-scale, scale);
    const double x0 = uniform(rng), x1 = uniform(rng), x2 = uniform(rng);
    return {x0, x1, x2, uniform(rng)};
}

} // namespace spincover
