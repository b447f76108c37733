#pragma once

#include "spincover/covering.hpp"
#include "spincover/lorentz.hpp"
#include "spincover/minkowski.hpp"

namespace spincover {

/// Unit 3-vector. Inputs within 1e-6 of unit length are normalized; anything
/// else throws InvalidAxis.
class Axis {
public:
    explicit Axis(const Vec3& v);

    const Vec3& direction() const noexcept { return n_; }
    double operator[](int k) const { return n_[static_cast<std::size_t>(k)]; }

private:
    Vec3 n_;
};

/// Boost with rapidity `alpha` along `axis`.
struct Rapidity {
    double alpha;
    Axis axis;
};

/// Right-handed active rotation by `theta` radians about `axis`.
struct AxisAngle {
    double theta;
    Axis axis;
};

/// cosh(alpha/2) sigma_0 + sinh(alpha/2) n.sigma
UnitSpinMatrix boost_spin(const Rapidity& r);
LorentzMatrix boost_lorentz(const Rapidity& r);

/// cos(theta/2) sigma_0 - i sin(theta/2) n.sigma
UnitSpinMatrix rotation_spin(const AxisAngle& aa);
/// diag(1, R) with R = cos(theta) I + sin(theta) [n]x + (1 - cos(theta)) n n^t.
LorentzMatrix rotation_lorentz(const AxisAngle& aa);

} // namespace spincover
