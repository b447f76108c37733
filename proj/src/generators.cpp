#include "spincover/generators.hpp"

#include <cmath>

#include "spincover/errors.hpp"

namespace spincover {

namespace {

SpinMatrix n_dot_sigma(const Axis& n) {
    return pauli_basis(1) * n[0] + pauli_basis(2) * n[1] + pauli_basis(3) * n[2];
}

} // namespace

Axis::Axis(const Vec3& v) {
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (!(std::abs(norm - 1.0) <= 1e-6))
        throw InvalidAxis(norm);
    n_ = {v[0] / norm, v[1] / norm, v[2] / norm};
}

UnitSpinMatrix boost_spin(const Rapidity& r) {
    const double half = 0.5 * r.alpha;
    return UnitSpinMatrix::assume_unit(SpinMatrix::identity() * std::cosh(half) + n_dot_sigma(r.axis) * std::sinh(half));
}

LorentzMatrix boost_lorentz(const Rapidity& r) {
    const double ch = std::cosh(r.alpha);
    const double sh = std::sinh(r.alpha);
    Matrix4 t{};
    t[0][0] = ch;
    for (std::size_t j = 1; j < 4; ++j) {
        const double nj = r.axis[static_cast<int>(j) - 1];
        t[0][j] = sh * nj;
        t[j][0] = sh * nj;
        for (std::size_t k = 1; k < 4; ++k)
            t[j][k] = (j == k ? 1.0 : 0.0) + (ch - 1.0) * nj * r.axis[static_cast<int>(k) - 1];
    }
    return LorentzMatrix::assume_valid(t);
}

UnitSpinMatrix rotation_spin(const AxisAngle& aa) {
    const double half = 0.5 * aa.theta;
    const Complex minus_i_sin{0.0, -std::sin(half)};
    return UnitSpinMatrix::assume_unit(SpinMatrix::identity() * std::cos(half) + n_dot_sigma(aa.axis) * minus_i_sin);
}

LorentzMatrix rotation_lorentz(const AxisAngle& aa) {
    const double c = std::cos(aa.theta);
    const double s = std::sin(aa.theta);
    const Vec3& n = aa.axis.direction();
    // [n]x with ([n]x v) = n cross v.
    const double cross[3][3] = {{0.0, -n[2], n[1]}, {n[2], 0.0, -n[0]}, {-n[1], n[0], 0.0}};
    Matrix4 t{};
    t[0][0] = 1.0;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            t[j + 1][k + 1] = (j == k ? c : 0.0) + s * cross[j][k] + (1.0 - c) * n[j] * n[k];
    return LorentzMatrix::assume_valid(t);
}

} // namespace spincover
