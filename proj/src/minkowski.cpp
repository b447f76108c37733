#include "spincover/minkowski.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "spincover/errors.hpp"

namespace spincover {

FourVector::FourVector(double x0, double x1, double x2, double x3) : x_{x0, x1, x2, x3} {
    for (double c : x_)
        if (!std::isfinite(c))
            throw std::invalid_argument("FourVector: non-finite component");
}

FourVector FourVector::operator+(const FourVector& rhs) const {
    return {x_[0] + rhs.x_[0], x_[1] + rhs.x_[1], x_[2] + rhs.x_[2], x_[3] + rhs.x_[3]};
}

FourVector FourVector::operator-(const FourVector& rhs) const {
    return {x_[0] - rhs.x_[0], x_[1] - rhs.x_[1], x_[2] - rhs.x_[2], x_[3] - rhs.x_[3]};
}

FourVector FourVector::operator*(double s) const { return {x_[0] * s, x_[1] * s, x_[2] * s, x_[3] * s}; }

HermitianMatrix::HermitianMatrix(const SpinMatrix& m, double tol) {
    const SpinMatrix adj = dagger(m);
    const double defect = max_relative_error(m, adj);
    if (defect > tol)
        throw NotHermitian(defect);
    m_ = (m + adj) * 0.5;
}

double minkowski_norm2(const FourVector& v) { return v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3]; }

HermitianMatrix psi(const FourVector& v) {
    const Complex i{0.0, 1.0};
    return HermitianMatrix(SpinMatrix{v[0] + v[3], v[1] - i * v[2], v[1] + i * v[2], v[0] - v[3]});
}

FourVector psi_inv(const HermitianMatrix& h) {
    const SpinMatrix& m = h.matrix();
    const double a = m(0, 0).real();
    const double b = m(1, 1).real();
    const Complex w = m(1, 0);
    return {0.5 * (a + b), w.real(), w.imag(), 0.5 * (a - b)};
}

CliffordParts clifford_product_parts(const FourVector& x, const FourVector& y) {
    const PauliCoefficients c = decompose(psi(x).matrix() * psi(y).matrix());
    // The scalar coefficient of a product of Hermitian matrices is real.
    assert(std::abs(c[0].imag()) <= kArithmeticTolerance * std::max(1.0, std::abs(c[0])));
    CliffordParts parts{};
    parts.scalar = c[0].real();
    for (int k = 1; k <= 3; ++k) {
        parts.symmetric[static_cast<std::size_t>(k - 1)] = c[k].real();
        parts.cross[static_cast<std::size_t>(k - 1)] = c[k].imag();
    }
    return parts;
}

FourVector clifford_product_split(const FourVector& x, const FourVector& y) {
    const CliffordParts p = clifford_product_parts(x, y);
    return {p.scalar, p.symmetric[0] + p.cross[0], p.symmetric[1] + p.cross[1], p.symmetric[2] + p.cross[2]};
}

} // namespace spincover
