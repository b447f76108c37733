#pragma once

#include <array>

#include "spincover/pauli.hpp"

namespace spincover {

using Vec3 = std::array<double, 3>;

/// A point of R^{3,1}; component 0 is time, 1..3 are space.
class FourVector {
public:
    constexpr FourVector() = default;
    /// Throws std::invalid_argument on non-finite components.
    FourVector(double x0, double x1, double x2, double x3);

    double operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
    const std::array<double, 4>& components() const noexcept { return x_; }
    Vec3 spatial() const { return {x_[1], x_[2], x_[3]}; }

    FourVector operator+(const FourVector& rhs) const;
    FourVector operator-(const FourVector& rhs) const;
    FourVector operator*(double s) const;
    friend FourVector operator*(double s, const FourVector& v) { return v * s; }

    bool operator==(const FourVector&) const = default;

private:
    std::array<double, 4> x_{};
};

/// g = diag(1, -1, -1, -1), g_ij = eps_i delta_ij.
inline constexpr std::array<int, 4> kMinkowskiMetric{1, -1, -1, -1};

constexpr int metric(int i, int j) { return i == j ? kMinkowskiMetric[static_cast<std::size_t>(i)] : 0; }

/// Element of h(2, C). Construction symmetrizes (H + H^dagger) / 2 when the
/// input is Hermitian to within `tol` entrywise, and throws NotHermitian otherwise.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const SpinMatrix& m, double tol = kArithmeticTolerance);

    const SpinMatrix& matrix() const noexcept { return m_; }

private:
    SpinMatrix m_;
};

double minkowski_norm2(const FourVector& v);

/// x -> sum_i x^i sigma_i = [[x0 + x3, x1 - i x2], [x1 + i x2, x0 - x3]].
HermitianMatrix psi(const FourVector& v);
FourVector psi_inv(const HermitianMatrix& h);

/// Pieces of the Pauli decomposition of psi(x) psi(y):
///   scalar    = x0 y0 + <x, y>
///   symmetric = x0 y + y0 x   (real part of the spatial coefficients)
///   cross     = x cross y     (imaginary part of the spatial coefficients)
struct CliffordParts {
    double scalar;
    Vec3 symmetric;
    Vec3 cross;
};

CliffordParts clifford_product_parts(const FourVector& x, const FourVector& y);

/// (x0 y0 + <x, y>, x0 y + y0 x + x cross y), read off psi(x) psi(y).
FourVector clifford_product_split(const FourVector& x, const FourVector& y);

} // namespace spincover
