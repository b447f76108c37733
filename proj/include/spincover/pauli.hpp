#pragma once

#include <array>

#include "spincover/numeric.hpp"

namespace spincover {

/// A 2x2 complex matrix, stored row-major. Any element of gl(2, C); the
/// SL(2, C) constraint is enforced by UnitSpinMatrix.
class SpinMatrix {
public:
    constexpr SpinMatrix() = default;

    /// Throws std::invalid_argument if any entry is NaN or infinite.
    SpinMatrix(Complex a00, Complex a01, Complex a10, Complex a11);

    static SpinMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static SpinMatrix zero() { return {}; }

    Complex operator()(int row, int col) const { return entries_[static_cast<std::size_t>(2 * row + col)]; }
    const std::array<Complex, 4>& entries() const noexcept { return entries_; }

    Complex trace() const { return entries_[0] + entries_[3]; }

    SpinMatrix operator-() const;
    SpinMatrix operator+(const SpinMatrix& rhs) const;
    SpinMatrix operator-(const SpinMatrix& rhs) const;
    SpinMatrix operator*(const SpinMatrix& rhs) const;
    SpinMatrix operator*(Complex s) const;
    friend SpinMatrix operator*(Complex s, const SpinMatrix& m) { return m * s; }
    SpinMatrix operator/(Complex s) const { return *this * (1.0 / s); }

    bool operator==(const SpinMatrix&) const = default;

private:
    std::array<Complex, 4> entries_{};
};

/// Coefficients (a^0, a^1, a^2, a^3) of A = sum_i a^i sigma_i.
struct PauliCoefficients {
    std::array<Complex, 4> a{};

    Complex& operator[](int i) { return a[static_cast<std::size_t>(i)]; }
    Complex operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
    bool operator==(const PauliCoefficients&) const = default;
};

/// sigma_i' = eps_i sigma_i and sigma_i sigma_j = eps_ij sigma_j sigma_i.
struct SignTables {
    std::array<int, 4> eps_i;
    std::array<std::array<int, 4>, 4> eps_ij;
};

inline constexpr SignTables kSigns{
    {1, -1, -1, -1},
    {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}},
};

/// eps_i; throws IndexOutOfRange outside 0..3.
int conjugation_sign(int i);
/// eps_ij; throws IndexOutOfRange outside 0..3.
int commutation_sign(int i, int j);

/// sigma_0 (identity) through sigma_3.
SpinMatrix pauli_basis(int i);

/// a^i = tr(sigma_i A) / 2.
PauliCoefficients decompose(const SpinMatrix& m);
SpinMatrix reconstruct(const PauliCoefficients& c);

SpinMatrix mul(const SpinMatrix& lhs, const SpinMatrix& rhs);

/// A' = a^0 sigma_0 - a^1 sigma_1 - a^2 sigma_2 - a^3 sigma_3, i.e. the adjugate.
SpinMatrix conjugate(const SpinMatrix& m);

SpinMatrix dagger(const SpinMatrix& m);

Complex det2(const SpinMatrix& m);

/// Totally antisymmetric symbol on 1..3 with eps_123 = +1.
int levi_civita(int j, int k, int l);

/// Largest entrywise relative error between two matrices.
double max_relative_error(const SpinMatrix& lhs, const SpinMatrix& rhs);

} // namespace spincover
