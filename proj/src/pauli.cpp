#include "spincover/pauli.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "spincover/errors.hpp"

namespace spincover {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_index(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi)
        throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(i) + " outside " +
                              std::to_string(lo) + ".." + std::to_string(hi));
}

} // namespace

SpinMatrix::SpinMatrix(Complex a00, Complex a01, Complex a10, Complex a11) : entries_{a00, a01, a10, a11} {
    for (const Complex& z : entries_)
        if (!is_finite(z))
            throw std::invalid_argument("SpinMatrix: non-finite entry");
}

SpinMatrix SpinMatrix::operator-() const {
    return {-entries_[0], -entries_[1], -entries_[2], -entries_[3]};
}

SpinMatrix SpinMatrix::operator+(const SpinMatrix& rhs) const {
    return {entries_[0] + rhs.entries_[0], entries_[1] + rhs.entries_[1], entries_[2] + rhs.entries_[2],
            entries_[3] + rhs.entries_[3]};
}

SpinMatrix SpinMatrix::operator-(const SpinMatrix& rhs) const {
    return {entries_[0] - rhs.entries_[0], entries_[1] - rhs.entries_[1], entries_[2] - rhs.entries_[2],
            entries_[3] - rhs.entries_[3]};
}

SpinMatrix SpinMatrix::operator*(const SpinMatrix& rhs) const { return mul(*this, rhs); }

SpinMatrix SpinMatrix::operator*(Complex s) const {
    return {entries_[0] * s, entries_[1] * s, entries_[2] * s, entries_[3] * s};
}

int conjugation_sign(int i) {
    check_index(i, 0, 3, "conjugation_sign");
    return kSigns.eps_i[static_cast<std::size_t>(i)];
}

int commutation_sign(int i, int j) {
    check_index(i, 0, 3, "commutation_sign");
    check_index(j, 0, 3, "commutation_sign");
    return kSigns.eps_ij[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

SpinMatrix pauli_basis(int i) {
    check_index(i, 0, 3, "pauli_basis");
    switch (i) {
    case 0:
        return {1.0, 0.0, 0.0, 1.0};
    case 1:
        return {0.0, 1.0, 1.0, 0.0};
    case 2:
        return {0.0, -kI, kI, 0.0};
    default:
        return {1.0, 0.0, 0.0, -1.0};
    }
}

PauliCoefficients decompose(const SpinMatrix& m) {
    // tr(sigma_i A) / 2 written out per basis element.
    const Complex a00 = m(0, 0), a01 = m(0, 1), a10 = m(1, 0), a11 = m(1, 1);
    PauliCoefficients c;
    c[0] = 0.5 * (a00 + a11);
    c[1] = 0.5 * (a10 + a01);
    c[2] = 0.5 * kI * (a01 - a10);
    c[3] = 0.5 * (a00 - a11);
    return c;
}

SpinMatrix reconstruct(const PauliCoefficients& c) {
    return {c[0] + c[3], c[1] - kI * c[2], c[1] + kI * c[2], c[0] - c[3]};
}

SpinMatrix mul(const SpinMatrix& lhs, const SpinMatrix& rhs) {
    return {lhs(0, 0) * rhs(0, 0) + lhs(0, 1) * rhs(1, 0), lhs(0, 0) * rhs(0, 1) + lhs(0, 1) * rhs(1, 1),
            lhs(1, 0) * rhs(0, 0) + lhs(1, 1) * rhs(1, 0), lhs(1, 0) * rhs(0, 1) + lhs(1, 1) * rhs(1, 1)};
}

SpinMatrix conjugate(const SpinMatrix& m) { return {m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)}; }

SpinMatrix dagger(const SpinMatrix& m) {
    return {std::conj(m(0, 0)), std::conj(m(1, 0)), std::conj(m(0, 1)), std::conj(m(1, 1))};
}

Complex det2(const SpinMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

int levi_civita(int j, int k, int l) {
    check_index(j, 1, 3, "levi_civita");
    check_index(k, 1, 3, "levi_civita");
    check_index(l, 1, 3, "levi_civita");
    if (j == k || k == l || j == l)
        return 0;
    // Count inversions of the permutation (j, k, l).
    int inversions = (j > k) + (j > l) + (k > l);
    return inversions % 2 == 0 ? 1 : -1;
}

double max_relative_error(const SpinMatrix& lhs, const SpinMatrix& rhs) {
    double worst = 0.0;
    for (std::size_t n = 0; n < 4; ++n)
        worst = std::max(worst, relative_error(lhs.entries()[n], rhs.entries()[n]));
    return worst;
}

} // namespace spincover
