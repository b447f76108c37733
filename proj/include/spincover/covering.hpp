#pragma once

#include "spincover/lorentz.hpp"
#include "spincover/pauli.hpp"

namespace spincover {

/// Tolerance on |det A - 1| accepted by UnitSpinMatrix.
inline constexpr double kUnitDeterminantTolerance = 1e-10;

/// |weight| at or below this means the index cannot recover A (a^i = 0).
inline constexpr double kDegeneracyThreshold = 1e-6;

/// An element of SL(2, C).
class UnitSpinMatrix {
public:
    /// Throws NotUnitDeterminant when |det A - 1| > tol.
    explicit UnitSpinMatrix(const SpinMatrix& m, double tol = kUnitDeterminantTolerance);

    /// Wraps without checking, for matrices of determinant 1 by construction.
    static UnitSpinMatrix assume_unit(const SpinMatrix& m) { return UnitSpinMatrix(m, Trusted{}); }

    static UnitSpinMatrix identity() { return assume_unit(SpinMatrix::identity()); }

    const SpinMatrix& matrix() const noexcept { return m_; }
    PauliCoefficients coefficients() const { return decompose(m_); }

    UnitSpinMatrix operator-() const;
    /// Group product; determinant stays 1 up to rounding.
    UnitSpinMatrix operator*(const UnitSpinMatrix& rhs) const;

    bool operator==(const UnitSpinMatrix&) const = default;

private:
    struct Trusted {};
    UnitSpinMatrix(const SpinMatrix& m, Trusted) : m_(m) {}

    SpinMatrix m_;
};

/// tau_(i)(T) = sum_{j,k} T^j_k sigma_i' sigma_j sigma_i sigma_k together with
/// weight = tr(tau' tau) / 2.
///
/// For T = Phi(A) one has tau = 4 conj(a^i) sigma_i' A, hence
/// weight = 16 eps_i conj(a^i)^2. The sign eps_i matters for i = 1, 2, 3:
/// the factor that turns sigma_i' tau back into A is normalizer() = eps_i weight.
struct TauMatrix {
    SpinMatrix tau;
    int index;
    Complex weight;

    Complex normalizer() const { return static_cast<double>(conjugation_sign(index)) * weight; }
};

/// The two preimages {+A, -A} of a Lorentz matrix.
struct SpinPreimages {
    UnitSpinMatrix plus;
    UnitSpinMatrix minus;
};

/// Raw trace formula T^i_j = tr(sigma_i A sigma_j A^dagger) / 2 for any 2x2 matrix.
/// Produces a Lorentz matrix whenever |det A| = 1.
Matrix4 lorentz_entries(const SpinMatrix& a);

/// The covering map SL(2, C) -> SO+(3, 1).
LorentzMatrix phi(const UnitSpinMatrix& a);

/// Same map computed from the bilinear expansion in the Pauli coefficients
/// of A. Kept as an independent cross-check of phi().
LorentzMatrix phi_expanded(const UnitSpinMatrix& a);

TauMatrix tau(const LorentzMatrix& t, int i);

/// Preimages through tau_(i): +-sigma_i' tau_(i)(T) / sqrt(eps_i weight).
/// Throws DegenerateIndex when |weight| <= kDegeneracyThreshold.
SpinPreimages phi_hat_indexed(const LorentzMatrix& t, int i);

/// Same preimages from closed-form expressions in the entries of T alone.
SpinPreimages phi_hat_corollary(const LorentzMatrix& t, int i);

/// Index with the largest |weight|, smallest index on ties.
int best_index(const LorentzMatrix& t);

/// Canonical preimage of a proper orthochronous T. Throws NotProperOrthochronous.
UnitSpinMatrix phi_hat(const LorentzMatrix& t);

/// Picks between A and -A: the first Pauli coefficient part, in the order
/// Re a0, Im a0, Re a1, ..., Im a3, whose magnitude exceeds 1e-10 is made positive.
UnitSpinMatrix canonical_sign(const UnitSpinMatrix& a);

} // namespace spincover
