#pragma once

#include <array>
#include <string>

#include "spincover/minkowski.hpp"

namespace spincover {

/// Row-major real 4x4 matrix; m[i][j] is T^i_j.
using Matrix4 = std::array<std::array<double, 4>, 4>;

Matrix4 identity4();
Matrix4 diagonal4(double d0, double d1, double d2, double d3);
Matrix4 multiply(const Matrix4& lhs, const Matrix4& rhs);
Matrix4 transpose(const Matrix4& m);
/// Cofactor expansion along the first row.
double determinant(const Matrix4& m);
double trace(const Matrix4& m);

/// max_{j,l} |(T^t g T - g)_{jl}|.
double orthogonality_defect(const Matrix4& m);

/// Largest entrywise relative error, scaled per entry by max(1, |x|, |y|).
double max_relative_error(const Matrix4& lhs, const Matrix4& rhs);

/// Validation tolerance for TᵗgT = g; looser than arithmetic tolerance so that
/// products of many transformations are still accepted.
inline constexpr double kValidationTolerance = 1e-9;

/// An element of O(3, 1). Obtained either through validate() or from one of
/// the library's constructions that produce Lorentz matrices by construction.
class LorentzMatrix {
public:
    /// Accepts iff orthogonality_defect(m) <= tol; throws NotLorentz otherwise.
    /// The matrix is stored unchanged.
    static LorentzMatrix validate(const Matrix4& m, double tol = kValidationTolerance);

    /// Wraps without checking. For results that are Lorentz by construction
    /// (products, images of the covering map).
    static LorentzMatrix assume_valid(const Matrix4& m) { return LorentzMatrix(m); }

    static LorentzMatrix identity() { return LorentzMatrix(identity4()); }

    double operator()(int row, int col) const {
        return t_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    }
    const Matrix4& matrix() const noexcept { return t_; }

private:
    explicit LorentzMatrix(const Matrix4& m) : t_(m) {}

    Matrix4 t_;
};

/// Which of the four connected components of O(3, 1) a matrix lies in.
struct ComponentClass {
    bool proper;        // det T = +1
    bool orthochronous; // T^0_0 > 0

    bool operator==(const ComponentClass&) const = default;

    /// "proper-orthochronous", "improper-antichronous", ...
    std::string name() const;
};

inline constexpr ComponentClass kProperOrthochronous{true, true};

ComponentClass classify(const LorentzMatrix& t);

LorentzMatrix compose(const LorentzMatrix& s, const LorentzMatrix& t);

/// T^{-1} = g T^t g.
LorentzMatrix inverse(const LorentzMatrix& t);

FourVector apply(const LorentzMatrix& t, const FourVector& v);

/// T_(i): row j scaled by eps_ij. Generally not a Lorentz matrix.
Matrix4 sign_twist(const LorentzMatrix& t, int i);

/// |sum_{k,j>=1} (T^k_j)^2 - sum_{j>=1} (T^j_0)^2 - sum_{j>=1} (T^0_j)^2 - 4 + (T^0_0)^2|,
/// which vanishes on O(3, 1).
double trace_identity_defect(const LorentzMatrix& t);

} // namespace spincover
