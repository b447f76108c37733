#include "spincover/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spincover/errors.hpp"

namespace spincover {

namespace {

double det3(const Matrix4& m, int skip_col) {
    // Minor of row 0 / column skip_col, using rows 1..3.
    std::array<int, 3> cols{};
    for (int c = 0, n = 0; c < 4; ++c)
        if (c != skip_col)
            cols[static_cast<std::size_t>(n++)] = c;
    auto at = [&](int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols[static_cast<std::size_t>(c)])]; };
    return at(1, 0) * (at(2, 1) * at(3, 2) - at(2, 2) * at(3, 1)) -
           at(1, 1) * (at(2, 0) * at(3, 2) - at(2, 2) * at(3, 0)) +
           at(1, 2) * (at(2, 0) * at(3, 1) - at(2, 1) * at(3, 0));
}

} // namespace

Matrix4 identity4() { return diagonal4(1, 1, 1, 1); }

Matrix4 diagonal4(double d0, double d1, double d2, double d3) {
    Matrix4 m{};
    m[0][0] = d0;
    m[1][1] = d1;
    m[2][2] = d2;
    m[3][3] = d3;
    return m;
}

Matrix4 multiply(const Matrix4& lhs, const Matrix4& rhs) {
    Matrix4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 4; ++k)
                s += lhs[i][k] * rhs[k][j];
            out[i][j] = s;
        }
    return out;
}

Matrix4 transpose(const Matrix4& m) {
    Matrix4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out[i][j] = m[j][i];
    return out;
}

double determinant(const Matrix4& m) {
    double det = 0.0;
    for (int c = 0; c < 4; ++c) {
        const double sign = (c % 2 == 0) ? 1.0 : -1.0;
        det += sign * m[0][static_cast<std::size_t>(c)] * det3(m, c);
    }
    return det;
}

double trace(const Matrix4& m) { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }

double orthogonality_defect(const Matrix4& m) {
    double worst = 0.0;
    for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) {
            double s = 0.0;
            for (int i = 0; i < 4; ++i)
                s += kMinkowskiMetric[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     m[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
            worst = std::max(worst, std::abs(s - metric(j, l)));
        }
    return worst;
}

double max_relative_error(const Matrix4& lhs, const Matrix4& rhs) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            worst = std::max(worst, relative_error(lhs[i][j], rhs[i][j]));
    return worst;
}

LorentzMatrix LorentzMatrix::validate(const Matrix4& m, double tol) {
    for (const auto& row : m)
        for (double x : row)
            if (!std::isfinite(x))
                throw NotLorentz(std::numeric_limits<double>::infinity());
    const double defect = orthogonality_defect(m);
    if (!(defect <= tol))
        throw NotLorentz(defect);
    return LorentzMatrix(m);
}

std::string ComponentClass::name() const {
    return std::string(proper ? "proper" : "improper") + (orthochronous ? "-orthochronous" : "-antichronous");
}

ComponentClass classify(const LorentzMatrix& t) {
    // For Lorentz matrices det = +-1 and |T^0_0| >= 1, so strict signs suffice.
    return {determinant(t.matrix()) > 0.0, t(0, 0) > 0.0};
}

LorentzMatrix compose(const LorentzMatrix& s, const LorentzMatrix& t) {
    return LorentzMatrix::assume_valid(multiply(s.matrix(), t.matrix()));
}

LorentzMatrix inverse(const LorentzMatrix& t) {
    Matrix4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out[i][j] = kMinkowskiMetric[i] * t.matrix()[j][i] * kMinkowskiMetric[j];
    return LorentzMatrix::assume_valid(out);
}

FourVector apply(const LorentzMatrix& t, const FourVector& v) {
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out[static_cast<std::size_t>(i)] += t(i, j) * v[j];
    return {out[0], out[1], out[2], out[3]};
}

Matrix4 sign_twist(const LorentzMatrix& t, int i) {
    Matrix4 out = t.matrix();
    for (int j = 0; j < 4; ++j) {
        const int s = commutation_sign(i, j);
        for (double& x : out[static_cast<std::size_t>(j)])
            x *= s;
    }
    return out;
}

double trace_identity_defect(const LorentzMatrix& t) {
    double spatial = 0.0, time_column = 0.0, time_row = 0.0;
    for (int k = 1; k < 4; ++k)
        for (int j = 1; j < 4; ++j)
            spatial += t(k, j) * t(k, j);
    for (int j = 1; j < 4; ++j) {
        time_column += t(j, 0) * t(j, 0);
        time_row += t(0, j) * t(0, j);
    }
    return std::abs(spatial - time_column - time_row - 4.0 + t(0, 0) * t(0, 0));
}

} // namespace spincover
