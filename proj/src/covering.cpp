#include "spincover/covering.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "spincover/errors.hpp"

namespace spincover {

namespace {

constexpr Complex kI{0.0, 1.0};

const std::array<SpinMatrix, 4>& sigmas() {
    static const std::array<SpinMatrix, 4> s{pauli_basis(0), pauli_basis(1), pauli_basis(2), pauli_basis(3)};
    return s;
}

const SpinMatrix& sigma(int i) { return sigmas()[static_cast<std::size_t>(i)]; }

SpinMatrix sigma_conjugated(int i) { return sigma(i) * static_cast<double>(conjugation_sign(i)); }

void check_index(int i) {
    if (i < 0 || i > 3)
        throw IndexOutOfRange("covering: index " + std::to_string(i) + " outside 0..3");
}

#ifdef SPINCOVER_CHECK_INVARIANTS
void check_image(const Matrix4& t) {
    // Rounding in T scales with |A|^4 ~ (T^0_0)^2.
    const double scale = std::max(1.0, t[0][0] * t[0][0]);
    const double defect = orthogonality_defect(t);
    if (!(defect <= kValidationTolerance * scale) || !(t[0][0] > 0.0) || !(determinant(t) > 0.0))
        throw std::logic_error("phi: image is not proper orthochronous, defect " + format_number(defect));
}
#endif

} // namespace

UnitSpinMatrix::UnitSpinMatrix(const SpinMatrix& m, double tol) : m_(m) {
    const Complex d = det2(m);
    if (!(std::abs(d - 1.0) <= tol))
        throw NotUnitDeterminant(d);
}

UnitSpinMatrix UnitSpinMatrix::operator-() const { return UnitSpinMatrix(-m_, Trusted{}); }

UnitSpinMatrix UnitSpinMatrix::operator*(const UnitSpinMatrix& rhs) const {
    return UnitSpinMatrix(m_ * rhs.m_, Trusted{});
}

Matrix4 lorentz_entries(const SpinMatrix& a) {
    const SpinMatrix a_dagger = dagger(a);
    Matrix4 t{};
    for (int j = 0; j < 4; ++j) {
        const SpinMatrix image = a * sigma(j) * a_dagger;
        for (int i = 0; i < 4; ++i)
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0.5 * (sigma(i) * image).trace().real();
    }
    return t;
}

LorentzMatrix phi(const UnitSpinMatrix& a) {
    const Matrix4 t = lorentz_entries(a.matrix());
#ifdef SPINCOVER_CHECK_INVARIANTS
    check_image(t);
#endif
    return LorentzMatrix::assume_valid(t);
}

LorentzMatrix phi_expanded(const UnitSpinMatrix& a) {
    const PauliCoefficients c = a.coefficients();
    // p(r, s) = a^r conj(a^s)
    auto p = [&c](int r, int s) { return c[r] * std::conj(c[s]); };
    const Complex i = kI;

    std::array<std::array<Complex, 4>, 4> z{};
    z[0][0] = p(0, 0) + p(1, 1) + p(2, 2) + p(3, 3);
    z[0][1] = p(0, 1) + p(1, 0) - i * p(2, 3) + i * p(3, 2);
    z[0][2] = p(0, 2) + p(2, 0) + i * p(1, 3) - i * p(3, 1);
    z[0][3] = p(0, 3) + p(3, 0) - i * p(1, 2) + i * p(2, 1);

    z[1][0] = p(0, 1) + p(1, 0) + i * p(2, 3) - i * p(3, 2);
    z[1][1] = p(0, 0) + p(1, 1) - p(2, 2) - p(3, 3);
    z[1][2] = p(1, 2) + p(2, 1) + i * p(0, 3) - i * p(3, 0);
    z[1][3] = p(1, 3) + p(3, 1) - i * p(0, 2) + i * p(2, 0);

    z[2][0] = p(0, 2) + p(2, 0) - i * p(1, 3) + i * p(3, 1);
    z[2][1] = p(1, 2) + p(2, 1) - i * p(0, 3) + i * p(3, 0);
    z[2][2] = p(0, 0) - p(1, 1) + p(2, 2) - p(3, 3);
    z[2][3] = p(2, 3) + p(3, 2) + i * p(0, 1) - i * p(1, 0);

    z[3][0] = p(0, 3) + p(3, 0) + i * p(1, 2) - i * p(2, 1);
    z[3][1] = p(1, 3) + p(3, 1) + i * p(0, 2) - i * p(2, 0);
    z[3][2] = p(2, 3) + p(3, 2) - i * p(0, 1) + i * p(1, 0);
    z[3][3] = p(0, 0) - p(1, 1) - p(2, 2) + p(3, 3);

    Matrix4 t{};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s)
            t[r][s] = z[r][s].real();
    return LorentzMatrix::assume_valid(t);
}

TauMatrix tau(const LorentzMatrix& t, int i) {
    check_index(i);
    const SpinMatrix left = sigma_conjugated(i);
    SpinMatrix sum;
    for (int j = 0; j < 4; ++j) {
        const SpinMatrix outer = left * sigma(j) * sigma(i);
        for (int k = 0; k < 4; ++k)
            sum = sum + (outer * sigma(k)) * t(j, k);
    }
    const Complex weight = 0.5 * (conjugate(sum) * sum).trace();
    return {sum, i, weight};
}

SpinPreimages phi_hat_indexed(const LorentzMatrix& t, int i) {
    const TauMatrix tm = tau(t, i);
    if (std::abs(tm.weight) <= kDegeneracyThreshold)
        throw DegenerateIndex(i, std::abs(tm.weight));
    const UnitSpinMatrix a(sigma_conjugated(i) * tm.tau / std::sqrt(tm.normalizer()));
    return {a, -a};
}

SpinPreimages phi_hat_corollary(const LorentzMatrix& t, int i) {
    check_index(i);
    const Matrix4 twisted = sign_twist(t, i);
    const double tr = trace(twisted);
    const double tr_sq = trace(multiply(twisted, twisted));
    auto eps = [](int a, int b) { return static_cast<double>(commutation_sign(a, b)); };

    Complex cross_term = 0.0;
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l) {
                const int e = levi_civita(j, k, l);
                if (e != 0)
                    cross_term += e * (eps(i, j) * t(j, 0) + t(0, j)) * eps(i, k) * t(k, l);
            }
    const Complex weight = 4.0 + tr * tr - tr_sq - 2.0 * kI * cross_term;
    if (std::abs(weight) <= kDegeneracyThreshold)
        throw DegenerateIndex(i, std::abs(weight));

    PauliCoefficients numerator;
    if (i == 0) {
        numerator[0] = tr;
        for (int j = 1; j <= 3; ++j) {
            Complex rotation = 0.0;
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l)
                    rotation += t(k, l) * static_cast<double>(levi_civita(j, k, l));
            numerator[j] = t(j, 0) + t(0, j) + kI * rotation;
        }
    } else {
        Complex rotation = 0.0;
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                rotation += eps(i, j) * static_cast<double>(levi_civita(i, j, k)) * t(j, k);
        numerator[0] = t(i, 0) + t(0, i) + kI * rotation;
        numerator[i] = tr;
        for (int j = 1; j <= 3; ++j) {
            if (j == i)
                continue;
            Complex boost = 0.0;
            for (int k = 1; k <= 3; ++k)
                boost += static_cast<double>(levi_civita(i, k, j)) * (eps(i, k) * t(k, 0) + t(0, k));
            numerator[j] = t(i, j) - eps(i, j) * t(j, i) + kI * boost;
        }
    }

    const Complex normalizer = static_cast<double>(conjugation_sign(i)) * weight;
    const UnitSpinMatrix a(reconstruct(numerator) / std::sqrt(normalizer));
    return {a, -a};
}

int best_index(const LorentzMatrix& t) {
    int best = 0;
    double best_weight = -1.0;
    for (int i = 0; i < 4; ++i) {
        const double w = std::abs(tau(t, i).weight);
        if (w > best_weight) {
            best = i;
            best_weight = w;
        }
    }
    return best;
}

UnitSpinMatrix phi_hat(const LorentzMatrix& t) {
    const ComponentClass cls = classify(t);
    if (!(cls == kProperOrthochronous))
        throw NotProperOrthochronous(cls.name(), determinant(t.matrix()), t(0, 0));
    return canonical_sign(phi_hat_indexed(t, best_index(t)).plus);
}

UnitSpinMatrix canonical_sign(const UnitSpinMatrix& a) {
    constexpr double threshold = 1e-10;
    const PauliCoefficients c = a.coefficients();
    for (int k = 0; k < 4; ++k)
        for (double part : {c[k].real(), c[k].imag()})
            if (std::abs(part) > threshold)
                return part > 0.0 ? a : -a;
    return a;
}

} // namespace spincover
