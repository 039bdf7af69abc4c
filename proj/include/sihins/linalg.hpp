#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace sihins {

template <std::size_t N>
using Matrix = std::array<std::array<double, N>, N>;

using Mat2 = Matrix<2>;
using Mat3 = Matrix<3>;

template <std::size_t N>
Matrix<N> identity() {
    Matrix<N> m{};
    for (std::size_t i = 0; i < N; ++i) m[i][i] = 1.0;
    return m;
}

template <std::size_t N>
Matrix<N> multiply(const Matrix<N>& a, const Matrix<N>& b) {
    Matrix<N> out{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t j = 0; j < N; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline Mat2 inverse(const Mat2& m) {
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

/// Largest eigenvalue modulus of a real 2x2 matrix.
inline double spectral_radius(const Mat2& m) {
    const double tr = m[0][0] + m[1][1];
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const double disc = tr * tr / 4.0 - det;
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        return std::max(std::abs(tr / 2.0 + root), std::abs(tr / 2.0 - root));
    }
    // complex pair: |z|^2 = det
    return std::sqrt(det);
}

/// Coefficients (c1, c2, c3) of det(rI - M) = r^3 + c1 r^2 + c2 r + c3.
template <typename Real = double>
std::array<Real, 3> characteristic_coefficients(const Mat3& m) {
    auto at = [&](int i, int j) { return static_cast<Real>(m[i][j]); };
    const Real trace = at(0, 0) + at(1, 1) + at(2, 2);
    const Real minors = (at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0)) +
                        (at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0)) +
                        (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
    const Real det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                     at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                     at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    return {-trace, minors, -det};
}

/// Roots of the monic cubic r^3 + al r^2 + bl r + cl, by the trigonometric
/// method when all roots are real and Cardano's formula otherwise.
inline std::array<std::complex<double>, 3> cubic_roots(long double al, long double bl,
                                                       long double cl) {
    using std::complex;
    // depressed cubic y^3 + p y + q with r = y - a/3
    const long double p = bl - al * al / 3.0L;
    const long double q = 2.0L * al * al * al / 27.0L - al * bl / 3.0L + cl;
    const long double shift = -al / 3.0L;
    const long double disc = q * q / 4.0L + p * p * p / 27.0L;

    std::array<complex<double>, 3> roots;
    if (disc <= 0.0L) {
        if (p == 0.0L) {
            roots.fill(static_cast<double>(shift));
            return roots;
        }
        const long double m = 2.0L * std::sqrt(-p / 3.0L);
        long double arg = 3.0L * q / (p * m);
        arg = std::clamp(arg, -1.0L, 1.0L);
        const long double theta = std::acos(arg) / 3.0L;
        for (int k = 0; k < 3; ++k) {
            const long double y =
                m * std::cos(theta - 2.0L * std::numbers::pi_v<long double> * k / 3.0L);
            roots[k] = static_cast<double>(y + shift);
        }
        return roots;
    }
    const long double sq = std::sqrt(disc);
    const long double u = std::cbrt(-q / 2.0L + sq);
    const long double v = std::cbrt(-q / 2.0L - sq);
    const long double real = -(u + v) / 2.0L;
    const long double imag = std::sqrt(3.0L) / 2.0L * (u - v);
    roots[0] = static_cast<double>(u + v + shift);
    roots[1] = {static_cast<double>(real + shift), static_cast<double>(imag)};
    roots[2] = {static_cast<double>(real + shift), static_cast<double>(-imag)};
    return roots;
}

/// |a - b| <= tol * max(|a|, |b|), with exact equality always passing.
inline bool relatively_close(double a, double b, double tol) {
    return a == b || std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace sihins
