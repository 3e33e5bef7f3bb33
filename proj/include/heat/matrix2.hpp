// matrix2.hpp: fixed 2x2 matrices for the two-node circuit

#pragma once

#include <complex>
#include <type_traits>

#include "heat/errors.hpp"

namespace heat {

template <typename T>
struct Matrix2 {
    T a11{}, a12{}, a21{}, a22{};

    static Matrix2 identity() { return {T{1}, T{}, T{}, T{1}}; }
    static Matrix2 diagonal(T d1, T d2) { return {d1, T{}, T{}, d2}; }

    T trace() const { return a11 + a22; }
    T det() const { return a11 * a22 - a12 * a21; }

    // Closed-form inverse; throws SingularityError on a vanishing determinant.
    Matrix2 inverse() const {
        const T d = det();
        if (d == T{}) throw SingularityError("Matrix2::inverse: singular matrix");
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    // Conjugate transpose (plain transpose for real T).
    Matrix2 adjoint() const {
        if constexpr (std::is_floating_point_v<T>) {
            return {a11, a21, a12, a22};
        } else {
            return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
        }
    }

    friend Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
        return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
    }
    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }
    friend Matrix2 operator*(T k, const Matrix2& x) { return {k * x.a11, k * x.a12, k * x.a21, k * x.a22}; }
};

template <typename T>
Matrix2<std::complex<T>> to_complex(const Matrix2<T>& m) {
    return {m.a11, m.a12, m.a21, m.a22};
}

} // namespace heat
