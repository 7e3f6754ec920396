#pragma once

// 2x2 matrices over Rational: just enough linear algebra for
// matrix-power convergents.

#include "nagata/rational.hpp"

namespace nagata {

struct Mat2 {
    Rational a, b, c, d;  // row-major: [[a, b], [c, d]]

    [[nodiscard]] Rational det() const { return a * d - b * c; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    friend bool operator==(const Mat2& x, const Mat2& y) = default;

    static Mat2 identity() { return {1, 0, 0, 1}; }
};

// x^e by repeated squaring, e >= 0.
[[nodiscard]] Mat2 mat2_pow(const Mat2& x, unsigned e);

// Scalar multiple s*x.
[[nodiscard]] Mat2 mat2_scale(const Rational& s, const Mat2& x);

}  // namespace nagata
