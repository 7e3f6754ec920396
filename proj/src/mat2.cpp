#include "nagata/mat2.hpp"

namespace nagata {

Mat2 mat2_pow(const Mat2& x, unsigned e) {
    Mat2 acc = Mat2::identity();
    Mat2 base = x;
    while (e > 0) {
        if (e & 1U) acc = acc * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return acc;
}

Mat2 mat2_scale(const Rational& s, const Mat2& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
}

}  // namespace nagata
