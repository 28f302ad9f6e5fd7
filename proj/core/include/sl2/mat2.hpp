#pragma once

#include "sl2/numeric.hpp"

namespace sl2 {

/// 2x2 matrix over an exact coefficient ring (Integer, Rational, LaurentPoly).
template <class R>
struct Mat2 {
    R a{}, b{}, c{}, d{}; // row-major: (a b; c d)

    static Mat2 identity() { return {R(1), R(0), R(0), R(1)}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    R det() const { return a * d - b * c; }
    R coeff_sum() const { return a + b + c + d; }
    Mat2 transpose() const { return {a, c, b, d}; }

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
};

using IMat2 = Mat2<Integer>;

} // namespace sl2
