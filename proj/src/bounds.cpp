#include "nagata/bounds.hpp"

namespace nagata {

NSplit split_n(const Int& n) {
    if (n < 2) throw std::domain_error("split_n: n must be >= 2");
    const Int k = isqrt(n);
    const Int alpha = n - k * k;
    if (alpha == 0) throw SquareNError("split_n: n = " + k.get_str() + "^2 is a perfect square");

    const bool alpha_even = mpz_even_p(alpha.get_mpz_t()) != 0;
    const bool special_small = n == 8 || n == 10 || n == 12;
    NSplit ns;
    ns.n = n;
    ns.k = k;
    ns.alpha = alpha;
    ns.thm1_applies = alpha_even || k >= 3;
    ns.main_thm_applies = special_small || (k >= 3 && alpha_even && (2 * n) % alpha == 0);
    ns.refinement_applies = n == 10 || n == 11 || n == 12;
    return ns;
}

BoundMatrix bound_matrix(const NSplit& ns, unsigned level) {
    if (level < 1) throw std::domain_error("bound_matrix: level must be >= 1");
    const Mat2 seed{Rational(ns.k), Rational(ns.n), Rational(1), Rational(ns.k)};
    const Mat2 power = mat2_pow(seed, level);
    Int denom;
    mpz_pow_ui(denom.get_mpz_t(), ns.alpha.get_mpz_t(), level / 2);
    const Mat2 m = mat2_scale(Rational(Int(1), denom), power);
    return BoundMatrix{m.a, m.b, m.c, m.det()};
}

Rational c1(const NSplit& ns) {
    const BoundMatrix m = bound_matrix(ns, 2);
    return m.q / m.p;
}

Rational c2(const NSplit& ns) {
    const BoundMatrix m = bound_matrix(ns, 4);
    return m.q / m.p;
}

Rational cf_expand(const NSplit& ns, int level) {
    if (level != 1 && level != 2) throw std::domain_error("cf_expand: level must be 1 or 2");
    const Rational k{ns.k};
    const Rational t = Rational(Int(2 * ns.k)) / Rational(ns.alpha);
    const Rational one{1};
    const Rational inner = t + one / k;
    if (level == 1) return k + one / inner;
    return k + one / (t + one / (2 * k + one / inner));
}

BoundCheck lemmaB_check(const NSplit& ns, const Rational& d, const Rational& m, char part) {
    const Rational half = Rational(Int(1), Int(2));
    if (part == 'a') {
        const BoundMatrix m1 = bound_matrix(ns, 1);
        const BoundMatrix m2 = bound_matrix(ns, 2);
        const bool lhs = Rational(ns.alpha) * half * (d / m1.p) >= m1.q * m - m1.p * d;
        const bool rhs = m2.p * d - m2.q * m >= Rational(0);
        return {lhs, rhs};
    }
    if (part == 'b') {
        const BoundMatrix m2 = bound_matrix(ns, 2);
        const BoundMatrix m4 = bound_matrix(ns, 4);
        const bool lhs = half * (d / m2.q) >= m2.p * m - m2.r * d;
        const bool rhs = m4.p * d - m4.q * m >= Rational(0);
        return {lhs, rhs};
    }
    throw std::domain_error("lemmaB_check: part must be 'a' or 'b'");
}

}  // namespace nagata
