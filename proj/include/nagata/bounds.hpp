#pragma once

// Degree bounds c1(n), c2(n) for plane-curve interpolation, computed two
// independent ways: powers of a seed matrix attached to the splitting
// n = k^2 + alpha, and explicit continued-fraction expansions.  Both are
// exact rationals; they agree (tested), and both lie strictly below sqrt(n).

#include "nagata/mat2.hpp"
#include "nagata/rational.hpp"

namespace nagata {

struct SquareNError : std::domain_error {
    explicit SquareNError(const std::string& what) : std::domain_error(what) {}
};

// n = k^2 + alpha with k = floor(sqrt(n)), so 1 <= alpha <= 2k.
struct NSplit {
    Int n;
    Int k;
    Int alpha;
    bool thm1_applies;        // alpha even, or k >= 3
    bool main_thm_applies;    // n in {8, 10, 12}, or (k >= 3 and alpha even and alpha | 2n)
    bool refinement_applies;  // n in {10, 11, 12}

    friend bool operator==(const NSplit&, const NSplit&) = default;
};

// Requires n >= 2 and n not a perfect square (throws SquareNError).
[[nodiscard]] NSplit split_n(const Int& n);

// Level-i convergent matrix M_i = alpha^(-floor(i/2)) * M_1^i where
// M_1 = [[k, n], [1, k]].  Every M_i has equal diagonal entries, so it is
// determined by (p, q, r) with M_i = [[p, q], [r, p]].
struct BoundMatrix {
    Rational p, q, r;
    Rational det;  // p^2 - q*r: equals -alpha at odd levels, 1 at even levels

    friend bool operator==(const BoundMatrix&, const BoundMatrix&) = default;
};

// Requires level >= 1.
[[nodiscard]] BoundMatrix bound_matrix(const NSplit& ns, unsigned level);

// c1 = q/p at level 2; c2 = q/p at level 4.
[[nodiscard]] Rational c1(const NSplit& ns);
[[nodiscard]] Rational c2(const NSplit& ns);

// The same constants as explicit continued fractions, built from k and
// t = 2k/alpha alone:
//   level 1:  k + 1/(t + 1/k)
//   level 2:  k + 1/(t + 1/(2k + 1/(t + 1/k)))
// Requires level in {1, 2}.
[[nodiscard]] Rational cf_expand(const NSplit& ns, int level);

// One equivalence between a slope bound and a convergent sign condition:
//   part 'a':  (alpha/2)*(d/p1) >= q1*m - p1*d   <=>   p2*d - q2*m >= 0
//   part 'b':  (1/2)*(d/q2)     >= p2*m - r2*d   <=>   p4*d - q4*m >= 0
// Returns {lhs_holds, rhs_holds}; the two always agree (tested).
struct BoundCheck {
    bool lhs_holds;
    bool rhs_holds;
};
[[nodiscard]] BoundCheck lemmaB_check(const NSplit& ns, const Rational& d, const Rational& m,
                                      char part);

}  // namespace nagata
