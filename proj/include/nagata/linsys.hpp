#pragma once

// Linear systems L(d, n, m): plane curves of degree d with multiplicity >= m
// at n general points.  Emptiness certificates, numerical invariants, and the
// Euler-characteristic bookkeeping used to derive them.

#include <optional>
#include <string>

#include "nagata/bounds.hpp"
#include "nagata/rational.hpp"

namespace nagata {

struct LinearSystem {
    Int d;  // degree, >= 0
    Int n;  // number of general points, >= 1
    Int m;  // uniform multiplicity, >= 0

    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

// Virtual dimension v = d(d+3)/2 - n*m(m+1)/2.
[[nodiscard]] Int virtual_dim(const LinearSystem& ls);

// Expected dimension of sections: max(0, v + 1).
[[nodiscard]] Int expected_sections(const LinearSystem& ls);

// Derived invariants.  For square n only v and chi_p2 are defined; the
// remaining fields need the splitting n = k^2 + alpha and stay empty.
// kappa is the refined certificate value, defined only for n in {10, 11, 12}:
//   kappa_10 = 721 d - 2280 m - 60
//   kappa_11 = 199 d -  660 m - 33
//   kappa_12 =  97 d -  336 m - 24
struct InvariantRow {
    Int d, n, m;
    Int v;
    Int chi_p2;  // v + 1
    std::optional<Int> mu;       // floor(d / k)
    std::optional<Int> epsilon;  // d - k*mu, in [0, k)
    std::optional<Int> b;        // n*m - k*d
    std::optional<Int> mhat;     // mu - m
    std::optional<Int> g;        // (k-1)(k-2)/2
    std::optional<Rational> chi_s;  // always integral (tested)
    std::optional<Rational> gamma;  // p2*m - r2*d at level 2
    std::optional<Int> kappa;

    friend bool operator==(const InvariantRow&, const InvariantRow&) = default;
};

[[nodiscard]] InvariantRow invariants(const LinearSystem& ls);

// chi_s evaluated at an arbitrary mu (not just floor(d/k)):
//   chi_s(mu) = (mu+1)((alpha/2)mu - b - g + 1) - n*T(mu - m),  T(x) = x(x+1)/2,
// with b = n*m - k*d.  Requires n non-square.
[[nodiscard]] Rational chi_s_at(const LinearSystem& ls, const Int& mu);

// Additivity of Euler characteristics under restriction to the degree-k curve:
// returns (lhs, rhs) with
//   lhs = chi_p2(d, n, m) = v + 1
//   rhs = chi_s(mu) + (eps+1)(eps+2)/2 - (eps*k + 1 - g),  eps = d - k*mu.
// The two are equal for every mu (tested).  Requires n non-square.
struct ChiPair {
    Rational lhs;
    Rational rhs;
};
[[nodiscard]] ChiPair chi_additivity(const LinearSystem& ls, const Int& mu);

enum class Status {
    EmptySquare,      // n = k^2 and d < k*m
    EmptyRefinement,  // n in {10, 11, 12}, 3 does not divide d, kappa_n < 0
    EmptyMainThm,     // main bound applies and p4*d - q4*m < 0
    EmptyThm1,        // first bound applies and p2*d - q2*m < 0
    Undecided,
};

[[nodiscard]] const char* status_name(Status s);

// status plus a human-readable witness: the exact inequality that fired
// (all of them, if several), or the reason none did.
struct Verdict {
    Status status;
    std::string witness;
};

// Checks the certificates strongest-first: EmptySquare, then EmptyRefinement,
// then EmptyMainThm, then EmptyThm1.  Every Empty* status is a proof of
// emptiness; Undecided carries no information either way.
[[nodiscard]] Verdict classify(const LinearSystem& ls);

// The two sides whose comparison drives the main emptiness bound:
//   sharp = d*alpha / (2*k*n),  flat = 2*gamma.
// sharp < flat exactly when p4*d - q4*m < 0 (tested).  Requires main bound
// applicability.
struct SharpFlat {
    Rational sharp;
    Rational flat;
};
[[nodiscard]] SharpFlat sharp_flat(const LinearSystem& ls);

}  // namespace nagata
