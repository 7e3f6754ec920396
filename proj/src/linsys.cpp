#include "nagata/linsys.hpp"

#include <utility>
#include <vector>

namespace nagata {

namespace {

void check_system(const LinearSystem& ls) {
    if (ls.d < 0 || ls.n < 1 || ls.m < 0) {
        throw std::domain_error("LinearSystem: need d >= 0, n >= 1, m >= 0");
    }
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// x(x+1)/2 as a polynomial, valid for negative x as well.
Int triangular(const Int& x) { return x * (x + 1) / 2; }

struct KappaLine {
    long n;
    long cd, cm, c0;  // kappa = cd*d - cm*m - c0
};

// Refined certificates for the three smallest n with k = 3.
constexpr KappaLine kKappa[] = {
    {10, 721, 2280, 60},
    {11, 199, 660, 33},
    {12, 97, 336, 24},
};

std::optional<Int> kappa_value(const LinearSystem& ls) {
    for (const KappaLine& line : kKappa) {
        if (ls.n == line.n) return Int(line.cd * ls.d - line.cm * ls.m - line.c0);
    }
    return std::nullopt;
}

}  // namespace

Int virtual_dim(const LinearSystem& ls) {
    check_system(ls);
    return ls.d * (ls.d + 3) / 2 - ls.n * ls.m * (ls.m + 1) / 2;
}

Int expected_sections(const LinearSystem& ls) {
    const Int chi = virtual_dim(ls) + 1;
    return chi > 0 ? chi : Int(0);
}

InvariantRow invariants(const LinearSystem& ls) {
    check_system(ls);
    InvariantRow row;
    row.d = ls.d;
    row.n = ls.n;
    row.m = ls.m;
    row.v = virtual_dim(ls);
    row.chi_p2 = row.v + 1;

    const Int k0 = isqrt(ls.n);
    if (k0 * k0 == ls.n) return row;  // square n: only v and chi_p2 are defined

    const NSplit ns = split_n(ls.n);
    const Int mu = floor_div(ls.d, ns.k);
    row.mu = mu;
    row.epsilon = ls.d - ns.k * mu;
    row.b = ls.n * ls.m - ns.k * ls.d;
    row.mhat = mu - ls.m;
    row.g = (ns.k - 1) * (ns.k - 2) / 2;
    row.chi_s = chi_s_at(ls, mu);
    const BoundMatrix m2 = bound_matrix(ns, 2);
    row.gamma = m2.p * Rational(ls.m) - m2.r * Rational(ls.d);
    row.kappa = kappa_value(ls);
    return row;
}

Rational chi_s_at(const LinearSystem& ls, const Int& mu) {
    check_system(ls);
    const NSplit ns = split_n(ls.n);
    const Int b = ls.n * ls.m - ns.k * ls.d;
    const Int g = (ns.k - 1) * (ns.k - 2) / 2;
    const Rational slope = Rational(ns.alpha) * Rational(mu) / Rational(2);
    return Rational(Int(mu + 1)) * (slope - Rational(b) - Rational(g) + Rational(1)) -
           Rational(ls.n) * Rational(triangular(mu - ls.m));
}

ChiPair chi_additivity(const LinearSystem& ls, const Int& mu) {
    check_system(ls);
    const NSplit ns = split_n(ls.n);
    const Int eps = ls.d - ns.k * mu;
    const Int g = (ns.k - 1) * (ns.k - 2) / 2;
    const Rational lhs{Int(virtual_dim(ls) + 1)};
    const Rational rhs = chi_s_at(ls, mu) + Rational(Int((eps + 1) * (eps + 2) / 2)) -
                         Rational(Int(eps * ns.k + 1 - g));
    return {lhs, rhs};
}

const char* status_name(Status s) {
    switch (s) {
        case Status::EmptySquare: return "EmptySquare";
        case Status::EmptyRefinement: return "EmptyRefinement";
        case Status::EmptyMainThm: return "EmptyMainThm";
        case Status::EmptyThm1: return "EmptyThm1";
        case Status::Undecided: return "Undecided";
    }
    return "?";
}

Verdict classify(const LinearSystem& ls) {
    check_system(ls);
    std::vector<std::pair<Status, std::string>> fired;

    const Int k0 = isqrt(ls.n);
    if (k0 * k0 == ls.n) {
        if (ls.d < k0 * ls.m) {
            fired.emplace_back(Status::EmptySquare,
                               "d = " + ls.d.get_str() + " < k*m = " + Int(k0 * ls.m).get_str() +
                                   " with n = " + k0.get_str() + "^2");
        }
    } else {
        const NSplit ns = split_n(ls.n);
        if (ns.refinement_applies && ls.d % 3 != 0) {
            const Int kappa = *kappa_value(ls);
            if (kappa < 0) {
                fired.emplace_back(Status::EmptyRefinement,
                                   "kappa_" + ls.n.get_str() + " = " + kappa.get_str() +
                                       " < 0 and d = " + ls.d.get_str() +
                                       " is not a multiple of 3");
            }
        }
        if (ns.main_thm_applies) {
            const BoundMatrix m4 = bound_matrix(ns, 4);
            const Rational lhs = m4.p * Rational(ls.d) - m4.q * Rational(ls.m);
            if (lhs < Rational(0)) {
                fired.emplace_back(Status::EmptyMainThm,
                                   "p4*d - q4*m = " + m4.p.str() + "*" + ls.d.get_str() + " - " +
                                       m4.q.str() + "*" + ls.m.get_str() + " = " + lhs.str() +
                                       " < 0");
            }
        }
        if (ns.thm1_applies) {
            const BoundMatrix m2 = bound_matrix(ns, 2);
            const Rational lhs = m2.p * Rational(ls.d) - m2.q * Rational(ls.m);
            if (lhs < Rational(0)) {
                fired.emplace_back(Status::EmptyThm1,
                                   "p2*d - q2*m = " + m2.p.str() + "*" + ls.d.get_str() + " - " +
                                       m2.q.str() + "*" + ls.m.get_str() + " = " + lhs.str() +
                                       " < 0");
            }
        }
    }

    if (fired.empty()) {
        return {Status::Undecided,
                "no emptiness certificate applies; v = " + virtual_dim(ls).get_str()};
    }
    std::string witness = fired.front().second;
    for (std::size_t i = 1; i < fired.size(); ++i) witness += "; " + fired[i].second;
    return {fired.front().first, witness};
}

SharpFlat sharp_flat(const LinearSystem& ls) {
    check_system(ls);
    const NSplit ns = split_n(ls.n);
    if (!ns.main_thm_applies) {
        throw std::domain_error("sharp_flat: main bound does not apply to n = " + ls.n.get_str());
    }
    const BoundMatrix m2 = bound_matrix(ns, 2);
    const Rational gamma = m2.p * Rational(ls.m) - m2.r * Rational(ls.d);
    const Rational sharp = Rational(Int(ls.d * ns.alpha)) / Rational(Int(2 * ns.k * ls.n));
    return {sharp, gamma * Rational(2)};
}

}  // namespace nagata
