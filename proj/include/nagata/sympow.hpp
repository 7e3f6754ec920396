#pragma once

// Symmetric powers of a rank-2 bundle E on a genus-1 curve, recorded in a
// Grothendieck-style group generated by twists of five classes:
//   O (trivial), L1, L2, L3 (2-torsion, a Klein four-group), and E itself,
// each tensored by integer powers of a degree-1 class A.  The multiplication
// table is
//   Li (x) Li = O,   Li (x) Lj = Lk  ({i,j,k} = {1,2,3}),   E (x) Li = E,
//   E (x) E  = A (x) (O + L1 + L2 + L3),
// and A-powers add everywhere.

#include <map>
#include <string>

#include "nagata/rational.hpp"

namespace nagata {

enum class BundleKind { Triv, L1, L2, L3, E };

struct BundleClass {
    BundleKind kind;
    long a_power;  // exponent of the A-twist

    friend auto operator<=>(const BundleClass&, const BundleClass&) = default;
};

// rank 1 for O/L1/L2/L3, 2 for E.
[[nodiscard]] long bundle_rank(const BundleClass& c);
// a_power for rank-1 classes, 2*a_power + 1 for E (deg A = 1, deg E = 1).
[[nodiscard]] long bundle_degree(const BundleClass& c);

// A formal nonnegative-integer combination of classes.
class BundleDecomp {
public:
    BundleDecomp() = default;
    explicit BundleDecomp(const BundleClass& c, long mult = 1);

    [[nodiscard]] const std::map<BundleClass, long>& terms() const { return terms_; }
    [[nodiscard]] long rank() const;
    [[nodiscard]] long degree() const;

    BundleDecomp& add(const BundleClass& c, long mult);
    friend BundleDecomp operator+(const BundleDecomp& x, const BundleDecomp& y);
    // Throws std::logic_error if some multiplicity would go negative.
    friend BundleDecomp operator-(const BundleDecomp& x, const BundleDecomp& y);

    friend bool operator==(const BundleDecomp&, const BundleDecomp&) = default;

private:
    std::map<BundleClass, long> terms_;  // multiplicities, always > 0
};

[[nodiscard]] BundleDecomp tensor(const BundleClass& x, const BundleClass& y);
[[nodiscard]] BundleDecomp tensor(const BundleDecomp& x, const BundleDecomp& y);

// Sym^m E via the rank-2 recurrence
//   Sym^(m+1) = Sym^m (x) E - A (x) Sym^(m-1),   Sym^0 = O,  Sym^1 = E.
// Closed under the five generators; rank m+1 and degree m(m+1)/2 (tested).
[[nodiscard]] BundleDecomp sym_power(unsigned m);

// Sections on the genus-1 curve: a rank-1 class of degree e has h^0 = e for
// e >= 1, h^0 = 1 for the trivial class O (degree 0, but effective), and 0
// otherwise (nontrivial degree-0 torsion and negative degrees); an E-class
// of degree e >= 1 has h^0 = e.
[[nodiscard]] long h0(const BundleDecomp& dec);

// h^0(Sym^4 E (x) A^-2): the anticanonical computation that yields a pencil.
[[nodiscard]] long h0_anticanonical_pencil();

// "A^2*(O^2 + L1 + L2 + L3)": terms grouped by A-power, largest power first.
[[nodiscard]] std::string render(const BundleDecomp& dec);

}  // namespace nagata
