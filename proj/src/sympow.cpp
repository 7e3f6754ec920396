#include "nagata/sympow.hpp"

#include <stdexcept>
#include <utility>

namespace nagata {

namespace {

bool is_torsion(BundleKind k) {
    return k == BundleKind::L1 || k == BundleKind::L2 || k == BundleKind::L3;
}

// Klein four-group: Li * Li = O, L1 * L2 = L3 and cyclic.
BundleKind torsion_product(BundleKind x, BundleKind y) {
    if (x == y) return BundleKind::Triv;
    const int ix = static_cast<int>(x) - static_cast<int>(BundleKind::L1);
    const int iy = static_cast<int>(y) - static_cast<int>(BundleKind::L1);
    return static_cast<BundleKind>(static_cast<int>(BundleKind::L1) + (3 - ix - iy));
}

const char* kind_name(BundleKind k) {
    switch (k) {
        case BundleKind::Triv: return "O";
        case BundleKind::L1: return "L1";
        case BundleKind::L2: return "L2";
        case BundleKind::L3: return "L3";
        case BundleKind::E: return "E";
    }
    return "?";
}

}  // namespace

long bundle_rank(const BundleClass& c) { return c.kind == BundleKind::E ? 2 : 1; }

long bundle_degree(const BundleClass& c) {
    return c.kind == BundleKind::E ? 2 * c.a_power + 1 : c.a_power;
}

BundleDecomp::BundleDecomp(const BundleClass& c, long mult) { add(c, mult); }

long BundleDecomp::rank() const {
    long r = 0;
    for (const auto& [cls, mult] : terms_) r += mult * bundle_rank(cls);
    return r;
}

long BundleDecomp::degree() const {
    long dg = 0;
    for (const auto& [cls, mult] : terms_) dg += mult * bundle_degree(cls);
    return dg;
}

BundleDecomp& BundleDecomp::add(const BundleClass& c, long mult) {
    if (mult == 0) return *this;
    const auto it = terms_.find(c);
    const long next = (it == terms_.end() ? 0 : it->second) + mult;
    if (next < 0) throw std::logic_error("BundleDecomp: negative multiplicity");
    if (next == 0) {
        terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(c, next);
    } else {
        it->second = next;
    }
    return *this;
}

BundleDecomp operator+(const BundleDecomp& x, const BundleDecomp& y) {
    BundleDecomp out = x;
    for (const auto& [cls, mult] : y.terms_) out.add(cls, mult);
    return out;
}

BundleDecomp operator-(const BundleDecomp& x, const BundleDecomp& y) {
    BundleDecomp out = x;
    for (const auto& [cls, mult] : y.terms_) out.add(cls, -mult);
    return out;
}

BundleDecomp tensor(const BundleClass& x, const BundleClass& y) {
    const long a = x.a_power + y.a_power;
    if (x.kind == BundleKind::E && y.kind == BundleKind::E) {
        BundleDecomp out;
        out.add({BundleKind::Triv, a + 1}, 1);
        out.add({BundleKind::L1, a + 1}, 1);
        out.add({BundleKind::L2, a + 1}, 1);
        out.add({BundleKind::L3, a + 1}, 1);
        return out;
    }
    if (x.kind == BundleKind::E || y.kind == BundleKind::E) {
        return BundleDecomp({BundleKind::E, a});  // E absorbs O and every Li
    }
    if (x.kind == BundleKind::Triv) return BundleDecomp({y.kind, a});
    if (y.kind == BundleKind::Triv) return BundleDecomp({x.kind, a});
    return BundleDecomp({torsion_product(x.kind, y.kind), a});
}

BundleDecomp tensor(const BundleDecomp& x, const BundleDecomp& y) {
    BundleDecomp out;
    for (const auto& [cx, mx] : x.terms()) {
        for (const auto& [cy, my] : y.terms()) {
            const BundleDecomp piece = tensor(cx, cy);
            for (const auto& [cls, mult] : piece.terms()) {
                out.add(cls, mult * mx * my);
            }
        }
    }
    return out;
}

BundleDecomp sym_power(unsigned m) {
    BundleDecomp prev{BundleClass{BundleKind::Triv, 0}};  // Sym^0
    if (m == 0) return prev;
    const BundleDecomp e{BundleClass{BundleKind::E, 0}};
    BundleDecomp cur = e;  // Sym^1
    const BundleDecomp twist{BundleClass{BundleKind::Triv, 1}};
    for (unsigned i = 1; i < m; ++i) {
        BundleDecomp next = tensor(cur, e) - tensor(twist, prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

long h0(const BundleDecomp& dec) {
    long total = 0;
    for (const auto& [cls, mult] : dec.terms()) {
        const long deg = bundle_degree(cls);
        long sections = 0;
        if (deg >= 1) {
            sections = deg;
        } else if (deg == 0 && cls.kind == BundleKind::Triv) {
            sections = 1;  // O is effective; nontrivial torsion is not
        }
        total += mult * sections;
    }
    return total;
}

long h0_anticanonical_pencil() {
    const BundleDecomp untwist{BundleClass{BundleKind::Triv, -2}};
    return h0(tensor(sym_power(4), untwist));
}

std::string render(const BundleDecomp& dec) {
    if (dec.terms().empty()) return "0";

    // One group per A-power, largest power first; within a group the terms
    // inherit the O, L1, L2, L3, E order of the underlying map.
    std::map<long, std::string> groups;
    for (const auto& [cls, mult] : dec.terms()) {
        std::string& body = groups[cls.a_power];
        if (!body.empty()) body += " + ";
        body += kind_name(cls.kind);
        if (mult != 1) body += "^" + std::to_string(mult);
    }

    std::string out;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        if (!out.empty()) out += " + ";
        const long a = it->first;
        if (a == 0) {
            out += it->second;
        } else {
            out += "A";
            if (a != 1) out += "^" + std::to_string(a);
            out += "*(" + it->second + ")";
        }
    }
    return out;
}

}  // namespace nagata
