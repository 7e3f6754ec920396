#pragma once

// Exact rational arithmetic on arbitrary-precision integers.
// Invariants: gcd(|num|, den) = 1 and den > 0 after every operation;
// the sign lives on the numerator.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nagata {

using Int = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}                       // NOLINT: implicit by design
    Rational(const Int& v) : q_(v) {}                 // NOLINT: implicit by design
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    // Accepts "p/q" or "p" with optional leading '-'; rejects everything else.
    static Rational parse(std::string_view text);

    [[nodiscard]] Int num() const { return q_.get_num(); }
    [[nodiscard]] Int den() const { return q_.get_den(); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    // "p/q", or just "p" when the denominator is 1.
    [[nodiscard]] std::string str() const { return q_.get_str(); }

    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.q_ + y.q_); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.q_ - y.q_); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.q_ * y.q_); }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.q_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(x.q_ / y.q_);
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& y) { q_ += y.q_; return *this; }
    Rational& operator-=(const Rational& y) { q_ -= y.q_; return *this; }
    Rational& operator*=(const Rational& y) { q_ *= y.q_; return *this; }
    Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const int c = cmp(x.q_, y.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] int sign() const { return sgn(q_); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;  // gmp keeps mpq_class results canonical
};

// Binomial coefficient with the combinatorial convention: binom(a, b) = 0 for b > a.
// Multiplicative form; every intermediate division is exact.
[[nodiscard]] Int binom(unsigned long a, unsigned long b);

// Largest k with k*k <= v.  Requires v >= 0.
[[nodiscard]] Int isqrt(const Int& v);

}  // namespace nagata
