#include "nagata/rational.hpp"

#include <cctype>

namespace nagata {

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (const char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    // Only the numerator may carry a sign: that is the canonical form str() emits.
    if (!valid_integer_token(num, true) || !valid_integer_token(den, false)) {
        throw std::invalid_argument("Rational::parse: bad literal '" + std::string(text) + "'");
    }
    return Rational(Int(std::string(num)), Int(std::string(den)));
}

Int binom(unsigned long a, unsigned long b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    Int acc = 1;
    for (unsigned long i = 1; i <= b; ++i) {
        acc *= a - b + i;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
    }
    return acc;
}

Int isqrt(const Int& v) {
    if (v < 0) throw std::domain_error("isqrt: negative argument");
    Int root;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return root;
}

}  // namespace nagata
