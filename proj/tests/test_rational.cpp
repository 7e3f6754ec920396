#include <doctest.h>

#include "nagata/mat2.hpp"
#include "nagata/rational.hpp"
#include "test_support.hpp"

using nagata::binom;
using nagata::Int;
using nagata::isqrt;
using nagata::Mat2;
using nagata::Rational;

TEST_CASE("rationals reduce to canonical form") {
    CHECK(Rational(Int(4), Int(8)).str() == "1/2");
    CHECK(Rational(Int(-4), Int(8)).str() == "-1/2");
    CHECK(Rational(Int(4), Int(-8)).str() == "-1/2");  // sign moves to the numerator
    CHECK(Rational(Int(-4), Int(-8)).str() == "1/2");
    CHECK(Rational(Int(0), Int(-7)).str() == "0");
    CHECK(Rational(Int(6), Int(3)).str() == "2");
    CHECK(Rational(Int(6), Int(3)).is_integer());
    CHECK(Rational(Int(7), Int(3)).den() == 3);
}

TEST_CASE("basic arithmetic") {
    CHECK(Rational(Int(1), Int(2)) + Rational(Int(1), Int(3)) == Rational(Int(5), Int(6)));
    CHECK(Rational(Int(48), Int(17)) * Rational(Int(17), Int(48)) == Rational(1));
    CHECK(Rational(3) - Rational(5) == Rational(-2));
    CHECK(-Rational(Int(2), Int(3)) == Rational(Int(-2), Int(3)));
}

TEST_CASE("comparison is exact") {
    // 2280/721 vs 117/37: cross products 2280*37 = 84360 > 84357 = 117*721.
    CHECK(Rational(Int(2280), Int(721)) > Rational(Int(117), Int(37)));
    CHECK(Rational(Int(1), Int(3)) < Rational(Int(1), Int(2)));
    CHECK(Rational(Int(-1), Int(2)) < Rational(0));
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("serialization round-trips") {
    for (const char* text : {"5/6", "-3/4", "0", "12", "-7", "2280/721"}) {
        CHECK(Rational::parse(text).str() == text);
    }
    CHECK(Rational::parse("4/8").str() == "1/2");  // parse canonicalizes
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("field axioms hold on random inputs") {
    testgen::Rng rng{2024};
    for (int i = 0; i < 500; ++i) {
        const Rational a = testgen::rational(rng);
        const Rational b = testgen::rational(rng);
        const Rational c = testgen::rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        const Rational nz = testgen::nonzero_rational(rng);
        CHECK(nz * (a / nz) == a);
        CHECK(nz / nz == Rational(1));
    }
}

TEST_CASE("random results stay canonical") {
    testgen::Rng rng{77};
    for (int i = 0; i < 500; ++i) {
        const Rational a = testgen::rational(rng);
        const Rational b = testgen::nonzero_rational(rng);
        const Rational q = a / b;
        Int g;
        mpz_gcd(g.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
        CHECK(g == 1);
        CHECK(q.den() > 0);
        CHECK(Rational::parse(q.str()) == q);
    }
}

TEST_CASE("2x2 matrix product, frozen example") {
    const Mat2 m{Rational(3), Rational(10), Rational(1), Rational(3)};
    const Mat2 sq = m * m;  // hand multiplication: [[19, 60], [6, 19]]
    const Mat2 expect{Rational(19), Rational(60), Rational(6), Rational(19)};
    CHECK(sq == expect);
    CHECK(nagata::mat2_pow(m, 2) == sq);
    CHECK(nagata::mat2_pow(m, 1) == m);
    CHECK(nagata::mat2_pow(m, 0) == Mat2::identity());
}

TEST_CASE("matrix power is additive in the exponent") {
    testgen::Rng rng{5150};
    for (int i = 0; i < 50; ++i) {
        const Mat2 x{testgen::rational(rng, 20), testgen::rational(rng, 20),
                     testgen::rational(rng, 20), testgen::rational(rng, 20)};
        const unsigned a = static_cast<unsigned>(rng.range(0, 6));
        const unsigned b = static_cast<unsigned>(rng.range(0, 6));
        CHECK(nagata::mat2_pow(x, a + b) == nagata::mat2_pow(x, a) * nagata::mat2_pow(x, b));
    }
}

TEST_CASE("determinant is multiplicative") {
    testgen::Rng rng{31337};
    for (int i = 0; i < 200; ++i) {
        const Mat2 x{testgen::rational(rng, 50), testgen::rational(rng, 50),
                     testgen::rational(rng, 50), testgen::rational(rng, 50)};
        const Mat2 y{testgen::rational(rng, 50), testgen::rational(rng, 50),
                     testgen::rational(rng, 50), testgen::rational(rng, 50)};
        CHECK((x * y).det() == x.det() * y.det());
    }
}

TEST_CASE("scalar multiple scales the determinant quadratically") {
    const Mat2 m{Rational(19), Rational(60), Rational(6), Rational(19)};
    const Rational s(Int(1), Int(3));
    CHECK(nagata::mat2_scale(s, m).det() == s * s * m.det());
}

TEST_CASE("binomial coefficients") {
    CHECK(binom(26, 2) == 325);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(2, 5) == 0);  // b > a convention
    CHECK(binom(0, 0) == 1);
    CHECK(binom(50, 25) == Int("126410606437752"));

    // Pascal's rule on a patch of the triangle.
    for (unsigned long a = 1; a <= 40; ++a) {
        for (unsigned long b = 1; b <= a; ++b) {
            CHECK(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b));
        }
    }
}

TEST_CASE("integer square root") {
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(10)) == 3);
    CHECK(isqrt(Int(9)) == 3);
    CHECK(isqrt(Int(15)) == 3);
    CHECK(isqrt(Int(16)) == 4);
    for (long v = 0; v <= 3000; ++v) {
        const Int r = isqrt(Int(v));
        CHECK(r * r <= v);
        CHECK((r + 1) * (r + 1) > v);
    }
    CHECK_THROWS_AS((void)isqrt(Int(-1)), std::domain_error);
}
