#pragma once

// Arithmetic and dense row reduction over GF(p) for 64-bit primes p.
// Elements are always stored fully reduced in [0, p).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nagata {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kAltPrime31 = 2147483647;  // 2^31 - 1
inline constexpr std::uint64_t kAltPrime30 = 1000000007;

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
[[nodiscard]] bool is_prime_u64(std::uint64_t v);

class Fp {
public:
    // Throws std::invalid_argument unless p is prime and 2 <= p < 2^62.
    explicit Fp(std::uint64_t p);

    [[nodiscard]] std::uint64_t prime() const { return p_; }

    [[nodiscard]] std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
        const std::uint64_t s = x + y;  // no overflow: p < 2^62
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] std::uint64_t sub(std::uint64_t x, std::uint64_t y) const {
        return x >= y ? x - y : x + p_ - y;
    }
    [[nodiscard]] std::uint64_t neg(std::uint64_t x) const { return x == 0 ? 0 : p_ - x; }
    [[nodiscard]] std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(x) * y % p_);
    }
    [[nodiscard]] std::uint64_t pow(std::uint64_t x, std::uint64_t e) const;
    // Throws std::domain_error on x = 0.
    [[nodiscard]] std::uint64_t inv(std::uint64_t x) const;
    [[nodiscard]] std::uint64_t reduce_int(long long v) const;

private:
    std::uint64_t p_;
};

struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> a;  // row-major, rows*cols entries in [0, p)

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    [[nodiscard]] std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    [[nodiscard]] std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

// Rank over GF(p) by fraction-free-style Gaussian elimination (destroys m).
[[nodiscard]] std::size_t rank_modp(FpMatrix& m, const Fp& fp);

// Convenience overload that works on a copy.
[[nodiscard]] std::size_t rank_modp(const FpMatrix& m, const Fp& fp);

}  // namespace nagata
