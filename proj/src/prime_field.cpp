#include "nagata/prime_field.hpp"

#include <algorithm>

namespace nagata {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_any(u64 x, u64 y, u64 mod) { return static_cast<u64>(u128{x} * y % mod); }

u64 powmod_any(u64 base, u64 e, u64 mod) {
    u64 acc = 1 % mod;
    base %= mod;
    while (e > 0) {
        if (e & 1U) acc = mulmod_any(acc, base, mod);
        base = mulmod_any(base, base, mod);
        e >>= 1U;
    }
    return acc;
}

// Multiplication strategies for the elimination kernel, chosen once per call.
struct ReduceGeneric {
    u64 p;
    [[nodiscard]] u64 mul(u64 x, u64 y) const { return mulmod_any(x, y, p); }
    [[nodiscard]] u64 sub(u64 x, u64 y) const { return x >= y ? x - y : x + p - y; }
};

struct ReduceSmall {  // p < 2^32: the product fits in 64 bits
    u64 p;
    [[nodiscard]] u64 mul(u64 x, u64 y) const { return x * y % p; }
    [[nodiscard]] u64 sub(u64 x, u64 y) const { return x >= y ? x - y : x + p - y; }
};

struct ReduceMersenne61 {  // p = 2^61 - 1: reduce by folding the high bits
    static constexpr u64 p = kMersenne61;
    [[nodiscard]] u64 mul(u64 x, u64 y) const {
        const u128 t = u128{x} * y;
        u64 s = (static_cast<u64>(t) & p) + static_cast<u64>(t >> 61);
        s = (s & p) + (s >> 61);
        return s >= p ? s - p : s;
    }
    [[nodiscard]] u64 sub(u64 x, u64 y) const { return x >= y ? x - y : x + p - y; }
};

template <class Reduce>
std::size_t rank_kernel(FpMatrix& m, const Fp& fp, const Reduce& red) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r) {
            std::swap_ranges(m.a.begin() + static_cast<std::ptrdiff_t>(piv * m.cols),
                             m.a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * m.cols),
                             m.a.begin() + static_cast<std::ptrdiff_t>(r * m.cols));
        }
        const u64 pivot_inv = fp.inv(m.at(r, c));
        const u64* src = &m.a[r * m.cols];
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            u64* dst = &m.a[i * m.cols];
            if (dst[c] == 0) continue;
            const u64 f = red.mul(dst[c], pivot_inv);
            dst[c] = 0;
            for (std::size_t j = c + 1; j < m.cols; ++j) {
                dst[j] = red.sub(dst[j], red.mul(f, src[j]));
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 v) {
    if (v < 2) return false;
    for (const u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        if (v % small == 0) return v == small;
    }
    u64 d = v - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // This witness set decides primality exactly for every 64-bit integer.
    for (const u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                        31ULL, 37ULL}) {
        u64 x = powmod_any(a % v, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int round = 1; round < s; ++round) {
            x = mulmod_any(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Fp::Fp(u64 p) : p_(p) {
    if (p >= (u64{1} << 62)) throw std::invalid_argument("Fp: prime must be < 2^62");
    if (!is_prime_u64(p)) throw std::invalid_argument("Fp: modulus is not prime");
}

u64 Fp::pow(u64 x, u64 e) const { return powmod_any(x % p_, e, p_); }

u64 Fp::inv(u64 x) const {
    x %= p_;
    if (x == 0) throw std::domain_error("Fp::inv: zero has no inverse");
    // Extended Euclid on (x, p); p prime makes every nonzero x a unit.
    long long t0 = 0, t1 = 1;
    u64 r0 = p_, r1 = x;
    while (r1 != 0) {
        const u64 q = r0 / r1;
        const u64 r2 = r0 - q * r1;
        const long long t2 = t0 - static_cast<long long>(q) * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    return t0 >= 0 ? static_cast<u64>(t0) : static_cast<u64>(t0 + static_cast<long long>(p_));
}

u64 Fp::reduce_int(long long v) const {
    const long long p = static_cast<long long>(p_);
    const long long r = v % p;
    return static_cast<u64>(r >= 0 ? r : r + p);
}

std::size_t rank_modp(FpMatrix& m, const Fp& fp) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (fp.prime() == kMersenne61) return rank_kernel(m, fp, ReduceMersenne61{});
    if (fp.prime() < (u64{1} << 32)) return rank_kernel(m, fp, ReduceSmall{fp.prime()});
    return rank_kernel(m, fp, ReduceGeneric{fp.prime()});
}

std::size_t rank_modp(const FpMatrix& m, const Fp& fp) {
    FpMatrix scratch = m;
    return rank_modp(scratch, fp);
}

}  // namespace nagata
