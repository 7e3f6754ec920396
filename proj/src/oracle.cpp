#include "nagata/oracle.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace nagata {

namespace {

using u64 = std::uint64_t;

struct SplitMix64 {
    u64 state;
    u64 next() {
        state += 0x9E3779B97F4A7C15ULL;
        u64 z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Unbiased draw from [0, p) by rejecting the short tail of the 64-bit range.
u64 uniform_below(SplitMix64& gen, u64 p) {
    const u64 tail = (0 - p) % p;  // 2^64 mod p
    u64 r = gen.next();
    while (r < tail) r = gen.next();
    return r % p;
}

unsigned long to_ulong(const Int& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) {
        throw std::invalid_argument(std::string("oracle: ") + what + " out of range");
    }
    return v.get_ui();
}

// Pascal's triangle mod p: all C(a, i) for a, i <= d.
std::vector<std::vector<u64>> binom_table_modp(unsigned long d, const Fp& fp) {
    std::vector<std::vector<u64>> table(d + 1);
    for (unsigned long a = 0; a <= d; ++a) {
        table[a].assign(a + 2, 0);  // one sentinel zero past the diagonal
        table[a][0] = 1 % fp.prime();
        for (unsigned long i = 1; i <= a; ++i) {
            table[a][i] = fp.add(table[a - 1][i - 1], i < a ? table[a - 1][i] : 0);
        }
    }
    return table;
}

}  // namespace

BudgetExceeded::BudgetExceeded(Int required, std::size_t budget_)
    : std::runtime_error("oracle budget exceeded: matrix needs " + required.get_str() +
                         " columns, budget is " + std::to_string(budget_)),
      required_columns(std::move(required)),
      budget(budget_) {}

const char* oracle_verdict_name(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::CertifiedEmpty: return "CertifiedEmpty";
        case OracleVerdict::CertifiedNonSpecial: return "CertifiedNonSpecial";
        case OracleVerdict::SpecialSuspected: return "SpecialSuspected";
        case OracleVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::vector<PlanePoint> sample_points(const LinearSystem& ls, const Fp& fp, u64 seed, int trial) {
    const unsigned long n = to_ulong(ls.n, "n");
    if (Int(fp.prime()) * Int(fp.prime()) < Int(n)) {
        throw std::invalid_argument("oracle: prime too small to host n distinct points");
    }
    SplitMix64 gen{seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<u64>(trial) + 1))};
    std::set<std::pair<u64, u64>> seen;
    std::vector<PlanePoint> points;
    while (points.size() < n) {
        const u64 x = uniform_below(gen, fp.prime());
        const u64 y = uniform_below(gen, fp.prime());
        if (seen.emplace(x, y).second) points.push_back({x, y});
    }
    return points;
}

FpMatrix build_conditions(const LinearSystem& ls, const std::vector<PlanePoint>& points,
                          const Fp& fp) {
    const unsigned long d = to_ulong(ls.d, "d");
    const unsigned long m = to_ulong(ls.m, "m");
    if (points.size() != ls.n) {
        throw std::invalid_argument("build_conditions: wrong number of points");
    }
    {
        std::set<std::pair<u64, u64>> seen;
        for (const PlanePoint& pt : points) {
            if (!seen.emplace(pt.x, pt.y).second) {
                throw std::invalid_argument("build_conditions: duplicate point");
            }
        }
    }

    const std::size_t cols = (d + 1) * (d + 2) / 2;
    const std::size_t rows = points.size() * m * (m + 1) / 2;
    FpMatrix out(rows, cols);
    const auto ctab = binom_table_modp(d, fp);

    std::size_t row = 0;
    for (const PlanePoint& pt : points) {
        // Powers x^e, y^e for e <= d.
        std::vector<u64> px(d + 1), py(d + 1);
        px[0] = py[0] = 1 % fp.prime();
        for (unsigned long e = 1; e <= d; ++e) {
            px[e] = fp.mul(px[e - 1], pt.x);
            py[e] = fp.mul(py[e - 1], pt.y);
        }
        for (unsigned long i = 0; i < m; ++i) {
            for (unsigned long j = 0; i + j < m; ++j, ++row) {
                u64* dst = &out.a[row * cols];
                std::size_t col = 0;
                // Columns enumerate monomials x^a y^b z^(d-a-b), (a, b) ascending.
                for (unsigned long a = 0; a <= d; ++a) {
                    for (unsigned long b = 0; b + a <= d; ++b, ++col) {
                        if (i > a || j > b) continue;  // derivative kills the monomial
                        const u64 coeff = fp.mul(ctab[a][i], ctab[b][j]);
                        dst[col] = fp.mul(coeff, fp.mul(px[a - i], py[b - j]));
                    }
                }
            }
        }
    }
    return out;
}

RankCertificate certify(const LinearSystem& ls, const OracleConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("certify: need at least one trial");
    const Int required = (ls.d + 1) * (ls.d + 2) / 2;
    if (required > static_cast<unsigned long>(cfg.max_columns)) {
        throw BudgetExceeded(required, cfg.max_columns);
    }

    RankCertificate cert;
    cert.system = ls;
    cert.prime = cfg.prime;
    cert.seed = cfg.seed;
    cert.trials = cfg.trials;
    cert.expected = expected_sections(ls);
    cert.primes_used = {cfg.prime};

    const std::size_t cols = required.get_ui();
    const auto run_trials = [&](const Fp& fp, int first_trial) {
        for (int t = 0; t < cfg.trials; ++t) {
            const auto points = sample_points(ls, fp, cfg.seed, first_trial + t);
            FpMatrix mat = build_conditions(ls, points, fp);
            const Int h0 = Int(cols) - Int(rank_modp(mat, fp));
            if (h0 < cert.expected) {
                throw std::logic_error("certify: observed h^0 below the lower bound");
            }
            cert.per_trial_h0.push_back(h0);
        }
    };

    run_trials(Fp(cfg.prime), 0);
    cert.h0_observed = *std::min_element(cert.per_trial_h0.begin(), cert.per_trial_h0.end());

    if (cert.h0_observed > cert.expected && cfg.cross_check) {
        u64 alternate = kMersenne61;
        for (const u64 candidate : {kMersenne61, kAltPrime31, kAltPrime30}) {
            if (candidate != cfg.prime) {
                alternate = candidate;
                break;
            }
        }
        run_trials(Fp(alternate), cfg.trials);
        cert.primes_used.push_back(alternate);
        cert.h0_observed = *std::min_element(cert.per_trial_h0.begin(), cert.per_trial_h0.end());
    }

    if (cert.h0_observed == 0) {
        cert.verdict = OracleVerdict::CertifiedEmpty;
    } else if (cert.h0_observed == cert.expected) {
        cert.verdict = OracleVerdict::CertifiedNonSpecial;
    } else if (cert.primes_used.size() >= 2) {
        cert.verdict = OracleVerdict::SpecialSuspected;
    } else {
        cert.verdict = OracleVerdict::Inconclusive;
    }
    return cert;
}

}  // namespace nagata
