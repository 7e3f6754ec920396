#pragma once

// Independent finite-field check of the emptiness certificates: build the
// interpolation matrix for L(d, n, m) at random points over GF(p) and compute
// its exact rank.  By semicontinuity, random points can only make h^0 larger
// than its value at general position, so
//   h0_observed = 0        certifies the system empty, and
//   h0_observed = expected certifies it non-special,
// each with certainty; only SpecialSuspected / Inconclusive are heuristic.

#include <cstdint>
#include <vector>

#include "nagata/linsys.hpp"
#include "nagata/prime_field.hpp"

namespace nagata {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(Int required, std::size_t budget);
    Int required_columns;  // (d+1)(d+2)/2 for the refused system
    std::size_t budget;
};

struct PlanePoint {
    std::uint64_t x, y;  // the affine point (x : y : 1)

    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// Interpolation conditions: one column per degree-d monomial x^a y^b z^c
// (a + b + c = d, ordered lexicographically by (a, b)), one row per pair
// (point, derivative order (i, j) with i + j < m).  The row entries are the
// divided-power derivatives
//   D^(i,j) x^a y^b |_(x0, y0)  =  C(a, i) C(b, j) x0^(a-i) y0^(b-j)
// so vanishing of all rows at a point forces multiplicity >= m there, in any
// characteristic.  Dimensions: n*m(m+1)/2 rows by (d+1)(d+2)/2 columns.
// Throws std::invalid_argument on duplicate points.
[[nodiscard]] FpMatrix build_conditions(const LinearSystem& ls,
                                        const std::vector<PlanePoint>& points, const Fp& fp);

struct OracleConfig {
    std::uint64_t prime = kMersenne61;
    std::uint64_t seed = 0;
    int trials = 3;
    std::size_t max_columns = 20000;  // desk-scale guard on (d+1)(d+2)/2
    bool cross_check = true;          // retry on a second prime before giving up
};

enum class OracleVerdict {
    CertifiedEmpty,       // some trial saw h^0 = 0: the generic system is empty
    CertifiedNonSpecial,  // some trial saw h^0 = expected: the generic h^0 is pinned
    SpecialSuspected,     // every trial on >= 2 primes saw h^0 > expected
    Inconclusive,
};

[[nodiscard]] const char* oracle_verdict_name(OracleVerdict v);

struct RankCertificate {
    LinearSystem system;
    std::uint64_t prime = 0;  // the primary prime used
    std::uint64_t seed = 0;
    int trials = 0;  // trials requested per prime
    Int expected;     // max(0, v + 1)
    Int h0_observed;  // min over all trials; every trial satisfies h^0 >= expected
    OracleVerdict verdict = OracleVerdict::Inconclusive;
    std::vector<Int> per_trial_h0;           // one entry per trial actually run
    std::vector<std::uint64_t> primes_used;  // primary first

    [[nodiscard]] bool certifies_empty() const { return h0_observed == 0; }
    [[nodiscard]] bool certifies_nonspecial() const { return h0_observed == expected; }
};

// Runs cfg.trials independent point sets at cfg.prime; if every observed h^0
// exceeds expected and cfg.cross_check is set, runs cfg.trials more at a
// second prime.  Point sampling is deterministic in (seed, prime, trial):
// the same configuration rebuilds the identical matrices.
// Throws BudgetExceeded when the column count overruns cfg.max_columns.
[[nodiscard]] RankCertificate certify(const LinearSystem& ls, const OracleConfig& cfg = {});

// The deterministic point set used by trial t of certify.
[[nodiscard]] std::vector<PlanePoint> sample_points(const LinearSystem& ls, const Fp& fp,
                                                    std::uint64_t seed, int trial);

}  // namespace nagata
