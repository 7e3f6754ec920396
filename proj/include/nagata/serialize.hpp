#pragma once

// JSON and CSV renderings of the record types, plus the inverse JSON
// parses (every emitted object round-trips, tested).  JSON preserves the
// documented key order; rationals serialize as "p/q" strings.

#include <json.hpp>  // vendored nlohmann/json

#include "nagata/bounds.hpp"
#include "nagata/linsys.hpp"
#include "nagata/oracle.hpp"
#include "nagata/sympow.hpp"

namespace nagata {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json bounds_to_json(const NSplit& ns);
[[nodiscard]] NSplit bounds_from_json(const Json& j);

[[nodiscard]] Json invariant_row_to_json(const InvariantRow& row);
[[nodiscard]] InvariantRow invariant_row_from_json(const Json& j);

[[nodiscard]] Json verdict_to_json(const Verdict& v);
[[nodiscard]] Verdict verdict_from_json(const Json& j);

[[nodiscard]] Json certificate_to_json(const RankCertificate& cert);
[[nodiscard]] RankCertificate certificate_from_json(const Json& j);

[[nodiscard]] Json decomp_to_json(const BundleDecomp& dec);
[[nodiscard]] BundleDecomp decomp_from_json(const Json& j);

// CSV column order for invariant rows:
//   d,n,m,chi_p2,mu,epsilon,b,mhat,chi_s,gamma,kappa
// (fields undefined for the given n are left empty).
[[nodiscard]] std::string invariant_csv_header();
[[nodiscard]] std::string invariant_csv_row(const InvariantRow& row);

// CSV column order for bound rows:
//   n,k,alpha,c1,c2,thm1_applies,main_thm_applies,refinement_applies
[[nodiscard]] std::string bounds_csv_header();
[[nodiscard]] std::string bounds_csv_row(const NSplit& ns);

}  // namespace nagata
