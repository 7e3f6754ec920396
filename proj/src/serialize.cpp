#include "nagata/serialize.hpp"

#include <stdexcept>

namespace nagata {

namespace {

// Integers that fit a signed 64-bit value serialize as JSON numbers,
// anything larger as a decimal string; both parse back exactly.
Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

Json rat_to_json(const Rational& r) { return Json(r.str()); }

Rational rat_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

Status status_from_name(const std::string& name) {
    for (const Status s : {Status::EmptySquare, Status::EmptyRefinement, Status::EmptyMainThm,
                           Status::EmptyThm1, Status::Undecided}) {
        if (name == status_name(s)) return s;
    }
    throw std::invalid_argument("unknown status '" + name + "'");
}

OracleVerdict oracle_verdict_from_name(const std::string& name) {
    for (const OracleVerdict v :
         {OracleVerdict::CertifiedEmpty, OracleVerdict::CertifiedNonSpecial,
          OracleVerdict::SpecialSuspected, OracleVerdict::Inconclusive}) {
        if (name == oracle_verdict_name(v)) return v;
    }
    throw std::invalid_argument("unknown oracle verdict '" + name + "'");
}

const char* kind_tag(BundleKind k) {
    switch (k) {
        case BundleKind::Triv: return "Triv";
        case BundleKind::L1: return "L1";
        case BundleKind::L2: return "L2";
        case BundleKind::L3: return "L3";
        case BundleKind::E: return "E";
    }
    return "?";
}

BundleKind kind_from_tag(const std::string& tag) {
    for (const BundleKind k : {BundleKind::Triv, BundleKind::L1, BundleKind::L2, BundleKind::L3,
                               BundleKind::E}) {
        if (tag == kind_tag(k)) return k;
    }
    throw std::invalid_argument("unknown bundle kind '" + tag + "'");
}

}  // namespace

Json bounds_to_json(const NSplit& ns) {
    Json j;
    j["n"] = int_to_json(ns.n);
    j["k"] = int_to_json(ns.k);
    j["alpha"] = int_to_json(ns.alpha);
    j["c1"] = rat_to_json(c1(ns));
    j["c2"] = rat_to_json(c2(ns));
    j["thm1_applies"] = ns.thm1_applies;
    j["main_thm_applies"] = ns.main_thm_applies;
    j["refinement_applies"] = ns.refinement_applies;
    return j;
}

NSplit bounds_from_json(const Json& j) {
    // k, alpha, and the flags are all recomputed from n; mismatches are input errors.
    const NSplit ns = split_n(int_from_json(j.at("n")));
    if (int_from_json(j.at("k")) != ns.k || int_from_json(j.at("alpha")) != ns.alpha ||
        j.at("thm1_applies").get<bool>() != ns.thm1_applies ||
        j.at("main_thm_applies").get<bool>() != ns.main_thm_applies ||
        j.at("refinement_applies").get<bool>() != ns.refinement_applies ||
        rat_from_json(j.at("c1")) != c1(ns) || rat_from_json(j.at("c2")) != c2(ns)) {
        throw std::invalid_argument("bounds record is inconsistent with its n");
    }
    return ns;
}

Json invariant_row_to_json(const InvariantRow& row) {
    Json j;
    j["d"] = int_to_json(row.d);
    j["n"] = int_to_json(row.n);
    j["m"] = int_to_json(row.m);
    j["v"] = int_to_json(row.v);
    j["chi_p2"] = int_to_json(row.chi_p2);
    if (row.mu) j["mu"] = int_to_json(*row.mu);
    if (row.epsilon) j["epsilon"] = int_to_json(*row.epsilon);
    if (row.b) j["b"] = int_to_json(*row.b);
    if (row.mhat) j["mhat"] = int_to_json(*row.mhat);
    if (row.g) j["g"] = int_to_json(*row.g);
    if (row.chi_s) j["chi_s"] = rat_to_json(*row.chi_s);
    if (row.gamma) j["gamma"] = rat_to_json(*row.gamma);
    if (row.kappa) j["kappa"] = int_to_json(*row.kappa);
    return j;
}

InvariantRow invariant_row_from_json(const Json& j) {
    InvariantRow row;
    row.d = int_from_json(j.at("d"));
    row.n = int_from_json(j.at("n"));
    row.m = int_from_json(j.at("m"));
    row.v = int_from_json(j.at("v"));
    row.chi_p2 = int_from_json(j.at("chi_p2"));
    if (j.contains("mu")) row.mu = int_from_json(j.at("mu"));
    if (j.contains("epsilon")) row.epsilon = int_from_json(j.at("epsilon"));
    if (j.contains("b")) row.b = int_from_json(j.at("b"));
    if (j.contains("mhat")) row.mhat = int_from_json(j.at("mhat"));
    if (j.contains("g")) row.g = int_from_json(j.at("g"));
    if (j.contains("chi_s")) row.chi_s = rat_from_json(j.at("chi_s"));
    if (j.contains("gamma")) row.gamma = rat_from_json(j.at("gamma"));
    if (j.contains("kappa")) row.kappa = int_from_json(j.at("kappa"));
    return row;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["status"] = status_name(v.status);
    j["witness"] = v.witness;
    return j;
}

Verdict verdict_from_json(const Json& j) {
    return Verdict{status_from_name(j.at("status").get<std::string>()),
                   j.at("witness").get<std::string>()};
}

Json certificate_to_json(const RankCertificate& cert) {
    Json j;
    j["d"] = int_to_json(cert.system.d);
    j["n"] = int_to_json(cert.system.n);
    j["m"] = int_to_json(cert.system.m);
    j["prime"] = cert.prime;
    j["seed"] = cert.seed;
    j["trials"] = cert.trials;
    j["expected"] = int_to_json(cert.expected);
    j["h0_observed"] = int_to_json(cert.h0_observed);
    j["verdict"] = oracle_verdict_name(cert.verdict);
    Json per = Json::array();
    for (const Int& h : cert.per_trial_h0) per.push_back(int_to_json(h));
    j["per_trial_h0"] = std::move(per);
    return j;
}

RankCertificate certificate_from_json(const Json& j) {
    RankCertificate cert;
    cert.system.d = int_from_json(j.at("d"));
    cert.system.n = int_from_json(j.at("n"));
    cert.system.m = int_from_json(j.at("m"));
    cert.prime = j.at("prime").get<std::uint64_t>();
    cert.seed = j.at("seed").get<std::uint64_t>();
    cert.trials = j.at("trials").get<int>();
    cert.expected = int_from_json(j.at("expected"));
    cert.h0_observed = int_from_json(j.at("h0_observed"));
    cert.verdict = oracle_verdict_from_name(j.at("verdict").get<std::string>());
    for (const Json& h : j.at("per_trial_h0")) cert.per_trial_h0.push_back(int_from_json(h));
    // The prime list is not serialized: the first prime is explicit and the
    // escalation prime is a deterministic function of it.
    cert.primes_used = {cert.prime};
    if (cert.per_trial_h0.size() > static_cast<std::size_t>(cert.trials)) {
        for (const std::uint64_t candidate : {kMersenne61, kAltPrime31, kAltPrime30}) {
            if (candidate != cert.prime) {
                cert.primes_used.push_back(candidate);
                break;
            }
        }
    }
    return cert;
}

Json decomp_to_json(const BundleDecomp& dec) {
    Json arr = Json::array();
    for (const auto& [cls, mult] : dec.terms()) {
        Json term;
        term["kind"] = kind_tag(cls.kind);
        term["a_power"] = cls.a_power;
        term["mult"] = mult;
        arr.push_back(std::move(term));
    }
    return arr;
}

BundleDecomp decomp_from_json(const Json& j) {
    BundleDecomp dec;
    for (const Json& term : j) {
        dec.add({kind_from_tag(term.at("kind").get<std::string>()),
                 term.at("a_power").get<long>()},
                term.at("mult").get<long>());
    }
    return dec;
}

std::string invariant_csv_header() { return "d,n,m,chi_p2,mu,epsilon,b,mhat,chi_s,gamma,kappa"; }

std::string invariant_csv_row(const InvariantRow& row) {
    const auto opt_int = [](const std::optional<Int>& v) { return v ? v->get_str() : ""; };
    const auto opt_rat = [](const std::optional<Rational>& v) { return v ? v->str() : ""; };
    return row.d.get_str() + "," + row.n.get_str() + "," + row.m.get_str() + "," +
           row.chi_p2.get_str() + "," + opt_int(row.mu) + "," + opt_int(row.epsilon) + "," +
           opt_int(row.b) + "," + opt_int(row.mhat) + "," + opt_rat(row.chi_s) + "," +
           opt_rat(row.gamma) + "," + opt_int(row.kappa);
}

std::string bounds_csv_header() {
    return "n,k,alpha,c1,c2,thm1_applies,main_thm_applies,refinement_applies";
}

std::string bounds_csv_row(const NSplit& ns) {
    const auto flag = [](bool b) { return b ? "true" : "false"; };
    return ns.n.get_str() + "," + ns.k.get_str() + "," + ns.alpha.get_str() + "," +
           c1(ns).str() + "," + c2(ns).str() + "," + flag(ns.thm1_applies) + "," +
           flag(ns.main_thm_applies) + "," + flag(ns.refinement_applies);
}

}  // namespace nagata
