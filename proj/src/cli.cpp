#include "nagata/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <vector>

#include "nagata/serialize.hpp"

namespace nagata::cli {

namespace {

struct SystemSpec {
    long d, n, m;
};

constexpr SystemSpec kCorollaryRows[] = {
    {1499, 10, 474}, {778, 10, 246}, {428, 11, 129},
    {229, 11, 69},   {215, 12, 62},  {118, 12, 34},
};

constexpr SystemSpec kSharpSystems[] = {{3, 3, 2}, {12, 6, 5}, {48, 8, 17}};

constexpr SystemSpec kOpenProblems[] = {
    {57, 10, 18}, {2220, 10, 702}, {627, 11, 189}, {312, 12, 90}};

Int parse_int_flag(const std::string& text, const char* flag) {
    try {
        return Int(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string(flag) + ": '" + text +
                                    "' is not a decimal integer");
    }
}

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (const char ch : cell) {
        quoted += ch;
        if (ch == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (const char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    cells.push_back(cur);
    return cells;
}

void emit_aligned(const std::vector<std::string>& lines, std::ostream& out) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::size_t> width;
    for (const std::string& line : lines) {
        grid.push_back(split_csv_line(line));
        if (width.size() < grid.back().size()) width.resize(grid.back().size(), 0);
        for (std::size_t i = 0; i < grid.back().size(); ++i) {
            width[i] = std::max(width[i], grid.back()[i].size());
        }
    }
    for (const auto& cells : grid) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out << "  ";
            out << std::setw(static_cast<int>(width[i])) << cells[i];
        }
        out << '\n';
    }
}

void emit_bounds_text(const NSplit& ns, int level, std::ostream& out) {
    out << "n = " << ns.n << " = " << ns.k << "^2 + " << ns.alpha << '\n';
    if (level != 2) out << "c1 = " << c1(ns).str() << '\n';
    if (level != 1) out << "c2 = " << c2(ns).str() << '\n';
    out << "thm1_applies = " << (ns.thm1_applies ? "true" : "false") << '\n'
        << "main_thm_applies = " << (ns.main_thm_applies ? "true" : "false") << '\n'
        << "refinement_applies = " << (ns.refinement_applies ? "true" : "false") << '\n';
}

void emit_invariants(const InvariantRow& row, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << invariant_row_to_json(row).dump(2) << '\n';
    } else if (format == "csv") {
        out << invariant_csv_header() << '\n' << invariant_csv_row(row) << '\n';
    } else {
        out << "L(" << row.d << ", " << row.n << ", " << row.m << ")\n";
        out << "v = " << row.v << '\n' << "chi_p2 = " << row.chi_p2 << '\n';
        if (row.mu) out << "mu = " << *row.mu << '\n';
        if (row.epsilon) out << "epsilon = " << *row.epsilon << '\n';
        if (row.b) out << "b = " << *row.b << '\n';
        if (row.mhat) out << "mhat = " << *row.mhat << '\n';
        if (row.g) out << "g = " << *row.g << '\n';
        if (row.chi_s) out << "chi_s = " << row.chi_s->str() << '\n';
        if (row.gamma) out << "gamma = " << row.gamma->str() << '\n';
        if (row.kappa) out << "kappa = " << *row.kappa << '\n';
    }
}

void emit_verdict(const LinearSystem& ls, const Verdict& v, const std::string& format,
                  std::ostream& out) {
    if (format == "json") {
        out << verdict_to_json(v).dump(2) << '\n';
    } else if (format == "csv") {
        out << "status,witness\n"
            << status_name(v.status) << ',' << csv_quote(v.witness) << '\n';
    } else {
        out << "L(" << ls.d << ", " << ls.n << ", " << ls.m << "): " << status_name(v.status)
            << '\n'
            << "witness: " << v.witness << '\n';
    }
}

std::string cert_csv_header() {
    return "d,n,m,prime,seed,trials,expected,h0_observed,verdict,per_trial_h0";
}

std::string cert_csv_row(const RankCertificate& cert) {
    std::string trials;
    for (const Int& h : cert.per_trial_h0) {
        if (!trials.empty()) trials += ';';
        trials += h.get_str();
    }
    return cert.system.d.get_str() + "," + cert.system.n.get_str() + "," +
           cert.system.m.get_str() + "," + std::to_string(cert.prime) + "," +
           std::to_string(cert.seed) + "," + std::to_string(cert.trials) + "," +
           cert.expected.get_str() + "," + cert.h0_observed.get_str() + "," +
           oracle_verdict_name(cert.verdict) + "," + trials;
}

void emit_cert_text(const RankCertificate& cert, std::ostream& out) {
    out << "L(" << cert.system.d << ", " << cert.system.n << ", " << cert.system.m
        << "): " << oracle_verdict_name(cert.verdict) << '\n';
    out << "expected = " << cert.expected << '\n'
        << "h0_observed = " << cert.h0_observed << '\n';
    out << "primes = ";
    for (std::size_t i = 0; i < cert.primes_used.size(); ++i) {
        if (i > 0) out << ',';
        out << cert.primes_used[i];
    }
    out << '\n' << "per_trial_h0 = ";
    for (std::size_t i = 0; i < cert.per_trial_h0.size(); ++i) {
        if (i > 0) out << ',';
        out << cert.per_trial_h0[i];
    }
    out << '\n';
}

void emit_decomp(const std::string& label, const BundleDecomp& dec, const std::string& format,
                 std::ostream& out) {
    if (format == "json") {
        out << decomp_to_json(dec).dump(2) << '\n';
    } else if (format == "csv") {
        out << "kind,a_power,mult\n";
        for (const Json& term : decomp_to_json(dec)) {
            out << term.at("kind").get<std::string>() << ',' << term.at("a_power").get<long>()
                << ',' << term.at("mult").get<long>() << '\n';
        }
    } else {
        out << label << " = " << render(dec) << '\n';
        out << "rank = " << dec.rank() << '\n' << "degree = " << dec.degree() << '\n';
        out << "h0 = " << h0(dec) << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact degree bounds, emptiness certificates, and finite-field rank checks "
                 "for linear systems of plane curves with general multiple points",
                 "nagata"};
    app.require_subcommand(1);

    std::string d_str, n_str, m_str, nmax_str;
    std::string format = "text";
    std::string preset;
    int level = 0;
    unsigned long sym_m = 0;
    std::uint64_t prime = kMersenne61;
    std::uint64_t seed = 0;
    int trials = 3;
    std::uint64_t budget = 20000;
    bool strict = false;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };
    const auto add_system = [&](CLI::App* sub) {
        sub->add_option("--d", d_str, "curve degree")->required();
        sub->add_option("--n", n_str, "number of general points")->required();
        sub->add_option("--m", m_str, "multiplicity at each point")->required();
    };
    const auto add_oracle_knobs = [&](CLI::App* sub) {
        sub->add_option("--prime", prime, "field characteristic (validated prime)")
            ->capture_default_str();
        sub->add_option("--seed", seed, "point-sampling seed")->capture_default_str();
        sub->add_option("--trials", trials, "independent point sets per prime")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--budget", budget, "max matrix columns (d+1)(d+2)/2")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* cmd_bounds = app.add_subcommand("bounds", "degree bounds c1, c2 for one n");
    cmd_bounds->add_option("--n", n_str, "number of general points (non-square)")->required();
    cmd_bounds->add_option("--level", level, "print only this level's constant (text mode)")
        ->check(CLI::IsMember({1, 2}));
    add_format(cmd_bounds);

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "emptiness certificate for L(d, n, m)");
    add_system(cmd_classify);
    add_format(cmd_classify);

    CLI::App* cmd_invariants =
        app.add_subcommand("invariants", "numerical invariants of L(d, n, m)");
    add_system(cmd_invariants);
    add_format(cmd_invariants);

    CLI::App* cmd_oracle = app.add_subcommand(
        "oracle", "certify L(d, n, m) by exact matrix rank over a prime field");
    add_system(cmd_oracle);
    add_oracle_knobs(cmd_oracle);
    cmd_oracle->add_flag("--strict", strict, "exit 4 when the oracle is inconclusive");
    add_format(cmd_oracle);

    CLI::App* cmd_sympow = app.add_subcommand(
        "sympow", "symmetric powers of the rank-2 bundle (default: the anticanonical pencil)");
    CLI::Option* sym_m_opt =
        cmd_sympow->add_option("--m", sym_m, "symmetric power to decompose")
            ->check(CLI::Range(0UL, 100000UL));
    add_format(cmd_sympow);

    CLI::App* cmd_table = app.add_subcommand("table", "built-in system tables");
    cmd_table->add_option("--preset", preset, "which table")
        ->check(CLI::IsMember({"corollary12", "sharp", "openproblems"}))
        ->required();
    add_oracle_knobs(cmd_table);
    add_format(cmd_table);

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "bounds for every non-square n up to a cap");
    cmd_sweep->add_option("--n-max", nmax_str, "largest n to include")->required();
    add_format(cmd_sweep);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_bounds) {
            const NSplit ns = split_n(parse_int_flag(n_str, "--n"));
            if (format == "json") {
                out << bounds_to_json(ns).dump(2) << '\n';
            } else if (format == "csv") {
                out << bounds_csv_header() << '\n' << bounds_csv_row(ns) << '\n';
            } else {
                emit_bounds_text(ns, level, out);
            }
        } else if (*cmd_classify) {
            const LinearSystem ls{parse_int_flag(d_str, "--d"), parse_int_flag(n_str, "--n"),
                                  parse_int_flag(m_str, "--m")};
            emit_verdict(ls, classify(ls), format, out);
        } else if (*cmd_invariants) {
            const LinearSystem ls{parse_int_flag(d_str, "--d"), parse_int_flag(n_str, "--n"),
                                  parse_int_flag(m_str, "--m")};
            emit_invariants(invariants(ls), format, out);
        } else if (*cmd_oracle) {
            const LinearSystem ls{parse_int_flag(d_str, "--d"), parse_int_flag(n_str, "--n"),
                                  parse_int_flag(m_str, "--m")};
            OracleConfig cfg;
            cfg.prime = prime;
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.max_columns = budget;
            const RankCertificate cert = certify(ls, cfg);
            if (format == "json") {
                out << certificate_to_json(cert).dump(2) << '\n';
            } else if (format == "csv") {
                out << cert_csv_header() << '\n' << cert_csv_row(cert) << '\n';
            } else {
                emit_cert_text(cert, out);
            }
            if (strict && cert.verdict == OracleVerdict::Inconclusive) return kExitInconclusive;
        } else if (*cmd_sympow) {
            BundleDecomp dec;
            std::string label;
            if (*sym_m_opt) {
                dec = sym_power(static_cast<unsigned>(sym_m));
                label = "Sym^" + std::to_string(sym_m) + " E";
            } else {
                dec = tensor(sym_power(4), BundleDecomp({BundleKind::Triv, -2}));
                label = "Sym^4 E * A^-2";
            }
            emit_decomp(label, dec, format, out);
        } else if (*cmd_table) {
            if (preset == "corollary12") {
                std::vector<std::string> lines{invariant_csv_header()};
                std::vector<InvariantRow> rows;
                for (const SystemSpec& s : kCorollaryRows) {
                    rows.push_back(invariants({s.d, s.n, s.m}));
                    lines.push_back(invariant_csv_row(rows.back()));
                }
                if (format == "json") {
                    Json arr = Json::array();
                    for (const InvariantRow& row : rows) arr.push_back(invariant_row_to_json(row));
                    out << arr.dump(2) << '\n';
                } else if (format == "csv") {
                    for (const std::string& line : lines) out << line << '\n';
                } else {
                    emit_aligned(lines, out);
                }
            } else if (preset == "sharp") {
                OracleConfig cfg;
                cfg.prime = prime;
                cfg.seed = seed;
                cfg.trials = trials;
                cfg.max_columns = budget;
                std::vector<RankCertificate> certs;
                for (const SystemSpec& s : kSharpSystems) {
                    certs.push_back(certify({s.d, s.n, s.m}, cfg));
                }
                if (format == "json") {
                    Json arr = Json::array();
                    for (const RankCertificate& c : certs) arr.push_back(certificate_to_json(c));
                    out << arr.dump(2) << '\n';
                } else if (format == "csv") {
                    out << cert_csv_header() << '\n';
                    for (const RankCertificate& c : certs) out << cert_csv_row(c) << '\n';
                } else {
                    for (std::size_t i = 0; i < certs.size(); ++i) {
                        if (i > 0) out << '\n';
                        emit_cert_text(certs[i], out);
                    }
                }
            } else {  // openproblems
                if (format == "json") {
                    Json arr = Json::array();
                    for (const SystemSpec& s : kOpenProblems) {
                        const LinearSystem ls{s.d, s.n, s.m};
                        Json j;
                        j["d"] = s.d;
                        j["n"] = s.n;
                        j["m"] = s.m;
                        const Json v = verdict_to_json(classify(ls));
                        j["status"] = v.at("status");
                        j["witness"] = v.at("witness");
                        arr.push_back(std::move(j));
                    }
                    out << arr.dump(2) << '\n';
                } else if (format == "csv") {
                    out << "d,n,m,status,witness\n";
                    for (const SystemSpec& s : kOpenProblems) {
                        const Verdict v = classify({s.d, s.n, s.m});
                        out << s.d << ',' << s.n << ',' << s.m << ',' << status_name(v.status)
                            << ',' << csv_quote(v.witness) << '\n';
                    }
                } else {
                    for (const SystemSpec& s : kOpenProblems) {
                        const LinearSystem ls{s.d, s.n, s.m};
                        const Verdict v = classify(ls);
                        out << "L(" << s.d << ", " << s.n << ", " << s.m
                            << "): " << status_name(v.status) << "  (" << v.witness << ")\n";
                    }
                }
            }
        } else if (*cmd_sweep) {
            const Int n_max = parse_int_flag(nmax_str, "--n-max");
            std::vector<NSplit> rows;
            for (Int n = 2; n <= n_max; ++n) {
                const Int k = isqrt(n);
                if (k * k == n) continue;
                rows.push_back(split_n(n));
            }
            if (format == "json") {
                Json arr = Json::array();
                for (const NSplit& ns : rows) arr.push_back(bounds_to_json(ns));
                out << arr.dump(2) << '\n';
            } else if (format == "csv") {
                out << bounds_csv_header() << '\n';
                for (const NSplit& ns : rows) out << bounds_csv_row(ns) << '\n';
            } else {
                std::vector<std::string> lines{bounds_csv_header()};
                for (const NSplit& ns : rows) lines.push_back(bounds_csv_row(ns));
                emit_aligned(lines, out);
            }
        }
        return kExitOk;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace nagata::cli
