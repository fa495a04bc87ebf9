#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "znsum/density.hpp"
#include "znsum/expsum.hpp"
#include "znsum/reps.hpp"
#include "znsum/residue_set.hpp"
#include "znsum/sumset.hpp"
#include "znsum/verify.hpp"

namespace znsum::cli {

namespace detail {

inline std::pair<int, int> parse_range(const std::string& text) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, pos));
        int hi = std::stoi(text.substr(pos + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "', expected a..b");
    }
}

inline int resolve_ceiling(std::optional<int> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("ZN_EXHAUSTIVE_CEILING")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("ZN_EXHAUSTIVE_CEILING is not an integer");
        }
    }
    return kDefaultEnumCeiling;
}

inline std::string render_set(const ResidueSet& s) {
    if (s.empty()) return "(empty)";
    std::ostringstream os;
    os << s.to_string() << " (" << s.size() << " of " << s.modulus() << ")";
    if (s.is_full()) os << " = Z_" << s.modulus();
    return os.str();
}

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline const std::vector<std::string>& verifier_ids() {
    static const std::vector<std::string> ids = {
        "thmA",   "thmB",   "thmC-d-odd", "thmD",   "thm-even",
        "thm-parity", "thm-odd-density", "lemma1", "lemma2", "lemma4",
        "lemma5", "lemma6", "lemma20",    "factI",  "parseval"};
    return ids;
}

}  // namespace detail

struct VerifyArgs {
    std::string id;
    std::string range;
    std::string mode = "exhaustive";
    long long samples = 1000;
    std::uint64_t seed = 0;
    std::optional<double> alpha;
    std::optional<int> m;
    int workers = 1;
    std::optional<int> ceiling;
    std::string format = "json";
};

inline VerificationReport dispatch_verifier(const VerifyArgs& a) {
    auto [lo, hi] = detail::parse_range(a.range);
    VerifyOptions opt;
    opt.workers = a.workers;
    opt.ceiling = detail::resolve_ceiling(a.ceiling);
    const std::string& id = a.id;
    if (id == "thm-even") return verify_even_n(lo, hi, opt);
    if (id == "thm-parity") return verify_parity_split(lo, hi, opt);
    if (id == "thm-odd-density") {
        if (!a.alpha) throw std::invalid_argument("thm-odd-density requires --alpha");
        return verify_odd_density(*a.alpha, lo, hi, a.samples, a.seed, opt);
    }
    if (id == "thmA") {
        if (!a.m) throw std::invalid_argument("thmA requires --m (2, 3 or 4)");
        return verify_theorem_A(*a.m, lo, hi, a.mode, a.samples, a.seed, opt);
    }
    if (id == "thmB") return verify_theorem_B(lo, hi, opt);
    if (id == "thmC-d-odd") return verify_extremal_2hat(lo, hi, opt);
    if (id == "thmD") return verify_theorem_D(lo, hi, opt);
    if (id == "lemma1") return verify_lemma1(lo, hi);
    if (id == "lemma2") return verify_lemma2(lo, hi, a.mode, a.samples, a.seed, opt);
    if (id == "lemma4") return verify_lemma4(lo, hi, opt);
    if (id == "lemma5") return verify_lemma5(lo, hi, opt);
    if (id == "lemma6") return verify_lemma6(lo, hi, opt);
    if (id == "lemma20") return verify_lemma20(lo, hi, a.mode, a.samples, a.seed, opt);
    if (id == "factI") return verify_factI(lo, hi, opt);
    if (id == "parseval") return verify_parseval(lo, hi, a.samples, a.seed);
    std::string all;
    for (const auto& v : detail::verifier_ids()) all += (all.empty() ? "" : ", ") + v;
    throw std::invalid_argument("unknown verifier id '" + id + "'; valid ids: " + all);
}

inline int emit_report(const VerificationReport& report, const std::string& format,
                       std::ostream& out) {
    if (format == "text")
        out << report.to_text();
    else
        out << report.to_json().dump(2) << "\n";
    return report.exit_code();
}

// Full command surface. Returns the process exit code: 0 = pass/vacuous/info,
// 1 = counterexample found, 2 = usage or internal error.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"restricted sumsets over Z_n: computation, exact representation counts,\n"
                 "exponential-sum diagnostics, and desk-scale theorem verification"};
    app.require_subcommand(1);

    // --- sumset ---
    int su_n = 0, su_h = 2;
    std::string su_set, su_format = "text";
    bool su_unrestricted = false;
    auto* sumset_cmd = app.add_subcommand("sumset", "compute h^A (or hA with --unrestricted)");
    sumset_cmd->set_help_flag("--help", "print help");  // frees -h for the --h option
    sumset_cmd->add_option("--n", su_n, "modulus")->required();
    sumset_cmd->add_option("--set", su_set, "set literal, e.g. 0,1,2 or 0x25")->required();
    sumset_cmd->add_option("--h", su_h, "number of summands (default 2; h=0 gives {0})");
    sumset_cmd->add_flag("--unrestricted", su_unrestricted, "allow repeated summands");
    sumset_cmd->add_option("--format", su_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // --- reps ---
    int rp_n = 0, rp_m = -1;
    std::string rp_set, rp_format = "text";
    auto* reps_cmd = app.add_subcommand("reps", "exact 4-sum representation counts");
    reps_cmd->add_option("--n", rp_n, "modulus")->required();
    reps_cmd->add_option("--set", rp_set, "set literal")->required();
    reps_cmd->add_option("--m", rp_m, "single target residue (default: all)");
    reps_cmd->add_option("--format", rp_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // --- verify ---
    VerifyArgs va;
    std::string va_n;
    auto* verify_cmd = app.add_subcommand("verify", "run a named verifier over an n-range");
    verify_cmd->add_option("id", va.id, "verifier id (see --help-ids)")->required();
    auto* vr = verify_cmd->add_option("--n-range", va.range, "inclusive range a..b");
    verify_cmd->add_option("--n", va_n, "single n (same as --n-range n..n)")->excludes(vr);
    verify_cmd->add_option("--mode", va.mode, "exhaustive|random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    verify_cmd->add_option("--samples", va.samples, "random-mode sample count (default 1000)");
    verify_cmd->add_option("--seed", va.seed, "64-bit PRNG seed (default 0)");
    verify_cmd->add_option("--alpha", va.alpha, "density for thm-odd-density");
    verify_cmd->add_option("--m", va.m, "summand count for thmA");
    verify_cmd->add_option("--workers", va.workers, "shard exhaustive scans (default 1)");
    verify_cmd->add_option("--exhaustive-ceiling", va.ceiling,
                           "override the subset enumeration guard");
    verify_cmd->add_option("--format", va.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // --- search ---
    VerifyArgs sa;
    std::string sa_what, sa_n;
    auto* search_cmd = app.add_subcommand("search", "counterexample search");
    search_cmd->add_option("target", sa_what, "search target (problem1)")->required();
    auto* sr = search_cmd->add_option("--n-range", sa.range, "inclusive range a..b");
    search_cmd->add_option("--n", sa_n, "single n")->excludes(sr);
    search_cmd->add_option("--mode", sa.mode, "exhaustive|random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search_cmd->add_option("--samples", sa.samples, "random-mode sample count");
    search_cmd->add_option("--seed", sa.seed, "64-bit PRNG seed");
    search_cmd->add_option("--workers", sa.workers, "shard exhaustive scans");
    search_cmd->add_option("--exhaustive-ceiling", sa.ceiling,
                           "override the subset enumeration guard");
    search_cmd->add_option("--format", sa.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // --- constants ---
    std::string co_which;
    std::optional<double> co_alpha;
    auto* const_cmd = app.add_subcommand("constants", "critical density constants");
    const_cmd->add_option("which", co_which, "alpha0 | N")->required();
    const_cmd->add_option("--alpha", co_alpha, "density argument for N");

    std::vector<const char*> argv;
    argv.push_back("znsum");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sumset_cmd) {
            Modulus n(su_n);
            ResidueSet a = ResidueSet::parse(n, su_set);
            ResidueSet result =
                su_unrestricted ? unrestricted_sumset(a, su_h) : restricted_sumset(a, su_h);
            if (su_format == "json") {
                nlohmann::ordered_json j;
                j["n"] = su_n;
                j["set"] = a.to_string();
                j["h"] = su_h;
                j["restricted"] = !su_unrestricted;
                j["result"] = result.to_string();
                j["size"] = result.size();
                j["full"] = result.is_full();
                out << j.dump(2) << "\n";
            } else {
                out << detail::render_set(result) << "\n";
            }
            return 0;
        }
        if (*reps_cmd) {
            Modulus n(rp_n);
            ResidueSet a = ResidueSet::parse(n, rp_set);
            RepProfile prof = rep_profile(a);
            const CountVector rhs = prof.C4.scaled(24);
            if (rp_m >= rp_n || rp_m < -1)
                throw std::invalid_argument("m out of range [0, " + std::to_string(rp_n) + ")");
            auto row = [&](int m) {
                nlohmann::ordered_json j;
                j["m"] = m;
                j["R"] = prof.R[m];
                j["R1"] = prof.R1[m];
                j["R2"] = prof.R2[m];
                j["R3"] = prof.R3[m];
                j["R4"] = prof.R4[m];
                j["R5"] = prof.R5[m];
                j["C4"] = prof.C4[m];
                j["residual"] = prof.R[m] - rhs[m];
                return j;
            };
            std::vector<int> targets;
            if (rp_m >= 0)
                targets.push_back(rp_m);
            else
                for (int m = 0; m < rp_n; ++m) targets.push_back(m);
            const long long c4_total = prof.C4.total();
            const long long c4_expected = binomial_clamped(a.size(), 4, 1ll << 62);
            if (rp_format == "json") {
                nlohmann::ordered_json j;
                j["n"] = rp_n;
                j["set"] = a.to_string();
                j["rows"] = nlohmann::ordered_json::array();
                for (int m : targets) j["rows"].push_back(row(m));
                j["sum_C4"] = c4_total;
                j["binomial_k_4"] = c4_expected;
                out << j.dump(2) << "\n";
            } else if (rp_format == "csv") {
                out << "m,R,R1,R2,R3,R4,R5,C4,residual\n";
                for (int m : targets) {
                    auto j = row(m);
                    out << m << "," << j["R"] << "," << j["R1"] << "," << j["R2"] << ","
                        << j["R3"] << "," << j["R4"] << "," << j["R5"] << "," << j["C4"] << ","
                        << j["residual"] << "\n";
                }
            } else {
                for (int m : targets) {
                    auto j = row(m);
                    out << "m=" << m << " R=" << j["R"] << " R1=" << j["R1"] << " R2=" << j["R2"]
                        << " R3=" << j["R3"] << " R4=" << j["R4"] << " R5=" << j["R5"]
                        << " C4=" << j["C4"] << " residual=" << j["residual"] << "\n";
                }
                out << "sum C4 = " << c4_total << " = C(" << a.size() << ", 4) = " << c4_expected
                    << "\n";
            }
            return 0;
        }
        if (*verify_cmd) {
            if (!va_n.empty()) va.range = va_n + ".." + va_n;
            if (va.range.empty()) throw std::invalid_argument("verify requires --n-range or --n");
            return emit_report(dispatch_verifier(va), va.format, out);
        }
        if (*search_cmd) {
            if (sa_what != "problem1") {
                throw std::invalid_argument("unknown search target '" + sa_what +
                                            "'; valid targets: problem1");
            }
            if (!sa_n.empty()) sa.range = sa_n + ".." + sa_n;
            if (sa.range.empty()) throw std::invalid_argument("search requires --n-range or --n");
            auto [lo, hi] = detail::parse_range(sa.range);
            VerifyOptions opt;
            opt.workers = sa.workers;
            opt.ceiling = detail::resolve_ceiling(sa.ceiling);
            return emit_report(search_problem1(lo, hi, sa.mode, sa.samples, sa.seed, opt),
                               sa.format, out);
        }
        if (*const_cmd) {
            if (co_which == "alpha0") {
                const double root = alpha0();
                const double closed = alpha0_cardano();
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.12f", root);
                out << "alpha0 = " << buf << "\n";
                out << "closed form agreement: |bisection - cardano| = "
                    << detail::fmt(std::abs(root - closed)) << " (tolerance 1e-9)\n";
                out << "defining residual 9a^3+a-1 = " << detail::fmt(critical_density_poly(root))
                    << "\n";
                return 0;
            }
            if (co_which == "N") {
                if (!co_alpha) throw std::invalid_argument("constants N requires --alpha");
                out << "N(" << detail::fmt(*co_alpha) << ") = " << detail::fmt(cutoff_N(*co_alpha))
                    << "\n";
                return 0;
            }
            throw std::invalid_argument("unknown constant '" + co_which +
                                        "'; valid: alpha0, N");
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace znsum::cli
