#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "znsum/modulus.hpp"
#include "znsum/residue_set.hpp"

namespace znsum {

enum class Verdict { pass, fail, vacuous };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "vacuous";
    }
}

// A single violating instance. Re-checking it through the verifier that
// produced it reproduces the violation.
struct Witness {
    int n = 0;
    std::optional<ResidueSet> set;
    std::string detail;
    std::string context;  // which sub-check produced it (e.g. "lemma5:E")
};

struct ArgMin {
    int n = 0;
    std::optional<ResidueSet> set;
};

struct ReportParams {
    int n_lo = 0, n_hi = 0;
    std::string mode = "exhaustive";
    long long samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string hypothesis;  // human-readable size hypothesis, e.g. "|A| >= n/2+3"
    std::optional<int> m;
    std::optional<double> alpha;
};

// Outcome of one verifier run. Serialized as a single JSON object
// (schema "zn-report/1"); given identical parameters and seed the JSON is
// byte-identical except for elapsed_s, which is deliberately placed last.
struct VerificationReport {
    std::string verifier_id;
    ReportParams params;
    Verdict verdict = Verdict::vacuous;
    std::optional<Witness> witness;
    std::optional<double> min_slack;
    std::optional<ArgMin> argmin;
    std::optional<ArgMin> exception_witness;  // expected exception (thmD at n = 15)
    long long sets_checked = 0;
    double elapsed_s = 0.0;

    // 0 = pass/vacuous, 1 = counterexample
    int exit_code() const { return verdict == Verdict::fail ? 1 : 0; }

    nlohmann::ordered_json to_json() const {
        using json = nlohmann::ordered_json;
        json p;
        p["n_range"] = {params.n_lo, params.n_hi};
        p["mode"] = params.mode;
        p["samples"] = params.samples;
        p["seed"] = params.seed;
        p["workers"] = params.workers;
        p["hypothesis"] = params.hypothesis;
        if (params.m) p["m"] = *params.m;
        if (params.alpha) p["alpha"] = *params.alpha;

        json j;
        j["schema"] = "zn-report/1";
        j["verifier_id"] = verifier_id;
        j["params"] = std::move(p);
        j["verdict"] = to_string(verdict);
        if (witness) {
            json w;
            w["n"] = witness->n;
            w["set"] = witness->set ? witness->set->to_string() : "";
            w["detail"] = witness->context.empty() || witness->context == verifier_id
                              ? witness->detail
                              : "[" + witness->context + "] " + witness->detail;
            j["witness"] = std::move(w);
        } else {
            j["witness"] = nullptr;
        }
        json stats;
        if (min_slack)
            stats["min_slack"] = *min_slack;
        else
            stats["min_slack"] = nullptr;
        if (argmin) {
            stats["argmin"] = {{"n", argmin->n},
                               {"set", argmin->set ? argmin->set->to_string() : ""}};
        } else {
            stats["argmin"] = nullptr;
        }
        if (exception_witness) {
            stats["exception_witness"] = {
                {"n", exception_witness->n},
                {"set", exception_witness->set ? exception_witness->set->to_string() : ""}};
        }
        j["stats"] = std::move(stats);
        j["sets_checked"] = sets_checked;
        j["seed"] = params.seed;
        j["elapsed_s"] = elapsed_s;
        return j;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << verifier_id << ": " << to_string(verdict);
        os << "  (n " << params.n_lo << ".." << params.n_hi << ", " << params.mode;
        if (params.samples > 0) os << ", samples " << params.samples << ", seed " << params.seed;
        os << ")\n";
        if (!params.hypothesis.empty()) os << "  hypothesis: " << params.hypothesis << "\n";
        os << "  sets checked: " << sets_checked << "\n";
        if (min_slack) {
            os << "  min slack: " << *min_slack;
            if (argmin) {
                os << " at n=" << argmin->n << " A={"
                   << (argmin->set ? argmin->set->to_string() : "") << "}";
            }
            os << "\n";
        }
        if (witness) {
            os << "  witness: n=" << witness->n << " A={"
               << (witness->set ? witness->set->to_string() : "") << "} " << witness->detail
               << "\n";
        }
        if (exception_witness) {
            os << "  expected exception: n=" << exception_witness->n << " A={"
               << (exception_witness->set ? exception_witness->set->to_string() : "") << "}\n";
        }
        os << "  elapsed: " << elapsed_s << "s\n";
        return os.str();
    }
};

}  // namespace znsum
