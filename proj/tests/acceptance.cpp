// Acceptance suite: one check per release criterion, each printed as a single
// PASS/FAIL line with its runtime. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "znsum/cli.hpp"
#include "znsum/znsum.hpp"

using namespace znsum;

namespace {

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& log, const std::string& on_fail) {
    if (!cond && log.empty()) log = on_fail;
    return cond;
}

std::string cli_capture(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

std::string drop_elapsed(const std::string& report_json) {
    auto j = nlohmann::ordered_json::parse(report_json);
    j.erase("elapsed_s");
    return j.dump(2);
}

// --- criteria ---------------------------------------------------------------

bool crit_rep_identity(std::string& log) {
    auto exh = verify_lemma2(1, 10, "exhaustive", 0, 0);
    bool ok = expect(exh.verdict == Verdict::pass, log, "exhaustive n <= 10 failed");
    auto rnd = verify_lemma2(1, 50, "random", 2000, 20260810);
    ok = expect(rnd.verdict == Verdict::pass, log, "2000 random (n, A), n <= 50, failed") && ok;
    ok = expect(rnd.sets_checked == 2000, log, "random sample count off") && ok;
    return ok;
}

bool crit_dp_oracle(std::string& log) {
    long long pairs = 0;
    bool ok = true;
    enumerate_subsets(Modulus(12), 0, 12, [&](const ResidueSet& a) {
        for (int h = 0; h <= 5 && ok; ++h) {
            ++pairs;
            if (restricted_sumset(a, h) != restricted_sumset_naive(a, h)) {
                ok = false;
                log = "mismatch at A = {" + a.to_string() + "}, h = " + std::to_string(h);
            }
        }
    });
    return expect(pairs == 24576, log, "expected 24576 set-h pairs, saw " + std::to_string(pairs)) &&
           ok;
}

bool crit_even_n(std::string& log) {
    auto r = verify_even_n(6, 12);
    bool ok = expect(r.verdict == Verdict::pass, log, "witness found: " + r.to_json().dump());
    ok = expect(!r.witness.has_value(), log, "unexpected witness") && ok;
    // 1 + 9 + 56 + 299 qualifying sets across n = 6, 8, 10, 12
    ok = expect(r.sets_checked == 365, log,
                "expected 365 qualifying sets, saw " + std::to_string(r.sets_checked)) &&
         ok;
    return ok;
}

bool crit_parity(std::string& log) {
    auto r12 = verify_parity_split(12, 12);
    auto r16 = verify_parity_split(16, 16);
    auto r8 = verify_parity_split(8, 8);
    bool ok = expect(r12.verdict == Verdict::pass && r12.sets_checked == 57, log, "n = 12 failed");
    ok = expect(r16.verdict == Verdict::pass && r16.sets_checked == 2223, log, "n = 16 failed") &&
         ok;
    ok = expect(r8.verdict == Verdict::vacuous, log, "n = 8 should be vacuous") && ok;
    return ok;
}

bool crit_odd_density(std::string& log) {
    const int n = 201;
    const long long k = static_cast<long long>(std::floor(0.45 * n)) + 1;
    bool ok = expect(k == 91, log, "density size should be 91, got " + std::to_string(k));
    ok = expect(rep_chain_value(n, k) > 0.0, log, "analytic chain not positive") && ok;
    auto r = verify_odd_density(0.45, 201, 201, 1000, 1);
    ok = expect(r.verdict == Verdict::pass && r.sets_checked == 1000, log,
                "sampled verification failed: " + r.to_json().dump()) &&
         ok;
    return ok;
}

bool crit_alpha0(std::string& log) {
    const double root = alpha0();
    bool ok = expect(std::abs(root - alpha0_cardano()) <= 1e-9, log,
                     "bisection and closed form disagree");
    ok = expect(std::abs(root - 0.40447) < 1e-5, log, "root is not ~0.40447") && ok;
    ok = expect(root < 0.4045, log, "root not below 0.4045") && ok;
    ok = expect(std::abs(critical_density_poly(root)) <= 1e-12, log, "residual too large") && ok;
    return ok;
}

bool crit_small_h_theorems(std::string& log) {
    auto b = verify_theorem_B(1, 14);
    bool ok = expect(b.verdict == Verdict::pass, log, "pair-cover theorem failed");
    for (int m : {2, 3}) {
        auto a = verify_theorem_A(m, 5, 13, "exhaustive", 0, 0);
        ok = expect(a.verdict == Verdict::pass && *a.min_slack >= 0.0, log,
                    "pointwise bound failed at m = " + std::to_string(m)) &&
             ok;
    }
    auto d = verify_theorem_D(12, 16);
    ok = expect(d.verdict == Verdict::pass, log, "triple-cover theorem failed") && ok;
    ok = expect(d.exception_witness.has_value() && d.exception_witness->n == 15 &&
                    d.exception_witness->set->size() == 8,
                log, "n = 15 exception witness missing") &&
         ok;
    if (ok)
        log = "n=15 exception: A = {" + d.exception_witness->set->to_string() + "}";
    return ok;
}

bool crit_spectral_bound(std::string& log) {
    auto exh = verify_lemma20(2, 14, "exhaustive", 0, 0);
    bool ok = exh.verdict == Verdict::pass;
    if (!ok && exh.witness) {
        log = "counterexample at n = " + std::to_string(exh.witness->n) + ", A = {" +
              exh.witness->set->to_string() + "}: " + exh.witness->detail;
    }
    auto rnd = verify_lemma20(15, 64, "random", 10000, 2);
    if (rnd.verdict != Verdict::pass) {
        ok = false;
        if (log.empty() && rnd.witness)
            log = "counterexample at n = " + std::to_string(rnd.witness->n) + ", A = {" +
                  rnd.witness->set->to_string() + "}: " + rnd.witness->detail;
    }
    return ok;
}

// not a release criterion by itself; printed as context next to criterion 8
bool spectral_bound_odd_only(std::string& log) {
    for (int n = 3; n <= 13; n += 2) {
        auto r = verify_lemma20(n, n, "exhaustive", 0, 0);
        if (r.verdict != Verdict::pass) {
            log = "odd n = " + std::to_string(n) + " failed";
            return false;
        }
    }
    for (int n = 15; n <= 63; n += 2) {
        auto r = verify_lemma20(n, n, "random", 10000, 2);
        if (r.verdict != Verdict::pass) {
            log = "odd n = " + std::to_string(n) + " failed";
            return false;
        }
    }
    return true;
}

bool crit_cube_max(std::string& log) {
    auto r = verify_lemma1(3, 13);
    return expect(r.verdict == Verdict::pass && r.sets_checked == 12, log,
                  "closed form vs vertex brute force mismatch: " + r.to_json().dump());
}

bool crit_parseval(std::string& log) {
    auto r = verify_parseval(1, 128, 1000, 3);
    return expect(r.verdict == Verdict::pass && r.sets_checked == 1000, log,
                  "energy identity failed: " + r.to_json().dump());
}

bool crit_doubling_and_small_lemmas(std::string& log) {
    auto l6 = verify_lemma6(2, 200);
    bool ok = expect(l6.verdict == Verdict::pass && l6.sets_checked == 100, log,
                     "doubling-constant formula failed");
    auto l4 = verify_lemma4(1, 16);
    ok = expect(l4.verdict == Verdict::pass, log, "pair growth failed") && ok;
    auto fi = verify_factI(1, 16);
    ok = expect(fi.verdict == Verdict::pass, log, "triple floor failed") && ok;
    return ok;
}

bool crit_problem1(std::string& log) {
    auto r = search_problem1(4, 18, "exhaustive", 0, 0);
    // well-formedness of the emitted report
    auto j = nlohmann::ordered_json::parse(r.to_json().dump());
    bool ok = true;
    for (const char* key : {"schema", "verifier_id", "params", "verdict", "witness", "stats",
                            "sets_checked", "seed", "elapsed_s"})
        ok = expect(j.contains(key), log, std::string("report key missing: ") + key) && ok;
    ok = expect(!j["stats"]["argmin"].is_null(), log, "argmin missing") && ok;

    if (r.verdict == Verdict::fail) {
        // a counterexample is a publishable outcome, not an artifact failure
        std::printf("        !! COUNTEREXAMPLE: %s\n", r.to_json().dump().c_str());
    } else {
        ok = expect(*r.min_slack >= 0.0, log, "negative slack without fail verdict") && ok;
    }

    // the proven cases: |A| = 4 forces |3^A| = 4; |A| = 5 forces |3^A| >= 5
    for (int n = 4; n <= 18 && ok; ++n) {
        enumerate_subsets(Modulus(n), 4, 5, [&](const ResidueSet& a) {
            if (!ok) return;
            int s3 = restricted_sumset(a, 3).size();
            if (a.size() == 4 && s3 != 4) {
                ok = false;
                log = "size-4 case broken at A = {" + a.to_string() + "}";
            }
            if (a.size() == 5 && s3 < 5) {
                ok = false;
                log = "size-5 case broken at A = {" + a.to_string() + "}";
            }
        });
    }
    if (ok && log.empty())
        log = "min slack " + std::to_string(static_cast<long long>(*r.min_slack)) + " at n=" +
              std::to_string(r.argmin->n) + " A={" + r.argmin->set->to_string() + "}";
    return ok;
}

bool crit_determinism(std::string& log) {
    const std::vector<std::vector<std::string>> invocations = {
        {"verify", "lemma2", "--n-range", "1..30", "--mode", "random", "--samples", "500",
         "--seed", "99"},
        {"verify", "thmB", "--n-range", "3..12"},
        {"verify", "lemma20", "--n-range", "15..20", "--mode", "random", "--samples", "200",
         "--seed", "5"},
        {"search", "problem1", "--n-range", "24..24", "--mode", "random", "--samples", "400",
         "--seed", "17"},
    };
    for (const auto& args : invocations) {
        int c1 = 0, c2 = 0;
        std::string a = cli_capture(args, c1);
        std::string b = cli_capture(args, c2);
        if (c1 != c2 || drop_elapsed(a) != drop_elapsed(b)) {
            log = "non-deterministic output for: " + args[1];
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "4-sum identity R = 24*C4 (exhaustive n<=10 + 2000 random n<=50)", 60,
         crit_rep_identity},
        {2, "sumset DP equals enumeration oracle on Z_12, h = 0..5", 10, crit_dp_oracle},
        {3, "even n: |A| >= n/2+3 forces 4^A = 5^A = Z_n (n = 6..12)", 30, crit_even_n},
        {4, "parity split: n in {12,16} pass, n = 8 vacuous", 60, crit_parity},
        {5, "odd density: alpha = 0.45, n = 201, 1000 samples + analytic chain", 120,
         crit_odd_density},
        {6, "alpha0: bisection vs closed form, ~0.40447 < 0.4045", 5, crit_alpha0},
        {7, "pointwise bound (m=2,3), pair cover (n<=14), triple cover + n=15 exception", 120,
         crit_small_h_theorems},
        {8, "spectral bound max|S| <= n/3 + 1e-9 (exhaustive n<=14, random n=15..64)", 120,
         crit_spectral_bound},
        {9, "cube maximum closed form = vertex brute force (d = 3..13)", 5, crit_cube_max},
        {10, "energy identity sum|S|^2 = n|A| (1000 seeded, n <= 128)", 10, crit_parseval},
        {11, "doubling constant n <= 200; pair growth + triple floor n <= 16", 60,
         crit_doubling_and_small_lemmas},
        {12, "open question |3^A| >= |A|: exhaustive n <= 18 + proven subcases", 300,
         crit_problem1},
        {13, "seeded determinism: byte-identical reports minus elapsed_s", 60, crit_determinism},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string log;
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt > c.time_limit_s) {
            ok = false;
            log += (log.empty() ? "" : "; ") + std::string("over time limit");
        }
        std::printf("%s  %2d  %-72s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), dt);
        if (!log.empty()) std::printf("        %s\n", log.c_str());
        if (!ok) ++failures;

        if (c.id == 8) {
            std::string odd_log;
            bool odd_ok = spectral_bound_odd_only(odd_log);
            std::printf("        note: restricted to odd n the bound %s (%s)\n",
                        odd_ok ? "holds" : "fails", odd_ok ? "exhaustive n<=13, 10^4 seeded sets per odd n in 15..63" : odd_log.c_str());
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
