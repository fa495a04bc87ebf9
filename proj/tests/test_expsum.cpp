#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "znsum/density.hpp"
#include "znsum/expsum.hpp"
#include "znsum/reps.hpp"
#include "znsum/residue_set.hpp"
#include "znsum/sampling.hpp"

using namespace znsum;
using Catch::Matchers::WithinAbs;

TEST_CASE("spectrum point values") {
    auto s = spectrum(ResidueSet::of(Modulus(4), {0, 2}));
    CHECK_THAT(s.values[0].real(), WithinAbs(2.0, 1e-12));
    CHECK_THAT(std::abs(s.values[1]), WithinAbs(0.0, 1e-12));  // 1 + e(1/2) = 0

    auto t = spectrum(ResidueSet::of(Modulus(9), {0, 3, 6}));
    CHECK_THAT(std::abs(t.values[1]), WithinAbs(0.0, 1e-12));  // cube roots of unity

    SubsetSampler gen(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = gen.uniform_int(1, 90);
        auto a = gen.k_subset(Modulus(n), gen.uniform_int(0, n));
        auto sp = spectrum(a);
        CHECK_THAT(sp.values[0].real(), WithinAbs(static_cast<double>(a.size()), 1e-9));
        CHECK_THAT(sp.values[0].imag(), WithinAbs(0.0, 1e-9));
        for (const auto& v : sp.values) CHECK(std::abs(v) <= a.size() + 1e-9);
        // energy identity
        CHECK_THAT(sp.energy(), WithinAbs(static_cast<double>(n) * a.size(),
                                          1e-6 * std::max(1.0, static_cast<double>(n) * a.size())));
    }
}

TEST_CASE("off-DC maximum") {
    CHECK_THAT(spectrum_max_offdc(ResidueSet::full(Modulus(7))), WithinAbs(0.0, 1e-12));
    CHECK_THAT(spectrum_max_offdc(ResidueSet::of(Modulus(3), {0})), WithinAbs(1.0, 1e-12));
    CHECK_THROWS_AS(spectrum_max_offdc(ResidueSet(Modulus(1))), std::invalid_argument);
}

TEST_CASE("n/3 bound holds on odd moduli") {
    for (int n = 3; n <= 13; n += 2) {
        enumerate_subsets(Modulus(n), 0, n, [&](const ResidueSet& a) {
            REQUIRE(spectrum_max_offdc(a) <= n / 3.0 + 1e-9);
        });
    }
    SubsetSampler gen(23);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 * gen.uniform_int(7, 31) + 1;
        auto a = gen.k_subset(Modulus(n), gen.uniform_int(0, n));
        REQUIRE(spectrum_max_offdc(a) <= n / 3.0 + 1e-9);
    }
}

TEST_CASE("even moduli genuinely exceed n/3") {
    // multiples of 2 concentrated in one parity class push |S(h/n)| to n/2
    CHECK_THAT(spectrum_max_offdc(ResidueSet::of(Modulus(6), {0, 2, 4})), WithinAbs(3.0, 1e-9));
    CHECK(spectrum_max_offdc(ResidueSet::of(Modulus(6), {0, 2, 4})) > 6 / 3.0 + 1e-9);
    CHECK(spectrum_max_offdc(ResidueSet::of(Modulus(4), {0, 2})) > 4 / 3.0 + 1e-9);
}

TEST_CASE("trigonometric cube maximum") {
    CHECK_THAT(lemma1_max(3, 1.0), WithinAbs(1.0, 1e-12));
    CHECK_THAT(lemma1_max(3, 2.0), WithinAbs(2.0, 1e-12));
    CHECK_THAT(lemma1_max(5, 1.0), WithinAbs(1.0 / (2.0 * std::sin(std::numbers::pi / 10.0)), 1e-12));
    CHECK_THAT(lemma1_max(5, 1.0), WithinAbs(1.6180339887, 1e-9));  // golden ratio
    CHECK_THROWS_AS(lemma1_max(4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lemma1_max(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lemma1_max(3, 0.0), std::invalid_argument);

    SECTION("vertex brute force agrees with the closed form") {
        for (int d : {3, 5, 7, 9, 11, 13}) {
            for (double x : {1.0, 2.5}) {
                CHECK_THAT(lemma1_vertex_bruteforce(d, x), WithinAbs(lemma1_max(d, x), 1e-9));
            }
        }
        CHECK_THROWS_AS(lemma1_vertex_bruteforce(23, 1.0), std::domain_error);
        CHECK_THROWS_AS(lemma1_vertex_bruteforce(6, 1.0), std::invalid_argument);
    }
}

TEST_CASE("critical density") {
    const double a0 = alpha0();
    CHECK_THAT(a0, WithinAbs(0.40447, 1e-5));
    CHECK(a0 < 0.4045);
    CHECK_THAT(critical_density_poly(a0), WithinAbs(0.0, 1e-12));
    CHECK_THAT(a0, WithinAbs(alpha0_cardano(), 1e-9));
}

TEST_CASE("density cutoff") {
    CHECK_THAT(cutoff_N(0.45), WithinAbs(199.9074502545, 1e-6));
    CHECK_THAT(cutoff_N(0.5), WithinAbs(86.4, 1e-9));
    CHECK_THROWS_AS(cutoff_N(0.40), std::domain_error);
    CHECK_THROWS_AS(cutoff_N(alpha0()), std::domain_error);
    CHECK(cutoff_N(alpha0() + 1e-9) > 1e7);  // diverges at the root
    // monotone decreasing above the root
    double prev = cutoff_N(0.41);
    for (double a = 0.42; a < 1.0; a += 0.01) {
        double cur = cutoff_N(a);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("spectral lower bound for ordered 4-sums") {
    CHECK_THAT(r1_lower_bound(7, 7), WithinAbs(343.0, 1e-9));
    CHECK_THAT(r1_lower_bound(12, 0), WithinAbs(0.0, 1e-12));
    CHECK(r1_lower_bound(201, 91) > 0.0);
    CHECK_THROWS_AS(r1_lower_bound(5, 6), std::invalid_argument);

    SECTION("bound is valid against exact counts at the theorem's scale") {
        // k > 0.45 n and n > N(0.45); slack 1 absorbs the real/integer boundary
        const int n = 201;
        const long long k = 91;
        const double bound = r1_lower_bound(n, k);
        SubsetSampler gen(29);
        long long worst = -1;
        for (int trial = 0; trial < 100; ++trial) {
            auto a = gen.k_subset(Modulus(n), static_cast<int>(k));
            auto [m, v] = min_R1(a);
            if (worst < 0 || v < worst) worst = v;
        }
        CHECK(static_cast<double>(worst) >= bound - 1.0);
    }
}

TEST_CASE("cubic condition") {
    CHECK(cubic_condition(201, 91) > 0.0);
    CHECK(cubic_condition(100, 10) < 0.0);
    for (int n : {55, 100, 250}) {
        CHECK_THAT(cubic_condition(n, n),
                   WithinAbs(static_cast<double>(n) * n - 6.0 * n, 1e-6));
        CHECK(cubic_condition(n, n) > 0.0);
    }
    // chain value is k times the cubic condition
    CHECK_THAT(rep_chain_value(201, 91), WithinAbs(91.0 * cubic_condition(201, 91), 1e-6));
}
