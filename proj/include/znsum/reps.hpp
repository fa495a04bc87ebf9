#pragma once

#include <string>
#include <utility>

#include "znsum/count_vector.hpp"
#include "znsum/modulus.hpp"
#include "znsum/residue_set.hpp"

namespace znsum {

// g_c(m) = #{ a in A : c*a = m (mod n) }, the multiplicity vector of a -> c*a.
inline CountVector pushforward(const ResidueSet& a, int c) {
    if (c < 1) throw std::invalid_argument("pushforward multiplier must be >= 1");
    CountVector out(a.mod());
    for (int r : a.elements())
        out.add_at(a.mod().reduce(static_cast<long long>(c) * r), 1);
    return out;
}

// C_h(m) = number of h-element subsets of A summing to m (mod n). DP over
// elements with the (subset size, residue) table updated size-descending.
inline CountVector distinct_subset_counts(const ResidueSet& a, int h) {
    if (h < 0) throw std::invalid_argument("h must be >= 0");
    if (h > 8) throw std::domain_error("distinct_subset_counts: h = " + std::to_string(h) +
                                       " exceeds the DP guard (8)");
    const Modulus n = a.mod();
    std::vector<CountVector> table(h + 1, CountVector(n));
    table[0].add_at(0, 1);
    int seen = 0;
    for (int elem : a.elements()) {
        ++seen;
        int top = std::min(h, seen);
        for (int j = top; j >= 1; --j) {
            for (int m = 0; m < n.value(); ++m) {
                long long c = table[j - 1][m];
                if (c != 0) table[j].add_at(n.reduce(m + elem), c);
            }
        }
    }
    return std::move(table[h]);
}

// Exact representation counts for sums of four elements of A.
//
// Counting conventions (fixed so the five auxiliary counts satisfy the signed
// identity below):
//   R1(m): ordered quadruples (a1,a2,a3,a4), m = a1+a2+a3+a4
//   R2(m): ordered pairs (a1,a2) plus a3 (any of the three may coincide),
//          m = a1+a2+2*a3
//   R3(m): ordered pairs (a1,a2), m = 2*a1+2*a2
//   R4(m): ordered pairs (a1,a2), m = a1+3*a2
//   R5(m): single elements, m = 4*a1
//   R(m):  ordered quadruples with pairwise distinct entries; R = 24*C4
//   C4(m): unordered 4-element subsets of A summing to m
struct RepProfile {
    CountVector R, R1, R2, R3, R4, R5, C4;

    // max_m |R(m) - 24*C4(m)|; zero when the signed identity is intact
    long long identity_residual() const { return max_abs_diff(R, C4.scaled(24)); }
};

// R = R1 - 6*R2 + 3*R3 + 8*R4 - 6*R5, evaluated in signed exact arithmetic.
// A negative entry cannot arise from any actual set; it means the arithmetic
// itself is broken, so it is a hard failure rather than a recoverable error.
inline RepProfile rep_profile(const ResidueSet& a) {
    const CountVector f = CountVector::indicator(a);
    const CountVector g2 = pushforward(a, 2);
    const CountVector g3 = pushforward(a, 3);
    const CountVector g4 = pushforward(a, 4);

    const CountVector ff = cyclic_convolve(f, f);
    CountVector r1 = cyclic_convolve(cyclic_convolve(ff, f), f);
    CountVector r2 = cyclic_convolve(ff, g2);
    CountVector r3 = cyclic_convolve(g2, g2);
    CountVector r4 = cyclic_convolve(f, g3);
    CountVector r5 = g4;

    CountVector r = r1 - r2.scaled(6) + r3.scaled(3) + r4.scaled(8) - r5.scaled(6);
    if (!r.all_nonnegative()) {
        for (int m = 0; m < r.length(); ++m) {
            if (r[m] < 0)
                throw std::logic_error("signed representation identity violated: R(" +
                                       std::to_string(m) + ") = " + std::to_string(r[m]) +
                                       " < 0 for A = {" + a.to_string() + "} mod " +
                                       std::to_string(a.modulus()));
        }
    }
    CountVector c4 = distinct_subset_counts(a, 4);
    return RepProfile{std::move(r), std::move(r1), std::move(r2), std::move(r3),
                      std::move(r4), std::move(r5), std::move(c4)};
}

// Residue minimizing R1 and the minimum value; ties go to the smallest m.
inline std::pair<int, long long> min_R1(const ResidueSet& a) {
    const CountVector f = CountVector::indicator(a);
    const CountVector ff = cyclic_convolve(f, f);
    const CountVector r1 = cyclic_convolve(cyclic_convolve(ff, f), f);
    int arg = 0;
    long long best = r1[0];
    for (int m = 1; m < r1.length(); ++m) {
        if (r1[m] < best) {
            best = r1[m];
            arg = m;
        }
    }
    return {arg, best};
}

}  // namespace znsum
