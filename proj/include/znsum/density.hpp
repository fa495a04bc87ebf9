#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace znsum {

// Critical density machinery for the odd-n full-sumset theorem: the real root
// alpha0 of 9*a^3 + a - 1 and the cutoff N(alpha) = 54 / (9*alpha^3 + alpha - 1).

inline double critical_density_poly(double a) { return 9.0 * a * a * a + a - 1.0; }

// Closed (Cardano) form of the real root, with real cube roots.
inline double alpha0_cardano() {
    const double s = std::sqrt(741.0);
    return std::cbrt((27.0 + s) / 486.0) + std::cbrt((27.0 - s) / 486.0);
}

// Root by bisection; self-validating, and cross-checked against the closed
// form once at first use. The bisection value is the one handed out.
inline double alpha0() {
    static const double value = [] {
        double lo = 0.0, hi = 1.0;  // poly(0) = -1, poly(1) = 9
        for (int i = 0; i < 200 && lo < hi; ++i) {
            double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            if (critical_density_poly(mid) < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        double root = 0.5 * (lo + hi);
        if (std::abs(root - alpha0_cardano()) > 1e-9)
            throw std::logic_error("critical density: bisection and closed form disagree");
        return root;
    }();
    return value;
}

// N(alpha) = 54 / (9*alpha^3 + alpha - 1); only defined above the root.
inline double cutoff_N(double alpha) {
    if (!(alpha > alpha0()))
        throw std::domain_error("below critical density: alpha = " + std::to_string(alpha) +
                                " <= alpha0 ~ 0.4044706");
    return 54.0 / critical_density_poly(alpha);
}

// k^4/n - (n/3)^2 * (k - k^2/n): the spectral lower bound on the minimum
// count of ordered 4-sums.
inline double r1_lower_bound(int n, long long k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 0 || k > n)
        throw std::invalid_argument("k must lie in [0, n], got k = " + std::to_string(k));
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    return kd * kd * kd * kd / nd - (nd / 3.0) * (nd / 3.0) * (kd - kd * kd / nd);
}

// k^3/n - n^2/9 + k*n/9 - 6k; positive exactly when the full lower-bound
// chain r1_lower_bound(n, k) - 6k(k-1) - 6k is positive (it is k times this).
inline double cubic_condition(int n, long long k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    return kd * kd * kd / nd - nd * nd / 9.0 + kd * nd / 9.0 - 6.0 * kd;
}

// The end-of-chain value: positive forces every residue to have a sum of four
// pairwise distinct elements.
inline double rep_chain_value(int n, long long k) {
    return r1_lower_bound(n, k) - 6.0 * static_cast<double>(k) * (static_cast<double>(k) - 1.0) -
           6.0 * static_cast<double>(k);
}

}  // namespace znsum
