#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "znsum/modulus.hpp"
#include "znsum/residue_set.hpp"

namespace znsum {

// e(j/n) = exp(2*pi*i*j/n) for j = 0..n-1.
inline std::vector<std::complex<double>> unit_roots(Modulus n) {
    const int nv = n.value();
    std::vector<std::complex<double>> roots(nv);
    for (int j = 0; j < nv; ++j) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / nv;
        roots[j] = {std::cos(angle), std::sin(angle)};
    }
    return roots;
}

// values[h] = S(h/n) = sum over a in A of e(h*a/n). The phase is reduced as
// (h*a mod n)/n before the trig call, which keeps every angle in [0, 2*pi).
struct Spectrum {
    Modulus n;
    std::vector<std::complex<double>> values;

    // max over h = 1..n-1 of |S(h/n)|; 0 for n = 1
    double max_offdc() const {
        double mx = 0.0;
        for (int h = 1; h < n.value(); ++h) mx = std::max(mx, std::abs(values[h]));
        return mx;
    }

    int argmax_offdc() const {
        int arg = 1;
        double mx = -1.0;
        for (int h = 1; h < n.value(); ++h) {
            double v = std::abs(values[h]);
            if (v > mx) {
                mx = v;
                arg = h;
            }
        }
        return arg;
    }

    // sum over all h of |S(h/n)|^2; equals n*|A| exactly in exact arithmetic
    double energy() const {
        double s = 0.0;
        for (const auto& v : values) s += std::norm(v);
        return s;
    }
};

namespace detail {
// Scans evaluate many sets at one fixed n; keep the last root table around.
inline const std::vector<std::complex<double>>& cached_unit_roots(Modulus n) {
    thread_local int cached_n = 0;
    thread_local std::vector<std::complex<double>> cached;
    if (cached_n != n.value()) {
        cached = unit_roots(n);
        cached_n = n.value();
    }
    return cached;
}
}  // namespace detail

inline Spectrum spectrum(const ResidueSet& a) {
    const Modulus n = a.mod();
    const auto& roots = detail::cached_unit_roots(n);
    const auto elems = a.elements();
    Spectrum out{n, std::vector<std::complex<double>>(n.value())};
    for (int h = 0; h < n.value(); ++h) {
        std::complex<double> acc = 0.0;
        for (int elem : elems)
            acc += roots[static_cast<long long>(h) * elem % n.value()];
        out.values[h] = acc;
    }
    return out;
}

inline double spectrum_max_offdc(const ResidueSet& a) {
    if (a.modulus() < 2)
        throw std::invalid_argument("spectrum_max_offdc requires n >= 2");
    return spectrum(a).max_offdc();
}

// |energy - n*|A|| / max(1, n*|A|): relative deviation from the energy
// identity sum |S|^2 = n*|A|.
inline double parseval_residual(const ResidueSet& a) {
    const Spectrum s = spectrum(a);
    const double target = static_cast<double>(a.modulus()) * a.size();
    return std::abs(s.energy() - target) / std::max(1.0, target);
}

inline void check_lemma1_domain(int d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("d must be an odd integer >= 3, got " + std::to_string(d));
}

// Closed form for max over x in [0,X]^d of |sum x_j e(j/d)|, d odd.
inline double lemma1_max(int d, double x_bound) {
    check_lemma1_domain(d);
    if (!(x_bound > 0.0)) throw std::invalid_argument("X must be positive");
    return x_bound / (2.0 * std::sin(std::numbers::pi / (2.0 * d)));
}

// Same maximum by brute force over the 2^d vertices of the cube: the modulus
// of an affine map of x attains its maximum at a vertex, so scanning
// x in {0,X}^d suffices.
inline double lemma1_vertex_bruteforce(int d, double x_bound) {
    check_lemma1_domain(d);
    if (!(x_bound > 0.0)) throw std::invalid_argument("X must be positive");
    if (d > 21) throw std::domain_error("vertex enumeration guard: d = " + std::to_string(d) +
                                        " > 21");
    std::vector<std::complex<double>> dirs(d);
    for (int j = 1; j <= d; ++j) {
        double angle = 2.0 * std::numbers::pi * j / d;
        dirs[j - 1] = {x_bound * std::cos(angle), x_bound * std::sin(angle)};
    }
    double best = 0.0;
    // DFS over include/exclude decisions with a running sum
    auto walk = [&](auto&& self, int j, std::complex<double> acc) -> void {
        if (j == d) {
            best = std::max(best, std::abs(acc));
            return;
        }
        self(self, j + 1, acc);
        self(self, j + 1, acc + dirs[j]);
    };
    walk(walk, 0, {0.0, 0.0});
    return best;
}

}  // namespace znsum
