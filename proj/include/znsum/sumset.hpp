#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "znsum/modulus.hpp"
#include "znsum/residue_set.hpp"

namespace znsum {

// layers[j] = j^A: the residues expressible as a sum of j pairwise distinct
// elements of A. layers[0] = {0}; layers[j] is empty for j > |A|.
struct SumsetLayers {
    Modulus n;
    int h_max;
    std::vector<ResidueSet> layers;
};

// Layered 0/1 DP. Elements are processed in ascending residue order and the
// layers are updated high-to-low, so an element enters each addition chain at
// most once. Adding a fixed residue a is a cyclic rotation of the bit vector;
// cost O(|A| * h_max * n / w) for word width w.
inline SumsetLayers sumset_layers(const ResidueSet& a, int h_max) {
    if (h_max < 0) throw std::invalid_argument("h must be >= 0");
    SumsetLayers out{a.mod(), h_max, {}};
    out.layers.assign(h_max + 1, ResidueSet(a.mod()));
    out.layers[0].insert(0);
    int seen = 0;
    for (int elem : a.elements()) {
        ++seen;
        int top = std::min(h_max, seen);
        for (int j = top; j >= 1; --j) {
            if (out.layers[j - 1].empty()) continue;
            out.layers[j] |= out.layers[j - 1].rotated(elem);
        }
    }
    return out;
}

// h^A = { a_1 + ... + a_h : a_i in A pairwise distinct }. {0} for h = 0,
// empty for h > |A|.
inline ResidueSet restricted_sumset(const ResidueSet& a, int h) {
    if (h < 0) throw std::invalid_argument("h must be >= 0");
    if (h > a.size()) return ResidueSet(a.mod());
    return std::move(sumset_layers(a, h).layers[h]);
}

// hA = { a_1 + ... + a_h : a_i in A, repetition allowed }.
inline ResidueSet unrestricted_sumset(const ResidueSet& a, int h) {
    if (h < 0) throw std::invalid_argument("h must be >= 0");
    ResidueSet acc(a.mod());
    acc.insert(0);
    if (h == 0) return acc;
    if (a.empty()) return ResidueSet(a.mod());
    const auto elems = a.elements();
    for (int step = 0; step < h; ++step) {
        ResidueSet next(a.mod());
        for (int elem : elems) next |= acc.rotated(elem);
        acc = next;
    }
    return acc;
}

inline constexpr long long kDefaultCombinationCeiling = 10'000'000;

// C(n, k) clamped at cap+1 so callers can guard without overflow.
inline long long binomial_clamped(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) / i stays integral at every step; widen the product so
        // a near-cap r times n cannot wrap
        __int128 next = static_cast<__int128>(r) * (n - k + i) / i;
        if (next > cap) return cap + 1;
        r = static_cast<long long>(next);
    }
    return r;
}

// Reference implementation of h^A by explicit enumeration of all h-element
// subsets. Independent of the layered DP; used as its oracle.
inline ResidueSet restricted_sumset_naive(const ResidueSet& a, int h,
                                          long long combination_ceiling = kDefaultCombinationCeiling) {
    if (h < 0) throw std::invalid_argument("h must be >= 0");
    ResidueSet out(a.mod());
    if (h == 0) {
        out.insert(0);
        return out;
    }
    const auto elems = a.elements();
    const int k = static_cast<int>(elems.size());
    if (h > k) return out;
    if (binomial_clamped(k, h, combination_ceiling) > combination_ceiling)
        throw std::domain_error("C(" + std::to_string(k) + ", " + std::to_string(h) +
                                ") exceeds the enumeration ceiling " +
                                std::to_string(combination_ceiling));
    std::vector<int> idx(h);
    for (int i = 0; i < h; ++i) idx[i] = i;
    const Modulus n = a.mod();
    while (true) {
        long long sum = 0;
        for (int i : idx) sum += elems[i];
        out.insert(n.reduce(sum));
        // next combination in lexicographic order
        int i = h - 1;
        while (i >= 0 && idx[i] == k - h + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < h; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace znsum
