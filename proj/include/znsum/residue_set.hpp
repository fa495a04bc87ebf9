#pragma once

#include <bit>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "znsum/modulus.hpp"

namespace znsum {

// A subset of Z_n as a word-packed bit vector with a cached cardinality.
// Bit i of the vector corresponds to residue i; words are little-endian
// (residue i lives in words()[i >> 6], bit i & 63). Bits at positions >= n
// are always zero.
class ResidueSet {
public:
    explicit ResidueSet(Modulus n) : n_(n), words_((n.value() + 63) / 64, 0) {}

    static ResidueSet of(Modulus n, std::initializer_list<int> residues) {
        ResidueSet s(n);
        for (int r : residues) s.insert(n.reduce(r));
        return s;
    }

    static ResidueSet full(Modulus n) {
        ResidueSet s(n);
        for (auto& w : s.words_) w = ~0ull;
        s.mask_top();
        s.card_ = n.value();
        return s;
    }

    // Low 64 residues from an integer mask; requires n <= 64 and mask < 2^n.
    static ResidueSet from_mask(Modulus n, std::uint64_t mask) {
        if (n.value() > 64)
            throw std::invalid_argument("from_mask requires n <= 64");
        if (n.value() < 64 && (mask >> n.value()) != 0)
            throw std::invalid_argument("bitmask has bits at or above n");
        ResidueSet s(n);
        s.words_[0] = mask;
        s.card_ = std::popcount(mask);
        return s;
    }

    // Set literal: comma-separated residues ("0,1,5"), or "0x" + hexadecimal
    // bitmask, bit i = residue i. Empty text is the empty set. Duplicates and
    // out-of-range residues are rejected with the offending token named.
    static ResidueSet parse(Modulus n, std::string_view text);

    Modulus mod() const { return n_; }
    int modulus() const { return n_.value(); }
    int size() const { return card_; }
    bool empty() const { return card_ == 0; }
    bool is_full() const { return card_ == n_.value(); }

    bool contains(int r) const {
        return r >= 0 && r < n_.value() && ((words_[r >> 6] >> (r & 63)) & 1);
    }

    void insert(int r) {
        check_index(r);
        std::uint64_t& w = words_[r >> 6];
        std::uint64_t bit = 1ull << (r & 63);
        if (!(w & bit)) {
            w |= bit;
            ++card_;
        }
    }

    void erase(int r) {
        check_index(r);
        std::uint64_t& w = words_[r >> 6];
        std::uint64_t bit = 1ull << (r & 63);
        if (w & bit) {
            w &= ~bit;
            --card_;
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(card_);
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    // Integer value of the bit vector; requires n <= 64.
    std::uint64_t low_mask() const {
        if (n_.value() > 64)
            throw std::invalid_argument("low_mask requires n <= 64");
        return words_[0];
    }

    // {a + t mod n : a in A}. Cardinality is preserved.
    ResidueSet rotated(int t) const {
        t = n_.reduce(t);
        if (t == 0 || card_ == 0) return *this;
        const int n = n_.value();
        ResidueSet out(n_);
        if (n <= 64) {
            std::uint64_t w = words_[0];
            std::uint64_t m = (n == 64) ? ~0ull : ((1ull << n) - 1);
            out.words_[0] = ((w << t) | (w >> (n - t))) & m;
        } else {
            const int W = static_cast<int>(words_.size());
            // out = (bits << t | bits >> (n - t)) within the n-bit field
            const int q = t >> 6, r = t & 63;
            for (int i = W - 1; i >= q; --i) {
                std::uint64_t v = words_[i - q] << r;
                if (r != 0 && i - q - 1 >= 0) v |= words_[i - q - 1] >> (64 - r);
                out.words_[i] |= v;
            }
            const int s = n - t, q2 = s >> 6, r2 = s & 63;
            for (int i = 0; i + q2 < W; ++i) {
                std::uint64_t v = words_[i + q2] >> r2;
                if (r2 != 0 && i + q2 + 1 < W) v |= words_[i + q2 + 1] << (64 - r2);
                out.words_[i] |= v;
            }
            out.mask_top();
        }
        out.card_ = card_;
        return out;
    }

    // {-a mod n : a in A}.
    ResidueSet reflected() const {
        ResidueSet out(n_);
        for (int a : elements()) out.insert(n_.reduce(-static_cast<long long>(a)));
        return out;
    }

    // {u * a mod n : a in A}; u must be a unit of Z_n.
    ResidueSet dilated(long long u) const {
        int uu = n_.reduce(u);
        if (std::gcd(static_cast<long long>(uu), static_cast<long long>(n_.value())) != 1)
            throw std::domain_error("not a unit: gcd(" + std::to_string(uu) + ", " +
                                    std::to_string(n_.value()) + ") != 1");
        ResidueSet out(n_);
        for (int a : elements())
            out.insert(n_.reduce(static_cast<long long>(uu) * a));
        return out;
    }

    ResidueSet complemented() const {
        ResidueSet out(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        out.mask_top();
        out.card_ = n_.value() - card_;
        return out;
    }

    ResidueSet operator|(const ResidueSet& o) const {
        ResidueSet out = *this;
        out |= o;
        return out;
    }

    ResidueSet operator&(const ResidueSet& o) const {
        check_same(o);
        ResidueSet out(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & o.words_[i];
        out.recount();
        return out;
    }

    ResidueSet& operator|=(const ResidueSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        recount();
        return *this;
    }

    friend bool operator==(const ResidueSet& a, const ResidueSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const ResidueSet& a, const ResidueSet& b) { return !(a == b); }

    // Numeric order of the bit-vector value; ties enumeration and witness
    // preference to "ascending bitmask".
    bool mask_less(const ResidueSet& o) const {
        check_same(o);
        for (std::size_t i = words_.size(); i-- > 0;) {
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        }
        return false;
    }

    // Canonical comma literal; empty set renders as the empty string.
    std::string to_string() const {
        std::string out;
        for (int a : elements()) {
            if (!out.empty()) out += ',';
            out += std::to_string(a);
        }
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check_index(int r) const {
        if (r < 0 || r >= n_.value())
            throw std::invalid_argument("residue " + std::to_string(r) + " out of range [0, " +
                                        std::to_string(n_.value()) + ")");
    }
    void check_same(const ResidueSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("modulus mismatch in set operation");
    }
    void mask_top() {
        int rem = n_.value() & 63;
        if (rem != 0) words_.back() &= (1ull << rem) - 1;
    }
    void recount() {
        card_ = 0;
        for (auto w : words_) card_ += std::popcount(w);
    }

    Modulus n_;
    std::vector<std::uint64_t> words_;
    int card_ = 0;
};

inline ResidueSet ResidueSet::parse(Modulus n, std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    ResidueSet out(n);
    if (text.empty()) return out;

    if (text.size() > 2 && (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X")) {
        std::string_view hex = text.substr(2);
        // nibble k (from the right) covers residues 4k..4k+3
        for (std::size_t i = 0; i < hex.size(); ++i) {
            char c = hex[hex.size() - 1 - i];
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
            else
                throw std::invalid_argument("bad set literal: '" + std::string(1, c) +
                                            "' is not a hex digit");
            for (int b = 0; b < 4; ++b) {
                if (!(v >> b & 1)) continue;
                long long r = static_cast<long long>(i) * 4 + b;
                if (r >= n.value())
                    throw std::invalid_argument("bad set literal: bitmask bit " + std::to_string(r) +
                                                " is >= n = " + std::to_string(n.value()));
                out.insert(static_cast<int>(r));
            }
        }
        return out;
    }

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : comma - pos));
        std::string tok_str(tok);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad set literal: token '" + tok_str + "' is not a residue");
        if (value < 0 || value >= n.value())
            throw std::invalid_argument("bad set literal: residue '" + tok_str +
                                        "' out of range [0, " + std::to_string(n.value()) + ")");
        if (out.contains(value))
            throw std::invalid_argument("bad set literal: duplicate residue '" + tok_str + "'");
        out.insert(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline ResidueSet translate(const ResidueSet& a, int t) { return a.rotated(t); }

inline ResidueSet dilate(const ResidueSet& a, long long u) { return a.dilated(u); }

// (A_e, A_o): even and odd elements of A. Only defined for even n.
inline std::pair<ResidueSet, ResidueSet> parity_split(const ResidueSet& a) {
    if (a.modulus() % 2 != 0)
        throw std::domain_error("parity split undefined for odd modulus " +
                                std::to_string(a.modulus()));
    ResidueSet evens(a.mod()), odds(a.mod());
    for (int r : a.elements()) (r % 2 == 0 ? evens : odds).insert(r);
    return {evens, odds};
}

// Even residues {0, 2, ..., n-2} of an even modulus.
inline ResidueSet even_subgroup(Modulus n) {
    if (n.value() % 2 != 0)
        throw std::domain_error("even subgroup requires even n");
    ResidueSet out(n);
    for (int r = 0; r < n.value(); r += 2) out.insert(r);
    return out;
}

inline ResidueSet odd_coset(Modulus n) {
    if (n.value() % 2 != 0)
        throw std::domain_error("odd residue class requires even n");
    ResidueSet out(n);
    for (int r = 1; r < n.value(); r += 2) out.insert(r);
    return out;
}

inline constexpr int kDefaultEnumCeiling = 24;
// Past this, 2^n subsets is out of desk range no matter what the caller says.
inline constexpr int kHardEnumCeiling = 30;

// Visits every subset A of Z_n with size_min <= |A| <= size_max exactly once,
// in ascending bitmask order. The order is part of the contract: witnesses and
// argmin sets are reproducible across runs and implementations.
template <class Visitor>
void enumerate_subsets(Modulus n, int size_min, int size_max, Visitor&& visit,
                       int ceiling = kDefaultEnumCeiling) {
    const int nv = n.value();
    if (ceiling > kHardEnumCeiling) ceiling = kHardEnumCeiling;
    if (nv > ceiling)
        throw std::domain_error("subset enumeration over ceiling: n = " + std::to_string(nv) +
                                " > " + std::to_string(ceiling) +
                                " (override with --exhaustive-ceiling or ZN_EXHAUSTIVE_CEILING)");
    const std::uint64_t total = 1ull << nv;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        int pc = std::popcount(mask);
        if (pc < size_min || pc > size_max) continue;
        visit(ResidueSet::from_mask(n, mask));
    }
}

}  // namespace znsum
