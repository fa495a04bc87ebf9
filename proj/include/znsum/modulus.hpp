#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace znsum {

// Largest supported group order. Desk-scale tooling; raise with care.
inline constexpr int kMaxModulus = 1 << 20;

// Order of the cyclic group Z_n. All residues are kept canonical in [0, n).
class Modulus {
public:
    explicit Modulus(int n) : n_(n) {
        if (n < 1)
            throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(n));
        if (n > kMaxModulus)
            throw std::invalid_argument("modulus " + std::to_string(n) + " exceeds ceiling " +
                                        std::to_string(kMaxModulus));
    }

    int value() const { return n_; }

    // Canonical representative of x in [0, n).
    int reduce(long long x) const {
        long long r = x % n_;
        return static_cast<int>(r < 0 ? r + n_ : r);
    }

    friend bool operator==(Modulus a, Modulus b) { return a.n_ == b.n_; }
    friend bool operator!=(Modulus a, Modulus b) { return a.n_ != b.n_; }

private:
    int n_;
};

// Order of g in the additive group Z_n.
inline int additive_order(Modulus n, long long g) {
    int r = n.reduce(g);
    return n.value() / std::gcd(static_cast<long long>(n.value()), static_cast<long long>(r));
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace znsum
