#pragma once

#include <string>
#include <vector>

#include "znsum/modulus.hpp"
#include "znsum/residue_set.hpp"

namespace znsum {

namespace detail {
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflow in addition");
    return r;
}
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflow in multiplication");
    return r;
}
}  // namespace detail

// Length-n vector of exact counts indexed by residue. Arithmetic is 64-bit
// with overflow detection; an overflow throws rather than wrapping.
class CountVector {
public:
    explicit CountVector(Modulus n) : n_(n), c_(n.value(), 0) {}

    static CountVector indicator(const ResidueSet& a) {
        CountVector out(a.mod());
        for (int r : a.elements()) out.c_[r] = 1;
        return out;
    }

    static CountVector delta(Modulus n, int m) {
        CountVector out(n);
        out.c_[n.reduce(m)] = 1;
        return out;
    }

    Modulus mod() const { return n_; }
    int length() const { return static_cast<int>(c_.size()); }
    long long operator[](int m) const { return c_[m]; }

    void add_at(int m, long long v) { c_[m] = detail::checked_add(c_[m], v); }

    long long total() const {
        long long t = 0;
        for (long long v : c_) t = detail::checked_add(t, v);
        return t;
    }

    long long min_value() const {
        long long m = c_[0];
        for (long long v : c_) m = std::min(m, v);
        return m;
    }

    bool all_nonnegative() const {
        for (long long v : c_)
            if (v < 0) return false;
        return true;
    }

    // Residues with a positive count.
    ResidueSet support() const {
        ResidueSet out(n_);
        for (int m = 0; m < length(); ++m)
            if (c_[m] > 0) out.insert(m);
        return out;
    }

    CountVector scaled(long long k) const {
        CountVector out(n_);
        for (int m = 0; m < length(); ++m) out.c_[m] = detail::checked_mul(c_[m], k);
        return out;
    }

    CountVector operator+(const CountVector& o) const {
        check_same(o);
        CountVector out(n_);
        for (int m = 0; m < length(); ++m) out.c_[m] = detail::checked_add(c_[m], o.c_[m]);
        return out;
    }

    CountVector operator-(const CountVector& o) const {
        check_same(o);
        CountVector out(n_);
        for (int m = 0; m < length(); ++m) out.c_[m] = detail::checked_add(c_[m], -o.c_[m]);
        return out;
    }

    friend bool operator==(const CountVector& a, const CountVector& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CountVector& a, const CountVector& b) { return !(a == b); }

private:
    void check_same(const CountVector& o) const {
        if (n_ != o.n_) throw std::invalid_argument("modulus mismatch in count arithmetic");
    }

    Modulus n_;
    std::vector<long long> c_;
};

// w(m) = sum over i+j = m (mod n) of u(i) * v(j), exact. Schoolbook O(n^2);
// at desk scale (n <= 4096) this is sub-second and keeps everything integral.
inline CountVector cyclic_convolve(const CountVector& u, const CountVector& v) {
    if (u.mod() != v.mod()) throw std::invalid_argument("modulus mismatch in convolution");
    const int n = u.length();
    CountVector w(u.mod());
    for (int i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            int m = i + j;
            if (m >= n) m -= n;
            w.add_at(m, detail::checked_mul(u[i], v[j]));
        }
    }
    return w;
}

// max_m |a(m) - b(m)|
inline long long max_abs_diff(const CountVector& a, const CountVector& b) {
    long long worst = 0;
    for (int m = 0; m < a.length(); ++m) {
        long long d = a[m] - b[m];
        worst = std::max(worst, d < 0 ? -d : d);
    }
    return worst;
}

}  // namespace znsum
