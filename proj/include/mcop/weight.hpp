#pragma once

// Dominant integral weights for sl_n in the fundamental-weight basis, and the
// Weyl dimension formula used as the counting oracle throughout the tests.
//
// A weight is a tuple (a_1,...,a_{n-1}) of non-negative multiplicities of the
// fundamental weights.  The associated partition-style coordinates are
//   lambda(i) = a_i + a_{i+1} + ... + a_{n-1},   lambda(n) = 0,
// and the irreducible sl_n module with highest weight lambda has dimension
//   prod_{1<=i<j<=n} (lambda(i) - lambda(j) + j - i) / (j - i),
// an exact integer computed here in arbitrary precision.

#include <cassert>
#include <numeric>
#include <string>
#include <vector>

#include "mcop/numeric.hpp"

namespace mcop {

struct Weight {
    std::vector<int> a;  // a[k-1] = multiplicity of the k-th fundamental weight

    explicit Weight(std::vector<int> coeffs) : a(std::move(coeffs)) {}
    Weight(int n, std::initializer_list<int> coeffs) : a(coeffs) {
        assert(static_cast<int>(a.size()) == n - 1);
    }

    int n() const { return static_cast<int>(a.size()) + 1; }
    int total() const { return std::accumulate(a.begin(), a.end(), 0); }

    // lambda(i) = a_i + ... + a_{n-1}; lambda(n) = 0.
    int lambda(int i) const {
        assert(1 <= i && i <= n());
        int s = 0;
        for (int k = i; k <= n() - 1; ++k) s += a[static_cast<size_t>(k - 1)];
        return s;
    }

    static Weight fundamental(int n, int k) {
        std::vector<int> c(static_cast<size_t>(n - 1), 0);
        c[static_cast<size_t>(k - 1)] = 1;
        return Weight(std::move(c));
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + ")";
    }
};

inline Int weyl_dim(const Weight& wt) {
    const int n = wt.n();
    Int num = 1, den = 1;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            num *= wt.lambda(i) - wt.lambda(j) + j - i;
            den *= j - i;
        }
    return exact_div(num, den);
}

// All weights with total() <= cap, ordered lexicographically; used by the
// exhaustive sweeps.
inline std::vector<Weight> weights_up_to(int n, int cap) {
    std::vector<Weight> out;
    std::vector<int> cur(static_cast<size_t>(n - 1), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            out.push_back(Weight(cur));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, cap);
    return out;
}

}  // namespace mcop
