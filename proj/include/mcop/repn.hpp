#pragma once

// Exact linear algebra over irreducible gl_n highest-weight modules,
// realized inside tensor products of fundamental representations
// (exterior powers of the vector representation).
//
// Basis bookkeeping:
//   * V_{omega_k} = Lambda^k C^n with basis e_S for k-subsets S of
//     {1,...,n}, encoded as uint32_t bitmasks (bit v-1 <-> element v).
//   * A module with highest weight lambda = sum_k a_k omega_k is cut out
//     inside U = tensor of a_1 copies of V_{omega_1}, then a_2 copies of
//     V_{omega_2}, ... (fundamental factors in ascending k), as the
//     cyclic span of the highest-weight vector
//     u = tensor of e_{1..k} factors.
//   * Lowering operators f_{i,j} (i < j) act on e_S by moving i to j:
//     f_{i,j} e_S = 0 unless i in S and j not in S, otherwise
//     (-1)^{#(S\{i}) intersect (i,j)} e_{S \ {i} union {j}},
//     the sign counting basis elements strictly between i and j that the
//     moved index passes.  Tensor factors get the usual Leibniz action.
//
// The main entry point checks that a family of PBW monomials
// f^{c} u (exponent vectors c supported on the off-diagonal grid cells)
// has full rank weyl_dim(lambda) by fraction-free elimination.

#include <cassert>
#include <cstdint>
#include <map>
#include <vector>

#include "mcop/linalg.hpp"
#include "mcop/numeric.hpp"
#include "mcop/poset.hpp"
#include "mcop/weight.hpp"

namespace mcop {

// Bitmask of the subset {1, ..., k}.
inline std::uint32_t top_subset_mask(int k) {
  return (k == 0) ? 0u : ((1u << k) - 1u);
}

// Sign and target of f_{i,j} e_S; returns false when the action is zero.
inline bool lower_subset(std::uint32_t s, int i, int j, std::uint32_t& out,
                         int& sign) {
  assert(1 <= i && i < j);
  const std::uint32_t bi = 1u << (i - 1);
  const std::uint32_t bj = 1u << (j - 1);
  if (!(s & bi) || (s & bj)) return false;
  const std::uint32_t between_mask = (bj - 1u) & ~((bi << 1) - 1u);
  const int crossings = __builtin_popcount((s & ~bi) & between_mask);
  out = (s & ~bi) | bj;
  sign = (crossings % 2 == 0) ? 1 : -1;
  return true;
}

// A pure tensor of fundamental basis vectors, one subset mask per factor.
using TensorKey = std::vector<std::uint32_t>;
// Integer linear combination of pure tensors.
using RepVector = std::map<TensorKey, Int>;

class TensorSpace {
 public:
  TensorSpace(int n, const Weight& wt) : n_(n) {
    assert(wt.n() == n);
    for (int k = 1; k < n; ++k) {
      for (int c = 0; c < wt.a[k - 1]; ++c) factor_size_.push_back(k);
    }
  }

  int n() const { return n_; }
  int factors() const { return static_cast<int>(factor_size_.size()); }
  int factor_size(int f) const { return factor_size_[f]; }

  RepVector highest_weight_vector() const {
    TensorKey key;
    key.reserve(factor_size_.size());
    for (int k : factor_size_) key.push_back(top_subset_mask(k));
    RepVector v;
    v[key] = Int(1);
    return v;
  }

  // Leibniz action of f_{i,j} across the tensor factors.
  RepVector apply_f(const RepVector& v, int i, int j) const {
    RepVector out;
    for (const auto& [key, coeff] : v) {
      for (std::size_t f = 0; f < key.size(); ++f) {
        std::uint32_t moved = 0;
        int sign = 0;
        if (!lower_subset(key[f], i, j, moved, sign)) continue;
        TensorKey next = key;
        next[f] = moved;
        Int& slot = out[next];
        slot += coeff * sign;
        if (slot == 0) out.erase(next);
      }
    }
    return out;
  }

  // f^{c} u for an exponent vector c indexed by poset element ids; only
  // off-diagonal cells (i < j) may carry nonzero exponents.  Factors are
  // multiplied in ascending grid order (i, j) and the product acts on the
  // right of the argument, so the largest cell's operators are applied
  // first.
  RepVector apply_pbw(const GtPoset& p, const std::vector<int>& expo,
                      const RepVector& start) const {
    assert(static_cast<int>(expo.size()) == p.size());
    RepVector v = start;
    for (int eid = p.size() - 1; eid >= 0; --eid) {
      const PosetElement e = p.element(eid);
      if (expo[eid] == 0) continue;
      assert(e.i < e.j);
      for (int rep = 0; rep < expo[eid]; ++rep) v = apply_f(v, e.i, e.j);
    }
    return v;
  }

 private:
  int n_;
  std::vector<int> factor_size_;
};

// Rank of a family of module vectors, by exact fraction-free elimination.
inline int rep_vectors_rank(const std::vector<RepVector>& vecs) {
  std::map<TensorKey, int> column_of;
  for (const auto& v : vecs) {
    for (const auto& [key, coeff] : v) {
      (void)coeff;
      if (!column_of.count(key)) {
        const int next = static_cast<int>(column_of.size());
        column_of[key] = next;
      }
    }
  }
  if (vecs.empty() || column_of.empty()) return 0;
  IntMatrix m(vecs.size(), std::vector<Int>(column_of.size(), Int(0)));
  for (std::size_t r = 0; r < vecs.size(); ++r) {
    for (const auto& [key, coeff] : vecs[r]) m[r][column_of[key]] = coeff;
  }
  return bareiss_rank(std::move(m));
}

}  // namespace mcop
