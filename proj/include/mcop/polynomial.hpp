#pragma once

// Laurent monomials, minors of a generic matrix, and the marked-cell variable
// order that drives every initial-term computation in the finite case.
//
// Variables z_{i,j} live on the full n x n grid (1-based), flattened as
// vid = (i-1)*n + (j-1).  Exponent vectors are dense and may be negative
// (the rewriting maps produce honest Laurent monomials).
//
// The variable order "<" is a linear order on the grid, built row by row
// (all of row 1 above all of row 2, etc).  Within row i it is produced by a
// zigzag over the r-table positions: let l_1 > l_2 > ... > l_m = i be the
// columns with (i,l) in O ∪ A.  The positions are emitted
//   l_1, n, n-1, ..., l_1+1, l_2, l_1-1, ..., l_2+1, ..., l_m, ..., l_m+1,
//   i-1, i-2, ..., 1,
// and the variable at position p is z_{i, r(i,p)}.  Monomials compare
// lexicographically by the most significant (largest) variable whose
// exponents differ; the monomial with the larger exponent there is larger.

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "mcop/numeric.hpp"
#include "mcop/permutation.hpp"
#include "mcop/pipedream.hpp"
#include "mcop/poset.hpp"

namespace mcop {

struct VarGrid {
    int n = 0;
    int vars() const { return n * n; }
    int vid(int i, int j) const {
        assert(1 <= i && i <= n && 1 <= j && j <= n);
        return (i - 1) * n + (j - 1);
    }
    std::pair<int, int> ij(int v) const { return {v / n + 1, v % n + 1}; }
};

using Expo = std::vector<int>;  // dense exponent vector over VarGrid

inline Expo expo_zero(int vars) { return Expo(static_cast<size_t>(vars), 0); }
inline Expo expo_zero(const VarGrid& g) { return expo_zero(g.vars()); }

inline Expo expo_add(const Expo& a, const Expo& b) {
    assert(a.size() == b.size());
    Expo out(a.size());
    for (size_t t = 0; t < a.size(); ++t) out[t] = a[t] + b[t];
    return out;
}

inline std::string expo_str(const VarGrid& g, const Expo& e) {
    std::string s;
    for (int v = 0; v < g.vars(); ++v) {
        if (e[static_cast<size_t>(v)] == 0) continue;
        auto [i, j] = g.ij(v);
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(i) + "," + std::to_string(j);
        if (e[static_cast<size_t>(v)] != 1) s += "^" + std::to_string(e[static_cast<size_t>(v)]);
    }
    return s.empty() ? "1" : s;
}

struct Term {
    Int coeff;
    Expo expo;
};

// Minor of the generic matrix (z_{a,b}) with rows 1..k and columns
// cols[0..k-1] in the given order (repeats make it vanish, order flips sign).
// Expanded as the full sum over S_k; every use in this library has k <= 6.
inline std::vector<Term> minor_det(const VarGrid& g, const std::vector<int>& cols) {
    const int k = static_cast<int>(cols.size());
    assert(k >= 1 && k <= g.n);
    std::vector<int> perm(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) perm[static_cast<size_t>(t)] = t;
    std::vector<Term> out;
    do {
        int sign = Permutation::sort_sign(perm);
        Expo e = expo_zero(g);
        for (int a = 1; a <= k; ++a)
            e[static_cast<size_t>(g.vid(a, cols[static_cast<size_t>(perm[static_cast<size_t>(a - 1)])]))] += 1;
        out.push_back({Int(sign), std::move(e)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Combine repeated monomials (repeated columns only).
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.expo < b.expo; });
    std::vector<Term> norm;
    for (auto& t : out) {
        if (!norm.empty() && norm.back().expo == t.expo)
            norm.back().coeff += t.coeff;
        else
            norm.push_back(std::move(t));
    }
    norm.erase(std::remove_if(norm.begin(), norm.end(),
                              [](const Term& t) { return t.coeff == 0; }),
               norm.end());
    return norm;
}

class VarOrder {
public:
    VarOrder(const GtPoset& p, const OCPartition& oc, const RTable& rt) : grid_{p.n()} {
        const int n = p.n();
        rank_.assign(static_cast<size_t>(grid_.vars()), -1);
        var_at_.clear();
        for (int i = 1; i <= n; ++i) {
            std::vector<int> marked_desc;  // columns l >= i with (i,l) in O ∪ A
            for (int l = n; l >= i; --l) {
                int eid = p.id(i, l);
                if (l == i || oc.in_o(p, eid)) marked_desc.push_back(l);
            }
            std::vector<int> positions;
            int prev_upper = n + 1;
            for (int l : marked_desc) {
                positions.push_back(l);
                for (int u = prev_upper - 1; u >= l + 1; --u) positions.push_back(u);
                prev_upper = l;
            }
            for (int u = i - 1; u >= 1; --u) positions.push_back(u);
            assert(static_cast<int>(positions.size()) == n);
            for (int pos : positions) var_at_.push_back(grid_.vid(i, rt.r(i, pos)));
        }
        assert(static_cast<int>(var_at_.size()) == grid_.vars());
        for (int rank = 0; rank < grid_.vars(); ++rank) {
            assert(rank_[static_cast<size_t>(var_at_[static_cast<size_t>(rank)])] == -1);
            rank_[static_cast<size_t>(var_at_[static_cast<size_t>(rank)])] = rank;
        }
    }

    const VarGrid& grid() const { return grid_; }

    // Twist by a permutation of the column index: the twisted order places
    // z_{i,j} where the plain order places z_{i, tau^{-1}(j)}.
    VarOrder twisted_by(const Permutation& tau) const {
        VarOrder out(*this);
        Permutation tinv = tau.inverse();
        for (int v = 0; v < grid_.vars(); ++v) {
            auto [i, j] = grid_.ij(v);
            out.rank_[static_cast<size_t>(v)] =
                rank_[static_cast<size_t>(grid_.vid(i, tinv(j)))];
        }
        for (int v = 0; v < grid_.vars(); ++v)
            out.var_at_[static_cast<size_t>(out.rank_[static_cast<size_t>(v)])] = v;
        return out;
    }

    int rank(int vid) const { return rank_[static_cast<size_t>(vid)]; }
    int var_at_rank(int rank) const { return var_at_[static_cast<size_t>(rank)]; }

    // -1 / 0 / +1 as a < b, a == b, a > b.  Lexicographic from the largest
    // variable down; larger exponent at the deciding variable wins.
    int cmp(const Expo& a, const Expo& b) const {
        for (int rank = 0; rank < grid_.vars(); ++rank) {
            int v = var_at_[static_cast<size_t>(rank)];
            int da = a[static_cast<size_t>(v)], db = b[static_cast<size_t>(v)];
            if (da != db) return da > db ? 1 : -1;
        }
        return 0;
    }

    // Largest term of a polynomial; unique by construction for minors.
    Term initial_term(const std::vector<Term>& poly) const {
        assert(!poly.empty());
        const Term* best = &poly.front();
        for (const Term& t : poly)
            if (cmp(t.expo, best->expo) > 0) best = &t;
        return *best;
    }

private:
    VarGrid grid_;
    std::vector<int> rank_;    // vid -> rank (0 = largest)
    std::vector<int> var_at_;  // rank -> vid
};

}  // namespace mcop
