#pragma once

// (O,C)-tuples, (O,C)-semistandard Young tableaux, and their bijection with
// weakly nested chains of order ideals.
//
// A column (i_1,...,i_k) of pairwise distinct entries in [1,n] is an
// (O,C)-tuple when
//   * sigma_j(i_j) >= j for all j, and
//   * for all j < l: sigma_{j+1}(i_j) = j or sigma_{j+1}(i_j) > sigma_l(i_l),
// where sigma_i are the inverse row words of the r-table.  These are exactly
// the tuples (w^J(1),...,w^J(k)) over ideals J at level k, the bijection
// sending a tuple to the minimal ideal containing all (j, sigma_j(i_j)).
//
// A tableau (column-major, heights weakly decreasing) is (O,C)-semistandard
// when every column is a tuple and for any columns c' <= c and row j of
// column c there is a row j' in [j, height(c')] with
// sigma_{j'}(Y_{c',j'}) >= sigma_j(Y_{c,j}).  Equivalently (and this is the
// structural fact the tests verify) the per-column ideals are weakly nested,
// each column containing the one to its right.

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcop/pipedream.hpp"
#include "mcop/polynomial.hpp"
#include "mcop/poset.hpp"
#include "mcop/weight.hpp"

namespace mcop {

struct Tableau {
    // columns[c][r] = entry in column c (0-based), row r from the top.
    std::vector<std::vector<int>> columns;

    bool shape_valid() const {
        for (size_t c = 0; c + 1 < columns.size(); ++c)
            if (columns[c].size() < columns[c + 1].size()) return false;
        return true;
    }
    int boxes() const {
        int s = 0;
        for (const auto& col : columns) s += static_cast<int>(col.size());
        return s;
    }
    std::string str() const {
        std::string s;
        for (size_t c = 0; c < columns.size(); ++c) {
            if (c) s += " ";
            s += "(";
            for (size_t r = 0; r < columns[c].size(); ++r) {
                if (r) s += ",";
                s += std::to_string(columns[c][r]);
            }
            s += ")";
        }
        return s;
    }
};

inline bool is_oc_tuple(const RTable& rt, const std::vector<int>& t) {
    const int k = static_cast<int>(t.size());
    if (k < 1 || k > rt.n() - 1) throw std::domain_error("tuple length out of range");
    for (int a = 0; a < k; ++a) {
        if (t[static_cast<size_t>(a)] < 1 || t[static_cast<size_t>(a)] > rt.n())
            throw std::domain_error("tuple entry out of range");
        for (int b = a + 1; b < k; ++b)
            if (t[static_cast<size_t>(a)] == t[static_cast<size_t>(b)])
                throw std::domain_error("tuple entries must be distinct");
    }
    for (int j = 1; j <= k; ++j)
        if (rt.sigma(j)(t[static_cast<size_t>(j - 1)]) < j) return false;
    for (int j = 1; j < k; ++j)
        for (int l = j + 1; l <= k; ++l) {
            int s = rt.sigma(j + 1)(t[static_cast<size_t>(j - 1)]);
            if (s != j && s <= rt.sigma(l)(t[static_cast<size_t>(l - 1)])) return false;
        }
    return true;
}

inline bool is_oc_semistandard(const RTable& rt, const Tableau& y) {
    if (!y.shape_valid()) return false;
    for (const auto& col : y.columns)
        if (!is_oc_tuple(rt, col)) return false;
    const int m = static_cast<int>(y.columns.size());
    for (int cp = 0; cp < m; ++cp)
        for (int c = cp; c < m; ++c) {
            const auto& left = y.columns[static_cast<size_t>(cp)];
            const auto& right = y.columns[static_cast<size_t>(c)];
            for (size_t j = 0; j < right.size(); ++j) {
                int need = rt.sigma(static_cast<int>(j) + 1)(right[j]);
                bool found = false;
                for (size_t jp = j; jp < left.size() && !found; ++jp)
                    if (rt.sigma(static_cast<int>(jp) + 1)(left[jp]) >= need) found = true;
                if (!found) return false;
            }
        }
    return true;
}

// Tuple -> the minimal ideal containing all (j, sigma_j(i_j)).
inline Mask tuple_to_ideal(const GtPoset& p, const RTable& rt, const std::vector<int>& t) {
    std::vector<PosetElement> gens;
    for (int j = 1; j <= static_cast<int>(t.size()); ++j) {
        int col = rt.sigma(j)(t[static_cast<size_t>(j - 1)]);
        assert(col >= j);
        gens.push_back({j, col});
    }
    return p.ideal_generated_by(gens);
}

// Ideal -> its tuple (w^J(1),...,w^J(k)).
inline std::vector<int> ideal_to_tuple(const GtPoset& p, const OCPartition& oc, Mask ideal) {
    const int k = p.diag_count(ideal);
    Permutation w = w_of_ideal(p, oc, ideal);
    std::vector<int> t(static_cast<size_t>(k));
    for (int j = 1; j <= k; ++j) t[static_cast<size_t>(j - 1)] = w(j);
    return t;
}

// The chain of per-column ideals if the tableau is semistandard.
inline std::optional<std::vector<Mask>> tableau_chain(const GtPoset& p, const OCPartition& oc,
                                                      const RTable& rt, const Tableau& y) {
    if (!is_oc_semistandard(rt, y)) return std::nullopt;
    std::vector<Mask> chain;
    for (const auto& col : y.columns) chain.push_back(tuple_to_ideal(p, rt, col));
    for (size_t c = 0; c + 1 < chain.size(); ++c)
        assert((chain[c] & chain[c + 1]) == chain[c + 1]);  // left contains right
    (void)oc;
    return chain;
}

inline Tableau chain_to_tableau(const GtPoset& p, const OCPartition& oc,
                                const std::vector<Mask>& chain) {
    Tableau y;
    for (Mask j : chain) y.columns.push_back(ideal_to_tuple(p, oc, j));
    return y;
}

// All semistandard tableaux of shape wt: enumerate weakly nested ideal chains
// whose level multiset has wt.a[k-1] ideals at level k, levels descending
// left to right, and convert each chain to its tableau.
inline std::vector<Tableau> enumerate_semistandard(const GtPoset& p, const OCPartition& oc,
                                                   const RTable& rt, const Weight& wt) {
    auto levels = p.enumerate_ideals_by_level();
    std::vector<int> heights;  // descending column heights
    for (int k = p.n() - 1; k >= 1; --k)
        for (int c = 0; c < wt.a[static_cast<size_t>(k - 1)]; ++c) heights.push_back(k);

    std::vector<Tableau> out;
    std::vector<Mask> chain;
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == heights.size()) {
            out.push_back(chain_to_tableau(p, oc, chain));
            return;
        }
        for (Mask j : levels[static_cast<size_t>(heights[pos])]) {
            if (!chain.empty() && (chain.back() & j) != j) continue;  // need nesting
            chain.push_back(j);
            self(self, pos + 1);
            chain.pop_back();
        }
    };
    rec(rec, 0);
    (void)rt;
    return out;
}

// Cross-check oracle: fill columns directly with (O,C)-tuples and filter by
// the semistandard predicate, no chain reasoning involved.
inline std::vector<Tableau> enumerate_semistandard_by_filling(const GtPoset& p,
                                                              const OCPartition& oc,
                                                              const RTable& rt, const Weight& wt) {
    const int n = p.n();
    std::vector<std::vector<std::vector<int>>> tuples_by_height(static_cast<size_t>(n));
    for (int k = 1; k <= n - 1; ++k) {
        std::vector<int> t(static_cast<size_t>(k));
        std::vector<bool> used(static_cast<size_t>(n + 1), false);
        auto fill = [&](auto&& self, int pos) -> void {
            if (pos == k) {
                if (is_oc_tuple(rt, t)) tuples_by_height[static_cast<size_t>(k)].push_back(t);
                return;
            }
            for (int v = 1; v <= n; ++v) {
                if (used[static_cast<size_t>(v)]) continue;
                used[static_cast<size_t>(v)] = true;
                t[static_cast<size_t>(pos)] = v;
                self(self, pos + 1);
                used[static_cast<size_t>(v)] = false;
            }
        };
        fill(fill, 0);
    }

    std::vector<int> heights;
    for (int k = n - 1; k >= 1; --k)
        for (int c = 0; c < wt.a[static_cast<size_t>(k - 1)]; ++c) heights.push_back(k);

    std::vector<Tableau> out;
    Tableau y;
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == heights.size()) {
            if (is_oc_semistandard(rt, y)) out.push_back(y);
            return;
        }
        for (const auto& t : tuples_by_height[static_cast<size_t>(heights[pos])]) {
            y.columns.push_back(t);
            self(self, pos + 1);
            y.columns.pop_back();
        }
    };
    rec(rec, 0);
    (void)oc;
    return out;
}

// Row-multiplicity point of a tableau over the n x n grid: coordinate (r, v)
// counts the columns whose row-r entry equals v.  Rows of a tableau never
// exceed n-1, so row n of the grid stays zero.
inline Expo tableau_point(const VarGrid& g, const Tableau& y) {
    Expo x = expo_zero(g);
    for (const auto& col : y.columns)
        for (size_t r = 0; r < col.size(); ++r)
            x[static_cast<size_t>(g.vid(static_cast<int>(r) + 1, col[r]))] += 1;
    return x;
}

// A monomial in ideal-indexed Pluecker variables avoids the incomparable-pair
// monomial ideal exactly when its ideals are pairwise nested.
inline bool avoids_incomparable_ideal(const std::vector<Mask>& js) {
    for (size_t a = 0; a < js.size(); ++a)
        for (size_t b = a + 1; b < js.size(); ++b) {
            bool ab = (js[a] & js[b]) == js[b];
            bool ba = (js[a] & js[b]) == js[a];
            if (!ab && !ba) return false;
        }
    return true;
}

// Whether some height-sorted column arrangement of the given ideals' tuples
// is semistandard.
inline bool some_arrangement_semistandard(const GtPoset& p, const OCPartition& oc,
                                          const RTable& rt, std::vector<Mask> js) {
    std::sort(js.begin(), js.end());
    do {
        Tableau y = chain_to_tableau(p, oc, js);
        if (y.shape_valid() && is_oc_semistandard(rt, y)) return true;
    } while (std::next_permutation(js.begin(), js.end()));
    return false;
}

}  // namespace mcop
