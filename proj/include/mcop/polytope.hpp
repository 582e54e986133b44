#pragma once

// Marked chain-order polytopes over the triangular poset, in two independent
// models, plus the unimodular change of coordinates onto the PBW-degeneration
// polytope.
//
// Primary model (used by the library): the lattice points of the polytope for
// a dominant weight are the iterated Minkowski sumset of the fundamental
// point sets {x(J) : J an ideal at level k}, one copy per unit of the k-th
// fundamental multiplicity.
//
// Verifier model: integer vectors x over the poset with
//   * x_{i,i} = lambda(i) pinned on the diagonal,
//   * x >= 0 on chain cells (C),
//   * for every saturated-in-C chain  e1 < c_1 < ... < c_m < e2  (m >= 0)
//     with endpoints marked (in O ∪ A) and interior in C:
//         x_{c_1} + ... + x_{c_m}  <=  x_{e1} - x_{e2}.
// All O and all C recover the order-polytope (Gelfand-Tsetlin) and chain-
// polytope (FFLV) situations respectively.

#include <algorithm>
#include <cassert>
#include <set>
#include <vector>

#include "mcop/linalg.hpp"
#include "mcop/pipedream.hpp"
#include "mcop/poset.hpp"
#include "mcop/weight.hpp"

namespace mcop {

using LatticePoint = std::vector<int>;  // indexed by poset element ids
using PointSet = std::set<LatticePoint>;

inline PointSet fundamental_points(const GtPoset& p, const OCPartition& oc, int k) {
    PointSet out;
    auto levels = p.enumerate_ideals_by_level();
    for (Mask j : levels[static_cast<size_t>(k)])
        out.insert(indicator_point(p, m_oc(p, oc, j)));
    return out;
}

inline PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
    PointSet out;
    for (const LatticePoint& x : a)
        for (const LatticePoint& y : b) {
            LatticePoint z(x.size());
            for (size_t t = 0; t < x.size(); ++t) z[t] = x[t] + y[t];
            out.insert(std::move(z));
        }
    return out;
}

inline PointSet mcop_lattice_points(const GtPoset& p, const OCPartition& oc, const Weight& wt) {
    assert(wt.n() == p.n());
    PointSet acc;
    acc.insert(LatticePoint(static_cast<size_t>(p.size()), 0));
    for (int k = 1; k <= p.n() - 1; ++k) {
        if (wt.a[static_cast<size_t>(k - 1)] == 0) continue;
        PointSet fk = fundamental_points(p, oc, k);
        for (int c = 0; c < wt.a[static_cast<size_t>(k - 1)]; ++c) acc = minkowski_sum(acc, fk);
    }
    return acc;
}

// One chain inequality: sum of interior coordinates <= x_lo - x_hi.
struct ChainInequality {
    int lo_eid = 0, hi_eid = 0;
    std::vector<int> interior;  // eids of C-cells strictly between, increasing
};

inline std::vector<ChainInequality> enumerate_chain_inequalities(const GtPoset& p,
                                                                 const OCPartition& oc) {
    const Mask marked = oc.marked_mask(p);
    const Mask chain_cells = oc.c_mask(p);
    std::vector<ChainInequality> out;
    for (int lo = 0; lo < p.size(); ++lo) {
        if (!((marked >> lo) & 1)) continue;
        for (int hi = 0; hi < p.size(); ++hi) {
            if (hi == lo || !((marked >> hi) & 1)) continue;
            if (!GtPoset::leq(p.element(lo), p.element(hi))) continue;
            // All chains of C-cells strictly inside the interval (lo, hi).
            std::vector<int> between;
            for (int c = 0; c < p.size(); ++c)
                if (((chain_cells >> c) & 1) && c != lo && c != hi &&
                    GtPoset::leq(p.element(lo), p.element(c)) &&
                    GtPoset::leq(p.element(c), p.element(hi)))
                    between.push_back(c);
            std::vector<int> cur;
            auto rec = [&](auto&& self, size_t start) -> void {
                out.push_back({lo, hi, cur});
                for (size_t t = start; t < between.size(); ++t) {
                    if (!cur.empty() &&
                        !GtPoset::leq(p.element(cur.back()), p.element(between[t])))
                        continue;
                    cur.push_back(between[t]);
                    self(self, t + 1);
                    cur.pop_back();
                }
            };
            rec(rec, 0);
        }
    }
    return out;
}

inline bool satisfies_chain_model(const GtPoset& p, const OCPartition& oc, const Weight& wt,
                                  const std::vector<ChainInequality>& ineqs,
                                  const LatticePoint& x) {
    for (int i = 1; i <= p.n(); ++i)
        if (x[static_cast<size_t>(p.id(i, i))] != wt.lambda(i)) return false;
    const Mask chain_cells = oc.c_mask(p);
    for (int c = 0; c < p.size(); ++c)
        if (((chain_cells >> c) & 1) && x[static_cast<size_t>(c)] < 0) return false;
    for (const ChainInequality& q : ineqs) {
        long long s = 0;
        for (int c : q.interior) s += x[static_cast<size_t>(c)];
        if (s > x[static_cast<size_t>(q.lo_eid)] - x[static_cast<size_t>(q.hi_eid)]) return false;
    }
    return true;
}

// Brute-force lattice points of the verifier model: off-diagonal coordinates
// range over [0, lambda(1)] (the model forces them into that window).
inline PointSet mcop_points_by_inequalities(const GtPoset& p, const OCPartition& oc,
                                            const Weight& wt) {
    auto ineqs = enumerate_chain_inequalities(p, oc);
    std::vector<int> offd;
    for (int v = 0; v < p.size(); ++v)
        if ((p.offdiag_mask() >> v) & 1) offd.push_back(v);

    LatticePoint x(static_cast<size_t>(p.size()), 0);
    for (int i = 1; i <= p.n(); ++i) x[static_cast<size_t>(p.id(i, i))] = wt.lambda(i);

    PointSet out;
    const int hi = wt.lambda(1);
    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == offd.size()) {
            if (satisfies_chain_model(p, oc, wt, ineqs, x)) out.insert(x);
            return;
        }
        for (int v = 0; v <= hi; ++v) {
            x[static_cast<size_t>(offd[t])] = v;
            self(self, t + 1);
        }
        x[static_cast<size_t>(offd[t])] = 0;
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// The change of coordinates xi onto the PBW side.
//
//   xi(e_{i,i}) = e_{i, tau(r(i,i))}
//   xi(e_{i,j}) = e_{i, tau(r(i,j))} - e_{i, tau(r(i,j'))}     (i < j)
// with j' the closest marked column left of j in row i.  tau(r(i,j)) >= i
// always holds, so xi is a square integer matrix over the poset ids; keyed
// appropriately it is unitriangular, hence a lattice equivalence.

class XiMap {
public:
    XiMap(const GtPoset& p, const OCPartition& oc, const RTable& rt) : poset_(&p) {
        const int n = p.n();
        const Permutation& tau = rt.tau();
        m_.assign(static_cast<size_t>(p.size()),
                  std::vector<Int>(static_cast<size_t>(p.size()), Int(0)));
        pivot_row_.assign(static_cast<size_t>(p.size()), -1);
        corr_row_.assign(static_cast<size_t>(p.size()), -1);
        for (int eid = 0; eid < p.size(); ++eid) {
            PosetElement e = p.element(eid);
            int l = tau(rt.r(e.i, e.j));
            assert(l >= e.i);
            pivot_row_[static_cast<size_t>(eid)] = p.id(e.i, l);
            m_[static_cast<size_t>(p.id(e.i, l))][static_cast<size_t>(eid)] += 1;
            if (e.i < e.j) {
                int jp = -1;
                for (int c = e.j - 1; c >= e.i; --c)
                    if (c == e.i || oc.in_o(p, p.id(e.i, c))) {
                        jp = c;
                        break;
                    }
                int lp = tau(rt.r(e.i, jp));
                assert(lp >= e.i);
                corr_row_[static_cast<size_t>(eid)] = p.id(e.i, lp);
                m_[static_cast<size_t>(p.id(e.i, lp))][static_cast<size_t>(eid)] -= 1;
            }
            (void)n;
        }
        // Row keys: target coordinate (i,l) is keyed by (i, sigma_i(tau^{-1}(l))),
        // which is exactly the column id of the pivot that lands there.
        row_key_.assign(static_cast<size_t>(p.size()), -1);
        for (int eid = 0; eid < p.size(); ++eid)
            row_key_[static_cast<size_t>(pivot_row_[static_cast<size_t>(eid)])] = eid;
    }

    LatticePoint apply(const LatticePoint& x) const {
        const GtPoset& p = *poset_;
        LatticePoint out(static_cast<size_t>(p.size()), 0);
        for (int eid = 0; eid < p.size(); ++eid) {
            int c = x[static_cast<size_t>(eid)];
            if (!c) continue;
            out[static_cast<size_t>(pivot_row_[static_cast<size_t>(eid)])] += c;
            if (corr_row_[static_cast<size_t>(eid)] >= 0)
                out[static_cast<size_t>(corr_row_[static_cast<size_t>(eid)])] -= c;
        }
        return out;
    }

    const IntMatrix& matrix() const { return m_; }

    // Every pivot must fill the diagonal exactly once and every correction
    // must land strictly earlier in key order.
    bool unitriangular_under_keys() const {
        const GtPoset& p = *poset_;
        for (int r = 0; r < p.size(); ++r)
            if (row_key_[static_cast<size_t>(r)] < 0) return false;
        for (int col = 0; col < p.size(); ++col)
            for (int row = 0; row < p.size(); ++row) {
                const Int& v = m_[static_cast<size_t>(row)][static_cast<size_t>(col)];
                if (v == 0) continue;
                int key = row_key_[static_cast<size_t>(row)];
                if (key == col && v != 1) return false;
                if (key > col) return false;
            }
        return true;
    }

    Int det() const { return bareiss_det(m_); }

private:
    const GtPoset* poset_;
    IntMatrix m_;
    std::vector<int> pivot_row_, corr_row_, row_key_;
};

}  // namespace mcop
