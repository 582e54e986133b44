#pragma once

// Pipe-dream combinatorics on the triangular poset.
//
// A subset M of P defines a permutation w_M: write the product of the
// transpositions s_{i,j} = (i, j+1) over all (i,j) in M, factors ordered by
// ascending (i,j) (row-major), and evaluate the product right-to-left (the
// rightmost factor acts first).  Diagonal cells contribute s_{i,i} = (i,i+1)?
// No: s_{i,j} swaps values i and j, so s_{i,i} is the identity and diagonal
// cells never change the word.  Implementation detail: folding the factors
// left-to-right while multiplying on the right reproduces right-to-left
// evaluation without reversing anything.
//
// The same permutation can be read off by tracing "pipes" through the
// triangular grid: pipe i enters at cell (i,n) travelling in the direction of
// decreasing j ("J direction").  Travelling in the J direction the pipe turns
// (to decreasing i, the "I direction") exactly at cells of M ∪ A; travelling
// in the I direction it turns back exactly at cells of M.  A pipe in the I
// direction at row 1 on a cell outside M leaves the grid; if it left from
// column j, the traced value is w_M(i) = j.

#include <cassert>
#include <vector>

#include "mcop/permutation.hpp"
#include "mcop/poset.hpp"

namespace mcop {

// w_M for a cell subset (mask over the poset's ids).
inline Permutation w_of_subset(const GtPoset& p, Mask m) {
    Permutation w = Permutation::identity(p.n());
    for (Mask rest = m; rest;) {
        int eid = GtPoset::lowest_bit(rest);
        rest &= rest - 1;
        PosetElement e = p.element(eid);
        w.apply_transposition_on_right(e.i, e.j);
    }
    return w;
}

// w^J: the permutation of the marked-cell set of an ideal.
inline Permutation w_of_ideal(const GtPoset& p, const OCPartition& oc, Mask ideal) {
    return w_of_subset(p, m_oc(p, oc, ideal));
}

enum class PipeDir { AlongJ, AlongI };  // decreasing j / decreasing i

struct PipePath {
    int pipe = 0;                      // entry row index
    std::vector<PosetElement> cells;   // visited cells in travel order
    int exit_column = 0;               // = w_M(pipe)
};

// Trace pipe `i` through the grid for a cell subset `m` (already including
// whatever diagonal behaviour the caller wants encoded: turning in the J
// direction uses m ∪ A, turning in the I direction uses m alone).
inline PipePath trace_pipe(const GtPoset& p, Mask m, int pipe) {
    const int n = p.n();
    assert(1 <= pipe && pipe <= n);
    const Mask turn_j = m | p.diagonal_mask();  // J-direction elbows
    const Mask turn_i = m;                      // I-direction elbows

    PipePath path;
    path.pipe = pipe;
    int i = pipe, j = n;
    PipeDir dir = PipeDir::AlongJ;
    for (;;) {
        assert(1 <= i && i <= j && j <= n);
        path.cells.push_back({i, j});
        int eid = p.id(i, j);
        if (dir == PipeDir::AlongJ) {
            if ((turn_j >> eid) & 1) {
                dir = PipeDir::AlongI;
                // A J-direction pipe turning on the diagonal heads up the
                // column; it cannot sit below the diagonal afterwards.
                if (i == 1) { path.exit_column = j; return path; }
                --i;
            } else {
                assert(j > i);  // the diagonal always turns a J-direction pipe
                --j;
            }
        } else {
            if ((turn_i >> eid) & 1) {
                dir = PipeDir::AlongJ;
                assert(j > i);  // an I-direction pipe never turns into the diagonal wall
                --j;
            } else if (i == 1) {
                path.exit_column = j;
                return path;
            } else {
                --i;
            }
        }
    }
}

// Permutation read off pipes; equals w_of_subset for every M (tested).
inline Permutation w_by_pipes(const GtPoset& p, Mask m) {
    std::vector<int> img(static_cast<size_t>(p.n()));
    for (int i = 1; i <= p.n(); ++i)
        img[static_cast<size_t>(i - 1)] = trace_pipe(p, m, i).exit_column;
    return Permutation(img);
}

// The r-table of an O/C partition:
//   r(i,j) = w^{<(i,j)>}(i)   for i <= j, the word of the marked set of the
//                             principal ideal generated by (i,j);
//   r(i,j) = w_{O∪A}(j)       for i > j, the word of ALL marked cells of P.
// Each row (r(i,1),...,r(i,n)) is a permutation of 1..n; sigma_i denotes its
// inverse and tau := sigma_n.  sigma_1 is always the identity.
class RTable {
public:
    RTable(const GtPoset& p, const OCPartition& oc) : n_(p.n()) {
        r_.assign(static_cast<size_t>(n_ + 1), std::vector<int>(static_cast<size_t>(n_ + 1), 0));
        Permutation w_full = w_of_subset(p, oc.marked_mask(p));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                if (i <= j) {
                    Mask ideal = p.ideal_generated_by({{i, j}});
                    r_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        w_of_ideal(p, oc, ideal)(i);
                } else {
                    r_[static_cast<size_t>(i)][static_cast<size_t>(j)] = w_full(j);
                }
            }
        // Row permutations sigma_i: the inverse of the i-th row read as the
        // word (r(i,1),...,r(i,n)).  Each row is a permutation of 1..n.
        for (int i = 1; i <= n_; ++i) {
            std::vector<int> row(r_[static_cast<size_t>(i)].begin() + 1,
                                 r_[static_cast<size_t>(i)].end());
            sigma_.push_back(Permutation(row).inverse());
        }
    }

    int n() const { return n_; }
    int r(int i, int j) const {
        assert(1 <= i && i <= n_ && 1 <= j && j <= n_);
        return r_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    // sigma_i = (r(i,1),...,r(i,n))^{-1}; sigma_1 = id, and tau := sigma_n is
    // the "twist" entering the lattice-equivalence map.
    const Permutation& sigma(int i) const {
        assert(1 <= i && i <= n_);
        return sigma_[static_cast<size_t>(i - 1)];
    }
    const Permutation& tau() const { return sigma_[static_cast<size_t>(n_ - 1)]; }

private:
    int n_;
    std::vector<std::vector<int>> r_;
    std::vector<Permutation> sigma_;
};

}  // namespace mcop
