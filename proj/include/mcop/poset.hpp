#pragma once

// The triangular poset P underlying everything in this library.
//
//   P = { (i,j) : 1 <= i <= j <= n },   (i,j) <= (i',j')  iff  i<=i' and j<=j'.
//
// The diagonal A = {(1,1),...,(n,n)} is distinguished: order ideals are
// graded by how much of the diagonal they contain, and a partition of the
// off-diagonal part P\A into sets O ("order-like" cells) and C ("chain-like"
// cells) selects one member of the family of polytopes/degenerations this
// library computes with.  O = P\A recovers the Gelfand-Tsetlin situation on
// one end, C = P\A the FFLV situation on the other.
//
// Ideals are stored as bitmasks over element ids; ids enumerate P row by row
// ((1,1),(1,2),...,(1,n),(2,2),...,(n,n)), so ascending id order is exactly
// the lexicographic (i,j) order used to build transposition words.

#include <array>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace mcop {

using Mask = std::uint64_t;

struct PosetElement {
    int i = 0, j = 0;
    bool operator==(const PosetElement& o) const { return i == o.i && j == o.j; }
    bool operator<(const PosetElement& o) const { return i < o.i || (i == o.i && j < o.j); }
};

class GtPoset {
public:
    explicit GtPoset(int n) : n_(n) {
        assert(n >= 1 && n <= 10);
        row_offset_.assign(static_cast<size_t>(n) + 2, 0);
        for (int i = 1; i <= n; ++i) {
            row_offset_[static_cast<size_t>(i)] = static_cast<int>(elems_.size());
            for (int j = i; j <= n; ++j) elems_.push_back({i, j});
        }
        row_offset_[static_cast<size_t>(n) + 1] = static_cast<int>(elems_.size());
        assert(size() <= 63);  // ideals live in a 64-bit mask

        down_.assign(elems_.size(), 0);
        up_strict_.assign(elems_.size(), 0);
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b) {
                if (leq(elems_[static_cast<size_t>(b)], elems_[static_cast<size_t>(a)]))
                    down_[static_cast<size_t>(a)] |= Mask{1} << b;
                if (a != b && leq(elems_[static_cast<size_t>(a)], elems_[static_cast<size_t>(b)]))
                    up_strict_[static_cast<size_t>(a)] |= Mask{1} << b;
            }
        diag_mask_ = 0;
        for (int i = 1; i <= n; ++i) diag_mask_ |= Mask{1} << id(i, i);
    }

    int n() const { return n_; }
    int size() const { return static_cast<int>(elems_.size()); }

    int id(int i, int j) const {
        assert(1 <= i && i <= j && j <= n_);
        return row_offset_[static_cast<size_t>(i)] + (j - i);
    }
    int id(PosetElement e) const { return id(e.i, e.j); }
    PosetElement element(int eid) const { return elems_[static_cast<size_t>(eid)]; }
    const std::vector<PosetElement>& elements() const { return elems_; }

    static bool leq(PosetElement a, PosetElement b) { return a.i <= b.i && a.j <= b.j; }

    Mask diagonal_mask() const { return diag_mask_; }
    Mask offdiag_mask() const { return full_mask() & ~diag_mask_; }
    Mask full_mask() const { return (size() == 63) ? ~Mask{0} >> 1 : (Mask{1} << size()) - 1; }

    // Principal down-set of a single element (inclusive).
    Mask down_set(int eid) const { return down_[static_cast<size_t>(eid)]; }
    Mask up_set_strict(int eid) const { return up_strict_[static_cast<size_t>(eid)]; }

    bool is_ideal(Mask m) const {
        for (Mask rest = m; rest;) {
            int eid = lowest_bit(rest);
            rest &= rest - 1;
            if ((m & down_[static_cast<size_t>(eid)]) != down_[static_cast<size_t>(eid)]) return false;
        }
        return true;
    }

    // Smallest ideal containing all generators.
    Mask ideal_generated_by(const std::vector<PosetElement>& gens) const {
        Mask m = 0;
        for (PosetElement e : gens) m |= down_[static_cast<size_t>(id(e))];
        return m;
    }

    // Maximal elements of a subset (not required to be an ideal).
    Mask max_elements(Mask m) const {
        Mask out = 0;
        for (Mask rest = m; rest;) {
            int eid = lowest_bit(rest);
            rest &= rest - 1;
            if ((m & up_strict_[static_cast<size_t>(eid)]) == 0) out |= Mask{1} << eid;
        }
        return out;
    }

    // Number of diagonal cells in m; for an ideal this is the grading level k
    // (an ideal at level k contains (k,k) but not (k+1,k+1)).
    int diag_count(Mask m) const { return popcount(m & diag_mask_); }

    // All order ideals grouped by level k = 0..n, each group sorted by
    // ascending bitmask value.  The total count is 2^n and level k holds
    // binomial(n,k) ideals, which callers cross-check.
    std::vector<std::vector<Mask>> enumerate_ideals_by_level() const {
        std::vector<std::vector<Mask>> by_level(static_cast<size_t>(n_) + 1);
        const Mask top = full_mask();
        for (Mask m = 0;; ++m) {
            if (is_ideal(m)) by_level[static_cast<size_t>(diag_count(m))].push_back(m);
            if (m == top) break;
        }
        return by_level;
    }

    static int popcount(Mask m) { return __builtin_popcountll(m); }
    static int lowest_bit(Mask m) { return __builtin_ctzll(m); }

    std::vector<PosetElement> mask_elements(Mask m) const {
        std::vector<PosetElement> out;
        for (Mask rest = m; rest;) {
            int eid = lowest_bit(rest);
            rest &= rest - 1;
            out.push_back(element(eid));
        }
        return out;
    }

private:
    int n_;
    std::vector<PosetElement> elems_;
    std::vector<int> row_offset_;
    std::vector<Mask> down_, up_strict_;
    Mask diag_mask_ = 0;
};

// A partition of the off-diagonal cells P\A into O and C, stored as the mask
// of O.  C is implicit: every off-diagonal cell not in O.
struct OCPartition {
    Mask o = 0;

    bool in_o(const GtPoset& p, int eid) const { return (o >> eid) & 1; }
    // "Marked" cells are O together with the whole diagonal; pipes turn there
    // and the variable order is anchored there.
    Mask marked_mask(const GtPoset& p) const { return o | p.diagonal_mask(); }
    Mask c_mask(const GtPoset& p) const { return p.offdiag_mask() & ~o; }

    static OCPartition all_o(const GtPoset& p) { return OCPartition{p.offdiag_mask()}; }
    static OCPartition all_c(const GtPoset&) { return OCPartition{0}; }

    bool valid(const GtPoset& p) const { return (o & ~p.offdiag_mask()) == 0; }

    std::string str(const GtPoset& p) const {
        std::string s = "O={";
        bool first = true;
        for (Mask rest = o; rest;) {
            int eid = GtPoset::lowest_bit(rest);
            rest &= rest - 1;
            PosetElement e = p.element(eid);
            if (!first) s += ",";
            first = false;
            s += std::to_string(e.i) + ":" + std::to_string(e.j);
        }
        return s + "}";
    }
};

// The marking map: an ideal J is sent to the cell set
//     M(J) = (J ∩ (O ∪ A)) ∪ max(J),
// i.e. keep the marked cells of J and always keep the maximal elements.
// Everything downstream (pipe-dream permutations, indicator points, toric
// maps) consumes ideals only through this set.
inline Mask m_oc(const GtPoset& p, const OCPartition& oc, Mask ideal) {
    assert(p.is_ideal(ideal));
    return (ideal & oc.marked_mask(p)) | p.max_elements(ideal);
}

// Indicator point of M(J) in Z^P.
inline std::vector<int> indicator_point(const GtPoset& p, Mask m) {
    std::vector<int> x(static_cast<size_t>(p.size()), 0);
    for (Mask rest = m; rest;) {
        int eid = GtPoset::lowest_bit(rest);
        rest &= rest - 1;
        x[static_cast<size_t>(eid)] = 1;
    }
    return x;
}

}  // namespace mcop
