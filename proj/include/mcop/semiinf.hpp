#pragma once

// Semi-infinite analogue of the pipe-dream machinery.
//
// The underlying poset Q consists of integer pairs (i, j) with
//   i >= 1,  j >= k+1,  0 <= j - i <= n-1,
// ordered by x <= y iff one of
//   (i)   x.i <= y.i and x.j <= y.j,
//   (ii)  y.i - x.i >= k,
//   (iii) y.j - x.j >= n - k.
// Finite order ideals of Q stratify by the number d(J) of diagonal
// elements they contain; each level carries C(n, k) ideals.
//
// Pipes traverse Q downward through the two "neighbour" moves
//   <i-1, j>  (vertical)  and  <i, j-1>  (horizontal),
// where <i, j> denotes the unique representative (i + m*k, j - m*(n-k))
// inside Q, when one exists.  A pipe flips direction exactly at the
// elements of a marked subset M and its endpoint determines a value in
// {1, ..., n}; folding transpositions over any linear extension of M
// yields the permutation w_M (incomparable factors commute).
//
// On the algebra side, variables z_{(i,j)} for (i,j) in Q are matched
// with doubly indexed series coefficients z^{(l)}_{a,b} (a in [1,k],
// b in [1,n], level l >= 0, truncated at a configurable cap).  The maps
// implemented below substitute monomials attached to marked ideals into
// that coefficient grid and compare them with brute-force initial terms
// of the series minors D^{(l)} under a reverse-lexicographic variable
// order read off the marking.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcop/numeric.hpp"
#include "mcop/permutation.hpp"
#include "mcop/polynomial.hpp"

namespace mcop {

struct QElt {
  int i = 0;
  int j = 0;

  bool operator==(const QElt& o) const { return i == o.i && j == o.j; }
  bool operator!=(const QElt& o) const { return !(*this == o); }
  bool operator<(const QElt& o) const {
    return i != o.i ? i < o.i : j < o.j;
  }
};

inline std::string qelt_str(const QElt& x) {
  return "(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
}

using QIdeal = std::set<QElt>;
using QEltPredicate = std::function<bool(const QElt&)>;

enum class QStep { Vertical, Horizontal };

struct QPipe {
  std::vector<QElt> cells;
  QStep exit_step = QStep::Vertical;  // class of the formal next edge
  int value = 0;
};

class QGrid {
 public:
  QGrid(int n, int k) : n_(n), k_(k) { assert(0 < k && k < n); }

  int n() const { return n_; }
  int k() const { return k_; }

  bool contains(const QElt& x) const {
    return x.i >= 1 && x.j >= k_ + 1 && x.j - x.i >= 0 && x.j - x.i <= n_ - 1;
  }

  // The three-clause order, evaluated on raw pairs.
  bool leq(const QElt& a, const QElt& b) const {
    if (a.i <= b.i && a.j <= b.j) return true;
    if (b.i - a.i >= k_) return true;
    if (b.j - a.j >= n_ - k_) return true;
    return false;
  }

  bool lt(const QElt& a, const QElt& b) const { return a != b && leq(a, b); }

  // <i, j>: the representative (i + m*k, j - m*(n-k)) with
  // 0 <= j - i - m*n <= n-1, when it lies in Q.
  std::optional<QElt> normalize(int i, int j) const {
    const int m = floor_div(j - i, n_);
    const QElt x{i + m * k_, j - m * (n_ - k_)};
    if (contains(x)) return x;
    return std::nullopt;
  }

  std::optional<QElt> down_vertical(const QElt& x) const {
    return normalize(x.i - 1, x.j);
  }
  std::optional<QElt> down_horizontal(const QElt& x) const {
    return normalize(x.i, x.j - 1);
  }

  // Residues: rows reduce into [1, k], columns into [k+1, n].
  int mod_k(int a) const { return ((a - 1) % k_ + k_) % k_ + 1; }
  int mod_nk(int a) const {
    const int w = n_ - k_;
    return ((a - (k_ + 1)) % w + w) % w + (k_ + 1);
  }

  // Level of a row: i = level * k + mod_k(i).
  int row_level(int i) const { return (i - mod_k(i)) / k_; }

  // Transposition attached to a poset element (always a genuine
  // transposition: the two residues land in disjoint ranges).
  void fold_transposition(Permutation& w, const QElt& x) const {
    w.apply_transposition_on_right(mod_k(x.i), mod_nk(x.j));
  }

  // Column of x in the virtual plane of its row-residue class: elements
  // with the same row residue form a chain, ordered by this column.
  int class_column(const QElt& x) const {
    const int m = row_level(x.i);
    return x.j + m * (n_ - k_);
  }

  static int floor_div(int a, int b) {
    assert(b > 0);
    int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
  }

 private:
  int n_;
  int k_;
};

// Marking: all diagonal elements (i, i) plus finitely many off-diagonal
// extras.  The complement of the marking within Q plays the chain role.
struct QPartition {
  std::set<QElt> extra;

  bool in_o(const QGrid& g, const QElt& x) const {
    if (!g.contains(x)) return false;
    if (x.i == x.j) return true;
    return extra.count(x) > 0;
  }

  std::string str() const {
    std::string s = "O=diag+{";
    bool first = true;
    for (const auto& x : extra) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(x.i) + ":" + std::to_string(x.j);
    }
    return s + "}";
  }
};

// ---------------------------------------------------------------------------
// Pipes.

// Trace the downward pipe whose first two cells are given.  The direction
// class of each subsequent edge equals the class of the previous edge
// exactly when the separating cell is NOT in the marked set.  The pipe is
// maximal: it stops when the forced next neighbour leaves Q, and the exit
// value is the current row (formal horizontal exit) or current column
// (formal vertical exit).
inline QPipe trace_q_pipe(const QGrid& g, const QEltPredicate& in_m,
                          const QElt& first, const QElt& second) {
  assert(g.contains(first) && g.contains(second));
  QStep cls;
  if (auto v = g.down_vertical(first); v && *v == second) {
    cls = QStep::Vertical;
  } else {
    auto h = g.down_horizontal(first);
    assert(h && *h == second);
    cls = QStep::Horizontal;
  }
  QPipe pipe;
  pipe.cells = {first, second};
  QElt cur = second;
  for (;;) {
    const QStep next_cls =
        in_m(cur) ? (cls == QStep::Vertical ? QStep::Horizontal
                                            : QStep::Vertical)
                  : cls;
    const auto next = (next_cls == QStep::Vertical) ? g.down_vertical(cur)
                                                    : g.down_horizontal(cur);
    if (!next) {
      pipe.exit_step = next_cls;
      pipe.value = (next_cls == QStep::Horizontal) ? cur.i : cur.j;
      return pipe;
    }
    pipe.cells.push_back(*next);
    cls = next_cls;
    cur = *next;
  }
}

// Value of the pipe through the edge (first -> second), i.e. the exit value
// of the maximal downward pipe extending that edge.
inline int q_pipe_value(const QGrid& g, const QEltPredicate& in_m,
                        const QElt& first, const QElt& second) {
  return trace_q_pipe(g, in_m, first, second).value;
}

// Same value, recomputed from the case analysis of the exit cell instead of
// the formal edge class; used to cross-check trace_q_pipe.
inline int q_pipe_value_by_cases(const QGrid& g, const QEltPredicate& in_m,
                                 const QPipe& pipe) {
  assert(pipe.cells.size() >= 2);
  const QElt last = pipe.cells.back();
  const QElt prev = pipe.cells[pipe.cells.size() - 2];
  const int k = g.k();
  if (last.i == 1 && last.j == k + 1) {
    const bool entered_horizontally = (prev == QElt{1, k + 2});
    const bool marked = in_m(last);
    const bool exits_horizontally = (entered_horizontally != marked);
    return exits_horizontally ? 1 : k + 1;
  }
  if (last.i > 1) return last.i;
  return last.j;
}

// ---------------------------------------------------------------------------
// Linear extensions and the permutation w_M.

// Kahn's algorithm over the restriction of the order to the given finite
// set; ties between incomparable minimal elements are broken towards the
// lexicographically smallest (largest when reverse_tiebreak is set, giving
// an independent second extension for cross-checks).
inline std::vector<QElt> q_linear_extension(const QGrid& g,
                                            std::vector<QElt> elems,
                                            bool reverse_tiebreak = false) {
  std::vector<QElt> out;
  out.reserve(elems.size());
  while (!elems.empty()) {
    int pick = -1;
    for (std::size_t c = 0; c < elems.size(); ++c) {
      bool minimal = true;
      for (std::size_t o = 0; o < elems.size(); ++o) {
        if (o != c && g.lt(elems[o], elems[c])) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      if (pick < 0 || (reverse_tiebreak ? elems[pick] < elems[c]
                                        : elems[c] < elems[pick])) {
        pick = static_cast<int>(c);
      }
    }
    assert(pick >= 0);
    out.push_back(elems[pick]);
    elems.erase(elems.begin() + pick);
  }
  return out;
}

// w_M: transpositions folded over a linear extension of M, the factor of
// the largest element applied first.
inline Permutation w_of_subset_q(const QGrid& g,
                                 const std::vector<QElt>& m_elems,
                                 bool reverse_tiebreak = false) {
  Permutation w = Permutation::identity(g.n());
  for (const QElt& x : q_linear_extension(g, m_elems, reverse_tiebreak)) {
    g.fold_transposition(w, x);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Finite order ideals.

// All of row r within Q.
inline std::vector<QElt> q_row(const QGrid& g, int r) {
  std::vector<QElt> out;
  for (int j = std::max(r, g.k() + 1); j <= r + g.n() - 1; ++j) {
    out.push_back(QElt{r, j});
  }
  return out;
}

// All of column c within Q.
inline std::vector<QElt> q_column(const QGrid& g, int c) {
  std::vector<QElt> out;
  for (int i = std::max(1, c - g.n() + 1); i <= c; ++i) {
    const QElt x{i, c};
    if (g.contains(x)) out.push_back(x);
  }
  return out;
}

// Inclusive down-set of x, straight from the three clauses: entire rows
// 1..x.i-k, entire columns k+1..x.j-(n-k), plus the componentwise block.
inline QIdeal q_down_set(const QGrid& g, const QElt& x) {
  assert(g.contains(x));
  QIdeal out;
  for (int r = 1; r <= x.i - g.k(); ++r) {
    for (const auto& y : q_row(g, r)) out.insert(y);
  }
  for (int c = g.k() + 1; c <= x.j - (g.n() - g.k()); ++c) {
    for (const auto& y : q_column(g, c)) out.insert(y);
  }
  for (int yi = 1; yi <= x.i; ++yi) {
    for (int yj = std::max(yi, g.k() + 1); yj <= std::min(x.j, yi + g.n() - 1);
         ++yj) {
      out.insert(QElt{yi, yj});
    }
  }
  return out;
}

inline QIdeal q_ideal_generated_by(const QGrid& g,
                                   const std::vector<QElt>& gens) {
  QIdeal out;
  for (const auto& x : gens) {
    const QIdeal d = q_down_set(g, x);
    out.insert(d.begin(), d.end());
  }
  return out;
}

inline bool is_q_ideal(const QGrid& g, const QIdeal& j) {
  for (const auto& x : j) {
    if (!g.contains(x)) return false;
    for (const auto& y : q_down_set(g, x)) {
      if (!j.count(y)) return false;
    }
  }
  return true;
}

inline int q_diag_count(const QIdeal& j) {
  int d = 0;
  for (const auto& x : j) {
    if (x.i == x.j) ++d;
  }
  return d;
}

inline std::vector<QElt> q_max_elements(const QGrid& g, const QIdeal& j) {
  std::vector<QElt> out;
  for (const auto& x : j) {
    bool maximal = true;
    for (const auto& y : j) {
      if (y != x && g.lt(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

// Marked set of an ideal: marked elements of J together with max(J).
inline QIdeal q_m_oc(const QGrid& g, const QPartition& oc, const QIdeal& j) {
  QIdeal out;
  for (const auto& x : j) {
    if (oc.in_o(g, x)) out.insert(x);
  }
  for (const auto& x : q_max_elements(g, j)) out.insert(x);
  return out;
}

inline Permutation w_of_q_ideal(const QGrid& g, const QPartition& oc,
                                const QIdeal& j) {
  const QIdeal m = q_m_oc(g, oc, j);
  return w_of_subset_q(g, std::vector<QElt>(m.begin(), m.end()));
}

// The finite region whose down-sets are exactly the ideals with at most
// d_max diagonal elements: everything NOT above (k+d_max+1, k+d_max+1).
inline std::vector<QElt> q_fin_region(const QGrid& g, int d_max) {
  const QElt top{g.k() + d_max + 1, g.k() + d_max + 1};
  std::vector<QElt> out;
  for (int i = 1; i <= 2 * g.k() + d_max; ++i) {
    for (int j = std::max(i, g.k() + 1);
         j <= std::min(i + g.n() - 1, g.n() + d_max); ++j) {
      const QElt x{i, j};
      if (!g.contains(x)) continue;
      if (!g.leq(top, x)) out.push_back(x);
    }
  }
  return out;
}

// All finite order ideals with d(J) <= d_max, enumerated as down-sets of
// the finite region above (which is itself downward closed in Q).
inline std::vector<QIdeal> enumerate_q_ideals(const QGrid& g, int d_max) {
  const std::vector<QElt> region = q_linear_extension(g, q_fin_region(g, d_max));
  const int m = static_cast<int>(region.size());
  assert(m <= 64);
  std::vector<std::uint64_t> below(m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < a; ++b) {
      if (g.lt(region[b], region[a])) below[a] |= (std::uint64_t{1} << b);
    }
  }
  std::vector<QIdeal> out;
  std::vector<int> chosen;
  std::uint64_t mask = 0;
  const std::function<void(int)> rec = [&](int t) {
    if (t == m) {
      QIdeal j;
      for (int a : chosen) j.insert(region[a]);
      out.push_back(std::move(j));
      return;
    }
    rec(t + 1);
    if ((below[t] & mask) == below[t]) {
      mask |= (std::uint64_t{1} << t);
      chosen.push_back(t);
      rec(t + 1);
      chosen.pop_back();
      mask &= ~(std::uint64_t{1} << t);
    }
  };
  rec(0);
  for (const auto& j : out) {
    assert(q_diag_count(j) <= d_max);
    (void)j;
  }
  std::sort(out.begin(), out.end(),
            [](const QIdeal& a, const QIdeal& b) {
              const int da = q_diag_count(a);
              const int db = q_diag_count(b);
              if (da != db) return da < db;
              return std::vector<QElt>(a.begin(), a.end()) <
                     std::vector<QElt>(b.begin(), b.end());
            });
  return out;
}

// ---------------------------------------------------------------------------
// The r-values and the Plücker-style image of an ideal.

struct PsiInfImage {
  int level = 0;               // d(J)
  std::vector<int> tuple;      // (w^J(1), ..., w^J(k)), unsorted
  std::vector<int> sorted;     // ascending
  int sign = 1;                // sign of the sorting permutation
};

inline PsiInfImage psi_inf(const QGrid& g, const QPartition& oc,
                           const QIdeal& j) {
  PsiInfImage out;
  out.level = q_diag_count(j);
  const Permutation w = w_of_q_ideal(g, oc, j);
  for (int a = 1; a <= g.k(); ++a) out.tuple.push_back(w(a));
  out.sorted = out.tuple;
  std::sort(out.sorted.begin(), out.sorted.end());
  out.sign = Permutation::sort_sign(out.tuple);
  return out;
}

// r(x) for x in Q: the value of the pipe through (x, <x.i-1, x.j>) with
// respect to the marking, with r(1, j) = j where that neighbour leaves Q.
// Rows also carry virtual values r(b, b+o) = b+o for b+o <= k (only
// relevant for b <= k), so every row window of n offsets is a permutation
// of 1..n.
class QRTable {
 public:
  QRTable(const QGrid& g, const QPartition& oc) : g_(&g), oc_(oc) {}

  const QGrid& grid() const { return *g_; }
  const QPartition& partition() const { return oc_; }

  int r(const QElt& x) const {
    assert(g_->contains(x));
    const auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    int val;
    const auto up = g_->down_vertical(x);
    if (!up) {
      assert(x.i == 1);
      val = x.j;
    } else {
      const QEltPredicate in_o = [this](const QElt& y) {
        return oc_.in_o(*g_, y);
      };
      val = q_pipe_value(*g_, in_o, x, *up);
    }
    cache_[x] = val;
    return val;
  }

  // Row window: offset o in [0, n-1] of row b, virtual below the k-th
  // column.
  int r_window(int b, int o) const {
    assert(b >= 1 && o >= 0 && o <= g_->n() - 1);
    if (b + o <= g_->k()) {
      assert(b <= g_->k());
      return b + o;
    }
    return r(QElt{b, b + o});
  }

 private:
  const QGrid* g_;
  QPartition oc_;
  mutable std::map<QElt, int> cache_;
};

// ---------------------------------------------------------------------------
// Series coefficient grid and the substitution maps.

// Variables z^{(l)}_{a,b} with level l in [0, level_cap], row a in [1, k],
// column b in [1, n].
struct SeriesGrid {
  int n = 0;
  int k = 0;
  int level_cap = 0;

  SeriesGrid(int n_in, int k_in, int cap) : n(n_in), k(k_in), level_cap(cap) {}

  int vars() const { return (level_cap + 1) * k * n; }
  int svid(int l, int a, int b) const {
    assert(l >= 0 && l <= level_cap);
    assert(a >= 1 && a <= k);
    assert(b >= 1 && b <= n);
    return (l * k + (a - 1)) * n + (b - 1);
  }
  int level(int v) const { return v / (k * n); }
  int row(int v) const { return (v / n) % k + 1; }
  int column(int v) const { return v % n + 1; }

  std::string var_str(int v) const {
    return "z^(" + std::to_string(level(v)) + ")_{" + std::to_string(row(v)) +
           "," + std::to_string(column(v)) + "}";
  }
};

// Substitution attached to a marking: each poset variable z_x maps to a
// Laurent monomial in the series grid.  theta_prime sends z_x to
// z^{(q)}_{a, r(x)} where x sits in row a + q*k with a in [1, k]; the full
// map divides by the image of the closest marked element strictly below x
// in the same row-residue class (or by z^{(0)}_{a,a} when there is none).
class ThetaInf {
 public:
  ThetaInf(const QRTable& rt, int level_cap)
      : rt_(&rt),
        grid_(rt.grid().n(), rt.grid().k(), level_cap) {}

  const SeriesGrid& grid() const { return grid_; }

  int theta_prime_var(const QElt& x) const {
    const QGrid& g = rt_->grid();
    const int a = g.mod_k(x.i);
    const int q = g.row_level(x.i);
    return grid_.svid(q, a, rt_->r(x));
  }

  // The marked element strictly below x in the same row-residue class that
  // sits closest to x (the class is a chain, so the maximum is unique).
  std::optional<QElt> closest_marked_below(const QElt& x) const {
    const QGrid& g = rt_->grid();
    const QPartition& oc = rt_->partition();
    const int a = g.mod_k(x.i);
    const int cx = g.class_column(x);
    std::optional<QElt> best;
    int best_col = 0;
    const auto consider = [&](const QElt& y) {
      const int cy = g.class_column(y);
      if (cy >= cx) return;
      if (!best || cy > best_col) {
        best = y;
        best_col = cy;
      }
    };
    // Diagonal candidates (a + m*k, a + m*k), m >= 1, have class column
    // a + m*n; only finitely many lie strictly below x.
    for (int m = 1; a + m * g.n() < cx; ++m) {
      const QElt diag{a + m * g.k(), a + m * g.k()};
      assert(g.contains(diag));
      consider(diag);
    }
    for (const auto& y : oc.extra) {
      if (g.contains(y) && g.mod_k(y.i) == a) consider(y);
    }
    return best;
  }

  // Laurent exponent vector of the image of z_x.
  Expo var_image(const QElt& x) const {
    const QGrid& g = rt_->grid();
    Expo e = expo_zero(grid_.vars());
    e[theta_prime_var(x)] += 1;
    if (const auto below = closest_marked_below(x)) {
      e[theta_prime_var(*below)] -= 1;
    } else {
      const int a = g.mod_k(x.i);
      e[grid_.svid(0, a, a)] -= 1;
    }
    return e;
  }

  // Image of the distinguished degree-normalising factor: the product of
  // the level-0 diagonal variables z^{(0)}_{a,a}.
  Expo unit_image() const {
    Expo e = expo_zero(grid_.vars());
    for (int a = 1; a <= grid_.k; ++a) e[grid_.svid(0, a, a)] += 1;
    return e;
  }

  // Image of the monomial attached to a marked ideal: unit times the
  // product of variable images over the marked set.  The result must be a
  // genuine (non-Laurent) monomial.
  Expo apply_marked_set(const QIdeal& marked) const {
    Expo e = unit_image();
    for (const auto& x : marked) {
      const Expo ve = var_image(x);
      e = expo_add(e, ve);
    }
    for (int v = 0; v < grid_.vars(); ++v) assert(e[v] >= 0);
    return e;
  }

 private:
  const QRTable* rt_;
  SeriesGrid grid_;
};

// Expected image of an ideal at level d = q*k + l (l in [0, k-1]): the
// staircase monomial
//   z^{(q)}_{l+1, w(l+1)} ... z^{(q)}_{k, w(k)}
//   * z^{(q+1)}_{1, w(1)} ... z^{(q+1)}_{l, w(l)}.
inline Expo series_staircase(const SeriesGrid& sg, const Permutation& w,
                             int level) {
  const int q = level / sg.k;
  const int l = level % sg.k;
  Expo e = expo_zero(sg.vars());
  for (int a = l + 1; a <= sg.k; ++a) e[sg.svid(q, a, w(a))] += 1;
  for (int a = 1; a <= l; ++a) e[sg.svid(q + 1, a, w(a))] += 1;
  return e;
}

// ---------------------------------------------------------------------------
// Variable order on the series grid and initial terms of series minors.

// Ascending variable order: windows (level, row) in ascending order of
// level then row; inside the window of poset row b = level*k + row the n
// offsets are arranged by the marked-column zigzag (read off r_window),
// exactly mirroring the finite-level order.
class SeriesVarOrder {
 public:
  SeriesVarOrder(const QRTable& rt, int level_cap)
      : grid_(rt.grid().n(), rt.grid().k(), level_cap) {
    const QGrid& g = rt.grid();
    const QPartition& oc = rt.partition();
    const int n = g.n();
    ascending_.reserve(grid_.vars());
    for (int l = 0; l <= level_cap; ++l) {
      for (int a = 1; a <= g.k(); ++a) {
        const int b = l * g.k() + a;
        std::vector<int> marked;  // offsets, descending
        for (int o = n - 1; o >= 0; --o) {
          const QElt x{b, b + o};
          const bool is_marked =
              (o == 0) || (g.contains(x) && oc.in_o(g, x));
          if (is_marked) marked.push_back(o);
        }
        assert(!marked.empty() && marked.back() == 0);
        std::vector<int> desc;  // descending window sequence of offsets
        int upper = n;          // exclusive upper bound of the next run
        for (std::size_t t = 0; t < marked.size(); ++t) {
          desc.push_back(marked[t]);
          // unmarked offsets between this marked one and the previous
          // upper bound, in descending order
          for (int o = upper - 1; o > marked[t]; --o) desc.push_back(o);
          upper = marked[t];
        }
        assert(static_cast<int>(desc.size()) == n);
        for (auto it = desc.rbegin(); it != desc.rend(); ++it) {
          ascending_.push_back(grid_.svid(l, a, rt.r_window(b, *it)));
        }
      }
    }
    assert(static_cast<int>(ascending_.size()) == grid_.vars());
    rank_.assign(grid_.vars(), -1);
    for (int r = 0; r < static_cast<int>(ascending_.size()); ++r) {
      assert(rank_[ascending_[r]] == -1);
      rank_[ascending_[r]] = r;
    }
  }

  const SeriesGrid& grid() const { return grid_; }
  int rank(int svid) const { return rank_[svid]; }  // 0 = smallest
  int var_at(int rank) const { return ascending_[rank]; }

  // Reverse lexicographic comparison: the monomial with the larger
  // exponent at the smallest differing variable is the SMALLER one.
  // Returns -1, 0, +1 as a <, =, > b.
  int cmp(const Expo& a, const Expo& b) const {
    for (int r = 0; r < static_cast<int>(ascending_.size()); ++r) {
      const int v = ascending_[r];
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : +1;
    }
    return 0;
  }

  Term initial_term(const std::vector<Term>& poly) const {
    assert(!poly.empty());
    const Term* best = &poly.front();
    for (const auto& t : poly) {
      if (cmp(t.expo, best->expo) > 0) best = &t;
    }
    return *best;
  }

 private:
  SeriesGrid grid_;
  std::vector<int> ascending_;
  std::vector<int> rank_;
};

// ---------------------------------------------------------------------------
// Series minors.

// D^{(l)}_{c_1, ..., c_k}: the t^l coefficient of the k x k minor with
// entries z_{a, c}(t) = sum_l z^{(l)}_{a, c} t^l, columns taken in the
// given order.  Expanded brute force over permutations and level
// compositions; normalized (sorted, combined) like the finite minors.
inline std::vector<Term> series_minor(const SeriesGrid& sg,
                                      const std::vector<int>& cols, int l) {
  const int k = sg.k;
  assert(static_cast<int>(cols.size()) == k);
  assert(l >= 0 && l <= sg.level_cap * k);
  for (int c : cols) assert(1 <= c && c <= sg.n);
  std::map<Expo, Int> acc;
  std::vector<int> perm(k);
  for (int a = 0; a < k; ++a) perm[a] = a;
  std::sort(perm.begin(), perm.end());
  do {
    const int psign = Permutation::sort_sign(perm);
    // compositions of l into k parts, each within the level cap
    std::vector<int> part(k, 0);
    const std::function<void(int, int)> rec = [&](int pos, int rem) {
      if (pos == k - 1) {
        if (rem > sg.level_cap) return;
        part[pos] = rem;
        Expo e = expo_zero(sg.vars());
        for (int a = 0; a < k; ++a) {
          e[sg.svid(part[a], a + 1, cols[perm[a]])] += 1;
        }
        acc[e] += psign;
        return;
      }
      for (int v = 0; v <= std::min(rem, sg.level_cap); ++v) {
        part[pos] = v;
        rec(pos + 1, rem - v);
      }
    };
    rec(0, l);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Term> out;
  for (auto& [e, c] : acc) {
    if (c != 0) out.push_back(Term{c, e});
  }
  return out;
}

}  // namespace mcop
