#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "mcop/degeneration.hpp"
#include "mcop/polytope.hpp"
#include "mcop/poset.hpp"
#include "mcop/weight.hpp"

using namespace mcop;

namespace {

OCPartition oc_of(const GtPoset& p, std::vector<PosetElement> o_cells) {
  OCPartition oc;
  for (auto e : o_cells) oc.o |= Mask{1} << p.id(e);
  REQUIRE(oc.valid(p));
  return oc;
}

}  // namespace

TEST_CASE("weyl dimension formula ground truths") {
  REQUIRE(weyl_dim(Weight(3, {1, 0})) == 3);
  REQUIRE(weyl_dim(Weight(3, {0, 1})) == 3);
  REQUIRE(weyl_dim(Weight(3, {1, 1})) == 8);
  REQUIRE(weyl_dim(Weight(4, {1, 0, 0})) == 4);
  REQUIRE(weyl_dim(Weight(4, {0, 1, 0})) == 6);
  REQUIRE(weyl_dim(Weight(4, {0, 1, 1})) == 20);
  REQUIRE(weyl_dim(Weight(4, {1, 1, 1})) == 64);
}

TEST_CASE("lattice point counts equal the Weyl dimension (n=3 exhaustive)") {
  const GtPoset p(3);
  for (const Weight& wt : weights_up_to(3, 3)) {
    const Int expected = weyl_dim(wt);
    for (const OCPartition& oc : all_partitions(p)) {
      const PointSet pts = mcop_lattice_points(p, oc, wt);
      REQUIRE(Int(pts.size()) == expected);
    }
  }
}

TEST_CASE("lattice point counts at n=4 for the ground-truth partition") {
  const GtPoset p(4);
  const auto oc = oc_of(p, {{1, 2}, {1, 4}, {2, 3}});
  for (const Weight& wt : weights_up_to(4, 2)) {
    REQUIRE(Int(mcop_lattice_points(p, oc, wt).size()) == weyl_dim(wt));
  }
}

TEST_CASE("fundamental layers are indicator points of marked sets") {
  const GtPoset p(4);
  const auto oc = oc_of(p, {{1, 2}, {1, 4}, {2, 3}});
  const auto levels = p.enumerate_ideals_by_level();
  for (int k = 1; k <= 3; ++k) {
    const PointSet pts = fundamental_points(p, oc, k);
    REQUIRE(pts.size() == levels[static_cast<size_t>(k)].size());
    for (Mask j : levels[static_cast<size_t>(k)]) {
      REQUIRE(pts.count(indicator_point(p, m_oc(p, oc, j))) == 1);
    }
  }
}

TEST_CASE("Minkowski sums of layers assemble every weight") {
  const GtPoset p(3);
  for (const OCPartition& oc : all_partitions(p)) {
    const PointSet p10 = mcop_lattice_points(p, oc, Weight(3, {1, 0}));
    const PointSet p01 = mcop_lattice_points(p, oc, Weight(3, {0, 1}));
    const PointSet p11 = mcop_lattice_points(p, oc, Weight(3, {1, 1}));
    const PointSet p21 = mcop_lattice_points(p, oc, Weight(3, {2, 1}));
    REQUIRE(minkowski_sum(p10, p01) == p11);
    REQUIRE(minkowski_sum(p10, p11) == p21);
  }
}

TEST_CASE("chain-inequality model agrees with the sumset model pointwise") {
  {
    const GtPoset p(3);
    for (const Weight& wt : weights_up_to(3, 3)) {
      for (const OCPartition& oc : all_partitions(p)) {
        REQUIRE(mcop_points_by_inequalities(p, oc, wt) ==
                mcop_lattice_points(p, oc, wt));
      }
    }
  }
  {
    const GtPoset p(4);
    const auto oc = oc_of(p, {{1, 2}, {1, 4}, {2, 3}});
    for (const Weight& wt :
         {Weight(4, {1, 1, 1}), Weight(4, {1, 0, 1}), Weight(4, {0, 2, 0})}) {
      REQUIRE(mcop_points_by_inequalities(p, oc, wt) ==
              mcop_lattice_points(p, oc, wt));
    }
  }
}

TEST_CASE("extreme partitions recover the classical polytopes") {
  const GtPoset p(3);
  const Weight wt(3, {1, 1});

  // all order-like: the order polytope model has no chain cells, so the
  // inequalities reduce to monotonicity between marked cells
  const OCPartition gt_side = OCPartition::all_o(p);
  const PointSet gt_points = mcop_lattice_points(p, gt_side, wt);
  for (const LatticePoint& x : gt_points) {
    // componentwise monotone decreasing along the poset
    for (int a = 0; a < p.size(); ++a) {
      for (int b = 0; b < p.size(); ++b) {
        if (GtPoset::leq(p.element(a), p.element(b))) {
          REQUIRE(x[static_cast<size_t>(a)] >= x[static_cast<size_t>(b)]);
        }
      }
    }
  }

  // all chain-like: max over saturated off-diagonal chains is bounded by
  // the largest diagonal value; every coordinate is nonnegative
  const OCPartition fflv_side = OCPartition::all_c(p);
  const PointSet fflv_points = mcop_lattice_points(p, fflv_side, wt);
  for (const LatticePoint& x : fflv_points) {
    for (int v : x) REQUIRE(v >= 0);
  }
  REQUIRE(gt_points.size() == fflv_points.size());
}

TEST_CASE("lattice transform is unitriangular with unit determinant") {
  const GtPoset p(4);
  for (const OCPartition& oc : all_partitions(p)) {
    const RTable rt(p, oc);
    const XiMap xi(p, oc, rt);
    REQUIRE(xi.unitriangular_under_keys());
    const Int d = xi.det();
    REQUIRE((d == 1 || d == -1));
  }
}

TEST_CASE("lattice transform sends layer vertices to subset staircases") {
  const GtPoset p(4);
  const auto levels = p.enumerate_ideals_by_level();
  for (const OCPartition& oc : all_partitions(p)) {
    const RTable rt(p, oc);
    const XiMap xi(p, oc, rt);
    const Permutation tau = rt.tau();
    for (int k = 1; k <= 3; ++k) {
      for (Mask j : levels[static_cast<size_t>(k)]) {
        const Permutation w = w_of_ideal(p, oc, j);
        const LatticePoint img = xi.apply(indicator_point(p, m_oc(p, oc, j)));
        LatticePoint expected(static_cast<size_t>(p.size()), 0);
        for (int a = 1; a <= k; ++a) {
          const int col = tau(w(a));
          REQUIRE(col >= a);
          expected[static_cast<size_t>(p.id(a, col))] += 1;
        }
        REQUIRE(img == expected);
      }
    }
  }
}

TEST_CASE("transformed polytopes keep their lattice point count") {
  const GtPoset p(4);
  const auto oc = oc_of(p, {{1, 2}, {1, 4}, {2, 3}});
  const RTable rt(p, oc);
  const XiMap xi(p, oc, rt);
  for (const Weight& wt : {Weight(4, {1, 1, 0}), Weight(4, {1, 1, 1})}) {
    const PointSet pts = mcop_lattice_points(p, oc, wt);
    std::set<LatticePoint> images;
    for (const LatticePoint& x : pts) {
      const LatticePoint y = xi.apply(x);
      for (int v : y) REQUIRE(v >= 0);
      images.insert(y);
    }
    REQUIRE(images.size() == pts.size());
  }
}

TEST_CASE("all chain-like transform is the identity off the diagonal") {
  const GtPoset p(4);
  const OCPartition oc = OCPartition::all_c(p);
  const RTable rt(p, oc);
  const XiMap xi(p, oc, rt);
  const PointSet pts = mcop_lattice_points(p, oc, Weight(4, {1, 0, 1}));
  for (const LatticePoint& x : pts) {
    const LatticePoint y = xi.apply(x);
    for (int eid = 0; eid < p.size(); ++eid) {
      const PosetElement e = p.element(eid);
      if (e.i < e.j) REQUIRE(y[static_cast<size_t>(eid)] == x[static_cast<size_t>(eid)]);
    }
  }
}
