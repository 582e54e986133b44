#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "mcop/degeneration.hpp"
#include "mcop/polytope.hpp"
#include "mcop/poset.hpp"
#include "mcop/repn.hpp"
#include "mcop/weight.hpp"

using namespace mcop;

namespace {

OCPartition oc_of(const GtPoset& p, std::vector<PosetElement> o_cells) {
  OCPartition oc;
  for (auto e : o_cells) oc.o |= Mask{1} << p.id(e);
  REQUIRE(oc.valid(p));
  return oc;
}

// Exponent vector of the basis monomial attached to a lattice point: the
// transformed point with its diagonal coordinates dropped.
std::vector<int> pbw_exponent(const GtPoset& p, const XiMap& xi,
                              const LatticePoint& x) {
  LatticePoint y = xi.apply(x);
  for (int v : y) REQUIRE(v >= 0);
  for (int i = 1; i <= p.n(); ++i) y[static_cast<size_t>(p.id(i, i))] = 0;
  return y;
}

void check_basis(const GtPoset& p, const OCPartition& oc, const Weight& wt) {
  const RTable rt(p, oc);
  const XiMap xi(p, oc, rt);
  const TensorSpace space(p.n(), wt);
  const RepVector u = space.highest_weight_vector();

  const PointSet pts = mcop_lattice_points(p, oc, wt);
  std::vector<RepVector> family;
  for (const LatticePoint& x : pts) {
    RepVector v = space.apply_pbw(p, pbw_exponent(p, xi, x), u);
    REQUIRE_FALSE(v.empty());  // no monomial may annihilate the cyclic vector
    family.push_back(std::move(v));
  }
  const Int dim = weyl_dim(wt);
  REQUIRE(Int(pts.size()) == dim);
  REQUIRE(Int(rep_vectors_rank(family)) == dim);
}

}  // namespace

TEST_CASE("single lowering operator on a subset basis vector") {
  std::uint32_t out = 0;
  int sign = 0;

  // f_{1,3} e_{1,2} = -e_{2,3}: index 1 moves past index 2
  REQUIRE(lower_subset(0b011u, 1, 3, out, sign));
  REQUIRE(out == 0b110u);
  REQUIRE(sign == -1);

  // f_{1,2} e_{1,3} = +e_{2,3}: nothing strictly between 1 and 2
  REQUIRE(lower_subset(0b101u, 1, 2, out, sign));
  REQUIRE(out == 0b110u);
  REQUIRE(sign == 1);

  // zero cases: source index absent, or target index already present
  REQUIRE_FALSE(lower_subset(0b010u, 1, 3, out, sign));
  REQUIRE_FALSE(lower_subset(0b011u, 1, 2, out, sign));
}

TEST_CASE("Leibniz action spreads over tensor factors") {
  const TensorSpace space(3, Weight(3, {2, 0}));
  REQUIRE(space.factors() == 2);
  const RepVector u = space.highest_weight_vector();
  REQUIRE(u.size() == 1);

  const RepVector v = space.apply_f(u, 1, 2);
  // e_2 (x) e_1 + e_1 (x) e_2, both with coefficient +1
  REQUIRE(v.size() == 2);
  for (const auto& [key, coeff] : v) {
    (void)key;
    REQUIRE(coeff == 1);
  }

  // lowering past the bottom weight kills the vector
  const RepVector w = space.apply_f(space.apply_f(space.apply_f(v, 1, 2), 1, 2), 1, 2);
  REQUIRE(w.empty());
}

TEST_CASE("monomial families span the module (n=3, all partitions)") {
  const GtPoset p(3);
  const std::vector<Weight> wts = {Weight(3, {1, 0}), Weight(3, {0, 1}),
                                   Weight(3, {1, 1})};
  for (const OCPartition& oc : all_partitions(p)) {
    for (const Weight& wt : wts) check_basis(p, oc, wt);
  }
}

TEST_CASE("monomial families span the module (n=4, ground-truth partition)") {
  const GtPoset p(4);
  const auto oc = oc_of(p, {{1, 2}, {1, 4}, {2, 3}});
  check_basis(p, oc, Weight(4, {1, 1, 0}));
  check_basis(p, oc, Weight(4, {1, 1, 1}));
}

TEST_CASE("all chain-like exponents agree with the raw lattice points") {
  const GtPoset p(3);
  const OCPartition oc = OCPartition::all_c(p);
  const RTable rt(p, oc);
  const XiMap xi(p, oc, rt);
  for (const LatticePoint& x : mcop_lattice_points(p, oc, Weight(3, {1, 1}))) {
    const std::vector<int> e = pbw_exponent(p, xi, x);
    for (int eid = 0; eid < p.size(); ++eid) {
      const PosetElement cell = p.element(eid);
      if (cell.i < cell.j)
        REQUIRE(e[static_cast<size_t>(eid)] == x[static_cast<size_t>(eid)]);
      else
        REQUIRE(e[static_cast<size_t>(eid)] == 0);
    }
  }
}

TEST_CASE("dependent families are detected") {
  const TensorSpace space(3, Weight(3, {1, 0}));
  const RepVector u = space.highest_weight_vector();
  const GtPoset p(3);
  std::vector<int> e12(static_cast<size_t>(p.size()), 0);
  e12[static_cast<size_t>(p.id(1, 2))] = 1;
  const RepVector v = space.apply_pbw(p, e12, u);
  REQUIRE(rep_vectors_rank({u, v, u, v}) == 2);
  RepVector sum = u;
  for (const auto& [key, coeff] : v) sum[key] += coeff;
  REQUIRE(rep_vectors_rank({u, v, sum}) == 2);
}
