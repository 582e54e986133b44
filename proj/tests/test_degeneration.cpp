#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "mcop/degeneration.hpp"
#include "mcop/pipedream.hpp"
#include "mcop/polynomial.hpp"
#include "mcop/poset.hpp"

using namespace mcop;

namespace {

OCPartition oc_of(const GtPoset& p, std::vector<PosetElement> o_cells) {
  OCPartition oc;
  for (auto e : o_cells) oc.o |= Mask{1} << p.id(e);
  REQUIRE(oc.valid(p));
  return oc;
}

}  // namespace

TEST_CASE("subset image ground truth for sixteen partitions") {
  const GtPoset p(4);
  const Mask j = p.ideal_generated_by({{1, 4}, {2, 3}});
  int tested = 0;
  for (const OCPartition& oc : all_partitions(p)) {
    const bool has12 = oc.in_o(p, p.id(1, 2));
    const bool has13 = oc.in_o(p, p.id(1, 3));
    if (!has12 || has13) continue;
    const PsiImage psi = psi_map(p, oc, j);
    REQUIRE(psi.subset == std::vector<int>{3, 4});
    REQUIRE(psi.sign == -1);
    ++tested;
  }
  REQUIRE(tested == 16);
}

TEST_CASE("subset images are bijective per level") {
  for (int n = 3; n <= 4; ++n) {
    const GtPoset p(n);
    const auto levels = p.enumerate_ideals_by_level();
    for (const OCPartition& oc : all_partitions(p)) {
      for (int k = 0; k <= n; ++k) {
        std::set<std::vector<int>> images;
        for (Mask j : levels[static_cast<size_t>(k)]) {
          const PsiImage psi = psi_map(p, oc, j);
          REQUIRE(static_cast<int>(psi.subset.size()) == k);
          images.insert(psi.subset);
        }
        REQUIRE(images.size() == levels[static_cast<size_t>(k)].size());
      }
    }
  }
}

TEST_CASE("commuting square holds for the ground-truth partition at n=4") {
  const GtPoset p(4);
  const auto oc = oc_of(p, {{1, 2}, {1, 4}, {2, 3}});
  const RTable rt(p, oc);
  const VarOrder ord(p, oc, rt);
  const ThetaMap theta(p, oc, rt);
  for (const auto& level : p.enumerate_ideals_by_level()) {
    for (Mask j : level) {
      REQUIRE(check_initial_unsorted(p, oc, ord, j));
      REQUIRE(check_commuting_square(p, oc, theta, ord, j));
    }
  }
}

TEST_CASE("degree-2 kernels computed from markings and from initial terms agree") {
  // Monomial side: group pairs of ideals by the sum of their marked-cell
  // indicator vectors.  Initial-term side: group the same pairs by the sum
  // of the initial exponents of the corresponding minors, tracking signs.
  // The fibers (and sign patterns) must coincide.
  const GtPoset p(3);
  const auto levels = p.enumerate_ideals_by_level();
  for (const OCPartition& oc : all_partitions(p)) {
    const RTable rt(p, oc);
    const VarOrder ord(p, oc, rt);
    const ThetaMap theta(p, oc, rt);
    for (int a = 1; a <= 2; ++a) {
      for (int b = a; b <= 2; ++b) {
        std::map<Expo, std::vector<std::pair<std::pair<Mask, Mask>, Int>>>
            monomial_side, initial_side;
        for (Mask j1 : levels[static_cast<size_t>(a)]) {
          for (Mask j2 : levels[static_cast<size_t>(b)]) {
            if (a == b && j2 < j1) continue;
            const Expo m = expo_add(theta.apply_mask(m_oc(p, oc, j1)),
                                    theta.apply_mask(m_oc(p, oc, j2)));
            monomial_side[m].push_back({{j1, j2}, Int(1)});
            const PsiImage psi1 = psi_map(p, oc, j1);
            const PsiImage psi2 = psi_map(p, oc, j2);
            const Term t1 = ord.initial_term(minor_det(ord.grid(), psi1.subset));
            const Term t2 = ord.initial_term(minor_det(ord.grid(), psi2.subset));
            initial_side[expo_add(t1.expo, t2.expo)].push_back(
                {{j1, j2}, t1.coeff * t2.coeff * psi1.sign * psi2.sign});
          }
        }
        REQUIRE(monomial_side.size() == initial_side.size());
        for (const auto& [key, members] : monomial_side) {
          REQUIRE(initial_side.count(key) == 1);
          const auto& other = initial_side.at(key);
          REQUIRE(other.size() == members.size());
          for (size_t t = 0; t < members.size(); ++t) {
            REQUIRE(other[t].first == members[t].first);
            // the square commutes exactly, so the transported sign is +1
            REQUIRE(other[t].second == members[t].second);
          }
        }
      }
    }
  }
}

TEST_CASE("kernel census at n=3 for the two-step signature") {
  const GtPoset p(3);
  const CensusResult res = kernel_census(p, {1, 2});
  REQUIRE(res.partitions == 8);
  REQUIRE(res.realized == 2);
  REQUIRE(res.distinct == 3);
  REQUIRE(res.orbits == 1);
  REQUIRE(res.orbit_sizes == std::vector<int>{3});
  REQUIRE_FALSE(res.closed_under_sn);
}

TEST_CASE("kernel census at n=4 for the full-flag signature") {
  const GtPoset p(4);
  const CensusResult res = kernel_census(p, {1, 2, 3});
  REQUIRE(res.partitions == 64);
  REQUIRE(res.realized == 8);
  REQUIRE(res.distinct == 24);
  REQUIRE(res.orbits == 2);
  REQUIRE(res.orbit_sizes == std::vector<int>{12, 12});
  REQUIRE_FALSE(res.closed_under_sn);
}

TEST_CASE("kernel census of a single partition is a single orbit") {
  const GtPoset p(3);
  const CensusResult res = kernel_census(p, {1, 2}, {oc_of(p, {})});
  REQUIRE(res.partitions == 1);
  REQUIRE(res.realized == 1);
  REQUIRE(res.orbits == 1);
  REQUIRE(res.distinct == 3);  // full orbit of the realised fingerprint
}

TEST_CASE("fingerprints are invariant under relabeling by a stabilising map") {
  // acting and then acting by the inverse returns the original profile
  const GtPoset p(3);
  const auto oc = oc_of(p, {{1, 2}});
  const KernelProfile prof = kernel_profile(p, oc, {1, 2});
  const Permutation w({2, 3, 1});
  const KernelProfile round =
      act_on_profile(w.inverse(), act_on_profile(w, prof));
  REQUIRE(round == prof);
}
