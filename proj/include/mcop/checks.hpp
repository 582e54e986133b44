#pragma once

// Named check suites shared by the command-line verifier and the acceptance
// harness.  Each suite runs a themed battery of exact computations and
// returns deterministic results: check names, pass/fail, and structured
// details that are byte-identical across runs of the same configuration.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcop/certificate.hpp"
#include "mcop/degeneration.hpp"
#include "mcop/pipedream.hpp"
#include "mcop/polytope.hpp"
#include "mcop/repn.hpp"
#include "mcop/semiinf.hpp"
#include "mcop/sweep.hpp"
#include "mcop/tableaux.hpp"
#include "mcop/weight.hpp"

namespace mcop::checks {

struct CheckResult {
    std::string name;
    bool pass = true;
    OrderedJson details = OrderedJson::object();
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool budget_hit = false;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, OrderedJson details = OrderedJson::object()) {
        checks.push_back(CheckResult{std::move(name), pass, std::move(details)});
    }
    void absorb(const SuiteReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        budget_hit = budget_hit || other.budget_hit;
    }
};

inline OCPartition partition_from_cells(const GtPoset& p,
                                        const std::vector<PosetElement>& cells) {
    OCPartition oc;
    for (PosetElement e : cells) oc.o |= Mask{1} << p.id(e);
    return oc;
}

// ---------------------------------------------------------------------------
// Suite 1: folded-permutation ground truth, finite and periodic.

inline SuiteReport pipedream_ground_truth() {
    SuiteReport rep;
    {
        const GtPoset p(4);
        Mask m = 0;
        for (PosetElement e :
             std::vector<PosetElement>{{1, 1}, {2, 2}, {1, 2}, {2, 3}, {1, 4}})
            m |= Mask{1} << p.id(e);
        const Permutation expected({4, 3, 1, 2});
        const Permutation folded = w_of_subset(p, m);
        const Permutation traced = w_by_pipes(p, m);
        rep.add("finite_marked_set_permutation", folded == expected && traced == expected,
                {{"folded", folded.str()}, {"traced", traced.str()}, {"expected", "(4,3,1,2)"}});
    }
    {
        const QGrid g(5, 3);
        const std::vector<QElt> m = {{1, 4}, {2, 5}, {4, 4}, {3, 6}, {4, 5}};
        const Permutation expected({2, 5, 4, 3, 1});
        const Permutation folded = w_of_subset_q(g, m);
        rep.add("periodic_marked_set_permutation", folded == expected,
                {{"folded", folded.str()}, {"expected", "(2,5,4,3,1)"}});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suite 2: subset-image ground truth for the reference ideals.

inline SuiteReport subset_image_ground_truth() {
    SuiteReport rep;
    {
        const GtPoset p(4);
        const Mask j = p.ideal_generated_by({{1, 4}, {2, 3}});
        int tested = 0;
        bool ok = true;
        for (const OCPartition& oc : all_partitions(p)) {
            if (!oc.in_o(p, p.id(1, 2)) || oc.in_o(p, p.id(1, 3))) continue;
            const PsiImage psi = psi_map(p, oc, j);
            ok = ok && psi.subset == std::vector<int>{3, 4} && psi.sign == -1;
            ++tested;
        }
        rep.add("finite_subset_image", ok && tested == 16,
                {{"partitions_tested", tested}, {"subset", "{3,4}"}, {"sign", -1}});
    }
    {
        const QGrid g(5, 3);
        const QPartition oc{{QElt{1, 4}, QElt{2, 5}, QElt{3, 6}, QElt{4, 5}}};
        const QIdeal j = q_ideal_generated_by(g, {{4, 5}, {3, 6}});
        const PsiInfImage psi = psi_inf(g, oc, j);
        rep.add("periodic_subset_image",
                psi.level == 1 && psi.tuple == std::vector<int>{2, 5, 4} &&
                    psi.sorted == std::vector<int>{2, 4, 5} && psi.sign == -1,
                {{"level", psi.level},
                 {"tuple", psi.tuple},
                 {"sorted", psi.sorted},
                 {"sign", psi.sign}});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suite 3: the degeneration theorem, one partition at a time.
//
// For each partition: subset images bijective level by level, brute-forced
// initial terms of the minors equal to the predicted staircase monomials,
// the substitution square commuting on every generator, and the degree-2
// kernels computed from markings and from initial terms agreeing as signed
// sets over every level pair of the signature.

struct PartitionVerdict {
    bool psi_bijective = true;
    bool initial_terms = true;
    bool square_commutes = true;
    bool kernels_agree = true;
    bool ok() const { return psi_bijective && initial_terms && square_commutes && kernels_agree; }
};

inline PartitionVerdict verify_partition(const GtPoset& p, const OCPartition& oc,
                                         const std::vector<std::vector<Mask>>& levels,
                                         const std::vector<int>& signature) {
    PartitionVerdict v;
    const RTable rt(p, oc);
    const VarOrder ord(p, oc, rt);
    const ThetaMap theta(p, oc, rt);

    std::map<Mask, PsiImage> psi_of;
    std::map<Mask, Term> lead_of;
    std::map<Mask, Expo> marked_expo_of;
    for (int k : signature) {
        std::set<std::vector<int>> images;
        for (Mask j : levels[static_cast<size_t>(k)]) {
            const PsiImage psi = psi_map(p, oc, j);
            images.insert(psi.subset);
            v.initial_terms = v.initial_terms && check_initial_unsorted(p, oc, ord, j);
            v.square_commutes = v.square_commutes && check_commuting_square(p, oc, theta, ord, j);
            lead_of[j] = ord.initial_term(minor_det(ord.grid(), psi.subset));
            marked_expo_of[j] = theta.apply_mask(m_oc(p, oc, j));
            psi_of[j] = psi;
        }
        v.psi_bijective =
            v.psi_bijective && images.size() == levels[static_cast<size_t>(k)].size();
    }

    for (size_t s = 0; s < signature.size() && v.kernels_agree; ++s) {
        for (size_t t = s; t < signature.size() && v.kernels_agree; ++t) {
            const int a = signature[s], b = signature[t];
            std::map<Expo, std::vector<std::pair<std::pair<Mask, Mask>, Int>>> marked_side,
                initial_side;
            for (Mask j1 : levels[static_cast<size_t>(a)]) {
                for (Mask j2 : levels[static_cast<size_t>(b)]) {
                    if (a == b && j2 < j1) continue;
                    marked_side[expo_add(marked_expo_of[j1], marked_expo_of[j2])].push_back(
                        {{j1, j2}, Int(1)});
                    const Term& t1 = lead_of[j1];
                    const Term& t2 = lead_of[j2];
                    initial_side[expo_add(t1.expo, t2.expo)].push_back(
                        {{j1, j2}, t1.coeff * t2.coeff * psi_of[j1].sign * psi_of[j2].sign});
                }
            }
            if (marked_side != initial_side) v.kernels_agree = false;
        }
    }
    return v;
}

inline std::vector<int> full_signature(int n) {
    std::vector<int> sig(static_cast<size_t>(n - 1));
    for (int k = 1; k < n; ++k) sig[static_cast<size_t>(k - 1)] = k;
    return sig;
}

inline std::vector<OCPartition> sample_partitions(const GtPoset& p, int count, unsigned seed) {
    std::mt19937 rng(seed);
    const Mask off = p.offdiag_mask();
    std::vector<int> bits;
    for (int v = 0; v < p.size(); ++v)
        if ((off >> v) & 1) bits.push_back(v);
    std::set<Mask> seen;
    std::uniform_int_distribution<int> coin(0, 1);
    while (static_cast<int>(seen.size()) < count) {
        Mask o = 0;
        for (int v : bits)
            if (coin(rng)) o |= Mask{1} << v;
        seen.insert(o);
    }
    std::vector<OCPartition> out;
    for (Mask o : seen) out.push_back(OCPartition{o});
    return out;
}

inline SuiteReport degeneration_theorem(int n, const std::vector<OCPartition>& partitions,
                                        const BudgetClock& clock, int workers,
                                        std::vector<int> signature = {}) {
    const GtPoset p(n);
    const auto levels = p.enumerate_ideals_by_level();
    if (signature.empty()) signature = full_signature(n);

    std::vector<PartitionVerdict> verdicts(partitions.size());
    const SweepStatus status = run_sweep(
        static_cast<int>(partitions.size()), workers, clock, [&](int idx) {
            verdicts[static_cast<size_t>(idx)] = verify_partition(
                p, partitions[static_cast<size_t>(idx)], levels, signature);
        });

    SuiteReport rep;
    rep.budget_hit = status.budget_hit;
    int bad = 0;
    for (int t = 0; t < status.completed; ++t)
        if (!verdicts[static_cast<size_t>(t)].ok()) ++bad;
    OrderedJson details;
    details["n"] = n;
    details["signature"] = signature;
    details["partitions"] = static_cast<int>(partitions.size());
    details["completed"] = status.completed;
    details["failures"] = bad;
    rep.add("degeneration_theorem_n" + std::to_string(n), bad == 0,
            std::move(details));
    return rep;
}

// ---------------------------------------------------------------------------
// Suite 4: census of initial toric ideals over a family of partitions.

inline SuiteReport census_suite(int n, const std::vector<int>& signature,
                                const std::vector<OCPartition>& partitions, bool full_sweep) {
    const GtPoset p(n);
    const CensusResult res = kernel_census(p, signature, partitions);

    // Frozen ground truth for the two reference configurations; applies only
    // when the whole partition family was swept.
    std::optional<std::pair<int, int>> expected;
    if (full_sweep && n == 3 && signature == std::vector<int>{1, 2}) expected = {{3, 1}};
    if (full_sweep && n == 4 && signature == std::vector<int>{1, 2, 3}) expected = {{24, 2}};

    int size_sum = 0;
    for (int s : res.orbit_sizes) size_sum += s;
    bool ok = res.realized <= res.distinct && size_sum == res.distinct &&
              static_cast<int>(res.orbit_sizes.size()) == res.orbits;
    if (expected) ok = ok && res.distinct == expected->first && res.orbits == expected->second;

    OrderedJson details;
    details["n"] = n;
    details["signature"] = signature;
    details["partitions"] = res.partitions;
    details["realized"] = res.realized;
    details["distinct"] = res.distinct;
    details["orbits"] = res.orbits;
    details["orbit_sizes"] = res.orbit_sizes;
    details["closed_under_relabeling"] = res.closed_under_sn;
    if (expected) {
        details["expected_distinct"] = expected->first;
        details["expected_orbits"] = expected->second;
    }
    SuiteReport rep;
    rep.add("census_n" + std::to_string(n), ok, std::move(details));
    return rep;
}

inline SuiteReport census_suite(int n, const std::vector<int>& signature) {
    const GtPoset p(n);
    return census_suite(n, signature, all_partitions(p), true);
}

// ---------------------------------------------------------------------------
// Suite 5: lattice-point counts, Minkowski splits, and the inequality model.

inline SuiteReport polytope_suite(int n, int total_cap, const BudgetClock& clock, int workers) {
    const GtPoset p(n);
    const auto partitions = all_partitions(p);
    const auto lambdas = weights_up_to(n, total_cap);

    struct CellResult {
        bool counts = true;
        bool minkowski = true;
        bool inequality = true;
        std::vector<long long> counts_per_lambda;
    };
    std::vector<CellResult> cells(partitions.size());

    const SweepStatus status = run_sweep(
        static_cast<int>(partitions.size()), workers, clock, [&](int idx) {
            const OCPartition& oc = partitions[static_cast<size_t>(idx)];
            CellResult& cell = cells[static_cast<size_t>(idx)];
            std::map<std::vector<int>, PointSet> cache;
            for (const Weight& wt : lambdas) {
                PointSet pts = mcop_lattice_points(p, oc, wt);
                if (Int(static_cast<long long>(pts.size())) != weyl_dim(wt)) cell.counts = false;
                cell.counts_per_lambda.push_back(static_cast<long long>(pts.size()));
                if (mcop_points_by_inequalities(p, oc, wt) != pts) cell.inequality = false;
                cache.emplace(wt.a, std::move(pts));
            }
            // Every split of every weight reassembles the point set exactly.
            for (const Weight& wt : lambdas) {
                if (wt.total() < 2) continue;
                std::vector<int> mu(wt.a.size(), 0);
                auto rec = [&](auto&& self, size_t pos) -> void {
                    if (pos == mu.size()) {
                        std::vector<int> nu(wt.a.size());
                        int mu_tot = 0, nu_tot = 0;
                        for (size_t q = 0; q < mu.size(); ++q) {
                            nu[q] = wt.a[q] - mu[q];
                            mu_tot += mu[q];
                            nu_tot += nu[q];
                        }
                        if (mu_tot == 0 || nu_tot == 0 || mu > nu) return;
                        if (minkowski_sum(cache.at(mu), cache.at(nu)) != cache.at(wt.a))
                            cell.minkowski = false;
                        return;
                    }
                    for (int v = 0; v <= wt.a[pos]; ++v) {
                        mu[pos] = v;
                        self(self, pos + 1);
                    }
                };
                rec(rec, 0);
            }
        });

    SuiteReport rep;
    rep.budget_hit = status.budget_hit;
    bool counts_ok = true, mink_ok = true, ineq_ok = true, independent = true;
    for (int t = 0; t < status.completed; ++t) {
        counts_ok = counts_ok && cells[static_cast<size_t>(t)].counts;
        mink_ok = mink_ok && cells[static_cast<size_t>(t)].minkowski;
        ineq_ok = ineq_ok && cells[static_cast<size_t>(t)].inequality;
        if (cells[static_cast<size_t>(t)].counts_per_lambda != cells[0].counts_per_lambda)
            independent = false;
    }
    OrderedJson details;
    details["n"] = n;
    details["partitions"] = static_cast<int>(partitions.size());
    details["completed"] = status.completed;
    details["weights"] = static_cast<int>(lambdas.size());
    rep.add("lattice_point_counts_n" + std::to_string(n), counts_ok, details);
    rep.add("counts_independent_of_partition_n" + std::to_string(n), independent,
            details);
    rep.add("minkowski_splits_n" + std::to_string(n), mink_ok, details);
    rep.add("inequality_model_n" + std::to_string(n), ineq_ok, details);
    return rep;
}

// ---------------------------------------------------------------------------
// Suite 6: tableaux — frozen single columns, frozen multi-column verdicts,
// counts against the dimension oracle, and the chain round-trip.

inline SuiteReport tableaux_suite(const BudgetClock& clock, int workers) {
    SuiteReport rep;
    const GtPoset p(4);
    const OCPartition frozen = partition_from_cells(p, {{1, 2}, {1, 4}, {2, 3}});
    {
        const RTable rt(p, frozen);
        const std::set<std::vector<int>> expect2 = {{2, 1}, {3, 1}, {2, 3},
                                                    {4, 1}, {4, 3}, {4, 2}};
        const std::set<std::vector<int>> expect3 = {
            {2, 3, 1}, {4, 3, 1}, {4, 2, 1}, {4, 3, 2}};
        auto collect = [&](int k) {
            std::set<std::vector<int>> got;
            std::vector<int> t(static_cast<size_t>(k));
            std::vector<bool> used(5, false);
            auto fill = [&](auto&& self, int pos) -> void {
                if (pos == k) {
                    if (is_oc_tuple(rt, t)) got.insert(t);
                    return;
                }
                for (int v = 1; v <= 4; ++v) {
                    if (used[static_cast<size_t>(v)]) continue;
                    used[static_cast<size_t>(v)] = true;
                    t[static_cast<size_t>(pos)] = v;
                    self(self, pos + 1);
                    used[static_cast<size_t>(v)] = false;
                }
            };
            fill(fill, 0);
            return got;
        };
        rep.add("frozen_single_columns", collect(2) == expect2 && collect(3) == expect3,
                {{"height_two", 6}, {"height_three", 4}});

        const std::vector<Tableau> accepted = {
            Tableau{{{4, 3, 2}, {2, 3, 1}, {2, 3}, {3, 1}}},
            Tableau{{{4, 2, 1}, {4, 3}, {2, 3}, {2, 3}}},
            Tableau{{{4, 2}, {2, 3}, {3, 1}}},
        };
        const std::vector<Tableau> rejected = {
            Tableau{{{4, 3, 1}, {4, 1}, {2, 3}}},
            Tableau{{{2, 3}, {4, 1}}},
            Tableau{{{4, 3, 2}, {3, 2}, {4, 2}}},
        };
        bool ok = true;
        for (const Tableau& y : accepted) ok = ok && is_oc_semistandard(rt, y);
        for (const Tableau& y : rejected) ok = ok && !is_oc_semistandard(rt, y);
        rep.add("frozen_multicolumn_verdicts", ok, {{"accepted", 3}, {"rejected", 3}});
    }

    const auto partitions = all_partitions(p);
    const auto lambdas = weights_up_to(4, 3);
    struct CellResult {
        bool counts = true;
        bool roundtrip = true;
    };
    std::vector<CellResult> cells(partitions.size());
    const SweepStatus status = run_sweep(
        static_cast<int>(partitions.size()), workers, clock, [&](int idx) {
            const OCPartition& oc = partitions[static_cast<size_t>(idx)];
            CellResult& cell = cells[static_cast<size_t>(idx)];
            const RTable rt(p, oc);
            for (const Weight& wt : lambdas) {
                const auto tabs = enumerate_semistandard(p, oc, rt, wt);
                if (Int(static_cast<long long>(tabs.size())) != weyl_dim(wt))
                    cell.counts = false;
                for (const Tableau& y : tabs) {
                    const auto chain = tableau_chain(p, oc, rt, y);
                    if (!chain || chain_to_tableau(p, oc, *chain).columns != y.columns) {
                        cell.roundtrip = false;
                        break;
                    }
                }
            }
        });
    rep.budget_hit = status.budget_hit;
    bool counts_ok = true, round_ok = true;
    for (int t = 0; t < status.completed; ++t) {
        counts_ok = counts_ok && cells[static_cast<size_t>(t)].counts;
        round_ok = round_ok && cells[static_cast<size_t>(t)].roundtrip;
    }
    OrderedJson details;
    details["partitions"] = static_cast<int>(partitions.size());
    details["completed"] = status.completed;
    details["weights"] = static_cast<int>(lambdas.size());
    rep.add("tableau_counts_match_dimension", counts_ok, details);
    rep.add("tableau_chain_roundtrip", round_ok, details);
    return rep;
}

// ---------------------------------------------------------------------------
// Suite 7: monomial bases in tensor products of fundamental modules.

inline std::vector<Weight> default_basis_weights() {
    return {
        Weight::fundamental(4, 1), Weight::fundamental(4, 2), Weight::fundamental(4, 3),
        Weight(4, {1, 1, 0}),      Weight(4, {1, 1, 1}),
    };
}

inline SuiteReport monomial_basis_suite(const BudgetClock& clock, int workers,
                                        const std::vector<Weight>& lambdas =
                                            default_basis_weights()) {
    const GtPoset p(4);
    const auto partitions = all_partitions(p);

    struct CellResult {
        bool rank = true;
        bool pbw_match = true;  // only meaningful for the all-chain partition
    };
    std::vector<CellResult> cells(partitions.size());
    const SweepStatus status = run_sweep(
        static_cast<int>(partitions.size()), workers, clock, [&](int idx) {
            const OCPartition& oc = partitions[static_cast<size_t>(idx)];
            CellResult& cell = cells[static_cast<size_t>(idx)];
            const RTable rt(p, oc);
            const XiMap xi(p, oc, rt);
            const bool all_chain = oc.o == 0;
            for (const Weight& wt : lambdas) {
                const PointSet pts = mcop_lattice_points(p, oc, wt);
                const TensorSpace space(4, wt);
                const RepVector hwv = space.highest_weight_vector();
                std::vector<RepVector> vecs;
                for (const LatticePoint& x : pts) {
                    LatticePoint expo = xi.apply(x);
                    bool nonneg = true;
                    for (int eid = 0; eid < p.size(); ++eid) {
                        const PosetElement e = p.element(eid);
                        if (e.i == e.j)
                            expo[static_cast<size_t>(eid)] = 0;
                        else if (expo[static_cast<size_t>(eid)] < 0)
                            nonneg = false;
                    }
                    if (!nonneg) {
                        cell.rank = false;
                        break;
                    }
                    if (all_chain) {
                        for (int eid = 0; eid < p.size(); ++eid) {
                            const PosetElement e = p.element(eid);
                            if (e.i < e.j &&
                                expo[static_cast<size_t>(eid)] != x[static_cast<size_t>(eid)])
                                cell.pbw_match = false;
                        }
                    }
                    vecs.push_back(space.apply_pbw(p, expo, hwv));
                }
                if (!cell.rank) break;
                const Int dim = weyl_dim(wt);
                if (Int(static_cast<long long>(pts.size())) != dim ||
                    Int(rep_vectors_rank(vecs)) != dim)
                    cell.rank = false;
            }
        });

    SuiteReport rep;
    rep.budget_hit = status.budget_hit;
    bool rank_ok = true, pbw_ok = true;
    for (int t = 0; t < status.completed; ++t) {
        rank_ok = rank_ok && cells[static_cast<size_t>(t)].rank;
        pbw_ok = pbw_ok && cells[static_cast<size_t>(t)].pbw_match;
    }
    OrderedJson details;
    details["partitions"] = static_cast<int>(partitions.size());
    details["completed"] = status.completed;
    details["weights"] = static_cast<int>(lambdas.size());
    rep.add("monomial_basis_ranks", rank_ok, details);
    rep.add("all_chain_exponents_match_points", pbw_ok, details);
    return rep;
}

// ---------------------------------------------------------------------------
// Suite 8: the periodic (semi-infinite) analogue, truncated to low levels.

inline SuiteReport semiinf_scenario(int n, int k, const QPartition& oc, int d_max,
                                    int horizon) {
    SuiteReport rep;
    const QGrid g(n, k);
    const QRTable rt(g, oc);
    const ThetaInf theta(rt, horizon);
    const SeriesVarOrder vo(rt, horizon);
    const SeriesGrid& sg = theta.grid();

    const auto ideals = enumerate_q_ideals(g, d_max);
    std::vector<std::set<std::vector<int>>> sorted_per_level(static_cast<size_t>(d_max) + 1);
    std::vector<int> per_level(static_cast<size_t>(d_max) + 1, 0);
    bool initial_ok = true, square_ok = true;
    for (const QIdeal& j : ideals) {
        const PsiInfImage psi = psi_inf(g, oc, j);
        per_level[static_cast<size_t>(psi.level)] += 1;
        sorted_per_level[static_cast<size_t>(psi.level)].insert(psi.sorted);

        const Permutation w = w_of_q_ideal(g, oc, j);
        const Expo stair = series_staircase(sg, w, psi.level);
        if (theta.apply_marked_set(q_m_oc(g, oc, j)) != stair) square_ok = false;
        const Term lead_raw = vo.initial_term(series_minor(sg, psi.tuple, psi.level));
        if (lead_raw.coeff != 1 || lead_raw.expo != stair) initial_ok = false;
        const Term lead_sorted = vo.initial_term(series_minor(sg, psi.sorted, psi.level));
        if (lead_sorted.coeff != Int(psi.sign) || lead_sorted.expo != stair)
            initial_ok = false;
    }
    long long subsets = 1;
    for (int t = 0; t < k; ++t) subsets = subsets * (n - t) / (t + 1);
    bool counts_ok = true, bijective_ok = true;
    for (int lvl = 0; lvl <= d_max; ++lvl) {
        counts_ok = counts_ok && per_level[static_cast<size_t>(lvl)] == subsets;
        bijective_ok =
            bijective_ok && static_cast<long long>(
                                sorted_per_level[static_cast<size_t>(lvl)].size()) == subsets;
    }
    const std::string tag =
        "n" + std::to_string(n) + "k" + std::to_string(k) + "_o" + std::to_string(oc.extra.size());
    OrderedJson details;
    details["n"] = n;
    details["k"] = k;
    details["order_extras"] = static_cast<int>(oc.extra.size());
    details["d_max"] = d_max;
    details["horizon"] = horizon;
    details["ideals"] = static_cast<int>(ideals.size());
    rep.add("periodic_level_counts_" + tag, counts_ok, details);
    rep.add("periodic_subset_bijection_" + tag, bijective_ok, details);
    rep.add("periodic_initial_terms_" + tag, initial_ok, details);
    rep.add("periodic_square_" + tag, square_ok, details);
    return rep;
}

inline SuiteReport semiinf_suite(const BudgetClock& clock) {
    SuiteReport rep;
    struct Scenario {
        int n, k;
        QPartition oc;
    };
    const std::vector<Scenario> scenarios = {
        {4, 2, QPartition{}},
        {4, 2, QPartition{{QElt{1, 3}}}},
        {4, 2, QPartition{{QElt{1, 4}, QElt{2, 4}}}},
        {5, 3, QPartition{{QElt{1, 4}, QElt{2, 5}, QElt{3, 6}, QElt{4, 5}}}},
        {5, 3, QPartition{}},
        {5, 3, QPartition{{QElt{1, 4}}}},
    };

    for (const Scenario& sc : scenarios) {
        if (clock.expired()) {
            rep.budget_hit = true;
            return rep;
        }
        rep.absorb(semiinf_scenario(sc.n, sc.k, sc.oc, 2, 3));
    }

    // The pipe-value identity on random markings, read from a dominating cell.
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}}) {
        if (clock.expired()) {
            rep.budget_hit = true;
            return rep;
        }
        const QGrid g(n, k);
        std::mt19937 rng(9000u + static_cast<unsigned>(10 * n + k));
        std::uniform_int_distribution<int> msize(1, 6);
        auto random_cell = [&](int max_row) {
            std::uniform_int_distribution<int> row(1, max_row);
            const int i = row(rng);
            const int lo = std::max(i, g.k() + 1);
            std::uniform_int_distribution<int> col(lo, i + g.n() - 1);
            return QElt{i, col(rng)};
        };
        bool ok = true;
        const int reps = 200;
        for (int rep_i = 0; rep_i < reps; ++rep_i) {
            std::set<QElt> marks;
            const int sz = msize(rng);
            for (int t = 0; t < sz; ++t) marks.insert(random_cell(8));
            int maxi = 1, maxj = g.k() + 1;
            for (const QElt& x : marks) {
                maxi = std::max(maxi, x.i);
                maxj = std::max(maxj, x.j);
            }
            int ci = maxi + 1, dj = maxj + 1;
            if (dj < ci) dj = ci;
            if (dj - ci > g.n() - 1) ci = dj - (g.n() - 1);
            const QElt start{ci, dj};
            const Permutation w =
                w_of_subset_q(g, std::vector<QElt>(marks.begin(), marks.end()));
            const auto in_m = [&g, marks](const QElt& x) {
                return g.contains(x) && marks.count(x) > 0;
            };
            if (q_pipe_value(g, in_m, start, *g.down_horizontal(start)) != w(g.mod_k(start.i)))
                ok = false;
            if (q_pipe_value(g, in_m, start, *g.down_vertical(start)) != w(g.mod_nk(start.j)))
                ok = false;
        }
        rep.add("pipe_value_identity_n" + std::to_string(n) + "k" + std::to_string(k), ok,
                {{"random_markings", reps}});
    }
    return rep;
}

}  // namespace mcop::checks
