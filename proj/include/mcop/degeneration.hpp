#pragma once

// The toric degeneration machinery for the finite flag variety:
//
//  * phi      : X_J  ->  z^{x(J)}, the monomial map on Pluecker coordinates
//               indexed by order ideals (x(J) = indicator of the marked set),
//  * psi      : X_J  ->  ± X_{S(J)}, relabelling ideals by column subsets
//               through the pipe-dream permutation w^J,
//  * theta    : a Laurent-monomial substitution on the z-variables such that
//               theta ∘ phi = (initial term of the minor) ∘ psi, exactly,
//  * degree-2 kernel fingerprints of phi in subset coordinates and the
//               census of them over all O/C partitions with the S_n orbit
//               structure.

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "mcop/permutation.hpp"
#include "mcop/pipedream.hpp"
#include "mcop/polynomial.hpp"
#include "mcop/poset.hpp"

namespace mcop {

inline std::vector<OCPartition> all_partitions(const GtPoset& p) {
    std::vector<int> off;
    for (int v = 0; v < p.size(); ++v)
        if ((p.offdiag_mask() >> v) & 1) off.push_back(v);
    std::vector<OCPartition> out;
    for (Mask s = 0; s < (Mask{1} << off.size()); ++s) {
        Mask o = 0;
        for (size_t t = 0; t < off.size(); ++t)
            if ((s >> t) & 1) o |= Mask{1} << off[t];
        out.push_back(OCPartition{o});
    }
    return out;
}

// psi(X_J) = sign * X_subset with subset = sorted {w^J(1),...,w^J(k)}.
struct PsiImage {
    std::vector<int> subset;  // ascending
    int sign = 1;
};

inline PsiImage psi_map(const GtPoset& p, const OCPartition& oc, Mask ideal) {
    const int k = p.diag_count(ideal);
    Permutation w = w_of_ideal(p, oc, ideal);
    std::vector<int> tuple(static_cast<size_t>(k));
    for (int a = 1; a <= k; ++a) tuple[static_cast<size_t>(a - 1)] = w(a);
    PsiImage out;
    out.sign = k ? Permutation::sort_sign(tuple) : 1;
    out.subset = tuple;
    std::sort(out.subset.begin(), out.subset.end());
    return out;
}

// The z-variable substitution: a diagonal cell goes to the single variable at
// its r-position; an off-diagonal cell (i,j) goes to the ratio of the
// variable at its r-position and the one at the closest marked position
// strictly to its left in the same row (the diagonal guarantees existence).
class ThetaMap {
public:
    ThetaMap(const GtPoset& p, const OCPartition& oc, const RTable& rt)
        : poset_(&p), grid_{p.n()} {
        images_.resize(static_cast<size_t>(p.size()));
        for (int eid = 0; eid < p.size(); ++eid) {
            PosetElement e = p.element(eid);
            Expo img = expo_zero(grid_);
            img[static_cast<size_t>(grid_.vid(e.i, rt.r(e.i, e.j)))] += 1;
            if (e.i < e.j) {
                int jp = -1;
                for (int l = e.j - 1; l >= e.i; --l) {
                    if (l == e.i || oc.in_o(p, p.id(e.i, l))) {
                        jp = l;
                        break;
                    }
                }
                assert(jp >= e.i);
                img[static_cast<size_t>(grid_.vid(e.i, rt.r(e.i, jp)))] -= 1;
            }
            images_[static_cast<size_t>(eid)] = std::move(img);
        }
    }

    const VarGrid& grid() const { return grid_; }
    const Expo& var_image(int eid) const { return images_[static_cast<size_t>(eid)]; }

    // Image of the monomial z^{indicator of cellset}.
    Expo apply_mask(Mask cellset) const {
        Expo out = expo_zero(grid_);
        for (Mask rest = cellset; rest;) {
            int eid = GtPoset::lowest_bit(rest);
            rest &= rest - 1;
            out = expo_add(out, images_[static_cast<size_t>(eid)]);
        }
        return out;
    }

    // Linear extension to arbitrary integer points over the poset.
    Expo apply_point(const std::vector<int>& x) const {
        assert(static_cast<int>(x.size()) == poset_->size());
        Expo out = expo_zero(grid_);
        for (int eid = 0; eid < poset_->size(); ++eid) {
            int c = x[static_cast<size_t>(eid)];
            if (!c) continue;
            const Expo& img = images_[static_cast<size_t>(eid)];
            for (size_t v = 0; v < out.size(); ++v) out[v] += c * img[v];
        }
        return out;
    }

private:
    const GtPoset* poset_;
    VarGrid grid_;
    std::vector<Expo> images_;
};

// Expected image of an ideal under theta ∘ phi: the product over the first k
// rows of the variables picked out by the pipe-dream permutation.
inline Expo staircase_monomial(const VarGrid& g, const Permutation& w, int k) {
    Expo e = expo_zero(g);
    for (int a = 1; a <= k; ++a) e[static_cast<size_t>(g.vid(a, w(a)))] += 1;
    return e;
}

// theta(z^{x(J)}) = z_{1,w(1)} ... z_{k,w(k)}.
inline bool check_theta_on_ideal(const GtPoset& p, const OCPartition& oc, const ThetaMap& theta,
                                 Mask ideal) {
    const int k = p.diag_count(ideal);
    Permutation w = w_of_ideal(p, oc, ideal);
    return theta.apply_mask(m_oc(p, oc, ideal)) == staircase_monomial(theta.grid(), w, k);
}

// Initial term of the minor with unsorted columns (w(1),...,w(k)) equals the
// staircase monomial with coefficient +1.
inline bool check_initial_unsorted(const GtPoset& p, const OCPartition& oc, const VarOrder& ord,
                                   Mask ideal) {
    const int k = p.diag_count(ideal);
    if (k == 0) return true;
    Permutation w = w_of_ideal(p, oc, ideal);
    std::vector<int> cols(static_cast<size_t>(k));
    for (int a = 1; a <= k; ++a) cols[static_cast<size_t>(a - 1)] = w(a);
    Term init = ord.initial_term(minor_det(ord.grid(), cols));
    return init.coeff == 1 && init.expo == staircase_monomial(ord.grid(), w, k);
}

// The full commuting square on one ideal: theta(phi(X_J)) must equal the
// initial term of the minor at psi(X_J), signs included (the sorting sign of
// psi cancels against the initial coefficient of the sorted minor).
inline bool check_commuting_square(const GtPoset& p, const OCPartition& oc, const ThetaMap& theta,
                                   const VarOrder& ord, Mask ideal) {
    const int k = p.diag_count(ideal);
    if (k == 0) return true;
    Expo lhs = theta.apply_mask(m_oc(p, oc, ideal));
    PsiImage psi = psi_map(p, oc, ideal);
    Term init = ord.initial_term(minor_det(ord.grid(), psi.subset));
    return init.coeff == psi.sign && init.expo == lhs;
}

// ---------------------------------------------------------------------------
// Degree-2 kernel fingerprints.
//
// For levels (a,b) the kernel of the monomial map phi in degree X_a * X_b is
// spanned by differences of monomials with equal image.  Rewriting through
// psi into subset coordinates gives a canonical object comparable across
// different O/C partitions: a set of groups, each group the set of unordered
// subset pairs sharing one image, each pair carrying the product of its two
// psi signs, normalised so the first pair of each group is positive.

using KernelMember = std::tuple<std::vector<int>, std::vector<int>, int>;
using KernelGroup = std::vector<KernelMember>;
using Deg2Fingerprint = std::vector<KernelGroup>;

inline KernelGroup canonical_group(KernelGroup g) {
    std::sort(g.begin(), g.end());
    int lead = std::get<2>(g.front());
    if (lead < 0)
        for (auto& m : g) std::get<2>(m) = -std::get<2>(m);
    return g;
}

inline Deg2Fingerprint deg2_fingerprint(const GtPoset& p, const OCPartition& oc,
                                        const std::vector<Mask>& level_a,
                                        const std::vector<Mask>& level_b, bool same_level) {
    std::vector<PsiImage> psi_a, psi_b;
    for (Mask j : level_a) psi_a.push_back(psi_map(p, oc, j));
    if (!same_level)
        for (Mask j : level_b) psi_b.push_back(psi_map(p, oc, j));
    const std::vector<PsiImage>& pb = same_level ? psi_a : psi_b;

    std::map<std::vector<int>, KernelGroup> fibers;
    for (size_t u = 0; u < level_a.size(); ++u) {
        size_t v0 = same_level ? u : 0;
        for (size_t v = v0; v < level_b.size(); ++v) {
            std::vector<int> image(static_cast<size_t>(p.size()), 0);
            for (Mask cell : {m_oc(p, oc, level_a[u]), m_oc(p, oc, level_b[v])})
                for (Mask rest = cell; rest;) {
                    int eid = GtPoset::lowest_bit(rest);
                    rest &= rest - 1;
                    image[static_cast<size_t>(eid)] += 1;
                }
            std::vector<int> s1 = psi_a[u].subset, s2 = pb[v].subset;
            int sign = psi_a[u].sign * pb[v].sign;
            if (same_level && s2 < s1) std::swap(s1, s2);
            fibers[image].push_back({std::move(s1), std::move(s2), sign});
        }
    }
    Deg2Fingerprint out;
    for (auto& [key, group] : fibers)
        if (group.size() >= 2) out.push_back(canonical_group(std::move(group)));
    std::sort(out.begin(), out.end());
    return out;
}

// Fingerprints for every level pair of a signature, keyed by (a,b); this is
// the object the census counts and the S_n action permutes.
using KernelProfile = std::vector<std::pair<std::pair<int, int>, Deg2Fingerprint>>;

inline KernelProfile kernel_profile(const GtPoset& p, const OCPartition& oc,
                                    const std::vector<int>& signature) {
    auto levels = p.enumerate_ideals_by_level();
    KernelProfile out;
    for (size_t s = 0; s < signature.size(); ++s)
        for (size_t t = s; t < signature.size(); ++t) {
            int a = signature[s], b = signature[t];
            out.push_back({{a, b},
                           deg2_fingerprint(p, oc, levels[static_cast<size_t>(a)],
                                            levels[static_cast<size_t>(b)], a == b)});
        }
    return out;
}

// Action of w ∈ S_n on a profile: relabel every subset entry through w, sort,
// track the sorting signs, re-canonicalise.
inline KernelProfile act_on_profile(const Permutation& w, const KernelProfile& prof) {
    auto act_subset = [&](const std::vector<int>& s, int& sign) {
        std::vector<int> img(s.size());
        for (size_t t = 0; t < s.size(); ++t) img[t] = w(s[t]);
        sign *= Permutation::sort_sign(img);
        std::sort(img.begin(), img.end());
        return img;
    };
    KernelProfile out;
    for (const auto& [key, fp] : prof) {
        Deg2Fingerprint nfp;
        for (const KernelGroup& g : fp) {
            KernelGroup ng;
            for (const auto& [s1, s2, sg] : g) {
                int sign = sg;
                std::vector<int> t1 = act_subset(s1, sign);
                std::vector<int> t2 = act_subset(s2, sign);
                if (t1.size() == t2.size() && t2 < t1) std::swap(t1, t2);
                ng.push_back({std::move(t1), std::move(t2), sign});
            }
            nfp.push_back(canonical_group(std::move(ng)));
        }
        std::sort(nfp.begin(), nfp.end());
        out.push_back({key, std::move(nfp)});
    }
    return out;
}

struct CensusResult {
    int partitions = 0;          // number of (O,C) partitions swept
    int realized = 0;            // distinct fingerprints among the swept partitions
    int distinct = 0;            // distinct fingerprints in the S_n-saturation
    int orbits = 0;              // number of S_n-orbits meeting the realised set
    std::vector<int> orbit_sizes;  // size of each such orbit, ascending
    bool closed_under_sn = true;   // realised set already a union of orbits
};

// Counts the initial toric ideals reachable from a family of (O,C) partitions.
// Relabelling the ground set by w ∈ S_n maps the Plücker ideal to itself and
// hence maps initial ideals to initial ideals, so the census counts the whole
// S_n-saturation of the realised fingerprints: `distinct` is the size of the
// union of their orbits and `orbits` the number of those orbits, while
// `realized` records how many fingerprints the sweep itself produced.
inline CensusResult kernel_census(const GtPoset& p, const std::vector<int>& signature,
                                  const std::vector<OCPartition>& partitions) {
    std::set<KernelProfile> realized;
    for (const OCPartition& oc : partitions) realized.insert(kernel_profile(p, oc, signature));

    // Enumerate S_n once.
    std::vector<int> line(static_cast<size_t>(p.n()));
    for (int t = 0; t < p.n(); ++t) line[static_cast<size_t>(t)] = t + 1;
    std::vector<Permutation> group;
    do group.push_back(Permutation(line));
    while (std::next_permutation(line.begin(), line.end()));

    CensusResult res;
    res.partitions = static_cast<int>(partitions.size());
    res.realized = static_cast<int>(realized.size());

    std::set<KernelProfile> saturated;
    std::set<KernelProfile> reps;  // lexicographically least member of each orbit
    for (const KernelProfile& prof : realized) {
        KernelProfile best = prof;
        std::set<KernelProfile> orbit;
        for (const Permutation& w : group) {
            KernelProfile img = act_on_profile(w, prof);
            if (img < best) best = img;
            orbit.insert(std::move(img));
        }
        if (reps.insert(best).second) res.orbit_sizes.push_back(static_cast<int>(orbit.size()));
        saturated.insert(orbit.begin(), orbit.end());
    }
    res.distinct = static_cast<int>(saturated.size());
    res.orbits = static_cast<int>(reps.size());
    std::sort(res.orbit_sizes.begin(), res.orbit_sizes.end());
    for (const KernelProfile& prof : saturated)
        if (!realized.count(prof)) {
            res.closed_under_sn = false;
            break;
        }
    return res;
}

inline CensusResult kernel_census(const GtPoset& p, const std::vector<int>& signature) {
    return kernel_census(p, signature, all_partitions(p));
}

}  // namespace mcop
