// Command-line front end: check-suite orchestration, certificate emission,
// point-set and basis computations, and pipe-dream rendering.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 configuration error, 3 budget exhausted (partial results emitted).
// Certificates are byte-reproducible for identical configurations unless
// --with-timings is given or a budget truncates the sweep.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mcop/certificate.hpp"
#include "mcop/checks.hpp"
#include "mcop/degeneration.hpp"
#include "mcop/pipedream.hpp"
#include "mcop/polytope.hpp"
#include "mcop/render.hpp"
#include "mcop/repn.hpp"
#include "mcop/semiinf.hpp"
#include "mcop/sweep.hpp"
#include "mcop/tableaux.hpp"
#include "mcop/version.hpp"
#include "mcop/weight.hpp"

namespace {

using namespace mcop;

struct ToolError {
    std::string msg;
};

[[noreturn]] void fail(const std::string& msg) { throw ToolError{msg}; }

// ---------------------------------------------------------------------------
// Small parsers.  All reject malformed input with a configuration error.

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& tok, const std::string& what) {
    const std::string t = trimmed(tok);
    if (t.empty()) fail(what + ": empty number");
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(t, &pos);
    } catch (const std::exception&) {
        fail(what + ": not a number: '" + t + "'");
    }
    if (pos != t.size()) fail(what + ": trailing characters in '" + t + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    if (trimmed(s).empty()) fail(what + ": empty list");
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok, what));
    return out;
}

// Cell lists come in two shapes: "1:2,2:3" or "(1,2),(2,3)".
std::vector<std::pair<int, int>> parse_cell_list(const std::string& raw,
                                                 const std::string& what) {
    const std::string s = trimmed(raw);
    std::vector<std::pair<int, int>> out;
    if (s.empty() || s == "none") return out;
    if (s[0] == '(') {
        size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != '(') fail(what + ": expected '(' at position " + std::to_string(pos));
            const size_t close = s.find(')', pos);
            if (close == std::string::npos) fail(what + ": unbalanced '('");
            const std::string body = s.substr(pos + 1, close - pos - 1);
            const size_t comma = body.find(',');
            if (comma == std::string::npos) fail(what + ": cell needs two coordinates");
            out.push_back({parse_int(body.substr(0, comma), what),
                           parse_int(body.substr(comma + 1), what)});
            pos = close + 1;
            if (pos < s.size()) {
                if (s[pos] != ',') fail(what + ": expected ',' between cells");
                ++pos;
            }
        }
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const size_t colon = tok.find(':');
        if (colon == std::string::npos) fail(what + ": cell '" + tok + "' needs i:j form");
        out.push_back(
            {parse_int(tok.substr(0, colon), what), parse_int(tok.substr(colon + 1), what)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Partition selectors: hex bitmask over the off-diagonal cells in canonical
// (ascending id) order, or a human-readable cell list.  Both forms are echoed
// back in every certificate.

std::vector<int> offdiag_ids(const GtPoset& p) {
    std::vector<int> out;
    for (int v = 0; v < p.size(); ++v)
        if ((p.offdiag_mask() >> v) & 1) out.push_back(v);
    return out;
}

OCPartition parse_order_part(const GtPoset& p, const std::string& raw) {
    OCPartition oc;
    const std::string s = trimmed(raw);
    if (s.empty() || s == "none") return oc;
    if (s.size() > 2 && (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0)) {
        unsigned long long bits = 0;
        size_t pos = 0;
        try {
            bits = std::stoull(s.substr(2), &pos, 16);
        } catch (const std::exception&) {
            fail("order-part: bad hex mask '" + s + "'");
        }
        if (pos != s.size() - 2) fail("order-part: bad hex mask '" + s + "'");
        const std::vector<int> ids = offdiag_ids(p);
        if (ids.size() < 64 && (bits >> ids.size()) != 0)
            fail("order-part: mask has bits beyond the " + std::to_string(ids.size()) +
                 " off-diagonal cells");
        for (size_t t = 0; t < ids.size(); ++t)
            if ((bits >> t) & 1) oc.o |= Mask{1} << ids[t];
        return oc;
    }
    for (const auto& [i, j] : parse_cell_list(s, "order-part")) {
        if (!(1 <= i && i < j && j <= p.n()))
            fail("order-part: cell " + std::to_string(i) + ":" + std::to_string(j) +
                 " is not a strictly upper cell of the poset");
        oc.o |= Mask{1} << p.id(i, j);
    }
    return oc;
}

std::string order_part_hex(const GtPoset& p, const OCPartition& oc) {
    const std::vector<int> ids = offdiag_ids(p);
    unsigned long long bits = 0;
    for (size_t t = 0; t < ids.size(); ++t)
        if ((oc.o >> ids[t]) & 1) bits |= 1ull << t;
    std::stringstream ss;
    ss << "0x" << std::hex << bits;
    return ss.str();
}

std::string cells_str(const GtPoset& p, Mask m) {
    std::string s;
    for (int v = 0; v < p.size(); ++v) {
        if (!((m >> v) & 1)) continue;
        const PosetElement e = p.element(v);
        if (!s.empty()) s += ",";
        s += std::to_string(e.i) + ":" + std::to_string(e.j);
    }
    return s.empty() ? "none" : s;
}

OrderedJson partition_echo(const GtPoset& p, const OCPartition& oc) {
    OrderedJson j;
    j["mask"] = order_part_hex(p, oc);
    j["cells"] = cells_str(p, oc.o);
    return j;
}

Weight parse_weight(int n, const std::string& s) {
    const std::vector<int> a = parse_int_list(s, "lambda");
    if (static_cast<int>(a.size()) != n - 1)
        fail("lambda: expected " + std::to_string(n - 1) + " entries for n=" +
             std::to_string(n) + ", got " + std::to_string(a.size()));
    for (int v : a)
        if (v < 0) fail("lambda: entries must be non-negative");
    return Weight(a);
}

std::vector<int> parse_signature(int n, const std::string& s) {
    const std::vector<int> sig = parse_int_list(s, "signature");
    for (size_t t = 0; t < sig.size(); ++t) {
        if (sig[t] < 1 || sig[t] > n - 1)
            fail("signature: levels must lie in [1," + std::to_string(n - 1) + "]");
        if (t > 0 && sig[t] <= sig[t - 1]) fail("signature: levels must be strictly ascending");
    }
    return sig;
}

void require_n(int n, int lo, int hi) {
    if (n < lo || n > hi)
        fail("--n must lie in [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
}

// ---------------------------------------------------------------------------
// Output plumbing.

void write_text(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail("cannot open output file: " + path);
    f << content;
    if (!f) fail("failed writing output file: " + path);
}

// Serialize the certificate, print a deterministic summary when the JSON went
// to a file, and translate the outcome into the exit-code contract.
int finish_cert(const Certificate& cert, const std::string& out, bool with_timings) {
    write_text(out, cert.to_json(with_timings).dump(2) + "\n");
    if (!out.empty()) {
        const OrderedJson doc = cert.to_json(false);
        for (const auto& c : doc["checks"]) {
            const auto& d = c["details"];
            if (d.contains("distinct") && d.contains("orbits"))
                std::cout << "census: " << d["distinct"] << " distinct initial ideals, "
                          << d["orbits"] << " orbit(s)\n";
        }
        std::cout << "result: ";
        if (cert.failure_count() > 0)
            std::cout << "FAIL (" << cert.failure_count() << " of " << cert.check_count()
                      << " checks failed)";
        else if (cert.partial())
            std::cout << "partial (budget exhausted after " << cert.check_count()
                      << " checks)";
        else
            std::cout << "pass (" << cert.check_count() << " checks)";
        std::cout << "\n";
    }
    if (cert.failure_count() > 0) return 1;
    if (cert.partial()) return 3;
    return 0;
}

void absorb_report(Certificate& cert, const checks::SuiteReport& rep) {
    for (const auto& c : rep.checks) cert.add_check(c.name, c.pass, c.details);
    if (rep.budget_hit) cert.mark_partial();
}

double ms_between(std::chrono::steady_clock::time_point a,
                  std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

// ---------------------------------------------------------------------------
// Shared flag bundle.

struct CommonOpts {
    std::string out;
    bool with_timings = false;
    long long budget_ms = 0;
    int workers = 0;
};

void add_common(CLI::App* sub, CommonOpts& c, bool with_budget = true) {
    sub->add_option("-o,--output", c.out, "write the certificate/output to this file");
    sub->add_flag("--with-timings", c.with_timings,
                  "include wall-clock timings in the certificate (breaks byte-reproducibility)");
    if (with_budget) {
        sub->add_option("--budget-ms", c.budget_ms,
                        "cooperative time budget in milliseconds (0 = unlimited)");
        sub->add_option("--workers", c.workers,
                        "worker threads (0 = MCOP_WORKERS env or hardware)");
    }
}

// ---------------------------------------------------------------------------
// ideals: enumerate order ideals by diagonal level and check the counts.

int run_ideals(int n, const CommonOpts& c) {
    require_n(n, 2, 6);
    const GtPoset p(n);
    Certificate cert("ideals");
    OrderedJson cfg;
    cfg["n"] = n;
    cert.set_config(cfg);

    const auto levels = p.enumerate_ideals_by_level();
    for (int k = 0; k <= n; ++k) {
        long long expected = 1;
        for (int t = 0; t < k; ++t) expected = expected * (n - t) / (t + 1);
        OrderedJson details;
        details["count"] = static_cast<long long>(levels[static_cast<size_t>(k)].size());
        details["expected"] = expected;
        OrderedJson list = OrderedJson::array();
        for (Mask j : levels[static_cast<size_t>(k)]) list.push_back(cells_str(p, j));
        details["ideals"] = std::move(list);
        cert.add_check("level_" + std::to_string(k),
                       static_cast<long long>(levels[static_cast<size_t>(k)].size()) == expected,
                       std::move(details));
    }
    return finish_cert(cert, c.out, c.with_timings);
}

// ---------------------------------------------------------------------------
// pipedream / render: draw the pipes of a marked set.

int run_pipedream(int n, const std::string& set_spec, const std::string& ideal_spec,
                  const std::string& order_part, const std::string& format,
                  const std::string& out) {
    require_n(n, 2, 9);
    const GtPoset p(n);
    if (set_spec.empty() == ideal_spec.empty())
        fail("pipedream: give exactly one of --set or --ideal");

    Mask m = 0;
    if (!set_spec.empty()) {
        if (!order_part.empty()) fail("pipedream: --order-part only applies with --ideal");
        for (const auto& [i, j] : parse_cell_list(set_spec, "set")) {
            if (!(1 <= i && i <= j && j <= n))
                fail("set: cell " + std::to_string(i) + ":" + std::to_string(j) +
                     " is outside the poset");
            m |= Mask{1} << p.id(i, j);
        }
    } else {
        std::vector<PosetElement> gens;
        for (const auto& [i, j] : parse_cell_list(ideal_spec, "ideal")) {
            if (!(1 <= i && i <= j && j <= n))
                fail("ideal: cell " + std::to_string(i) + ":" + std::to_string(j) +
                     " is outside the poset");
            gens.push_back({i, j});
        }
        const OCPartition oc = parse_order_part(p, order_part);
        m = m_oc(p, oc, p.ideal_generated_by(gens));
    }

    std::string text;
    if (format == "ascii")
        text = render_marking_ascii(p, m) + "\n" + render_pipes_ascii(p, m);
    else if (format == "dot")
        text = render_pipes_dot(p, m);
    else
        fail("pipedream: --format must be ascii or dot");
    write_text(out, text);
    return 0;
}

// ---------------------------------------------------------------------------
// mcop: lattice point sets and the change of coordinates.

int run_mcop(int n, const std::string& order_part, bool all_parts,
             const std::vector<std::string>& lambda_specs, const std::string& format,
             const CommonOpts& c) {
    require_n(n, 2, 5);
    const GtPoset p(n);

    std::vector<Weight> lambdas;
    if (lambda_specs.empty())
        for (int k = 1; k < n; ++k) lambdas.push_back(Weight::fundamental(n, k));
    else
        for (const std::string& s : lambda_specs) lambdas.push_back(parse_weight(n, s));

    if (all_parts && !order_part.empty()) fail("give --order-part or --all-partitions, not both");
    std::vector<OCPartition> parts;
    if (all_parts)
        parts = all_partitions(p);
    else
        parts.push_back(parse_order_part(p, order_part));
    const bool single = parts.size() == 1;

    if (format == "csv") {
        std::string csv = "n,order_part,lambda,points,weyl_dim\n";
        bool ok = true;
        for (const OCPartition& oc : parts) {
            for (const Weight& wt : lambdas) {
                const PointSet pts = mcop_lattice_points(p, oc, wt);
                const Int dim = weyl_dim(wt);
                ok = ok && Int(static_cast<long long>(pts.size())) == dim;
                std::string lam;
                for (size_t t = 0; t < wt.a.size(); ++t)
                    lam += (t ? "+" : "") + std::to_string(wt.a[t]);
                csv += std::to_string(n) + "," + order_part_hex(p, oc) + "," + lam + "," +
                       std::to_string(pts.size()) + "," + dim.str() + "\n";
            }
        }
        write_text(c.out, csv);
        return ok ? 0 : 1;
    }
    if (format != "json") fail("mcop: --format must be json or csv");

    Certificate cert("mcop");
    OrderedJson cfg;
    cfg["n"] = n;
    cfg["partitions"] = all_parts ? OrderedJson("all") : partition_echo(p, parts[0]);
    OrderedJson lams = OrderedJson::array();
    for (const Weight& wt : lambdas) lams.push_back(wt.a);
    cfg["lambdas"] = std::move(lams);
    cert.set_config(cfg);

    for (const OCPartition& oc : parts) {
        const std::string tag = order_part_hex(p, oc);
        const RTable rt(p, oc);
        const XiMap xi(p, oc, rt);
        const Int det = xi.det();
        const bool xi_ok = xi.unitriangular_under_keys() && (det == 1 || det == -1);
        OrderedJson xd;
        xd["unitriangular_under_keys"] = xi.unitriangular_under_keys();
        xd["det"] = det.str();
        if (single) {
            OrderedJson rows = OrderedJson::array();
            for (const auto& row : xi.matrix()) {
                OrderedJson r = OrderedJson::array();
                for (const Int& v : row) r.push_back(v.convert_to<long long>());
                rows.push_back(std::move(r));
            }
            xd["matrix"] = std::move(rows);
        }
        cert.add_check("xi_" + tag, xi_ok, std::move(xd));

        for (const Weight& wt : lambdas) {
            const auto t0 = std::chrono::steady_clock::now();
            const PointSet pts = mcop_lattice_points(p, oc, wt);
            const Int dim = weyl_dim(wt);
            OrderedJson details;
            details["lambda"] = wt.a;
            details["points"] = static_cast<long long>(pts.size());
            details["weyl_dim"] = dim.str();
            if (single) {
                OrderedJson arr = OrderedJson::array();
                for (const LatticePoint& x : pts) arr.push_back(x);
                details["point_set"] = std::move(arr);
            }
            cert.add_check("points_" + tag + "_" + wt.str(),
                           Int(static_cast<long long>(pts.size())) == dim, std::move(details),
                           ms_between(t0, std::chrono::steady_clock::now()));
        }
    }
    return finish_cert(cert, c.out, c.with_timings);
}

// ---------------------------------------------------------------------------
// degenerate: initial terms, kernel fingerprints, and the census.

OrderedJson fingerprint_json(const Deg2Fingerprint& fp) {
    OrderedJson groups = OrderedJson::array();
    for (const KernelGroup& g : fp) {
        OrderedJson ga = OrderedJson::array();
        for (const auto& [s1, s2, sign] : g) {
            OrderedJson m;
            m["a"] = s1;
            m["b"] = s2;
            m["sign"] = sign;
            ga.push_back(std::move(m));
        }
        groups.push_back(std::move(ga));
    }
    return groups;
}

OrderedJson order_table_json(const GtPoset& p, const VarOrder& ord) {
    OrderedJson desc = OrderedJson::array();
    for (int r = 0; r < ord.grid().vars(); ++r) {
        const auto [i, j] = ord.grid().ij(ord.var_at_rank(r));
        desc.push_back(std::to_string(i) + ":" + std::to_string(j));
    }
    OrderedJson d;
    d["descending"] = std::move(desc);
    return d;
}

OrderedJson census_json(const GtPoset& p, const CensusResult& res) {
    OrderedJson d;
    d["partitions"] = res.partitions;
    d["realized"] = res.realized;
    d["distinct"] = res.distinct;
    d["orbits"] = res.orbits;
    d["orbit_sizes"] = res.orbit_sizes;
    d["closed_under_relabeling"] = res.closed_under_sn;
    return d;
}

int run_degenerate(int n, const std::string& signature_spec, const std::string& order_part,
                   bool all_parts, const CommonOpts& c) {
    require_n(n, 2, 6);
    const GtPoset p(n);
    const std::vector<int> signature = signature_spec.empty()
                                           ? checks::full_signature(n)
                                           : parse_signature(n, signature_spec);
    if (all_parts && !order_part.empty()) fail("give --order-part or --all-partitions, not both");

    Certificate cert("degenerate");
    OrderedJson cfg;
    cfg["n"] = n;
    cfg["signature"] = signature;
    const auto levels = p.enumerate_ideals_by_level();

    if (!all_parts) {
        const OCPartition oc = parse_order_part(p, order_part);
        cfg["partition"] = partition_echo(p, oc);
        cert.set_config(cfg);

        const RTable rt(p, oc);
        const VarOrder ord(p, oc, rt);
        const ThetaMap theta(p, oc, rt);
        const auto verdict = checks::verify_partition(p, oc, levels, signature);

        cert.add_check("order_table", true, order_table_json(p, ord));

        OrderedJson terms = OrderedJson::array();
        for (int k : signature) {
            for (Mask j : levels[static_cast<size_t>(k)]) {
                const PsiImage psi = psi_map(p, oc, j);
                const Term lead = ord.initial_term(minor_det(ord.grid(), psi.subset));
                OrderedJson row;
                row["level"] = k;
                row["ideal"] = cells_str(p, j);
                row["subset"] = psi.subset;
                row["sign"] = psi.sign;
                row["initial"] = expo_str(ord.grid(), lead.expo);
                terms.push_back(std::move(row));
            }
        }
        OrderedJson td;
        td["terms"] = std::move(terms);
        cert.add_check("subset_images_bijective", verdict.psi_bijective, OrderedJson::object());
        cert.add_check("initial_terms", verdict.initial_terms, std::move(td));
        cert.add_check("commuting_square", verdict.square_commutes, OrderedJson::object());

        OrderedJson kd;
        for (const auto& [key, fp] : kernel_profile(p, oc, signature))
            kd["k" + std::to_string(key.first) + "_k" + std::to_string(key.second)] =
                fingerprint_json(fp);
        cert.add_check("kernel_fingerprints", verdict.kernels_agree, std::move(kd));
        return finish_cert(cert, c.out, c.with_timings);
    }

    cfg["partitions"] = "all";
    cert.set_config(cfg);
    const auto parts = all_partitions(p);
    const BudgetClock clock(c.budget_ms);
    const int workers = resolve_workers(c.workers);

    std::vector<checks::PartitionVerdict> verdicts(parts.size());
    const SweepStatus status = run_sweep(
        static_cast<int>(parts.size()), workers, clock, [&](int idx) {
            verdicts[static_cast<size_t>(idx)] =
                checks::verify_partition(p, parts[static_cast<size_t>(idx)], levels, signature);
        });

    std::vector<OCPartition> completed(parts.begin(), parts.begin() + status.completed);
    for (int t = 0; t < status.completed; ++t) {
        const auto& v = verdicts[static_cast<size_t>(t)];
        OrderedJson d;
        d["partition"] = partition_echo(p, parts[static_cast<size_t>(t)]);
        d["subset_images_bijective"] = v.psi_bijective;
        d["initial_terms"] = v.initial_terms;
        d["commuting_square"] = v.square_commutes;
        d["kernels_agree"] = v.kernels_agree;
        cert.add_check("partition_" + order_part_hex(p, parts[static_cast<size_t>(t)]), v.ok(),
                       std::move(d));
    }
    const CensusResult res = kernel_census(p, signature, completed);
    int size_sum = 0;
    for (int s : res.orbit_sizes) size_sum += s;
    bool census_ok = size_sum == res.distinct &&
                     static_cast<int>(res.orbit_sizes.size()) == res.orbits;
    if (!status.budget_hit) {
        if (n == 3 && signature == std::vector<int>{1, 2})
            census_ok = census_ok && res.distinct == 3 && res.orbits == 1;
        if (n == 4 && signature == std::vector<int>{1, 2, 3})
            census_ok = census_ok && res.distinct == 24 && res.orbits == 2;
    }
    cert.add_check("census", census_ok, census_json(p, res));
    if (status.budget_hit) cert.mark_partial();
    return finish_cert(cert, c.out, c.with_timings);
}

// ---------------------------------------------------------------------------
// verify: named check suites.

int run_verify(const std::string& suite, int n, const std::string& signature_spec,
               const std::string& order_part, bool all_parts, int sample, unsigned seed,
               const std::vector<std::string>& lambda_specs, int weight_cap,
               const CommonOpts& c) {
    static const std::set<std::string> known = {"all",     "pipedream", "images",
                                                "degeneration", "census",    "polytope",
                                                "tableaux",     "basis",     "semiinf"};
    if (!known.count(suite)) fail("unknown suite '" + suite + "'");
    if (all_parts && !order_part.empty()) fail("give --order-part or --all-partitions, not both");
    if ((all_parts || !order_part.empty() || sample > 0) && n == 0)
        fail("partition selectors require --n");
    if (!signature_spec.empty() && n == 0) fail("--signature requires --n");
    if (n != 0) require_n(n, 2, 6);
    if (sample < 0) fail("--sample must be non-negative");
    if (weight_cap < 0) fail("--weight-cap must be non-negative");

    std::vector<Weight> basis_weights = checks::default_basis_weights();
    if (!lambda_specs.empty()) {
        basis_weights.clear();
        for (const std::string& s : lambda_specs) basis_weights.push_back(parse_weight(4, s));
    }

    Certificate cert("verify");
    OrderedJson cfg;
    cfg["suite"] = suite;
    if (n != 0) cfg["n"] = n;
    if (!signature_spec.empty()) cfg["signature"] = parse_signature(n, signature_spec);
    if (all_parts) cfg["partitions"] = "all";
    if (!order_part.empty())
        cfg["partitions"] = partition_echo(GtPoset(n), parse_order_part(GtPoset(n), order_part));
    if (sample > 0) {
        cfg["sample"] = sample;
        cfg["seed"] = seed;
    } else if (suite == "all" && n == 0) {
        cfg["n5_sample"] = 32;  // the battery's sampled large-poset repetition
        cfg["n5_seed"] = seed;
    }
    if (!lambda_specs.empty()) {
        OrderedJson lams = OrderedJson::array();
        for (const Weight& wt : basis_weights) lams.push_back(wt.a);
        cfg["lambdas"] = std::move(lams);
    }
    if (weight_cap != 3) cfg["weight_cap"] = weight_cap;
    if (c.budget_ms > 0) cfg["budget_ms"] = c.budget_ms;
    cert.set_config(cfg);

    const BudgetClock clock(c.budget_ms);
    const int workers = resolve_workers(c.workers);

    // Partition family for the degeneration/census suites at a given n.
    const auto family = [&](int nn) {
        const GtPoset p(nn);
        if (!order_part.empty())
            return std::vector<OCPartition>{parse_order_part(p, order_part)};
        if (sample > 0) return checks::sample_partitions(p, sample, seed);
        return all_partitions(p);
    };
    const auto signature_for = [&](int nn) {
        return signature_spec.empty() ? checks::full_signature(nn)
                                      : parse_signature(nn, signature_spec);
    };
    const bool full_sweep = order_part.empty() && sample == 0;

    const auto timed = [&](const std::string& tag, auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        absorb_report(cert, fn());
        if (c.with_timings)
            cert.add_check("elapsed_" + tag, true, OrderedJson::object(),
                           ms_between(t0, std::chrono::steady_clock::now()));
    };

    const auto degeneration_at = [&](int nn) {
        timed("degeneration_n" + std::to_string(nn), [&] {
            return checks::degeneration_theorem(nn, family(nn), clock, workers,
                                                signature_for(nn));
        });
    };
    const auto census_at = [&](int nn) {
        timed("census_n" + std::to_string(nn), [&] {
            return checks::census_suite(nn, signature_for(nn), family(nn), full_sweep);
        });
    };
    const auto polytope_at = [&](int nn) {
        if (nn > 4) fail("polytope suite supports n <= 4");
        timed("polytope_n" + std::to_string(nn),
              [&] { return checks::polytope_suite(nn, weight_cap, clock, workers); });
    };

    if (suite == "pipedream") {
        timed("pipedream", [] { return checks::pipedream_ground_truth(); });
    } else if (suite == "images") {
        timed("images", [] { return checks::subset_image_ground_truth(); });
    } else if (suite == "degeneration") {
        if (n != 0) {
            degeneration_at(n);
        } else {
            degeneration_at(3);
            degeneration_at(4);
        }
    } else if (suite == "census") {
        if (n != 0) {
            census_at(n);
        } else {
            census_at(3);
            census_at(4);
        }
    } else if (suite == "polytope") {
        if (n != 0) {
            polytope_at(n);
        } else {
            polytope_at(3);
            polytope_at(4);
        }
    } else if (suite == "tableaux") {
        if (n != 0 && n != 4) fail("the tableaux suite is fixed at n=4");
        timed("tableaux", [&] { return checks::tableaux_suite(clock, workers); });
    } else if (suite == "basis") {
        if (n != 0 && n != 4) fail("the basis suite is fixed at n=4");
        timed("basis",
              [&] { return checks::monomial_basis_suite(clock, workers, basis_weights); });
    } else if (suite == "semiinf") {
        timed("semiinf", [&] { return checks::semiinf_suite(clock); });
    } else if (n != 0) {  // suite == "all" with a pinned n
        degeneration_at(n);
        census_at(n);
    } else {  // the full battery
        timed("pipedream", [] { return checks::pipedream_ground_truth(); });
        timed("images", [] { return checks::subset_image_ground_truth(); });
        degeneration_at(3);
        degeneration_at(4);
        timed("degeneration_n5_sampled", [&] {
            return checks::degeneration_theorem(
                5, checks::sample_partitions(GtPoset(5), 32, seed), clock, workers);
        });
        census_at(3);
        census_at(4);
        polytope_at(3);
        polytope_at(4);
        timed("tableaux", [&] { return checks::tableaux_suite(clock, workers); });
        timed("basis",
              [&] { return checks::monomial_basis_suite(clock, workers, basis_weights); });
        timed("semiinf", [&] { return checks::semiinf_suite(clock); });
    }
    return finish_cert(cert, c.out, c.with_timings);
}

// ---------------------------------------------------------------------------
// tableaux: enumerate semistandard tableaux for one partition and weight.

int run_tableaux(int n, const std::string& order_part, const std::string& shape_spec,
                 const std::string& format, const CommonOpts& c) {
    require_n(n, 2, 5);
    const GtPoset p(n);
    const OCPartition oc = parse_order_part(p, order_part);
    const Weight wt = parse_weight(n, shape_spec);
    const RTable rt(p, oc);

    const auto tabs = enumerate_semistandard(p, oc, rt, wt);
    const Int dim = weyl_dim(wt);
    const bool count_ok = Int(static_cast<long long>(tabs.size())) == dim;
    bool roundtrip_ok = true;
    for (const Tableau& y : tabs) {
        const auto chain = tableau_chain(p, oc, rt, y);
        if (!chain || chain_to_tableau(p, oc, *chain).columns != y.columns) {
            roundtrip_ok = false;
            break;
        }
    }

    if (format == "text") {
        std::string text;
        for (const Tableau& y : tabs) text += y.str() + "\n";
        text += "count: " + std::to_string(tabs.size()) + " (dimension " + dim.str() + ")\n";
        text += std::string("round-trip: ") + (roundtrip_ok ? "ok" : "FAIL") + "\n";
        write_text(c.out, text);
        return count_ok && roundtrip_ok ? 0 : 1;
    }
    if (format != "json") fail("tableaux: --format must be json or text");

    Certificate cert("tableaux");
    OrderedJson cfg;
    cfg["n"] = n;
    cfg["partition"] = partition_echo(p, oc);
    cfg["shape"] = wt.a;
    cert.set_config(cfg);

    OrderedJson listing = OrderedJson::array();
    for (const Tableau& y : tabs) listing.push_back(y.columns);
    OrderedJson cd;
    cd["count"] = static_cast<long long>(tabs.size());
    cd["weyl_dim"] = dim.str();
    cd["tableaux"] = std::move(listing);
    cert.add_check("count_matches_dimension", count_ok, std::move(cd));
    cert.add_check("chain_roundtrip", roundtrip_ok, OrderedJson::object());
    return finish_cert(cert, c.out, c.with_timings);
}

// ---------------------------------------------------------------------------
// rep-basis: span check for the monomial family of one (partition, weight).

int run_rep_basis(int n, const std::string& order_part, const std::string& lambda_spec,
                  const CommonOpts& c) {
    require_n(n, 2, 5);
    const GtPoset p(n);
    const OCPartition oc = parse_order_part(p, order_part);
    const Weight wt = parse_weight(n, lambda_spec);

    Certificate cert("rep-basis");
    OrderedJson cfg;
    cfg["n"] = n;
    cfg["partition"] = partition_echo(p, oc);
    cfg["lambda"] = wt.a;
    cert.set_config(cfg);

    const auto t0 = std::chrono::steady_clock::now();
    const RTable rt(p, oc);
    const XiMap xi(p, oc, rt);
    const TensorSpace space(n, wt);
    const RepVector hwv = space.highest_weight_vector();
    const PointSet pts = mcop_lattice_points(p, oc, wt);

    bool exponents_ok = true;
    std::vector<RepVector> family;
    for (const LatticePoint& x : pts) {
        LatticePoint e = xi.apply(x);
        for (int v : e)
            if (v < 0) exponents_ok = false;
        if (!exponents_ok) break;
        for (int i = 1; i <= n; ++i) e[static_cast<size_t>(p.id(i, i))] = 0;
        family.push_back(space.apply_pbw(p, e, hwv));
    }
    const Int dim = weyl_dim(wt);
    const long long rank = exponents_ok ? rep_vectors_rank(family) : 0;
    const double elapsed = ms_between(t0, std::chrono::steady_clock::now());

    OrderedJson d;
    d["points"] = static_cast<long long>(pts.size());
    d["rank"] = rank;
    d["weyl_dim"] = dim.str();
    d["exponents_nonnegative"] = exponents_ok;
    cert.add_check("monomial_basis",
                   exponents_ok && Int(static_cast<long long>(pts.size())) == dim &&
                       Int(rank) == dim,
                   std::move(d), elapsed);
    return finish_cert(cert, c.out, c.with_timings);
}

// ---------------------------------------------------------------------------
// semiinf: the periodic analogue for one marking scenario.

int run_semiinf(int n, int k, int d_max, const std::string& extra_spec, int horizon,
                int random_pipes, const CommonOpts& c) {
    if (n < 2 || n > 6) fail("--n must lie in [2,6]");
    if (k < 1 || k >= n) fail("--k must lie in [1,n-1]");
    if (d_max < 0 || d_max > 4) fail("--d-max must lie in [0,4]");
    if (horizon * k < d_max + k) fail("--horizon too small: need horizon*k >= d_max+k");
    if (random_pipes < 0) fail("--random-pipes must be non-negative");

    const QGrid g(n, k);
    QPartition oc;
    for (const auto& [i, j] : parse_cell_list(extra_spec, "order-extra")) {
        const QElt x{i, j};
        if (!g.contains(x) || i == j)
            fail("order-extra: cell " + qelt_str(x) + " is not an off-diagonal grid cell");
        oc.extra.insert(x);
    }

    Certificate cert("semiinf");
    OrderedJson cfg;
    cfg["n"] = n;
    cfg["k"] = k;
    cfg["d_max"] = d_max;
    cfg["horizon"] = horizon;
    std::string extras;
    for (const QElt& x : oc.extra)
        extras += (extras.empty() ? "" : ",") + std::to_string(x.i) + ":" + std::to_string(x.j);
    cfg["order_extra"] = extras.empty() ? "none" : extras;
    if (random_pipes > 0) cfg["random_pipes"] = random_pipes;
    cert.set_config(cfg);

    absorb_report(cert, checks::semiinf_scenario(n, k, oc, d_max, horizon));

    if (random_pipes > 0) {
        std::mt19937 rng(9000u + static_cast<unsigned>(10 * n + k));
        std::uniform_int_distribution<int> msize(1, 6);
        bool ok = true;
        for (int rep = 0; rep < random_pipes; ++rep) {
            std::set<QElt> marks;
            const int sz = msize(rng);
            for (int t = 0; t < sz; ++t) {
                std::uniform_int_distribution<int> row(1, 8);
                const int i = row(rng);
                std::uniform_int_distribution<int> col(std::max(i, k + 1), i + n - 1);
                marks.insert(QElt{i, col(rng)});
            }
            int maxi = 1, maxj = k + 1;
            for (const QElt& x : marks) {
                maxi = std::max(maxi, x.i);
                maxj = std::max(maxj, x.j);
            }
            int ci = maxi + 1, dj = maxj + 1;
            if (dj < ci) dj = ci;
            if (dj - ci > n - 1) ci = dj - (n - 1);
            const QElt start{ci, dj};
            const Permutation w = w_of_subset_q(g, std::vector<QElt>(marks.begin(), marks.end()));
            const auto in_m = [&g, marks](const QElt& x) {
                return g.contains(x) && marks.count(x) > 0;
            };
            if (q_pipe_value(g, in_m, start, *g.down_horizontal(start)) != w(g.mod_k(start.i)))
                ok = false;
            if (q_pipe_value(g, in_m, start, *g.down_vertical(start)) != w(g.mod_nk(start.j)))
                ok = false;
        }
        OrderedJson d;
        d["random_markings"] = random_pipes;
        cert.add_check("pipe_value_identity", ok, std::move(d));
    }
    return finish_cert(cert, c.out, c.with_timings);
}

// ---------------------------------------------------------------------------
// report: aggregate certificate files.

int run_report(const std::vector<std::string>& files, const std::string& format,
               const std::string& out) {
    if (files.empty()) fail("report: give at least one certificate file");

    struct Row {
        std::string file, tool, version;
        long long checks = 0, failures = 0;
        bool partial = false, pass = false;
    };
    std::vector<Row> rows;
    std::vector<OrderedJson> census;
    std::vector<std::pair<std::string, bool>> partition_rows;  // name, pass
    std::vector<double> timings;
    OrderedJson order_table;

    for (const std::string& file : files) {
        std::ifstream f(file);
        if (!f) fail("report: cannot read " + file);
        OrderedJson doc;
        try {
            f >> doc;
        } catch (const std::exception& e) {
            fail("report: " + file + " is not valid JSON: " + e.what());
        }
        if (!doc.is_object() || !doc.contains("tool") || !doc.contains("checks") ||
            !doc.contains("summary"))
            fail("report: " + file + " is not a certificate");
        Row r;
        r.file = file;
        r.tool = doc["tool"].get<std::string>();
        r.version = doc.value("tool_version", std::string("?"));
        const auto& sum = doc["summary"];
        r.checks = sum.value("checks", 0);
        r.failures = sum.value("failures", 0);
        r.partial = sum.value("partial", false);
        r.pass = sum.value("pass", false);
        rows.push_back(r);

        for (const auto& chk : doc["checks"]) {
            const std::string name = chk.value("name", std::string());
            const bool pass = chk.value("pass", false);
            const auto& d = chk["details"];
            if (chk.contains("elapsed_ms")) timings.push_back(chk["elapsed_ms"].get<double>());
            if (name.rfind("partition_", 0) == 0) partition_rows.push_back({name, pass});
            if (d.is_object() && d.contains("distinct") && d.contains("orbits")) {
                OrderedJson row;
                row["file"] = file;
                row["check"] = name;
                row["realized"] = d.value("realized", -1);
                row["distinct"] = d["distinct"];
                row["orbits"] = d["orbits"];
                census.push_back(std::move(row));
            }
            if (order_table.is_null() && d.is_object() && d.contains("descending"))
                order_table = d["descending"];
        }
    }

    std::sort(timings.begin(), timings.end());
    const auto pct = [&](double q) {
        if (timings.empty()) return 0.0;
        const size_t idx = static_cast<size_t>(q * (timings.size() - 1) + 0.5);
        return timings[idx];
    };

    std::string text;
    if (format == "json") {
        OrderedJson doc;
        OrderedJson rws = OrderedJson::array();
        for (const Row& r : rows) {
            OrderedJson j;
            j["file"] = r.file;
            j["tool"] = r.tool;
            j["tool_version"] = r.version;
            j["checks"] = r.checks;
            j["failures"] = r.failures;
            j["partial"] = r.partial;
            j["pass"] = r.pass;
            rws.push_back(std::move(j));
        }
        doc["reports"] = std::move(rws);
        doc["census"] = census;
        if (!partition_rows.empty()) {
            OrderedJson parts = OrderedJson::array();
            for (const auto& [name, pass] : partition_rows) {
                OrderedJson j;
                j["partition"] = name;
                j["pass"] = pass;
                parts.push_back(std::move(j));
            }
            doc["partitions"] = std::move(parts);
        }
        if (!timings.empty()) {
            OrderedJson t;
            t["count"] = static_cast<long long>(timings.size());
            t["p50_ms"] = pct(0.5);
            t["p90_ms"] = pct(0.9);
            t["max_ms"] = timings.back();
            doc["timings"] = std::move(t);
        }
        text = doc.dump(2) + "\n";
    } else if (format == "csv") {
        text = "file,tool,tool_version,checks,failures,partial,pass\n";
        for (const Row& r : rows)
            text += r.file + "," + r.tool + "," + r.version + "," + std::to_string(r.checks) +
                    "," + std::to_string(r.failures) + "," + (r.partial ? "true" : "false") +
                    "," + (r.pass ? "true" : "false") + "\n";
    } else if (format == "md") {
        text = "# Verification report\n\n";
        text += "| file | tool | checks | failures | partial | pass |\n";
        text += "| --- | --- | --- | --- | --- | --- |\n";
        for (const Row& r : rows)
            text += "| " + r.file + " | " + r.tool + " | " + std::to_string(r.checks) + " | " +
                    std::to_string(r.failures) + " | " + (r.partial ? "yes" : "no") + " | " +
                    (r.pass ? "yes" : "no") + " |\n";
        if (!census.empty()) {
            text += "\n## Census\n\n| file | check | realized | distinct | orbits |\n";
            text += "| --- | --- | --- | --- | --- |\n";
            for (const auto& row : census)
                text += "| " + row["file"].get<std::string>() + " | " +
                        row["check"].get<std::string>() + " | " + row["realized"].dump() +
                        " | " + row["distinct"].dump() + " | " + row["orbits"].dump() + " |\n";
        }
        if (!partition_rows.empty()) {
            long long passed = 0;
            for (const auto& [name, pass] : partition_rows) passed += pass ? 1 : 0;
            text += "\n## Partition sweep\n\n" + std::to_string(passed) + " of " +
                    std::to_string(partition_rows.size()) + " partitions passed.\n";
        }
        if (!timings.empty()) {
            std::stringstream ss;
            ss << "\n## Timings\n\n" << timings.size() << " timed checks; p50 " << pct(0.5)
               << " ms, p90 " << pct(0.9) << " ms, max " << timings.back() << " ms.\n";
            text += ss.str();
        }
        if (!order_table.is_null()) {
            text += "\n## Variable order (descending)\n\n```\n";
            std::string line;
            for (const auto& v : order_table) {
                if (!line.empty()) line += " > ";
                line += v.get<std::string>();
            }
            text += line + "\n```\n";
        }
    } else {
        fail("report: --format must be json, csv, or md");
    }

    write_text(out, text);
    bool any_fail = false, any_partial = false;
    for (const Row& r : rows) {
        any_fail = any_fail || r.failures > 0 || (!r.pass && !r.partial);
        any_partial = any_partial || r.partial;
    }
    if (any_fail) return 1;
    if (any_partial) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for marked chain-order degenerations of flag varieties"};
    app.set_version_flag("--version", MCOP_VERSION);
    app.require_subcommand(1);
    int rc = 0;

    // ideals
    int id_n = 0;
    CommonOpts id_c;
    auto* sub_ideals = app.add_subcommand("ideals", "enumerate order ideals by diagonal level");
    sub_ideals->add_option("--n", id_n, "poset size")->required();
    add_common(sub_ideals, id_c, false);
    sub_ideals->callback([&] { rc = run_ideals(id_n, id_c); });

    // pipedream (alias render)
    int pd_n = 0;
    std::string pd_set, pd_ideal, pd_order, pd_format = "ascii", pd_out;
    auto* sub_pd = app.add_subcommand("pipedream", "render the pipes of a marked set");
    sub_pd->alias("render");
    sub_pd->add_option("--n", pd_n, "poset size")->required();
    sub_pd->add_option("--set", pd_set, "marked cells, e.g. '1:1,2:2,1:2' or '(1,1),(2,2)'");
    sub_pd->add_option("--ideal", pd_ideal, "ideal generators; marked set derived from them");
    sub_pd->add_option("--order-part", pd_order,
                       "order-like cells used with --ideal (hex mask or cell list)");
    sub_pd->add_option("--format", pd_format, "ascii or dot");
    sub_pd->add_option("-o,--output", pd_out, "write the diagram to this file");
    sub_pd->callback([&] { rc = run_pipedream(pd_n, pd_set, pd_ideal, pd_order, pd_format, pd_out); });

    // mcop
    int mc_n = 0;
    bool mc_all = false;
    std::string mc_order, mc_format = "json";
    std::vector<std::string> mc_lambdas;
    CommonOpts mc_c;
    auto* sub_mcop = app.add_subcommand("mcop", "lattice point sets and the coordinate change");
    sub_mcop->add_option("--n", mc_n, "poset size")->required();
    sub_mcop->add_option("--order-part", mc_order, "partition selector (hex mask or cell list)");
    sub_mcop->add_flag("--all-partitions", mc_all, "sweep every partition");
    sub_mcop->add_option("--lambda", mc_lambdas,
                         "dominant weight a1,...,a(n-1); repeatable (default: fundamentals)");
    sub_mcop->add_option("--format", mc_format, "json or csv");
    add_common(sub_mcop, mc_c, false);
    sub_mcop->callback(
        [&] { rc = run_mcop(mc_n, mc_order, mc_all, mc_lambdas, mc_format, mc_c); });

    // degenerate
    int dg_n = 0;
    bool dg_all = false;
    std::string dg_sig, dg_order;
    CommonOpts dg_c;
    auto* sub_dg = app.add_subcommand(
        "degenerate", "initial terms, kernel fingerprints, and the ideal census");
    sub_dg->add_option("--n", dg_n, "poset size")->required();
    sub_dg->add_option("--signature", dg_sig, "levels, e.g. '1,2,3' (default: all)");
    sub_dg->add_option("--order-part", dg_order, "partition selector (hex mask or cell list)");
    sub_dg->add_flag("--all-partitions", dg_all, "sweep every partition");
    add_common(sub_dg, dg_c);
    sub_dg->callback([&] { rc = run_degenerate(dg_n, dg_sig, dg_order, dg_all, dg_c); });

    // verify
    std::string vf_suite = "all", vf_sig, vf_order;
    int vf_n = 0, vf_sample = 0, vf_cap = 3;
    unsigned vf_seed = 20250801u;
    bool vf_all = false;
    std::vector<std::string> vf_lambdas;
    CommonOpts vf_c;
    auto* sub_vf = app.add_subcommand("verify", "run a named check suite");
    sub_vf->add_option("--suite", vf_suite,
                       "all, pipedream, images, degeneration, census, polytope, tableaux, "
                       "basis, or semiinf");
    sub_vf->add_option("--n", vf_n, "poset size (pins the degeneration/census suites)");
    sub_vf->add_option("--signature", vf_sig, "levels, e.g. '1,2' (default: all for n)");
    sub_vf->add_option("--order-part", vf_order, "verify a single partition");
    sub_vf->add_flag("--all-partitions", vf_all, "sweep every partition (the default family)");
    sub_vf->add_option("--sample", vf_sample, "verify this many seeded random partitions");
    sub_vf->add_option("--seed", vf_seed, "seed for --sample");
    sub_vf->add_option("--lambda", vf_lambdas, "weights for the basis suite; repeatable");
    sub_vf->add_option("--weight-cap", vf_cap, "total-weight cap for the polytope suite");
    add_common(sub_vf, vf_c);
    sub_vf->callback([&] {
        rc = run_verify(vf_suite, vf_n, vf_sig, vf_order, vf_all, vf_sample, vf_seed,
                        vf_lambdas, vf_cap, vf_c);
    });

    // tableaux
    int tb_n = 4;
    std::string tb_order, tb_shape, tb_format = "json";
    CommonOpts tb_c;
    auto* sub_tb = app.add_subcommand("tableaux", "enumerate semistandard tableaux");
    sub_tb->add_option("--n", tb_n, "poset size (default 4)");
    sub_tb->add_option("--order-part", tb_order, "partition selector (hex mask or cell list)");
    sub_tb->add_option("--shape", tb_shape, "fundamental multiplicities a1,...,a(n-1)")
        ->required();
    sub_tb->add_option("--format", tb_format, "json or text");
    add_common(sub_tb, tb_c, false);
    sub_tb->callback([&] { rc = run_tableaux(tb_n, tb_order, tb_shape, tb_format, tb_c); });

    // rep-basis
    int rb_n = 4;
    std::string rb_order, rb_lambda;
    CommonOpts rb_c;
    auto* sub_rb = app.add_subcommand("rep-basis", "monomial-basis span check");
    sub_rb->add_option("--n", rb_n, "poset size (default 4)");
    sub_rb->add_option("--order-part", rb_order, "partition selector (hex mask or cell list)");
    sub_rb->add_option("--lambda", rb_lambda, "dominant weight a1,...,a(n-1)")->required();
    add_common(sub_rb, rb_c, false);
    sub_rb->callback([&] { rc = run_rep_basis(rb_n, rb_order, rb_lambda, rb_c); });

    // semiinf
    int si_n = 0, si_k = 0, si_dmax = 2, si_horizon = 3, si_pipes = 0;
    std::string si_extra;
    CommonOpts si_c;
    auto* sub_si = app.add_subcommand("semiinf", "periodic-grid checks for one marking");
    sub_si->add_option("--n", si_n, "periodicity")->required();
    sub_si->add_option("--k", si_k, "grid height residue")->required();
    sub_si->add_option("--d-max", si_dmax, "largest ideal level to enumerate (default 2)");
    sub_si->add_option("--order-extra", si_extra,
                       "off-diagonal marked cells, e.g. '1:4,2:5' (default none)");
    sub_si->add_option("--horizon", si_horizon, "series level cap (default 3)");
    sub_si->add_option("--random-pipes", si_pipes, "also test this many random pipe values");
    add_common(sub_si, si_c, false);
    sub_si->callback(
        [&] { rc = run_semiinf(si_n, si_k, si_dmax, si_extra, si_horizon, si_pipes, si_c); });

    // report
    std::vector<std::string> rp_files;
    std::string rp_format = "md", rp_out;
    auto* sub_rp = app.add_subcommand("report", "aggregate certificate files");
    sub_rp->add_option("files", rp_files, "certificate JSON files")->required();
    sub_rp->add_option("--format", rp_format, "json, csv, or md");
    sub_rp->add_option("-o,--output", rp_out, "write the report to this file");
    sub_rp->callback([&] { rc = run_report(rp_files, rp_format, rp_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ToolError& e) {
        std::cerr << "error: " << e.msg << "\n";
        return 2;
    }
    return rc;
}
