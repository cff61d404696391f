#pragma once

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "prismdom/families.hpp"
#include "prismdom/geodesic.hpp"
#include "prismdom/io.hpp"
#include "prismdom/solver.hpp"
#include "prismdom/universe.hpp"

namespace prismdom {

// One row of the counterexample table: a single claim computed at desk scale.
// Optional rows are the ones whose exact search is allowed to run out of
// budget (the witness checks that accompany them are never optional).
struct TableRow {
    std::string id;
    std::string claim;
    std::string computed;
    std::string status;  // PASS | FAIL | INCONCLUSIVE
    bool optional = false;
    double elapsed_ms = 0.0;
};

struct TableOptions {
    int max_k = 2;
    long long heavy_budget_ms = 600000;    // the two mandated long runs
    long long optional_budget_ms = 60000;  // exact searches marked optional
    int threads = 1;
};

namespace table_detail {

struct RowClock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

inline GammaReport solve(const Graph& g, GammaVariant variant, long long budget_ms, int threads) {
    SolveOptions opts;
    opts.threads = threads;
    if (budget_ms >= 0) opts.budget = std::chrono::milliseconds(budget_ms);
    return gamma_variant(g, variant, opts);
}

inline std::string show(const GammaReport& r) {
    if (!r.conclusive) return "inconclusive (budget), bounds [" + std::to_string(r.lower_bound) + "," + std::to_string(r.upper_bound) + "]";
    return std::to_string(r.value);
}

}  // namespace table_detail

inline std::vector<TableRow> counterexample_table(const TableOptions& opts = {}) {
    using namespace table_detail;
    std::vector<TableRow> rows;

    auto add_value_row = [&](const std::string& id, const std::string& claim, const Graph& g,
                             GammaVariant variant, int expected, long long budget, bool optional) {
        RowClock clock;
        TableRow row{id, claim, "", "", optional, 0};
        auto rep = solve(g, variant, budget, opts.threads);
        row.computed = show(rep);
        row.status = !rep.conclusive ? "INCONCLUSIVE" : (rep.value == expected ? "PASS" : "FAIL");
        row.elapsed_ms = clock.ms();
        rows.push_back(row);
        return rep;
    };
    auto add_bool_row = [&](const std::string& id, const std::string& claim, bool computed_ok,
                            const std::string& detail) {
        rows.push_back(TableRow{id, claim, detail, computed_ok ? "PASS" : "FAIL", false, 0});
    };

    // P3 with (12): both upper bounds of the sandwich fail
    {
        auto p3 = path(3);
        add_value_row("p3", "gamma_con(P3) = 1", p3.graph, GammaVariant::convex, 1, -1, false);
        PrismGraph pg = build_prism(p3.graph, *p3.canonical_perm);
        add_value_row("p3-prism-con", "gamma_con((12)P3) = 3", pg.graph, GammaVariant::convex, 3, -1, false);
        add_value_row("p3-prism-wcon", "gamma_wcon((12)P3) = 3 (typo reading of the paper's line)",
                      pg.graph, GammaVariant::weakly_convex, 3, -1, false);
    }

    // stars under (01)
    for (int k = 2; k <= 5; ++k) {
        auto st = star(k);
        PrismGraph pg = build_prism(st.graph, *st.canonical_perm);
        std::string kk = std::to_string(k);
        add_value_row("star-" + kk, "gamma_con(K_{1," + kk + "}) = 1", st.graph, GammaVariant::convex, 1, -1, false);
        add_value_row("star-" + kk + "-prism-con", "gamma_con(pi K_{1," + kk + "}) = 4", pg.graph, GammaVariant::convex, 4, -1, false);
        add_value_row("star-" + kk + "-prism-wcon", "gamma_wcon(pi K_{1," + kk + "}) = 3", pg.graph, GammaVariant::weakly_convex, 3, -1, false);
    }

    // C7 under (13)(46)
    {
        auto c7 = cycle(7);
        add_value_row("c7", "gamma_wcon(C7) = 7", c7.graph, GammaVariant::weakly_convex, 7, -1, false);
        PrismGraph pg = build_prism(c7.graph, *c7.canonical_perm);
        add_value_row("c7-prism", "gamma_wcon(pi C7) = 6", pg.graph, GammaVariant::weakly_convex, 6, 30000, false);
        DistanceMatrix dp = all_pairs_distances(pg.graph);
        VertexSet w = lift_set(pg, VertexSet::of(7, {0, 1, 6}), VertexSet::of(7, {0, 1, 6}));
        add_bool_row("c7-prism-witness", "{0,0',1,1',6,6'} is weakly convex dominating in pi C7",
                     is_weakly_convex_dominating(pg.graph, dp, w), "witness of size 6");
    }

    // cycle gadgets G_k
    for (int k = 1; k <= opts.max_k; ++k) {
        auto gk = cycle_gadget(k);
        std::string kk = std::to_string(k);
        add_value_row("cycle-gadget-" + kk, "gamma_wcon(G_" + kk + ") = 6k+1 = " + std::to_string(6 * k + 1),
                      gk.graph, GammaVariant::weakly_convex, 6 * k + 1, opts.heavy_budget_ms, false);
        PrismGraph pg = build_prism(gk.graph, *gk.canonical_perm);
        // the paper's witness: hub and (i,1),(i,6) on both layers
        VertexSet base(gk.graph.n);
        base.add(gk.id_of("(0,0)"));
        for (int i = 1; i <= k; ++i) {
            base.add(gk.id_of("(" + std::to_string(i) + ",1)"));
            base.add(gk.id_of("(" + std::to_string(i) + ",6)"));
        }
        VertexSet w = lift_set(pg, base, base);
        DistanceMatrix dp = all_pairs_distances(pg.graph);
        add_bool_row("cycle-gadget-" + kk + "-prism-witness",
                     "hub/(i,1)/(i,6) on both layers is weakly convex dominating in pi_k G_" + kk,
                     is_weakly_convex_dominating(pg.graph, dp, w), "witness of size " + std::to_string(w.size()));
        add_value_row("cycle-gadget-" + kk + "-prism",
                      "gamma_wcon(pi_" + kk + " G_" + kk + ") = 4k+2 = " + std::to_string(4 * k + 2),
                      pg.graph, GammaVariant::weakly_convex, 4 * k + 2, opts.heavy_budget_ms, false);
    }

    // P6 under (14)(23)
    {
        auto p6 = path(6);
        add_value_row("p6", "gamma_wcon(P6) = 4", p6.graph, GammaVariant::weakly_convex, 4, -1, false);
        PrismGraph pg = build_prism(p6.graph, *p6.canonical_perm);
        add_value_row("p6-prism", "gamma_wcon(sigma P6) = 12 (the whole prism)", pg.graph,
                      GammaVariant::weakly_convex, 12, 30000, false);
    }

    // path gadgets H_k (defined for k >= 2)
    for (int k = 2; k <= std::max(2, opts.max_k); ++k) {
        auto hk = path_gadget(k);
        std::string kk = std::to_string(k);
        add_value_row("path-gadget-" + kk, "gamma_wcon(H_" + kk + ") = 4k+1 = " + std::to_string(4 * k + 1),
                      hk.graph, GammaVariant::weakly_convex, 4 * k + 1, 60000, false);
        PrismGraph pg = build_prism(hk.graph, *hk.canonical_perm);
        DistanceMatrix dp = all_pairs_distances(pg.graph);
        bool whole_ok = 10 * k + 2 == pg.graph.n &&
                        is_weakly_convex_dominating(pg.graph, dp, VertexSet::full(pg.graph.n));
        add_bool_row("path-gadget-" + kk + "-prism-bound",
                     "claimed gamma_wcon(sigma_" + kk + " H_" + kk + ") = 10k+2 equals |V(prism)|, attained by V u V'",
                     whole_ok, "prism order " + std::to_string(pg.graph.n));
        add_value_row("path-gadget-" + kk + "-prism",
                      "gamma_wcon(sigma_" + kk + " H_" + kk + ") = 10k+2 = " + std::to_string(10 * k + 2) + " (exact, optional)",
                      pg.graph, GammaVariant::weakly_convex, 10 * k + 2, opts.optional_budget_ms, true);
    }

    // spider trees T_{k,l}
    {
        std::vector<std::pair<int, int>> params = {{2, 1}, {2, 2}, {3, 1}};
        for (int l = 3; l <= opts.max_k + 1; ++l) params.emplace_back(2, l);
        for (auto [k, l] : params) {
            auto t = spider_tree(k, l);
            std::string tag = std::to_string(k) + "-" + std::to_string(l);
            add_value_row("spider-" + tag, "gamma_con(T_{" + std::to_string(k) + "," + std::to_string(l) + "}) = k+1 = " + std::to_string(k + 1),
                          t.graph, GammaVariant::convex, k + 1, -1, false);
            PrismGraph pg = build_prism(t.graph, *t.canonical_perm);
            add_value_row("spider-" + tag + "-prism",
                          "gamma_con(pi T_{" + std::to_string(k) + "," + std::to_string(l) + "}) = 2kl+2k+2 = " + std::to_string(2 * k * l + 2 * k + 2),
                          pg.graph, GammaVariant::convex, 2 * k * l + 2 * k + 2, 300000, false);
        }
    }

    // sept-path gadgets
    std::vector<int> sept_base_values;
    std::vector<bool> sept_prism_bound10;
    for (int k = 3; k <= 2 + opts.max_k + (opts.max_k >= 2 ? 1 : 0); ++k) {
        auto gk = sept_path_gadget(k);
        std::string kk = std::to_string(k);
        auto base_rep = add_value_row("sept-" + kk, "gamma_con(G_" + kk + ") = 3k+2 = " + std::to_string(3 * k + 2),
                                      gk.graph, GammaVariant::convex, 3 * k + 2, 120000, false);
        if (base_rep.conclusive) sept_base_values.push_back(base_rep.value);
        PrismGraph pg = build_prism(gk.graph, *gk.canonical_perm);
        DistanceMatrix dp = all_pairs_distances(pg.graph);
        VertexSet base(gk.graph.n);
        for (const char* lab : {"2", "6", "(3,1)", "(4,1)", "(5,1)"}) base.add(gk.id_of(lab));
        VertexSet w = lift_set(pg, base, base);
        bool witness_ok = w.size() == 10 && is_convex_dominating(pg.graph, dp, w);
        sept_prism_bound10.push_back(witness_ok);
        add_bool_row("sept-" + kk + "-prism-witness",
                     "{2,2',(3,1),(3,1)',(4,1),(4,1)',(5,1),(5,1)',6,6'} is convex dominating in pi_" + kk + " G_" + kk,
                     witness_ok, "witness of size " + std::to_string(w.size()));
        bool mandatory_exact = k == 3;
        add_value_row("sept-" + kk + "-prism", "gamma_con(pi_" + kk + " G_" + kk + ") = 10" + (mandatory_exact ? "" : " (exact, optional)"),
                      pg.graph, GammaVariant::convex, 10,
                      mandatory_exact ? opts.heavy_budget_ms : opts.optional_budget_ms, !mandatory_exact);
    }

    // the closing remark, as data: base values grow while the prism stays put
    {
        bool grows = sept_base_values.size() >= 2;
        for (size_t i = 1; i < sept_base_values.size(); ++i)
            if (sept_base_values[i] <= sept_base_values[i - 1]) grows = false;
        bool all10 = !sept_prism_bound10.empty();
        for (bool b : sept_prism_bound10)
            if (!b) all10 = false;
        add_bool_row("remark-sept", "gamma_con(G_k) grows with k while the prism keeps a size-10 convex dominating set",
                     grows && all10, "base values " + [&] {
                         std::string s;
                         for (int v : sept_base_values) s += std::to_string(v) + " ";
                         return s;
                     }());
    }
    {
        bool ok = true;
        std::string detail;
        for (int l = 1; l <= 3; ++l) {
            auto t = spider_tree(2, l);
            int base = solve(t.graph, GammaVariant::convex, -1, opts.threads).value;
            PrismGraph pg = build_prism(t.graph, *t.canonical_perm);
            auto rep = solve(pg.graph, GammaVariant::convex, 300000, opts.threads);
            if (base != 3 || !rep.conclusive || rep.value != 4 * l + 6) ok = false;
            detail += "l=" + std::to_string(l) + ":" + std::to_string(base) + "/" + show(rep) + " ";
        }
        add_bool_row("remark-spider", "gamma_con(T_{2,l}) stays 3 while gamma_con of the prism grows as 4l+6", ok, detail);
    }

    // the identity-prism bound on a paper graph
    {
        auto c7 = cycle(7);
        PrismGraph pg = identity_prism(c7.graph);
        RowClock clock;
        auto rep = solve(pg.graph, GammaVariant::weakly_convex, 60000, opts.threads);
        TableRow row{"id-c7", "gamma_wcon(Id C7) <= min{|V|, 2 gamma_wcon(C7)} = 7", show(rep), "", false, 0};
        row.status = !rep.conclusive ? "INCONCLUSIVE" : (rep.value <= 7 ? "PASS" : "FAIL");
        row.elapsed_ms = clock.ms();
        rows.push_back(row);
    }

    return rows;
}

inline void print_table(std::ostream& os, const std::vector<TableRow>& rows) {
    size_t idw = 2, claimw = 5;
    for (const auto& r : rows) {
        idw = std::max(idw, r.id.size());
        claimw = std::max(claimw, r.claim.size());
    }
    for (const auto& r : rows) {
        os << std::left << std::setw(int(idw) + 2) << r.id << std::setw(int(claimw) + 2) << r.claim
           << std::setw(14) << (r.status + (r.optional ? " (optional)" : "")) << r.computed << '\n';
    }
}

inline nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back({{"id", r.id}, {"claim", r.claim}, {"computed", r.computed},
                       {"status", r.status}, {"optional", r.optional}, {"elapsed_ms", r.elapsed_ms}});
    return arr;
}

// --- Conjecture search: diam-2 graphs with gamma_wcon = |V| whose prism
// improves under some permutation. Finding nothing is a valid outcome. ---
struct ConjectureSearchResult {
    int n = 0;
    std::uint64_t seed = 0;
    std::string coverage;  // exhaustive | partial | sampled
    std::uint64_t graphs_seen = 0;
    std::uint64_t members = 0;  // graphs meeting diam=2 and gamma_wcon=|V|
    std::uint64_t perm_tests = 0;
    bool budget_exhausted = false;
    nlohmann::json hits = nlohmann::json::array();
    double elapsed_ms = 0.0;

    nlohmann::json to_json() const {
        return nlohmann::json{{"n", n},
                              {"seed", seed},
                              {"coverage", coverage},
                              {"graphs_seen", graphs_seen},
                              {"members", members},
                              {"perm_tests", perm_tests},
                              {"budget_exhausted", budget_exhausted},
                              {"hits", hits},
                              {"elapsed_ms", elapsed_ms}};
    }
};

inline ConjectureSearchResult search_wcon_fixer_conjecture(int n, long long budget_ms,
                                                           std::uint64_t seed = 20250810) {
    if (n < 2 || n > 10) throw std::invalid_argument("search_wcon_fixer_conjecture: n must be in [2,10]");
    auto t0 = std::chrono::steady_clock::now();
    auto deadline = t0 + std::chrono::milliseconds(budget_ms);
    auto out_of_time = [&] { return std::chrono::steady_clock::now() >= deadline; };
    auto remaining_ms = [&] {
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now()).count();
        return std::max<long long>(1, left);
    };

    ConjectureSearchResult res;
    res.n = n;
    res.seed = seed;
    bool exhaustive = n <= 7;
    res.coverage = exhaustive ? "exhaustive" : "sampled";
    Rng rng(seed);

    auto handle_member = [&](const Graph& g) {
        ++res.members;
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::uint64_t sampled_perms = 2000;
        bool perm_exhaustive = n <= 7;
        while (true) {
            if (out_of_time()) {
                res.budget_exhausted = true;
                return;
            }
            Permutation p = perm_exhaustive ? Permutation(img) : random_permutation(rng, n);
            PrismGraph pg = build_prism(g, p);
            SolveOptions so;
            so.budget = std::chrono::milliseconds(remaining_ms());
            auto rep = gamma_variant(pg.graph, GammaVariant::weakly_convex, so);
            ++res.perm_tests;
            if (rep.conclusive && rep.value < n) {
                // re-validate the hit through the general predicates
                DistanceMatrix dp = all_pairs_distances(pg.graph);
                if (!is_weakly_convex_dominating(pg.graph, dp, rep.witness))
                    throw std::logic_error("conjecture search: witness failed re-validation");
                res.hits.push_back({{"graph6", to_graph6(g)},
                                    {"perm", p.to_cycle_string()},
                                    {"gamma_wcon", n},
                                    {"gamma_wcon_prism", rep.value},
                                    {"witness", rep.witness.to_vector()}});
            }
            if (!rep.conclusive) res.budget_exhausted = true;
            if (perm_exhaustive) {
                if (!std::next_permutation(img.begin(), img.end())) break;
            } else if (--sampled_perms == 0) {
                break;
            }
        }
    };

    auto inspect = [&](const Graph& g) {
        ++res.graphs_seen;
        if (!is_connected(g)) return;
        auto diam = diameter(g);
        if (!diam || *diam != 2) return;
        SolveOptions so;
        so.budget = std::chrono::milliseconds(remaining_ms());
        auto rep = gamma_variant(g, GammaVariant::weakly_convex, so);
        if (!rep.conclusive) {
            res.budget_exhausted = true;
            return;
        }
        if (rep.value != n) return;
        handle_member(g);
    };

    if (exhaustive) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        std::uint64_t total = std::uint64_t{1} << pairs.size();
        std::vector<std::pair<int, int>> edges;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if ((mask & 0xFFF) == 0 && out_of_time()) {
                res.budget_exhausted = true;
                res.coverage = "partial";
                break;
            }
            edges.clear();
            for (size_t i = 0; i < pairs.size(); ++i)
                if (mask & (std::uint64_t{1} << i)) edges.push_back(pairs[i]);
            inspect(make_graph(n, edges));
            if (res.budget_exhausted) {
                res.coverage = "partial";
                break;
            }
        }
    } else {
        while (!out_of_time()) {
            inspect(random_connected_graph(rng, n, 0.5));
        }
    }

    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace prismdom
