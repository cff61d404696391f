#include <catch2/catch_amalgamated.hpp>

#include "prismdom/table.hpp"
#include "prismdom/verify.hpp"
#include "test_util.hpp"

using namespace prismdom;
using testutil::cycle_graph;
using testutil::path_graph;

namespace {

VerifyOptions small_opts(int nmax, int trials) {
    VerifyOptions o;
    o.nmax = nmax;
    o.trials = trials;
    o.seed = 987654321;
    return o;
}

}  // namespace

TEST_CASE("lemma-plus1 check passes", "[verify]") {
    auto res = check_lemma_plus1(small_opts(5, 24));
    CAPTURE(res.to_json().dump());
    REQUIRE(res.pass);
    REQUIRE(res.stats["instances"].get<std::uint64_t>() > 500);
    REQUIRE_FALSE(res.counterexample.has_value());
}

TEST_CASE("find_violating_permutation", "[verify]") {
    Graph p6 = path_graph(6);
    Permutation p1 = find_violating_permutation(p6);
    PrismGraph pg = build_prism(p6, p1);
    DistanceMatrix dp = all_pairs_distances(pg.graph);
    REQUIRE_FALSE(is_weakly_convex(pg.graph, dp, lift_set(pg, VertexSet::full(6), VertexSet(6))));

    REQUIRE_NOTHROW(find_violating_permutation(path_graph(5)));
    REQUIRE_THROWS_AS(find_violating_permutation(cycle_graph(7)), std::invalid_argument);  // diam 3
}

TEST_CASE("diam-v-sets check passes", "[verify]") {
    auto res = check_diam_V_sets(small_opts(5, 20));
    CAPTURE(res.to_json().dump());
    REQUIRE(res.pass);
    REQUIRE(res.stats["diam_ge4_graphs"].get<std::uint64_t>() > 0);
}

TEST_CASE("d1d2-structure check passes", "[verify]") {
    auto res = check_D1D2_structure(small_opts(5, 40));
    CAPTURE(res.to_json().dump());
    REQUIRE(res.pass);
    REQUIRE(res.stats["minimum_sets_checked"].get<std::uint64_t>() > 100);
}

TEST_CASE("projection-lemmas check passes and records the P4 witness", "[verify]") {
    auto res = check_projection_lemmas(small_opts(4, 16));
    CAPTURE(res.to_json().dump());
    REQUIRE(res.pass);
    REQUIRE(res.stats["hypothesis_necessity_P4"] == true);
}

TEST_CASE("id-prism-lemmas check passes", "[verify]") {
    auto res = check_id_prism_lemmas(small_opts(4, 10));
    CAPTURE(res.to_json().dump());
    REQUIRE(res.pass);
    REQUIRE(res.stats["characterization_checks"].get<std::uint64_t>() > 1000);
}

TEST_CASE("tidg check passes", "[verify]") {
    auto res = check_tidg(small_opts(5, 10));
    CAPTURE(res.to_json().dump());
    REQUIRE(res.pass);
    REQUIRE(res.stats["graphs"].get<std::uint64_t>() == 1 + 1 + 4 + 38 + 728);
}

TEST_CASE("wcon id bound and partition check passes", "[verify]") {
    auto res = check_wcon_id_bound_and_partition(small_opts(4, 10));
    CAPTURE(res.to_json().dump());
    REQUIRE(res.pass);
    // K2 is the instance where the paper's "three nonempty sets" reading fails
    REQUIRE(res.stats["nonempty_reading_violations"].get<std::uint64_t>() > 0);
    // K2 also realizes gamma_wcon(Id G) = gamma_wcon(G) + 1
    REQUIRE(res.stats["k1_instance"].is_object());
}

TEST_CASE("prop3 equivalence check passes", "[verify]") {
    auto res = check_prop3_equivalence(small_opts(5, 16));
    CAPTURE(res.to_json().dump());
    REQUIRE(res.pass);
    REQUIRE(res.stats["instances"].get<std::uint64_t>() > 200);
    REQUIRE(res.stats["hypothesis_failures_logged"].get<std::uint64_t>() > 0);
}

TEST_CASE("run_check dispatch", "[verify]") {
    REQUIRE(run_check("tidg", small_opts(3, 4)).check_id == "tidg");
    REQUIRE_THROWS_AS(run_check("nope", small_opts(3, 4)), std::invalid_argument);
    REQUIRE(all_check_ids().size() == 8);
}

TEST_CASE("check result json", "[verify]") {
    auto res = check_tidg(small_opts(3, 4));
    auto j = res.to_json();
    REQUIRE(j["check_id"] == "tidg");
    REQUIRE(j["pass"] == true);
    REQUIRE(j.contains("universe"));
    REQUIRE(j.contains("seed"));
}

TEST_CASE("zero budget marks heavy table rows inconclusive", "[verify]") {
    TableOptions topts;
    topts.max_k = 2;
    topts.heavy_budget_ms = 0;
    topts.optional_budget_ms = 0;
    auto rows = counterexample_table(topts);
    bool saw_inconclusive = false;
    for (const auto& r : rows)
        if (r.status == "INCONCLUSIVE") saw_inconclusive = true;
    REQUIRE(saw_inconclusive);
    // light rows still complete
    for (const auto& r : rows)
        if (r.id == "p3" || r.id == "c7") REQUIRE(r.status == "PASS");
}

TEST_CASE("conjecture search smoke", "[verify]") {
    auto res = search_wcon_fixer_conjecture(4, 5000, 13);
    REQUIRE(res.n == 4);
    REQUIRE(res.coverage == "exhaustive");
    REQUIRE(res.graphs_seen == 64);  // all labeled graphs on 4 vertices
    // no diam-2 graph on 4 vertices has gamma_wcon = 4
    REQUIRE(res.members == 0);
    REQUIRE(res.hits.empty());
    REQUIRE_THROWS_AS(search_wcon_fixer_conjecture(11, 10, 1), std::invalid_argument);
}
