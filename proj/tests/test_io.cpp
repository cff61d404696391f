#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "prismdom/io.hpp"
#include "prismdom/universe.hpp"
#include "test_util.hpp"

using namespace prismdom;

TEST_CASE("edge list reading", "[io]") {
    std::istringstream in(
        "# a comment\n"
        "3 2\n"
        "\n"
        "0 1\n"
        "1 2   # trailing comment\n");
    auto lg = read_edge_list(in);
    REQUIRE(lg.graph.n == 3);
    REQUIRE(lg.graph.edge_count() == 2);
    REQUIRE_FALSE(lg.labels.has_value());
    REQUIRE_FALSE(lg.perm_text.has_value());
}

TEST_CASE("edge list metadata comments", "[io]") {
    std::istringstream in(
        "2 1\n"
        "0 1\n"
        "# label 0 (0,0)\n"
        "# label 1 (1,1)\n"
        "# perm (0 1)\n");
    auto lg = read_edge_list(in);
    REQUIRE(lg.labels.has_value());
    REQUIRE((*lg.labels)[0] == "(0,0)");
    REQUIRE(lg.perm_text == "(0 1)");
}

TEST_CASE("edge list errors carry line and column", "[io]") {
    auto expect_fail = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_edge_list(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(e.line() == line);
            REQUIRE(e.column() >= 1);
            REQUIRE(std::string(e.what()).find("line " + std::to_string(line)) != std::string::npos);
        }
    };
    expect_fail("x 2\n", 1);
    expect_fail("3 1\n0 q\n", 2);
    expect_fail("3 1\n0 7\n", 2);       // id out of range
    expect_fail("3 1\n1 1\n", 2);       // self loop
    expect_fail("3 2\n0 1\n", 2);       // missing edge line
    expect_fail("3 1\n0 1\n1 2\n", 3);  // extra edge line
    expect_fail("3 1\n0 1 junk\n", 2);  // trailing text
}

TEST_CASE("edge list round trip", "[io]") {
    Rng rng(81);
    for (int iter = 0; iter < 25; ++iter) {
        Graph g = random_connected_graph(rng, 1 + int(rng.below(10)), 0.3);
        std::ostringstream os;
        write_edge_list(os, g);
        std::istringstream in(os.str());
        Graph back = read_edge_list(in).graph;
        REQUIRE(back.n == g.n);
        REQUIRE(back.edges == g.edges);
    }
}

TEST_CASE("graph6 known encodings", "[io]") {
    // K1, K2, P3 (path 0-1-2), K4 use well-known graph6 bytes
    REQUIRE(to_graph6(make_graph(1, {})) == "@");
    REQUIRE(to_graph6(make_graph(2, {{0, 1}})) == "A_");
    REQUIRE(to_graph6(testutil::path_graph(3)) == "Bg");
    REQUIRE(to_graph6(make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == "C~");
    REQUIRE(from_graph6("C~").edge_count() == 6);
    REQUIRE(from_graph6(">>graph6<<A_").edge_count() == 1);
}

TEST_CASE("graph6 long-form order", "[io]") {
    Graph g = testutil::path_graph(63);
    std::string s = to_graph6(g);
    REQUIRE(s.substr(0, 4) == "~??~");
    Graph back = from_graph6(s);
    REQUIRE(back.n == 63);
    REQUIRE(back.edges == g.edges);
}

TEST_CASE("graph6 round trip is byte exact", "[io]") {
    Rng rng(4242);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + int(rng.below(12));
        Graph g = random_connected_graph(rng, n, 0.4);
        std::string enc = to_graph6(g);
        Graph back = from_graph6(enc);
        REQUIRE(back.n == g.n);
        REQUIRE(back.edges == g.edges);
        REQUIRE(to_graph6(back) == enc);
    }
}

TEST_CASE("graph6 rejects junk", "[io]") {
    REQUIRE_THROWS_AS(from_graph6(""), ParseError);
    REQUIRE_THROWS_AS(from_graph6("B"), ParseError);     // truncated bit section
    REQUIRE_THROWS_AS(from_graph6("Bg "), ParseError);   // stray byte
    REQUIRE_THROWS_AS(from_graph6("B\x01"), ParseError); // byte out of range
}

TEST_CASE("dot export", "[io]") {
    std::ostringstream os;
    auto labels = std::vector<std::string>{"a", "b"};
    write_dot(os, make_graph(2, {{0, 1}}), &labels);
    std::string s = os.str();
    REQUIRE(s.find("graph g {") == 0);
    REQUIRE(s.find("0 -- 1;") != std::string::npos);
    REQUIRE(s.find("label=\"a\"") != std::string::npos);
}

TEST_CASE("sidecar json", "[io]") {
    std::vector<int> img = {1, 0, 2};
    std::vector<std::string> labels = {"0", "1", "2"};
    auto j = sidecar_json(3, &img, &labels);
    REQUIRE(j["n"] == 3);
    REQUIRE(j["perm_image"] == nlohmann::json({1, 0, 2}));
    REQUIRE(j["labels"].size() == 3);
}
