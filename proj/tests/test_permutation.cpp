#include <catch2/catch_amalgamated.hpp>

#include "prismdom/permutation.hpp"
#include "prismdom/universe.hpp"

using namespace prismdom;

TEST_CASE("parse_permutation examples", "[permutation]") {
    REQUIRE(parse_permutation(7, "(1 3)(4 6)").image() == std::vector<int>{0, 3, 2, 1, 6, 5, 4});
    REQUIRE(parse_permutation(5, "") == Permutation::identity(5));
    REQUIRE(parse_permutation(6, "(1 4)(2 3)").image() == std::vector<int>{0, 4, 3, 2, 1, 5});
    REQUIRE(parse_permutation(4, "(0 1 2)").image() == std::vector<int>{1, 2, 0, 3});
    REQUIRE(parse_permutation(4, "(0,1)(2,3)").image() == std::vector<int>{1, 0, 3, 2});  // commas tolerated
    REQUIRE(parse_permutation(3, "()") == Permutation::identity(3));
}

TEST_CASE("parse_permutation rejects bad input", "[permutation]") {
    REQUIRE_THROWS_AS(parse_permutation(7, "(1 3)(3 6)"), std::invalid_argument);  // overlapping cycles
    REQUIRE_THROWS_AS(parse_permutation(7, "(1 1)"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_permutation(3, "(0 5)"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_permutation(3, "(0 1"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_permutation(3, "0 1"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_permutation(3, "(a b)"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_permutation(3, "((0,1) 2)"), std::invalid_argument);  // tuple without a label map
}

TEST_CASE("parse_permutation with label map", "[permutation]") {
    std::map<std::string, int> ids = {{"2", 0}, {"6", 1}, {"(5,1)", 2}, {"(3,1)", 3}};
    Permutation p = parse_permutation(4, "(2 6 (5,1) (3,1))", ids);
    REQUIRE(p(0) == 1);
    REQUIRE(p(1) == 2);
    REQUIRE(p(2) == 3);
    REQUIRE(p(3) == 0);
    // internal whitespace in tuple labels is normalized away
    REQUIRE(parse_permutation(4, "(2 6 (5, 1) (3 ,1))", ids) == p);
    REQUIRE_THROWS_AS(parse_permutation(4, "(2 9)", ids), std::invalid_argument);
}

TEST_CASE("inverse", "[permutation]") {
    Permutation invol = parse_permutation(7, "(1 3)(4 6)");
    REQUIRE(invol.inverse() == invol);
    REQUIRE(parse_permutation(4, "(1 2 3)").inverse() == parse_permutation(4, "(1 3 2)"));

    Rng rng(5150);
    for (int iter = 0; iter < 50; ++iter) {
        Permutation p = random_permutation(rng, 9);
        REQUIRE(p.inverse().inverse() == p);
        REQUIRE(p.then(p.inverse()) == Permutation::identity(9));
        REQUIRE(p.inverse().then(p) == Permutation::identity(9));
    }
}

TEST_CASE("bijection validation", "[permutation]") {
    REQUIRE_THROWS_AS(Permutation({0, 0, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("cycle string round trip", "[permutation]") {
    REQUIRE(Permutation::identity(4).to_cycle_string() == "()");
    REQUIRE(parse_permutation(7, "(1 3)(4 6)").to_cycle_string() == "(1 3)(4 6)");
    Rng rng(31337);
    for (int iter = 0; iter < 50; ++iter) {
        Permutation p = random_permutation(rng, 1 + int(rng.below(10)));
        REQUIRE(parse_permutation(p.n(), p.to_cycle_string()) == p);
    }
    std::vector<std::string> labels = {"a", "b", "c"};
    REQUIRE(parse_permutation(3, "(0 2)").to_cycle_string(labels) == "(a c)");
}

TEST_CASE("apply to sets", "[permutation]") {
    Permutation p = parse_permutation(5, "(0 1 2)");
    REQUIRE(p.apply(VertexSet::of(5, {0, 2, 4})) == VertexSet::of(5, {1, 0, 4}));
}
