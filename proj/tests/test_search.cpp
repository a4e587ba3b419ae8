#include <catch2/catch_amalgamated.hpp>

#include "coversplit/chain_search.hpp"

using namespace coversplit;

TEST_CASE("n = 3 finds nothing: the single triple is colorable") {
    auto res = search_unsplittable_chain(3, 3, 13, 20'000, 0, 42);
    CHECK_FALSE(res.found.has_value());
    CHECK(res.budget_exhausted);
}

TEST_CASE("certifier rejects a special chain") {
    auto c = make_shift_chain(6, 3, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}});
    auto cert = certify_unsplittable(c);
    CHECK(cert.is_chain);
    CHECK_FALSE(cert.non_special);  // special, hence colorable
    CHECK_FALSE(cert.non_colorable);
    CHECK_FALSE(cert.certified());
    REQUIRE(cert.coloring.has_value());
    CHECK(validate_chain_coloring(c, *cert.coloring).valid);
}

TEST_CASE("certifier rejects a colorable non-special chain") {
    ShiftChain c;
    c.n = 6;
    c.m = 3;
    c.edges = {{1, 3, 5}, {2, 3, 6}};
    auto cert = certify_unsplittable(c);
    CHECK(cert.is_chain);
    CHECK(cert.non_special);
    CHECK_FALSE(cert.non_colorable);
    CHECK_FALSE(cert.certified());
}

TEST_CASE("certifier rejects a malformed candidate") {
    ShiftChain c;
    c.n = 4;
    c.m = 3;
    c.edges = {{2, 3, 4}, {1, 2, 3}};  // precedence violated
    auto cert = certify_unsplittable(c);
    CHECK_FALSE(cert.is_chain);
    CHECK_FALSE(cert.certified());
}

TEST_CASE("search parameter guards") {
    CHECK_THROWS_AS(search_unsplittable_chain(9, 4, 13, 100, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(search_unsplittable_chain(13, 3, 13, 100, 0, 1), std::invalid_argument);
}

TEST_CASE("determinism: identical seeds explore identically") {
    auto a = search_unsplittable_chain(6, 3, 8, 30'000, 0, 7);
    auto b = search_unsplittable_chain(6, 3, 8, 30'000, 0, 7);
    CHECK(a.nodes == b.nodes);
    CHECK(a.found.has_value() == b.found.has_value());
    if (a.found && b.found) CHECK(a.found->edges == b.found->edges);
}

TEST_CASE("a frozen 13-triple witness on 9 vertices certifies") {
    // discovered by this searcher; every 2-coloring of [9] leaves one of the
    // thirteen triples monochromatic
    auto c = make_shift_chain(9, 3,
                              {{1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5},
                               {3, 4, 6}, {3, 5, 7}, {4, 6, 7}, {5, 6, 7}, {5, 6, 8},
                               {5, 6, 9}, {6, 7, 9}, {7, 8, 9}});
    auto cert = certify_unsplittable(c);
    CHECK(cert.is_chain);
    CHECK(cert.non_special);
    CHECK(cert.non_colorable);
    CHECK(cert.certified());
    CHECK_FALSE(cert.coloring.has_value());
}

TEST_CASE("the search rediscovers a certified witness deterministically") {
    auto res = search_unsplittable_chain(9, 3, 13, 100'000, 0, 1);
    REQUIRE(res.found.has_value());
    CHECK(res.found->edges.size() <= 13);
    CHECK(res.found->n == 9);
    CHECK(certify_unsplittable(*res.found).certified());
    auto res2 = search_unsplittable_chain(9, 3, 13, 100'000, 0, 1);
    REQUIRE(res2.found.has_value());
    CHECK(res.found->edges == res2.found->edges);
    CHECK(res.nodes == res2.nodes);
}
