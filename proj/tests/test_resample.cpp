#include <catch2/catch_amalgamated.hpp>

#include "coversplit/resample.hpp"
#include "support/generators.hpp"

using namespace coversplit;
using namespace coversplit::testsupport;

TEST_CASE("resampling splits a two-edge path hypergraph") {
    CellHypergraph h;
    h.n_disks = 3;
    h.m_target = 2;
    h.edges = {{{0, 1}, {Rational(0), Rational(0)}}, {{1, 2}, {Rational(1), Rational(0)}}};
    auto res = resample_split(h, 2, 1);
    REQUIRE(res.success);
    CHECK(verify_split(h, res.colors, 2).valid);
}

TEST_CASE("an edge smaller than k fails immediately") {
    CellHypergraph h;
    h.n_disks = 1;
    h.edges = {{{0}, {Rational(0), Rational(0)}}};
    auto res = resample_split(h, 2, 99);
    CHECK_FALSE(res.success);
    CHECK(res.rounds == 0);
    CHECK(res.stuck_edges == std::vector<int>{0});
}

TEST_CASE("identical seeds reproduce colors and round counts") {
    auto inst = cluster_covering_instance(0xdead);
    auto [h, rep] = build_cell_hypergraph(inst);
    REQUIRE(rep.valid);
    auto a = resample_split(h, 2, 7);
    auto b = resample_split(h, 2, 7);
    REQUIRE(a.success);
    CHECK(a.colors == b.colors);
    CHECK(a.rounds == b.rounds);
    auto c = resample_split(h, 2, 8);
    REQUIRE(c.success);  // different seed still succeeds in this regime
}

TEST_CASE("cluster coverings sit inside the local-lemma regime and split") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto inst = cluster_covering_instance(seed * 1013);
        auto [h, rep] = build_cell_hypergraph(inst);
        REQUIRE(rep.valid);
        REQUIRE(rep.min_multiplicity >= 10);

        auto degs = edge_intersection_degrees(h);
        int max_deg = 0;
        for (int d : degs) max_deg = std::max(max_deg, d);
        // two-color local-lemma bound at m = 10
        CHECK(Rational(max_deg) <= lll_degree_threshold(2, 10));

        auto res = resample_split(h, 2, seed);
        REQUIRE(res.success);
        CHECK(res.rounds <= 1'000'000);
        CHECK(verify_split(h, res.colors, 2).valid);
    }
}

TEST_CASE("splitting into three classes when edges are deep enough") {
    auto inst = cluster_covering_instance(0x3c0);
    auto [h, rep] = build_cell_hypergraph(inst);
    REQUIRE(rep.valid);
    auto res = resample_split(h, 3, 5);
    REQUIRE(res.success);
    CHECK(verify_split(h, res.colors, 3).valid);
}

TEST_CASE("the resampling loop genuinely iterates on tight instances") {
    // size-2 edges violate often; scan seeds for one that needs work and
    // confirm the loop fixes it
    CellHypergraph h;
    h.n_disks = 6;
    h.edges = {{{0, 1}, {Rational(0), Rational(0)}}, {{1, 2}, {Rational(1), Rational(0)}},
               {{2, 3}, {Rational(2), Rational(0)}}, {{3, 4}, {Rational(3), Rational(0)}},
               {{4, 5}, {Rational(4), Rational(0)}}};
    bool saw_rounds = false;
    for (std::uint64_t seed = 1; seed <= 32; ++seed) {
        auto res = resample_split(h, 2, seed);
        REQUIRE(res.success);
        CHECK(verify_split(h, res.colors, 2).valid);
        if (res.rounds > 0) saw_rounds = true;
    }
    CHECK(saw_rounds);
}
