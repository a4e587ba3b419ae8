#include <catch2/catch_amalgamated.hpp>

#include "coversplit/chain_color.hpp"
#include "coversplit/rng.hpp"
#include "coversplit/sweep.hpp"

#include <chrono>

using namespace coversplit;

namespace {

std::vector<RationalPoint> random_integer_points(int n, Rng& rng) {
    std::vector<RationalPoint> pts;
    std::vector<long long> xs;
    while ((int)xs.size() < n) {
        long long x = static_cast<long long>(rng.below(8 * (std::uint64_t)n));
        bool dup = false;
        for (long long seen : xs)
            if (seen == x) dup = true;
        if (!dup) xs.push_back(x);
    }
    for (int i = 0; i < n; ++i)
        pts.push_back({Rational(xs[i]), Rational((long long)rng.below(8 * (std::uint64_t)n))});
    return pts;
}

ShiftChain window_chain(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 1; i + 2 <= n; ++i) edges.push_back({i, i + 1, i + 2});
    return make_shift_chain(n, 3, std::move(edges));
}

// blocks {j,j+1,j+3},{j,j+1,j+4} every 5 vertices: repeated middles feed the
// digraph while the chain stays special
ShiftChain block_chain(int blocks) {
    std::vector<std::vector<int>> edges;
    for (int b = 0; b < blocks; ++b) {
        const int j = 5 * b + 1;
        edges.push_back({j, j + 1, j + 3});
        edges.push_back({j, j + 1, j + 4});
    }
    return make_shift_chain(5 * blocks, 3, std::move(edges));
}

}  // namespace

TEST_CASE("digraph of the three-triple example has the single edge 2 -> 1") {
    auto c = make_shift_chain(4, 3, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}});
    auto d = build_digraph(c);
    CHECK(d.out_of(2) == 1);
    CHECK(d.out_of(1) == 0);
    CHECK(d.out_of(3) == 0);
    CHECK(d.out_of(4) == 0);
    CHECK(d.edges().size() == 1);
}

TEST_CASE("digraph of a single triple is empty") {
    auto d = build_digraph(make_shift_chain(3, 3, {{1, 2, 3}}));
    CHECK(d.edges().empty());
}

TEST_CASE("distinct middles produce no digraph edges") {
    auto d = build_digraph(make_shift_chain(4, 3, {{1, 2, 4}, {1, 3, 4}}));
    CHECK(d.edges().empty());
}

TEST_CASE("repeated middle sharing the maximum points upward") {
    auto d = build_digraph(make_shift_chain(4, 3, {{1, 3, 4}, {2, 3, 4}}));
    CHECK(d.out_of(3) == 4);
}

TEST_CASE("digraph construction rejects non-special structure with witnesses") {
    ShiftChain c;
    c.n = 6;
    c.m = 3;
    c.edges = {{1, 3, 5}, {2, 3, 6}};  // valid chain, not special
    REQUIRE(is_shift_chain(c).ok);
    CHECK_THROWS_AS(build_digraph(c), chain_structure_error);
}

TEST_CASE("quasi-tree decomposition of a single edge") {
    ShiftDigraph d;
    d.n = 4;
    d.out = {0, 0, 1, 0, 0};  // 2 -> 1
    auto dec = decompose_quasi_trees(d);
    REQUIRE(dec.components.size() == 3);
    CHECK(dec.components[0].vertices == std::vector<int>{1, 2});
    CHECK(dec.components[0].root == 1);
    CHECK_FALSE(dec.components[0].doubled_edge.has_value());
    CHECK(dec.components[1].vertices == std::vector<int>{3});
    CHECK(dec.components[2].vertices == std::vector<int>{4});
}

TEST_CASE("doubled edge forms a quasi-tree rooted at the 2-cycle") {
    ShiftDigraph d;
    d.n = 3;
    d.out = {0, 2, 1, 0};  // 1 -> 2 and 2 -> 1
    auto dec = decompose_quasi_trees(d);
    REQUIRE(dec.components.size() == 2);
    REQUIRE(dec.components[0].doubled_edge.has_value());
    CHECK(*dec.components[0].doubled_edge == std::make_pair(1, 2));
}

TEST_CASE("directed cycles longer than two are rejected with a witness") {
    ShiftDigraph d;
    d.n = 3;
    d.out = {0, 2, 3, 1};  // 1 -> 2 -> 3 -> 1
    CHECK_THROWS_AS(decompose_quasi_trees(d), chain_structure_error);
}

TEST_CASE("coloring the three-triple example gives the documented coloring") {
    auto c = make_shift_chain(4, 3, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}});
    auto col = color_special_chain(c);
    CHECK(validate_chain_coloring(c, col).valid);
    // deterministic pipeline: BFS roots red, increasing pass, red default
    CHECK(col.at(1) == Color::Red);
    CHECK(col.at(2) == Color::Blue);
    CHECK(col.at(3) == Color::Red);
    CHECK(col.at(4) == Color::Red);
}

TEST_CASE("coloring a single triple validates") {
    auto c = make_shift_chain(3, 3, {{1, 2, 3}});
    auto col = color_special_chain(c);
    CHECK(validate_chain_coloring(c, col).valid);
}

TEST_CASE("colored window and block chains validate") {
    auto w = window_chain(50);
    REQUIRE(is_special(w).special);
    CHECK(validate_chain_coloring(w, color_special_chain(w)).valid);

    auto b = block_chain(6);
    REQUIRE(is_special(b).special);
    auto d = build_digraph(b);
    CHECK((int)d.edges().size() == 6);  // one repeated middle per block
    CHECK(validate_chain_coloring(b, color_special_chain(b)).valid);
}

TEST_CASE("generated chains color correctly and agree with brute force") {
    Rng rng(0x5eed0303);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 6 + (int)rng.below(15);  // n <= 20: oracle applies
        auto pts = random_integer_points(n, rng);
        SweepGenerator g(pts, ParabolaShape{Rational(1)}, 3);
        auto c = chain_from_points(g);
        REQUIRE(is_special(c).special);
        auto col = color_special_chain(c);
        CHECK(validate_chain_coloring(c, col).valid);
        auto oracle = brute_force_color(c);
        REQUIRE(oracle.has_value());  // exact agreement on colorability
    }
    for (int rep = 0; rep < 4; ++rep) {
        const int n = 200 + (int)rng.below(1800);
        auto pts = random_integer_points(n, rng);
        SweepGenerator g(pts, ParabolaShape{Rational(1)}, 3);
        auto c = chain_from_points(g);
        REQUIRE(is_special(c).special);
        CHECK(validate_chain_coloring(c, color_special_chain(c, false)).valid);
    }
}

TEST_CASE("wider chains color through the leading-triple reduction") {
    Rng rng(0x5eed0304);
    for (int rep = 0; rep < 6; ++rep) {
        const int n = 8 + (int)rng.below(20);
        auto pts = random_integer_points(n, rng);
        SweepGenerator g(pts, ParabolaShape{Rational(1)}, 4);
        auto c = chain_from_points(g);
        REQUIRE(is_special(c).special);
        auto reduced = reduce_to_triples(c);
        CHECK(is_special(reduced).special);  // truncation preserves the special condition
        auto col = color_chain(c);
        CHECK(validate_chain_coloring(c, col).valid);
    }
}

TEST_CASE("coloring wall time scales far below quadratically") {
    auto time_color = [](const ShiftChain& c) {
        double best = 1e100;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            auto col = color_special_chain(c, /*verify_special=*/false);
            const auto t1 = std::chrono::steady_clock::now();
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
            REQUIRE(col.n() == c.n);
        }
        return best;
    };
    auto small = block_chain(8000);    // n = 40000
    auto large = block_chain(32000);   // n = 160000, 4x
    const double ts = time_color(small);
    const double tl = time_color(large);
    INFO("t(40k)=" << ts << "s t(160k)=" << tl << "s ratio=" << tl / ts);
    // a quadratic trend would give ratio ~16; allow generous noise around 4
    CHECK(tl < ts * 12);
}
