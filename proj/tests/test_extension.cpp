#include <catch2/catch_amalgamated.hpp>

#include "coversplit/coloring.hpp"
#include "coversplit/extension.hpp"
#include "coversplit/svg.hpp"

using namespace coversplit;

TEST_CASE("grid extension of a single disk keeps only points outside it") {
    // hand-built realization: H(1,1)'s red disk replaced by one at the origin
    Realization r;
    r.hypergraph = build_hypergraph(1, 1);
    r.eps = Rational(1, 100);
    r.points = {{Rational(0), Rational(0)}};
    r.disks = {{{Rational(0), Rational(0)}, Color::Red, 0},
               {{Rational(0), Rational(0)}, Color::Blue, 1}};
    auto e = extend_with_grid(r, 1, Rational(1, 2), Rational(2));
    for (const auto& p : e.extra_points) {
        const Rational sq = p.x * p.x + p.y * p.y;
        CHECK(sq >= 1);
    }
    CHECK_FALSE(e.extra_points.empty());
}

TEST_CASE("extension of the (2,2) realization avoids every member disk") {
    auto r = build_realization(2, 2, Rational(1, 100));
    auto e = extend_with_grid(r, 2, Rational(1, 8));
    REQUIRE_FALSE(e.extra_points.empty());
    for (const auto& p : e.extra_points)
        for (const auto& d : r.disks) CHECK(squared_distance(d.center, p) >= 1);
}

TEST_CASE("extension preserves the forced-monochromatic-disk property") {
    // extras lie in no member disk, so the incidence structure is unchanged;
    // the realized hypergraph still has no valid coloring
    auto r = build_realization(2, 2, Rational(1, 100));
    auto e = extend_with_grid(r, 2);
    auto res = is_two_colorable_exhaustive(e.base.hypergraph);
    CHECK(res.status == Colorability::NotColorable);
}

TEST_CASE("empty extension leaves far probes uncovered") {
    auto r = build_realization(1, 1, Rational(1, 100));
    ExtendedPointSet e;
    e.base = r;
    e.grid_step = Rational(1, 8);
    e.bounding_box = disk_bounding_box(r);
    const int far_count = count_points_in_disk(e, {Rational(50), Rational(50)});
    CHECK(far_count == 0);
}

TEST_CASE("probe centered on a member disk center sees its incident points") {
    auto r = build_realization(2, 2, Rational(1, 100));
    auto e = extend_with_grid(r, 2);
    for (const auto& d : r.disks) {
        const int c = count_points_in_disk(e, d.center);
        CHECK(c >= 2);  // property 1 gives k (= l = 2) base points at least
    }
}

TEST_CASE("extended (2,2) set covers every probed unit disk at least twice") {
    auto r = build_realization(2, 2, Rational(1, 100));
    auto e = extend_with_grid(r, 2, Rational(1, 8));
    auto cov = min_disk_coverage(e, 2, Rational(1, 16));
    CHECK(cov.min_count >= 2);
    CHECK(cov.probes > 1000);
}

TEST_CASE("escape points: two far disks") {
    Realization r;
    r.hypergraph = build_hypergraph(1, 1);
    r.eps = Rational(1, 100);
    r.points = {{Rational(0), Rational(0)}};
    r.disks = {{{Rational(0), Rational(0)}, Color::Red, 0},
               {{Rational(5), Rational(0)}, Color::Blue, 1}};
    auto rep = check_no_foreign_disk_inside_union(r, {{Rational(1, 2), Rational(0)}});
    REQUIRE(rep.per_probe.size() == 1);
    CHECK(rep.per_probe[0].status == EscapeStatus::EscapeFound);
    CHECK(rep.all_escaped);
    // witness must certify: inside the probe, outside both members
    const UnitDisk probe{{Rational(1, 2), Rational(0)}, Color::Red, -1};
    const auto w = rep.per_probe[0].witness;
    CHECK(contains(probe, w));
    for (const auto& d : r.disks) CHECK_FALSE(contains(d, w));
}

TEST_CASE("escape points near a member: nudged member center") {
    auto r = build_realization(2, 2, Rational(1, 100));
    const Rational eps3 = Rational(1, 100) * Rational(1, 100) * Rational(1, 100);
    std::vector<RationalPoint> probes;
    for (const auto& d : r.disks) probes.push_back({d.center.x, d.center.y + eps3});
    auto rep = check_no_foreign_disk_inside_union(r, probes);
    CHECK(rep.family_exposed);
    CHECK(rep.all_escaped);
    for (const auto& pr : rep.per_probe) CHECK(pr.status == EscapeStatus::EscapeFound);
}

TEST_CASE("member centers are skipped with a note") {
    auto r = build_realization(1, 2, Rational(1, 100));
    auto rep = check_no_foreign_disk_inside_union(r, {r.disks[0].center});
    REQUIRE(rep.per_probe.size() == 1);
    CHECK(rep.per_probe[0].status == EscapeStatus::SkippedMemberCenter);
}

TEST_CASE("escape found for every probe on a 1/16 grid over the (3,3) construction") {
    auto r = build_realization(3, 3, Rational(1, 100));
    const Rect box = disk_bounding_box(r);
    std::vector<RationalPoint> probes;
    const Rational pitch(1, 16);
    for (long long i = detail::ceil_ll(box.x0 / pitch); i <= detail::floor_ll(box.x1 / pitch);
         ++i)
        for (long long j = detail::ceil_ll(box.y0 / pitch);
             j <= detail::floor_ll(box.y1 / pitch); ++j)
            probes.push_back({pitch * i, pitch * j});
    auto rep = check_no_foreign_disk_inside_union(r, probes);
    CHECK(rep.family_exposed);
    CHECK(rep.all_escaped);
    int found = 0, skipped = 0;
    for (const auto& pr : rep.per_probe) {
        if (pr.status == EscapeStatus::EscapeFound) ++found;
        if (pr.status == EscapeStatus::SkippedMemberCenter) ++skipped;
    }
    CHECK(skipped == 0);  // grid-aligned probes never coincide with member centers
    CHECK(found == (int)probes.size());
}

TEST_CASE("svg export is deterministic and carries the expected elements") {
    auto r22 = build_realization(2, 2, Rational(1, 100));
    const auto svg = svg_realization(r22, Rational(200));
    CHECK(svg == svg_realization(r22, Rational(200)));

    auto count = [&](const std::string& hay, const std::string& needle) {
        int n = 0;
        for (std::size_t pos = hay.find(needle); pos != std::string::npos;
             pos = hay.find(needle, pos + 1))
            ++n;
        return n;
    };
    CHECK(count(svg, "class=\"disk\"") == 6);
    CHECK(count(svg, "class=\"pt\"") == 5);
    CHECK(count(svg, "<rect") == 3);

    auto r13 = build_realization(1, 3, Rational(1, 100));
    const auto svg13 = svg_realization(r13, Rational(200));
    CHECK(count(svg13, "class=\"disk\"") == 4);
    CHECK(count(svg13, "class=\"pt\"") == 3);

    auto e = extend_with_grid(r13, 2, Rational(1, 4));
    const auto svge = svg_extended(e, Rational(100));
    CHECK(count(svge, "class=\"extra\"") == (int)e.extra_points.size());
    CHECK(count(svge, "class=\"disk\"") == 4);
}
