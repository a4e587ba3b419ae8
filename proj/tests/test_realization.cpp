#include <catch2/catch_amalgamated.hpp>

#include "coversplit/realization.hpp"

using namespace coversplit;

TEST_CASE("open-disk membership is strict and exact") {
    UnitDisk d{{Rational(0), Rational(0)}, Color::Red, 0};
    CHECK(contains(d, {Rational(0), Rational(0)}));
    CHECK_FALSE(contains(d, {Rational(1), Rational(0)}));  // boundary excluded
    // Pythagorean boundary point: squared distance exactly one
    CHECK_FALSE(contains(d, {Rational(3, 5), Rational(4, 5)}));
    CHECK(closure_contains(d, {Rational(3, 5), Rational(4, 5)}));
}

TEST_CASE("realization of H(1,2): singleton red disks and one blue disk") {
    auto r = build_realization(1, 2, Rational(1, 100));
    REQUIRE(r.points.size() == 2);
    REQUIRE(r.disks.size() == 3);
    int red_disks = 0, blue_disks = 0;
    for (const auto& d : r.disks) {
        int inside = 0;
        for (const auto& p : r.points) inside += contains(d, p) ? 1 : 0;
        if (d.klass == Color::Red) {
            ++red_disks;
            CHECK(inside == 1);
        } else {
            ++blue_disks;
            CHECK(inside == 2);
        }
    }
    CHECK(red_disks == 2);
    CHECK(blue_disks == 1);
}

TEST_CASE("realization of H(2,2) reproduces its incidence matrix") {
    auto r = build_realization(2, 2, Rational(1, 100));
    CHECK(r.points.size() == 5);
    CHECK(r.disks.size() == 6);
    auto rep = verify_realization(r);
    CHECK(rep.uniform_counts);
    CHECK(rep.incidence_fidelity);
    CHECK(rep.all_ok());
}

TEST_CASE("realization of H(3,3) passes full verification") {
    auto r = build_realization(3, 3, Rational(1, 100));
    CHECK(r.points.size() == 19);
    CHECK(r.disks.size() == 20);
    CHECK(verify_realization(r).all_ok());
}

TEST_CASE("all six properties hold exactly for k,l <= 4") {
    for (int k = 1; k <= 4; ++k) {
        for (int l = 1; l <= 4; ++l) {
            auto r = build_realization(k, l, Rational(1, 100));
            auto rep = verify_realization(r);
            INFO("k=" << k << " l=" << l);
            CHECK(rep.all_ok());
            CHECK(rep.no_boundary_incidence);
        }
    }
}

TEST_CASE("a displaced blue disk is caught by the center-box check") {
    auto r = build_realization(2, 2, Rational(1, 100));
    for (auto& d : r.disks) {
        if (d.klass == Color::Blue) {
            d.center.y += 2;  // push one blue disk up into red territory
            break;
        }
    }
    auto rep = verify_realization(r);
    CHECK_FALSE(rep.blue_centers_in_box);
    REQUIRE_FALSE(rep.box_witnesses_blue.empty());
}

TEST_CASE("verification passes at (4,3) and at other eps scales") {
    CHECK(verify_realization(build_realization(4, 3, Rational(1, 100))).all_ok());
    CHECK(verify_realization(build_realization(2, 3, Rational(9, 100))).all_ok());
    CHECK(verify_realization(build_realization(2, 2, Rational(1, 1000))).all_ok());
}

TEST_CASE("exposedness of hand-built families") {
    auto mk = [](long long xn, long long xd, long long yn, long long yd, int id) {
        return UnitDisk{{Rational(xn, xd), Rational(yn, yd)}, Color::Red, id};
    };
    CHECK(is_exposed({mk(0, 1, 0, 1, 0), mk(3, 1, 0, 1, 1)}));
    // topmost point (0,1) of the first lies inside the closure of the second
    CHECK_FALSE(is_exposed({mk(0, 1, 0, 1, 0), mk(0, 1, 1, 2, 1)}));
    auto r = build_realization(3, 3, Rational(1, 100));
    CHECK(is_exposed(r.disks));
}

TEST_CASE("translation equivariance: shifted realization verifies against shifted boxes") {
    auto r = build_realization(2, 3, Rational(1, 100));
    auto t = translate(r, Rational(-5, 3), Rational(11, 7));
    CHECK(verify_realization(t, {Rational(-5, 3), Rational(11, 7)}).all_ok());
    // against the original boxes the shifted copy must fail
    CHECK_FALSE(verify_realization(t).all_ok());
}

TEST_CASE("realization guards") {
    CHECK_THROWS_AS(build_realization(2, 2, Rational(1, 10)), std::invalid_argument);
    CHECK_THROWS_AS(build_realization(2, 2, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_realization(6, 5, Rational(1, 100)), capacity_error);
}
