#pragma once

// Exact threshold formulas for splitting bounded-multiplicity coverings:
// the local-lemma degree bound, the unit-ball multiplicity thresholds with
// dyadic exponents, and the planar homothet bound. Everything is returned
// as exact rationals or integer floors; no value is ever rounded through
// floating point.

#include "coversplit/rational.hpp"

#include <optional>

namespace coversplit {

/// Local-lemma degree bound: a hypergraph with all edges of size >= m where
/// every edge intersects at most k^(m-1)/(4(k-1)^m) other edges is
/// k-colorable with every color on every edge. Exact rational.
inline Rational lll_degree_threshold(int k, int m) {
    if (k < 2 || m < 2) throw std::domain_error("lll_degree_threshold: need k >= 2, m >= 2");
    const BigInt num = boost::multiprecision::pow(BigInt(k), m - 1);
    const BigInt den = 4 * boost::multiprecision::pow(BigInt(k - 1), m);
    return Rational(num, den);
}

/// Largest integer t >= 0 with t^e <= r.
inline BigInt rational_root_floor(const Rational& r, unsigned e) {
    if (r < 0) throw std::domain_error("rational_root_floor: negative radicand");
    const BigInt num = numerator(r), den = denominator(r);
    BigInt lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, e) * den <= num) hi <<= 1;
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, e) * den <= num) lo = mid;
        else hi = mid;
    }
    return lo;
}

/// floor(2^(p/q)) for a rational exponent; values below 1 floor to 0.
inline BigInt pow2_floor(const Rational& exponent) {
    const BigInt p = numerator(exponent);
    const unsigned q = denominator(exponent).convert_to<unsigned>();
    if (p < 0) return 0;
    const BigInt power = BigInt(1) << p.convert_to<unsigned>();
    return integer_root_floor(power, q);
}

struct BallThreshold {
    Rational exponent;  // the bound is 2^exponent
    BigInt floor_value;
};

/// Unit-ball 2-coloring threshold c_d * 2^(m/d) with c_d = 2^(-2d - 3/d):
/// an m-fold covering of d-space by unit balls splits in two when no point
/// is covered more than this many times. Returned as the exact dyadic
/// exponent m/d - 2d - 3/d together with its integer floor.
inline BallThreshold ball_threshold(int d, int m) {
    if (d < 2) throw std::domain_error("ball_threshold: need d >= 2");
    if (m < 1) throw std::domain_error("ball_threshold: need m >= 1");
    BallThreshold t;
    t.exponent = Rational(m, d) - 2 * d - Rational(3, d);
    t.floor_value = pow2_floor(t.exponent);
    return t;
}

/// k-coloring variant for unit balls: c_{k,d} * (1 + 1/(k-1))^(m/d) with
/// c_{k,d} = k^(-1/d) * 4^(-d - 1/d). The d-th power of the bound is the
/// exact rational k^(m-1) / ((k-1)^m * 4^(d^2+1)), so the floor is an exact
/// integer root.
inline BigInt ball_threshold_multicolor(int k, int d, int m) {
    if (k < 2 || d < 2 || m < 1)
        throw std::domain_error("ball_threshold_multicolor: need k >= 2, d >= 2, m >= 1");
    const BigInt num = boost::multiprecision::pow(BigInt(k), m - 1);
    const BigInt den = boost::multiprecision::pow(BigInt(k - 1), m) *
                       boost::multiprecision::pow(BigInt(4), d * d + 1);
    return rational_root_floor(Rational(num, den), static_cast<unsigned>(d));
}

struct HomothetThreshold {
    BigInt value;         // floor(2^((m-11)/2))
    bool vacuous = false; // bound below 1: no guarantee at this m
};

/// Planar homothet threshold: an m-fold covering by homothets of a convex
/// set splits in two when no point lies in more than 2^((m-11)/2) members.
inline HomothetThreshold homothet_threshold(int m) {
    HomothetThreshold t;
    if (m < 11) {
        t.vacuous = true;
        t.value = 0;
        return t;
    }
    t.value = integer_root_floor(BigInt(1) << (m - 11), 2);
    return t;
}

struct ThresholdTable {
    int d = 2, k = 2, m = 2;
    Rational diameter{2};      // D for unit balls
    Rational volume_ratio{1};  // v / Vol(unit ball); 1 for unit balls
    Rational lll_degree;
    Rational ball_exponent;
    BigInt ball_floor;
    BigInt multicolor_floor;
    std::optional<HomothetThreshold> homothet;  // planar case only
};

/// Bundles every derived bound for one (d, k, m) configuration.
inline ThresholdTable make_threshold_table(int d, int k, int m) {
    ThresholdTable t;
    t.d = d;
    t.k = k;
    t.m = m;
    t.lll_degree = lll_degree_threshold(k, std::max(2, m));
    const auto ball = ball_threshold(d, m);
    t.ball_exponent = ball.exponent;
    t.ball_floor = ball.floor_value;
    t.multicolor_floor = ball_threshold_multicolor(k, d, m);
    if (d == 2) t.homothet = homothet_threshold(m);
    return t;
}

}  // namespace coversplit
