#pragma once

// Exact rational arithmetic and shared base utilities. Every geometric
// predicate in this library is evaluated over these rationals with no
// rounding anywhere; the epsilon schedule of the disk construction shrinks
// far below double precision, so exactness is load-bearing, not cosmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coversplit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a size guard would be exceeded (hypergraph materialization,
// exhaustive coloring scans, construction depth).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

// Parses "N/D" or "N" with optional sign; used by CLI flags and JSON fields.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

// Canonical "N/D" form (denominator always present, always positive).
inline std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt floor_rat(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline BigInt ceil_rat(const Rational& r) { return -floor_rat(-r); }

// Fixed-point decimal rendering, truncated toward zero. Deterministic, so
// SVG and report output is byte-stable.
inline std::string rational_to_decimal(const Rational& r, int digits = 6) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt num = numerator(r) * scale;
    BigInt q = num / denominator(r);  // truncates toward zero
    bool neg = q < 0;
    if (neg) q = -q;
    std::string body = q.str();
    if ((int)body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out = body.substr(0, body.size() - digits);
    std::string frac = body.substr(body.size() - digits);
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    if (frac != "0") out += "." + frac;
    return neg && (out != "0") ? "-" + out : out;
}

// Largest integer t >= 0 with t^e <= v (v >= 0). Binary search on big ints.
inline BigInt integer_root_floor(const BigInt& v, unsigned e) {
    if (v < 0) throw std::domain_error("integer_root_floor of negative value");
    if (e == 0) throw std::domain_error("zeroth root");
    if (v <= 1) return v;
    BigInt lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, e) <= v) hi <<= 1;
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, e) <= v) lo = mid;
        else hi = mid;
    }
    return lo;
}

}  // namespace coversplit
