#pragma once

// Arrangement cells of a family of open unit disks, one representative
// point per cell. The lowest point of any bounded face of a circle
// arrangement is a circle's bottommost point or an intersection of two
// circles, so candidates are taken near those features (plus the region
// corners and circle/region-edge crossings for faces clipped by the
// region). Intersection points can be irrational; each is approximated by
// a rational point far more precisely than the candidate offsets around
// it. Every feature contributes its exact location plus a whole ladder of
// shrinking offsets into the adjacent cells; each candidate's
// characteristic set is evaluated with the exact membership predicate
// (behind a conservative float filter), so whichever cell a candidate
// lands in, the pair it contributes is exact. Cells thinner than the
// finest ladder offset at every feature are the only ones that can
// escape, and the test suites recount against a dense exact lattice.

#include "coversplit/geometry.hpp"
#include "coversplit/thresholds.hpp"

#include <map>
#include <unordered_map>

namespace coversplit {

struct CoveringInstance {
    std::vector<UnitDisk> disks;
    Rect region;
    int m_target = 1;
};

struct CellEdge {
    std::vector<int> disk_ids;     // exactly the disks containing the representative
    RationalPoint representative;
};

struct CellHypergraph {
    int n_disks = 0;
    int m_target = 1;
    std::vector<CellEdge> edges;  // nonempty characteristic sets, pairwise distinct
};

struct MultiplicityReport {
    bool valid = false;          // every in-region representative hits >= m_target disks
    int min_multiplicity = 0;
    RationalPoint witness{Rational(0), Rational(0)};
};

namespace detail {

// sqrt approximation with |result^2 - value| small: scaled integer sqrt
inline Rational approx_sqrt(const Rational& value, int precision_bits) {
    if (value < 0) throw std::domain_error("approx_sqrt: negative");
    const BigInt scale = BigInt(1) << (2 * precision_bits);
    const BigInt scaled = (numerator(value) * scale) / denominator(value);
    return Rational(integer_root_floor(scaled, 2), BigInt(1) << precision_bits);
}

inline std::vector<int> signature(const std::vector<UnitDisk>& disks, const RationalPoint& p) {
    std::vector<int> ids;
    for (const auto& d : disks)
        if (contains(d, p)) ids.push_back(d.id);
    return ids;
}

constexpr double kCellFilterMargin = 1e-7;

// signature with a float fast path; exact predicate near the margin
inline std::vector<int> signature_filtered(const std::vector<UnitDisk>& disks,
                                           const std::vector<std::pair<double, double>>& approx,
                                           const RationalPoint& p, double px, double py) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        const double dx = px - approx[i].first, dy = py - approx[i].second;
        const double sq = dx * dx + dy * dy;
        bool inside;
        if (sq < 1.0 - kCellFilterMargin) inside = true;
        else if (sq > 1.0 + kCellFilterMargin) inside = false;
        else inside = contains(disks[i], p);
        if (inside) ids.push_back(disks[i].id);
    }
    return ids;
}

// Candidate points for every arrangement feature of the disk family;
// a non-null region adds the features induced by clipping to the rectangle.
inline std::vector<RationalPoint> cell_candidates(const std::vector<UnitDisk>& disks,
                                                  const Rect* region, int ladder_depth = 14) {
    std::vector<RationalPoint> cands;
    const int kPrecision = 64;

    // the feature itself plus a quadratically shrinking ladder of offsets
    auto add_ladder = [&](const RationalPoint& base, const Rational& dx, const Rational& dy) {
        cands.push_back(base);
        Rational eta(1, 4);
        for (int step = 0; step < ladder_depth; ++step, eta /= 4)
            cands.push_back({base.x + eta * dx, base.y + eta * dy});
    };

    // bottom (and top, for region-clipped faces) of every circle
    for (const auto& d : disks) {
        add_ladder(d.bottommost(), Rational(0), Rational(1));
        add_ladder(d.topmost(), Rational(0), Rational(-1));
    }

    // circle-circle intersections: four cells meet at each
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            const RationalPoint &c1 = disks[i].center, &c2 = disks[j].center;
            const Rational dx = c2.x - c1.x, dy = c2.y - c1.y;
            const Rational d2 = dx * dx + dy * dy;
            if (d2 == 0 || d2 >= 4) continue;  // concentric or disjoint circles
            // intersections = midpoint +- t * (-dy, dx), t = sqrt((4-d2)/(4 d2))
            const Rational t = approx_sqrt((4 - d2) / (4 * d2), kPrecision);
            const RationalPoint mid{(c1.x + c2.x) / 2, (c1.y + c2.y) / 2};
            for (int side : {-1, 1}) {
                const RationalPoint x_approx{mid.x - side * t * dy, mid.y + side * t * dx};
                for (int s1 : {-1, 1}) {
                    for (int s2 : {-1, 1}) {
                        const Rational ox =
                            Rational(s1) * (c1.x - x_approx.x) + Rational(s2) * (c2.x - x_approx.x);
                        const Rational oy =
                            Rational(s1) * (c1.y - x_approx.y) + Rational(s2) * (c2.y - x_approx.y);
                        add_ladder(x_approx, ox, oy);
                    }
                }
            }
        }
    }

    if (region) {
        // region corners, nudged inward
        add_ladder({region->x0, region->y0}, Rational(1), Rational(1));
        add_ladder({region->x1, region->y0}, Rational(-1), Rational(1));
        add_ladder({region->x0, region->y1}, Rational(1), Rational(-1));
        add_ladder({region->x1, region->y1}, Rational(-1), Rational(-1));
        // circle crossings with the region edge lines
        for (const auto& d : disks) {
            auto cross_horizontal = [&](const Rational& y0, int inward) {
                const Rational dy = y0 - d.center.y;
                const Rational h2 = 1 - dy * dy;
                if (h2 <= 0) return;
                const Rational h = approx_sqrt(h2, kPrecision);
                for (int side : {-1, 1}) {
                    const RationalPoint x_approx{d.center.x + side * h, y0};
                    for (int s : {-1, 1})
                        add_ladder(x_approx, Rational(s), Rational(inward));
                }
            };
            auto cross_vertical = [&](const Rational& x0, int inward) {
                const Rational dx = x0 - d.center.x;
                const Rational h2 = 1 - dx * dx;
                if (h2 <= 0) return;
                const Rational h = approx_sqrt(h2, kPrecision);
                for (int side : {-1, 1}) {
                    const RationalPoint x_approx{x0, d.center.y + side * h};
                    for (int s : {-1, 1})
                        add_ladder(x_approx, Rational(inward), Rational(s));
                }
            };
            cross_horizontal(region->y0, 1);
            cross_horizontal(region->y1, -1);
            cross_vertical(region->x0, 1);
            cross_vertical(region->x1, -1);
        }
    }
    return cands;
}

}  // namespace detail

/// Enumerates the arrangement cells meeting the region. Edges are the
/// nonempty characteristic sets; the multiplicity report covers every
/// in-region representative including uncovered ones.
inline std::pair<CellHypergraph, MultiplicityReport> build_cell_hypergraph(
    const CoveringInstance& inst, int ladder_depth = 14) {
    CellHypergraph h;
    h.n_disks = static_cast<int>(inst.disks.size());
    h.m_target = inst.m_target;
    MultiplicityReport rep;
    rep.min_multiplicity = INT32_MAX;

    auto cands = detail::cell_candidates(inst.disks, &inst.region, ladder_depth);
    std::vector<std::pair<double, double>> approx;
    for (const auto& d : inst.disks)
        approx.push_back({d.center.x.convert_to<double>(), d.center.y.convert_to<double>()});
    std::map<std::vector<int>, RationalPoint> by_signature;
    for (const auto& q : cands) {
        if (!inst.region.contains_closed(q)) continue;
        auto sig = detail::signature_filtered(inst.disks, approx, q, q.x.convert_to<double>(),
                                              q.y.convert_to<double>());
        const int mult = static_cast<int>(sig.size());
        if (mult < rep.min_multiplicity) {
            rep.min_multiplicity = mult;
            rep.witness = q;
        }
        by_signature.emplace(std::move(sig), q);
    }
    if (rep.min_multiplicity == INT32_MAX) rep.min_multiplicity = 0;
    rep.valid = rep.min_multiplicity >= inst.m_target;

    for (auto& [sig, point] : by_signature) {
        if (sig.empty()) continue;  // cells of the complement carry no edge
        h.edges.push_back({sig, point});
    }
    return {h, rep};
}

/// Maximum edge cardinality: the highest multiplicity any cell attains.
inline int max_multiplicity(const CellHypergraph& h) {
    int best = 0;
    for (const auto& e : h.edges) best = std::max(best, static_cast<int>(e.disk_ids.size()));
    return best;
}

/// For each edge, the number of other edges sharing at least one disk.
inline std::vector<int> edge_intersection_degrees(const CellHypergraph& h) {
    const std::size_t words = (static_cast<std::size_t>(h.n_disks) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(h.edges.size(),
                                                 std::vector<std::uint64_t>(words, 0));
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        for (int id : h.edges[e].disk_ids) bits[e][id / 64] |= std::uint64_t(1) << (id % 64);
    std::vector<int> deg(h.edges.size(), 0);
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
            bool hit = false;
            for (std::size_t w = 0; w < words && !hit; ++w) hit = (bits[i][w] & bits[j][w]) != 0;
            if (hit) {
                ++deg[i];
                ++deg[j];
            }
        }
    }
    return deg;
}

/// Number of distinct characteristic vectors the disks cut the whole plane
/// into, the all-outside vector included.
inline int dual_shatter_count(const std::vector<UnitDisk>& disks) {
    if (disks.empty()) throw std::invalid_argument("dual_shatter_count: no disks");
    auto cands = detail::cell_candidates(disks, nullptr);
    // one representative far outside everything
    Rational far_x = disks[0].center.x;
    for (const auto& d : disks) far_x = std::max(far_x, Rational(d.center.x));
    cands.push_back({far_x + 10, Rational(0)});

    std::vector<std::pair<double, double>> approx;
    for (const auto& d : disks)
        approx.push_back({d.center.x.convert_to<double>(), d.center.y.convert_to<double>()});
    std::map<std::vector<int>, int> seen;
    for (const auto& q : cands)
        seen.emplace(detail::signature_filtered(disks, approx, q, q.x.convert_to<double>(),
                                                q.y.convert_to<double>()),
                     1);
    return static_cast<int>(seen.size());
}

struct SplitVerification {
    bool valid = false;
    std::vector<std::pair<RationalPoint, int>> failures;  // witness point, missing class
};

/// Checks that every color class covers every cell representative of the
/// region: each edge must contain all k classes.
inline SplitVerification verify_split(const CellHypergraph& h, const std::vector<int>& colors,
                                      int k) {
    if (static_cast<int>(colors.size()) != h.n_disks)
        throw std::invalid_argument("verify_split: coloring not total on the disks");
    SplitVerification v;
    v.valid = true;
    for (const auto& e : h.edges) {
        std::vector<char> present(k, 0);
        for (int id : e.disk_ids) {
            const int c = colors.at(id);
            if (c < 0 || c >= k) throw std::invalid_argument("verify_split: color out of range");
            present[c] = 1;
        }
        for (int c = 0; c < k; ++c) {
            if (!present[c]) {
                v.valid = false;
                v.failures.push_back({e.representative, c});
            }
        }
    }
    return v;
}

}  // namespace coversplit
