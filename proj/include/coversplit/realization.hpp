#pragma once

// Geometric realization of H(k,l) by points and open unit disks: point i
// lies in disk e exactly when vertex i lies in edge e. The construction is
// the same recursion as the hypergraph. The two sub-realizations, built at
// scale eps/128, are translated so their local origins land at
// (-eps/3, -eps^2/10) and (eps/3, eps^2/10), and the root point is placed at
// the origin. Red disk centers stay within (-eps,eps) x (1-eps^2,1+eps^2),
// blue centers within (-eps,eps) x (-1-eps^2,-1+eps^2), and all points
// within (-eps,eps) x (-eps^2,eps^2).
//
// The recursion bottoms out at the degenerate branches: a realization of
// H(0,l) is a single red disk containing no points (its edge is empty), and
// symmetrically for H(k,0). Unwinding one level reproduces the k=1 and l=1
// starting families. Every produced instance is certified after the fact by
// verify_realization; the verifier, not the coordinate formulas, is the
// contract.

#include "coversplit/geometry.hpp"

#include <string>
#include <vector>

namespace coversplit {

struct Realization {
    AbstractHypergraph hypergraph;
    std::vector<RationalPoint> points;  // indexed by vertex id
    std::vector<UnitDisk> disks;        // indexed by edge id: reds first, then blues
    Rational eps;

    int red_count() const { return static_cast<int>(hypergraph.red_edges.size()); }

    // Global edge id convention: red edges occupy [0, |E_R|), blue edges follow.
    const UnitDisk& disk_for_red(int i) const { return disks.at(i); }
    const UnitDisk& disk_for_blue(int i) const { return disks.at(red_count() + i); }
};

namespace detail {

struct GeomParts {
    std::vector<RationalPoint> points;
    std::vector<RationalPoint> red_centers;
    std::vector<RationalPoint> blue_centers;
};

inline void translate_into(GeomParts& parts, const RationalPoint& t) {
    for (auto& p : parts.points) p = p + t;
    for (auto& c : parts.red_centers) c = c + t;
    for (auto& c : parts.blue_centers) c = c + t;
}

// Builds the point and center lists in the same order as build_hkl_rec
// emits vertices and edges.
inline GeomParts build_geom_rec(int k, int l, const Rational& eps) {
    GeomParts parts;
    if (k == 0) {
        // one red disk, empty edge: center high in the allowed band
        parts.red_centers.push_back({Rational(0), 1 - eps * eps / 20});
        return parts;
    }
    if (l == 0) {
        parts.blue_centers.push_back({Rational(0), -1 + eps * eps / 20});
        return parts;
    }
    const Rational child_eps = eps / 128;
    GeomParts left = build_geom_rec(k - 1, l, child_eps);
    GeomParts right = build_geom_rec(k, l - 1, child_eps);
    const RationalPoint t_left{-eps / 3, -eps * eps / 10};
    const RationalPoint t_right{eps / 3, eps * eps / 10};
    translate_into(left, t_left);
    translate_into(right, t_right);

    parts.points = std::move(left.points);
    parts.points.insert(parts.points.end(), right.points.begin(), right.points.end());
    parts.points.push_back({Rational(0), Rational(0)});  // the root

    parts.red_centers = std::move(left.red_centers);
    parts.red_centers.insert(parts.red_centers.end(), right.red_centers.begin(),
                             right.red_centers.end());
    parts.blue_centers = std::move(left.blue_centers);
    parts.blue_centers.insert(parts.blue_centers.end(), right.blue_centers.begin(),
                              right.blue_centers.end());
    return parts;
}

}  // namespace detail

/// Builds the realization of H(k,l) at scale eps. Requires 0 < eps < 1/10
/// and k+l <= 10 (construction depth guard; coordinates shrink by 128 per
/// level and stay exact).
inline Realization build_realization(int k, int l, const Rational& eps) {
    if (k < 1 || l < 1) throw std::invalid_argument("build_realization: k,l must be >= 1");
    if (!(eps > 0) || !(eps < Rational(1, 10)))
        throw std::invalid_argument("build_realization: eps must satisfy 0 < eps < 1/10");
    if (k + l > 10)
        throw capacity_error("build_realization: k+l = " + std::to_string(k + l) +
                             " exceeds the construction guard (10)");

    Realization r;
    r.hypergraph = build_hypergraph(k, l);
    r.eps = eps;
    auto parts = detail::build_geom_rec(k, l, eps);
    r.points = std::move(parts.points);
    if ((int)r.points.size() != r.hypergraph.n_vertices)
        throw std::logic_error("build_realization: point/vertex count mismatch");
    if (parts.red_centers.size() != r.hypergraph.red_edges.size() ||
        parts.blue_centers.size() != r.hypergraph.blue_edges.size())
        throw std::logic_error("build_realization: disk/edge count mismatch");

    int id = 0;
    for (auto& c : parts.red_centers) r.disks.push_back({c, Color::Red, id++});
    for (auto& c : parts.blue_centers) r.disks.push_back({c, Color::Blue, id++});
    return r;
}

/// Translates the whole realization (points and disk centers) by (dx, dy).
inline Realization translate(const Realization& r, const Rational& dx, const Rational& dy) {
    Realization out = r;
    for (auto& p : out.points) p = p + RationalPoint{dx, dy};
    for (auto& d : out.disks) d.center = d.center + RationalPoint{dx, dy};
    return out;
}

struct IncidenceWitness {
    int point_id = -1;
    int disk_id = -1;
    bool expected_inside = false;
    std::string sq_distance;  // exact value, for the report
};

struct BoxWitness {
    int item_id = -1;  // point id or disk id depending on the property
};

struct ExposednessWitness {
    int disk_id = -1;        // disk whose pole is covered
    bool top = true;         // which pole
    int covering_disk = -1;  // the other disk whose closure contains it
    std::string sq_distance;
};

struct RealizationReport {
    // property 1: every red disk holds exactly k points, every blue exactly l
    bool uniform_counts = true;
    // property 2: exact incidence fidelity against the hypergraph
    bool incidence_fidelity = true;
    // properties 3-5: the eps boxes for points, red centers, blue centers
    bool points_in_box = true;
    bool red_centers_in_box = true;
    bool blue_centers_in_box = true;
    // property 6: exposedness of the family
    bool exposed = true;
    // strictness: no point lies at squared distance exactly 1 from a center
    bool no_boundary_incidence = true;

    std::vector<IncidenceWitness> incidence_witnesses;
    std::vector<BoxWitness> box_witnesses_points, box_witnesses_red, box_witnesses_blue;
    std::vector<ExposednessWitness> exposedness_witnesses;
    std::vector<IncidenceWitness> boundary_witnesses;

    bool all_ok() const {
        return uniform_counts && incidence_fidelity && points_in_box && red_centers_in_box &&
               blue_centers_in_box && exposed && no_boundary_incidence;
    }
};

/// Checks all six construction properties with exact arithmetic, reporting
/// failing witnesses instead of throwing. `origin` shifts the eps boxes, so
/// a translated realization verifies against translated boxes.
inline RealizationReport verify_realization(const Realization& r,
                                            const RationalPoint& origin = {Rational(0),
                                                                           Rational(0)}) {
    RealizationReport rep;
    const auto& h = r.hypergraph;
    const Rational eps = r.eps;
    const Rational eps2 = eps * eps;

    // membership sets from the hypergraph, per global edge id
    const int reds = static_cast<int>(h.red_edges.size());
    auto edge_of = [&](int disk_id) -> const std::vector<int>& {
        return disk_id < reds ? h.red_edges[disk_id] : h.blue_edges[disk_id - reds];
    };

    for (const auto& d : r.disks) {
        const auto& edge = edge_of(d.id);
        std::size_t edge_pos = 0;
        int inside_count = 0;
        for (int pid = 0; pid < (int)r.points.size(); ++pid) {
            const Rational sq = squared_distance(d.center, r.points[pid]);
            const bool inside = sq < 1;
            if (sq == 1) {
                rep.no_boundary_incidence = false;
                rep.boundary_witnesses.push_back({pid, d.id, inside, format_rational(sq)});
            }
            while (edge_pos < edge.size() && edge[edge_pos] < pid) ++edge_pos;
            const bool expected = edge_pos < edge.size() && edge[edge_pos] == pid;
            if (inside != expected) {
                rep.incidence_fidelity = false;
                rep.incidence_witnesses.push_back({pid, d.id, expected, format_rational(sq)});
            }
            if (inside) ++inside_count;
        }
        const int want = d.klass == Color::Red ? h.k : h.l;
        if (inside_count != want) rep.uniform_counts = false;
    }

    const Rect point_box{origin.x - eps, origin.y - eps2, origin.x + eps, origin.y + eps2};
    const Rect red_box{origin.x - eps, origin.y + 1 - eps2, origin.x + eps, origin.y + 1 + eps2};
    const Rect blue_box{origin.x - eps, origin.y - 1 - eps2, origin.x + eps, origin.y - 1 + eps2};
    for (int pid = 0; pid < (int)r.points.size(); ++pid) {
        if (!point_box.contains_open(r.points[pid])) {
            rep.points_in_box = false;
            rep.box_witnesses_points.push_back({pid});
        }
    }
    for (const auto& d : r.disks) {
        if (d.klass == Color::Red && !red_box.contains_open(d.center)) {
            rep.red_centers_in_box = false;
            rep.box_witnesses_red.push_back({d.id});
        }
        if (d.klass == Color::Blue && !blue_box.contains_open(d.center)) {
            rep.blue_centers_in_box = false;
            rep.box_witnesses_blue.push_back({d.id});
        }
    }

    for (const auto& d : r.disks) {
        for (const auto& other : r.disks) {
            if (other.id == d.id) continue;
            for (bool top : {true, false}) {
                const RationalPoint pole = top ? d.topmost() : d.bottommost();
                const Rational sq = squared_distance(other.center, pole);
                if (sq <= 1) {
                    rep.exposed = false;
                    rep.exposedness_witnesses.push_back(
                        {d.id, top, other.id, format_rational(sq)});
                }
            }
        }
    }
    return rep;
}

/// Exposedness of an arbitrary disk family: every topmost and bottommost
/// point is at squared distance > 1 from every other member's center.
inline bool is_exposed(const std::vector<UnitDisk>& disks) {
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t j = 0; j < disks.size(); ++j) {
            if (i == j) continue;
            if (squared_distance(disks[j].center, disks[i].topmost()) <= 1) return false;
            if (squared_distance(disks[j].center, disks[i].bottommost()) <= 1) return false;
        }
    }
    return true;
}

}  // namespace coversplit
