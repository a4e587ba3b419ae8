#pragma once

// The recursive hypergraph family H(k,l): a k-uniform red edge family plus
// an l-uniform blue edge family on C(k+l,k)-1 vertices, built so that every
// red/blue vertex coloring leaves some red edge entirely red or some blue
// edge entirely blue.
//
// Recursion: H(k,l) = H(k-1,l) + H(k,l-1) + a fresh root vertex p, where p
// is joined into every red edge of the first branch and every blue edge of
// the second. We run the recursion down to the degenerate branches H(0,l)
// and H(k,0), which carry a single empty red (resp. blue) edge and no
// vertices; this reproduces the k=1 / l=1 base cases exactly and keeps the
// vertex and edge numbering aligned with the geometric realization, which
// uses the same recursion shape.
//
// Vertex ids are assigned depth-first, first branch before second, with the
// root of each block receiving the largest id in its block.

#include "coversplit/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coversplit {

enum class Color : std::uint8_t { Red, Blue };

inline Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

struct TwoColoring {
    std::vector<Color> colors;  // indexed by vertex id; total on the vertex set

    Color at(int v) const { return colors.at(v); }
    int size() const { return static_cast<int>(colors.size()); }
};

struct AbstractHypergraph {
    int k = 0;
    int l = 0;
    int n_vertices = 0;
    std::vector<std::vector<int>> red_edges;   // each edge sorted ascending
    std::vector<std::vector<int>> blue_edges;  // each edge sorted ascending
    std::optional<int> root;                   // absent for the base cases k=1 or l=1
};

inline long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long acc = 1;
    for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
}

inline long long hkl_vertex_count(int k, int l) {
    if (k == 0 || l == 0) return 0;
    return binomial(k + l, k) - 1;
}

namespace detail {

inline void build_hkl_rec(int k, int l, int base,
                          std::vector<std::vector<int>>& reds,
                          std::vector<std::vector<int>>& blues) {
    if (k == 0) {
        reds.push_back({});
        return;
    }
    if (l == 0) {
        blues.push_back({});
        return;
    }
    const int n1 = static_cast<int>(hkl_vertex_count(k - 1, l));
    const int n2 = static_cast<int>(hkl_vertex_count(k, l - 1));
    const int root = base + n1 + n2;

    std::vector<std::vector<int>> r1, b1, r2, b2;
    build_hkl_rec(k - 1, l, base, r1, b1);
    build_hkl_rec(k, l - 1, base + n1, r2, b2);

    for (auto& e : r1) {
        e.push_back(root);  // root id exceeds every id in the first block
        reds.push_back(std::move(e));
    }
    for (auto& e : r2) reds.push_back(std::move(e));
    for (auto& e : b1) blues.push_back(std::move(e));
    for (auto& e : b2) {
        e.push_back(root);
        blues.push_back(std::move(e));
    }
}

}  // namespace detail

/// Builds H(k,l). Guarded by k+l <= 30 so the edge lists stay materializable.
inline AbstractHypergraph build_hypergraph(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("build_hypergraph: k and l must be >= 1");
    if (k + l > 30)
        throw capacity_error("build_hypergraph: k+l = " + std::to_string(k + l) +
                             " exceeds the materialization guard (30)");
    AbstractHypergraph h;
    h.k = k;
    h.l = l;
    h.n_vertices = static_cast<int>(hkl_vertex_count(k, l));
    detail::build_hkl_rec(k, l, 0, h.red_edges, h.blue_edges);
    if (k > 1 && l > 1) h.root = h.n_vertices - 1;
    return h;
}

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

/// Checks uniformity, the closed-form counting identities, and basic edge
/// well-formedness. Report style: all failed checks are listed, none throws.
inline ValidationReport validate_hypergraph(const AbstractHypergraph& h) {
    ValidationReport rep;
    if (h.k < 1 || h.l < 1) {
        rep.fail("k and l must be positive");
        return rep;
    }
    const long long want_v = hkl_vertex_count(h.k, h.l);
    const long long want_r = binomial(h.k + h.l - 1, h.k);
    const long long want_b = binomial(h.k + h.l - 1, h.l);
    if (h.n_vertices != want_v)
        rep.fail("|V| = " + std::to_string(h.n_vertices) + ", expected C(k+l,k)-1 = " +
                 std::to_string(want_v));
    if (static_cast<long long>(h.red_edges.size()) != want_r)
        rep.fail("|E_R| = " + std::to_string(h.red_edges.size()) + ", expected C(k+l-1,k) = " +
                 std::to_string(want_r));
    if (static_cast<long long>(h.blue_edges.size()) != want_b)
        rep.fail("|E_B| = " + std::to_string(h.blue_edges.size()) + ", expected C(k+l-1,l) = " +
                 std::to_string(want_b));

    auto check_edges = [&](const std::vector<std::vector<int>>& edges, int uniform,
                           const char* name) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = edges[i];
            if (static_cast<int>(e.size()) != uniform)
                rep.fail(std::string(name) + " edge " + std::to_string(i) + " has size " +
                         std::to_string(e.size()) + ", expected " + std::to_string(uniform));
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (e[j] < 0 || e[j] >= h.n_vertices) {
                    rep.fail(std::string(name) + " edge " + std::to_string(i) +
                             " has out-of-range vertex " + std::to_string(e[j]));
                    break;
                }
                if (j > 0 && e[j] <= e[j - 1]) {
                    rep.fail(std::string(name) + " edge " + std::to_string(i) +
                             " is not strictly sorted (duplicate or disorder)");
                    break;
                }
            }
        }
    };
    check_edges(h.red_edges, h.k, "red");
    check_edges(h.blue_edges, h.l, "blue");

    const bool expect_root = h.k > 1 && h.l > 1;
    if (expect_root && !h.root)
        rep.fail("root missing for k,l > 1");
    if (!expect_root && h.root)
        rep.fail("root present for a base case (k=1 or l=1)");
    if (h.root && (*h.root < 0 || *h.root >= h.n_vertices))
        rep.fail("root id out of range");
    return rep;
}

struct ForcedEdge {
    Color edge_class = Color::Red;
    int edge_index = -1;          // index into red_edges or blue_edges per class
    std::vector<int> vertices;    // the monochromatic edge itself
};

namespace detail {

// Mirrors the inductive proof: the root's color selects the branch to
// descend into; the base cases scan their block directly.
inline std::pair<Color, std::vector<int>> forced_edge_rec(int k, int l, int base,
                                                          const TwoColoring& col) {
    if (k == 1) {
        for (int v = base; v < base + l; ++v)
            if (col.at(v) == Color::Red) return {Color::Red, {v}};
        std::vector<int> whole(l);
        for (int i = 0; i < l; ++i) whole[i] = base + i;
        return {Color::Blue, std::move(whole)};
    }
    if (l == 1) {
        for (int v = base; v < base + k; ++v)
            if (col.at(v) == Color::Blue) return {Color::Blue, {v}};
        std::vector<int> whole(k);
        for (int i = 0; i < k; ++i) whole[i] = base + i;
        return {Color::Red, std::move(whole)};
    }
    const int n1 = static_cast<int>(hkl_vertex_count(k - 1, l));
    const int n2 = static_cast<int>(hkl_vertex_count(k, l - 1));
    const int root = base + n1 + n2;
    if (col.at(root) == Color::Red) {
        auto [cls, edge] = forced_edge_rec(k - 1, l, base, col);
        if (cls == Color::Red) edge.push_back(root);  // e u {p} is all red
        return {cls, std::move(edge)};
    }
    auto [cls, edge] = forced_edge_rec(k, l - 1, base + n1, col);
    if (cls == Color::Blue) edge.push_back(root);  // e u {p} is all blue
    return {cls, std::move(edge)};
}

}  // namespace detail

/// Finds a red edge that is entirely red or a blue edge that is entirely
/// blue, by descending the recursion the way the inductive argument does.
/// The family guarantees one exists; failure to locate or re-verify it is an
/// internal-consistency failure and aborts loudly.
inline ForcedEdge find_forced_monochromatic(const AbstractHypergraph& h, const TwoColoring& col) {
    if (col.size() != h.n_vertices)
        throw std::invalid_argument("find_forced_monochromatic: coloring not total");
    auto [cls, edge] = detail::forced_edge_rec(h.k, h.l, 0, col);
    std::sort(edge.begin(), edge.end());

    for (int v : edge)
        if (col.at(v) != cls)
            throw std::logic_error("find_forced_monochromatic: produced edge is not "
                                   "monochromatic in the claimed class");

    const auto& pool = (cls == Color::Red) ? h.red_edges : h.blue_edges;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i] == edge) {
            ForcedEdge out;
            out.edge_class = cls;
            out.edge_index = static_cast<int>(i);
            out.vertices = std::move(edge);
            return out;
        }
    }
    throw std::logic_error("find_forced_monochromatic: derived edge is not present in the "
                           "hypergraph; input is not a well-formed H(k,l)");
}

}  // namespace coversplit
