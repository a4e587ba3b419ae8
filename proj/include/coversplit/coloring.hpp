#pragma once

// Colorability oracle for the asymmetric condition used throughout: a
// coloring is valid when no red edge is entirely red and no blue edge is
// entirely blue. This is stronger than plain property B, and it is the
// condition the family H(k,l) defeats.
//
// Exhaustive mode scans all 2^n colorings over edge bitmasks; it may be
// partitioned over disjoint coloring prefixes across workers with a
// deterministic merge (the lowest valid mask wins). Backtracking mode is a
// budgeted search whose exhaustion is reported as Indeterminate, a state
// deliberately distinct from NotColorable.

#include "coversplit/hypergraph.hpp"

#include <atomic>
#include <cstdint>
#include <thread>

namespace coversplit {

enum class Colorability { Colorable, NotColorable, Indeterminate };

struct ColorabilityResult {
    Colorability status = Colorability::Indeterminate;
    std::optional<TwoColoring> coloring;  // present iff Colorable
    std::uint64_t work = 0;               // masks scanned or nodes expanded
};

namespace detail {

inline TwoColoring coloring_from_mask(std::uint64_t mask, int n) {
    TwoColoring col;
    col.colors.resize(n);
    for (int v = 0; v < n; ++v)
        col.colors[v] = (mask >> v) & 1u ? Color::Red : Color::Blue;
    return col;
}

struct EdgeMasks {
    std::vector<std::uint64_t> red;   // edge all red  <=> (m & e) == e
    std::vector<std::uint64_t> blue;  // edge all blue <=> (m & e) == 0
};

inline EdgeMasks edge_masks(const AbstractHypergraph& h) {
    EdgeMasks em;
    auto pack = [](const std::vector<int>& e) {
        std::uint64_t m = 0;
        for (int v : e) m |= std::uint64_t(1) << v;
        return m;
    };
    for (const auto& e : h.red_edges) em.red.push_back(pack(e));
    for (const auto& e : h.blue_edges) em.blue.push_back(pack(e));
    return em;
}

inline bool mask_valid(std::uint64_t m, const EdgeMasks& em) {
    for (std::uint64_t e : em.red)
        if ((m & e) == e) return false;
    for (std::uint64_t e : em.blue)
        if ((m & e) == 0) return false;
    return true;
}

}  // namespace detail

/// Exhaustive scan of all 2^n red/blue colorings. Returns the valid coloring
/// with the smallest bitmask if one exists (deterministic across any worker
/// count), otherwise a proof-by-enumeration NotColorable.
inline ColorabilityResult is_two_colorable_exhaustive(const AbstractHypergraph& h, int jobs = 1) {
    const int n = h.n_vertices;
    if (n > 30)
        throw capacity_error("exhaustive coloring scan limited to |V| <= 30, got " +
                             std::to_string(n));
    const auto em = detail::edge_masks(h);
    const std::uint64_t total = std::uint64_t(1) << n;

    ColorabilityResult res;
    res.work = total;
    if (jobs <= 1 || total < (std::uint64_t(1) << 18)) {
        for (std::uint64_t m = 0; m < total; ++m) {
            if (detail::mask_valid(m, em)) {
                res.status = Colorability::Colorable;
                res.coloring = detail::coloring_from_mask(m, n);
                res.work = m + 1;
                return res;
            }
        }
        res.status = Colorability::NotColorable;
        return res;
    }

    // Disjoint contiguous chunks; each worker reports its lowest valid mask.
    const int workers = std::min<int>(jobs, 64);
    std::vector<std::uint64_t> best(workers, UINT64_MAX);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers + 1;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
            const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
            for (std::uint64_t m = lo; m < hi; ++m) {
                if (detail::mask_valid(m, em)) {
                    best[w] = m;
                    break;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    std::uint64_t winner = UINT64_MAX;
    for (std::uint64_t b : best) winner = std::min(winner, b);
    if (winner == UINT64_MAX) {
        res.status = Colorability::NotColorable;
    } else {
        res.status = Colorability::Colorable;
        res.coloring = detail::coloring_from_mask(winner, n);
    }
    return res;
}

namespace detail {

struct BacktrackState {
    const AbstractHypergraph* h;
    std::vector<int> assign;  // -1 unknown, 0 blue, 1 red
    std::vector<int> red_count, red_assigned;    // per red edge
    std::vector<int> blue_count, blue_assigned;  // per blue edge
    std::vector<std::vector<int>> red_of, blue_of;  // vertex -> incident edge ids
    std::vector<int> order;
    std::uint64_t nodes = 0, budget = 0;
    bool exhausted = false;

    bool assign_color(int v, int c, std::vector<int>& trail);
    void undo(const std::vector<int>& trail);
    bool solve(std::size_t depth);
};

inline bool BacktrackState::assign_color(int v, int c, std::vector<int>& trail) {
    // Sets v and runs unit propagation; trail records every vertex set here.
    std::vector<int> queue{v};
    std::vector<int> colors{c};
    while (!queue.empty()) {
        int u = queue.back();
        int cu = colors.back();
        queue.pop_back();
        colors.pop_back();
        if (assign[u] != -1) {
            if (assign[u] != cu) return false;
            continue;
        }
        assign[u] = cu;
        trail.push_back(u);
        for (int e : red_of[u]) {
            red_assigned[e]++;
            if (cu == 1) {
                red_count[e]++;
                const int sz = static_cast<int>(h->red_edges[e].size());
                if (red_count[e] == sz) return false;  // edge went all red
                if (red_count[e] == sz - 1 && red_assigned[e] == sz - 1) {
                    // last free vertex is forced blue
                    for (int w : h->red_edges[e])
                        if (assign[w] == -1) {
                            queue.push_back(w);
                            colors.push_back(0);
                        }
                }
            }
            // a blue vertex satisfies the red edge permanently; nothing to do
        }
        for (int e : blue_of[u]) {
            blue_assigned[e]++;
            if (cu == 0) {
                blue_count[e]++;
                const int sz = static_cast<int>(h->blue_edges[e].size());
                if (blue_count[e] == sz) return false;  // edge went all blue
                if (blue_count[e] == sz - 1 && blue_assigned[e] == sz - 1) {
                    for (int w : h->blue_edges[e])
                        if (assign[w] == -1) {
                            queue.push_back(w);
                            colors.push_back(1);
                        }
                }
            }
        }
    }
    return true;
}

inline void BacktrackState::undo(const std::vector<int>& trail) {
    for (int u : trail) {
        const int cu = assign[u];
        for (int e : red_of[u]) {
            red_assigned[e]--;
            if (cu == 1) red_count[e]--;
        }
        for (int e : blue_of[u]) {
            blue_assigned[e]--;
            if (cu == 0) blue_count[e]--;
        }
        assign[u] = -1;
    }
}

inline bool BacktrackState::solve(std::size_t depth) {
    if (++nodes > budget) {
        exhausted = true;
        return false;
    }
    while (depth < order.size() && assign[order[depth]] != -1) ++depth;
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int c : {0, 1}) {
        std::vector<int> trail;
        if (assign_color(v, c, trail)) {
            if (solve(depth + 1)) return true;
            if (exhausted) {
                undo(trail);
                return false;
            }
        }
        undo(trail);
    }
    return false;
}

}  // namespace detail

/// Budgeted backtracking with fail-first branching (most-occupied vertex
/// first) and unit propagation. Budget exhaustion yields Indeterminate;
/// a completed search yields a definite answer.
inline ColorabilityResult is_two_colorable_backtracking(const AbstractHypergraph& h,
                                                        std::uint64_t node_budget = 1'000'000) {
    detail::BacktrackState st;
    st.h = &h;
    st.assign.assign(h.n_vertices, -1);
    st.red_count.assign(h.red_edges.size(), 0);
    st.red_assigned.assign(h.red_edges.size(), 0);
    st.blue_count.assign(h.blue_edges.size(), 0);
    st.blue_assigned.assign(h.blue_edges.size(), 0);
    st.red_of.resize(h.n_vertices);
    st.blue_of.resize(h.n_vertices);
    for (std::size_t e = 0; e < h.red_edges.size(); ++e)
        for (int v : h.red_edges[e]) st.red_of[v].push_back(static_cast<int>(e));
    for (std::size_t e = 0; e < h.blue_edges.size(); ++e)
        for (int v : h.blue_edges[e]) st.blue_of[v].push_back(static_cast<int>(e));

    st.order.resize(h.n_vertices);
    for (int v = 0; v < h.n_vertices; ++v) st.order[v] = v;
    std::sort(st.order.begin(), st.order.end(), [&](int a, int b) {
        const std::size_t da = st.red_of[a].size() + st.blue_of[a].size();
        const std::size_t db = st.red_of[b].size() + st.blue_of[b].size();
        return da != db ? da > db : a < b;
    });
    st.budget = node_budget;

    ColorabilityResult res;
    const bool found = st.solve(0);
    res.work = st.nodes;
    if (found) {
        res.status = Colorability::Colorable;
        TwoColoring col;
        col.colors.resize(h.n_vertices);
        for (int v = 0; v < h.n_vertices; ++v)
            col.colors[v] = st.assign[v] == 1 ? Color::Red : Color::Blue;
        res.coloring = std::move(col);
    } else if (st.exhausted) {
        res.status = Colorability::Indeterminate;
    } else {
        res.status = Colorability::NotColorable;
    }
    return res;
}

/// Oracle entry point: exhaustive when the vertex count admits it,
/// budgeted backtracking beyond.
inline ColorabilityResult is_two_colorable(const AbstractHypergraph& h, int jobs = 1,
                                           std::uint64_t backtrack_budget = 1'000'000) {
    if (h.n_vertices <= 30) return is_two_colorable_exhaustive(h, jobs);
    return is_two_colorable_backtracking(h, backtrack_budget);
}

/// True iff no red edge is all red and no blue edge is all blue under col.
/// (An empty edge is vacuously monochromatic.)
inline bool coloring_valid(const AbstractHypergraph& h, const TwoColoring& col) {
    for (const auto& e : h.red_edges) {
        bool all = true;
        for (int v : e)
            if (col.at(v) != Color::Red) { all = false; break; }
        if (all) return false;
    }
    for (const auto& e : h.blue_edges) {
        bool all = true;
        for (int v : e)
            if (col.at(v) != Color::Blue) { all = false; break; }
        if (all) return false;
    }
    return true;
}

}  // namespace coversplit
