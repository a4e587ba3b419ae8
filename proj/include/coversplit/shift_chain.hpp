#pragma once

// Shift-chains: m-uniform hypergraphs on [n] = {1..n} whose edges are
// totally ordered by the componentwise relation A <= B on sorted elements
// (written A precedes B). A chain is *special* when for any two edges
// A preceding B, every element of A\B is smaller than every element of B\A.

#include "coversplit/hypergraph.hpp"
#include "coversplit/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coversplit {

struct ShiftChain {
    int n = 0;                             // vertices are 1..n
    int m = 0;                             // uniformity
    std::vector<std::vector<int>> edges;   // sorted ascending, listed in precedence order
};

// Coloring of [n]; index 0 is unused.
struct ChainColoring {
    std::vector<Color> colors;

    explicit ChainColoring(int n = 0) : colors(n + 1, Color::Red) {}
    Color at(int v) const { return colors.at(v); }
    void set(int v, Color c) { colors.at(v) = c; }
    int n() const { return static_cast<int>(colors.size()) - 1; }
};

/// Componentwise <= on two sorted equal-size sets.
inline bool precedes(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("precedes: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

struct ChainCheck {
    bool ok = true;
    std::string issue;
};

/// Structural validation: sorted m-subsets of [n], consecutive edges in
/// precedence order (which extends to all pairs by transitivity).
inline ChainCheck is_shift_chain(const ShiftChain& c) {
    ChainCheck res;
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        const auto& edge = c.edges[e];
        if (static_cast<int>(edge.size()) != c.m) {
            res.ok = false;
            res.issue = "edge " + std::to_string(e) + " is not " + std::to_string(c.m) +
                        "-uniform";
            return res;
        }
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (edge[i] < 1 || edge[i] > c.n) {
                res.ok = false;
                res.issue = "edge " + std::to_string(e) + " leaves [1," + std::to_string(c.n) +
                            "]";
                return res;
            }
            if (i > 0 && edge[i] <= edge[i - 1]) {
                res.ok = false;
                res.issue = "edge " + std::to_string(e) + " is not strictly sorted";
                return res;
            }
        }
        if (e > 0 && !precedes(c.edges[e - 1], c.edges[e])) {
            res.ok = false;
            res.issue = "edges " + std::to_string(e - 1) + " and " + std::to_string(e) +
                        " violate the precedence order";
            return res;
        }
    }
    return res;
}

/// Builds a chain from raw edges: sorts each edge, requires the precedence
/// order, collapses duplicate edges (adjacent under the order).
inline ShiftChain make_shift_chain(int n, int m, std::vector<std::vector<int>> edges) {
    ShiftChain c;
    c.n = n;
    c.m = m;
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (!c.edges.empty() && c.edges.back() == e) continue;
        c.edges.push_back(std::move(e));
    }
    auto chk = is_shift_chain(c);
    if (!chk.ok) throw std::invalid_argument("make_shift_chain: " + chk.issue);
    return c;
}

struct SpecialCheck {
    bool special = true;
    int idx_a = -1, idx_b = -1;      // violating pair, in chain order
    std::vector<int> a_minus_b, b_minus_a;
};

namespace detail {

// max(A\B) and min(B\A) for sorted same-size vectors; both nonempty when A != B.
inline bool special_pair(const std::vector<int>& a, const std::vector<int>& b) {
    int max_ab = INT32_MIN, min_ba = INT32_MAX;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            max_ab = std::max(max_ab, a[i]);
            ++i;
        } else if (i == a.size() || b[j] < a[i]) {
            min_ba = std::min(min_ba, b[j]);
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    if (max_ab == INT32_MIN) return true;  // identical sets
    return max_ab < min_ba;
}

inline std::vector<int> set_difference_sorted(const std::vector<int>& a,
                                              const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

/// Checks the special condition over every pair of edges; on failure returns
/// the violating pair as a witness.
inline SpecialCheck is_special(const ShiftChain& c) {
    SpecialCheck res;
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < c.edges.size(); ++j) {
            if (!detail::special_pair(c.edges[i], c.edges[j])) {
                res.special = false;
                res.idx_a = static_cast<int>(i);
                res.idx_b = static_cast<int>(j);
                res.a_minus_b = detail::set_difference_sorted(c.edges[i], c.edges[j]);
                res.b_minus_a = detail::set_difference_sorted(c.edges[j], c.edges[i]);
                return res;
            }
        }
    }
    return res;
}

struct ChainColoringCheck {
    bool valid = true;
    int witness_edge = -1;  // a monochromatic edge, if any
};

/// True iff no edge of the chain is monochromatic under col.
inline ChainColoringCheck validate_chain_coloring(const ShiftChain& c, const ChainColoring& col) {
    ChainColoringCheck res;
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        const Color first = col.at(c.edges[e][0]);
        bool mono = true;
        for (int v : c.edges[e])
            if (col.at(v) != first) {
                mono = false;
                break;
            }
        if (mono) {
            res.valid = false;
            res.witness_edge = static_cast<int>(e);
            return res;
        }
    }
    return res;
}

/// Exhaustive 2-coloring oracle over 2^n assignments; n <= 30 guarded.
/// Returns the first valid coloring in mask order, or nothing if none exists.
inline std::optional<ChainColoring> brute_force_color(const ShiftChain& c) {
    if (c.n > 30)
        throw capacity_error("brute_force_color limited to n <= 30, got " + std::to_string(c.n));
    std::vector<std::uint32_t> masks;
    masks.reserve(c.edges.size());
    for (const auto& e : c.edges) {
        std::uint32_t m = 0;
        for (int v : e) m |= std::uint32_t(1) << (v - 1);
        masks.push_back(m);
    }
    const std::uint64_t total = std::uint64_t(1) << c.n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (std::uint32_t em : masks) {
            const std::uint32_t x = static_cast<std::uint32_t>(mask) & em;
            if (x == em || x == 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ChainColoring col(c.n);
            for (int v = 1; v <= c.n; ++v)
                col.set(v, (mask >> (v - 1)) & 1 ? Color::Red : Color::Blue);
            return col;
        }
    }
    return std::nullopt;
}

}  // namespace coversplit
