#pragma once

// Best-effort search for a non-2-colorable 3-uniform shift-chain (such
// chains exist: thirteen triples on nine vertices suffice), plus the exact
// certifier for candidates.
//
// A set of pairwise precedence-comparable triples determines its chain
// order uniquely, so the search works over sets: track the bitset of
// colorings that still avoid a monochromatic edge, pick the surviving
// coloring with the fewest compatible killer triples, and branch on those
// killers. A coloring with no compatible killer prunes the branch, and an
// empty surviving set is a hit. A transposition table skips re-derived
// sets. Special chains are always 2-colorable, so a hit must be
// non-special; the search asserts that instead of assuming it.

#include "coversplit/chain_color.hpp"
#include "coversplit/rng.hpp"
#include "coversplit/shift_chain.hpp"

#include <bitset>
#include <unordered_set>
#include <chrono>

namespace coversplit {

struct UnsplittableCertificate {
    bool is_chain = false;
    bool non_special = false;
    bool non_colorable = false;
    SpecialCheck special_check;
    std::optional<ChainColoring> coloring;  // present when the chain is colorable

    bool certified() const { return is_chain && non_special && non_colorable; }
};

/// Exact certification of a candidate: shift-chain structure, failure of the
/// special condition, and non-2-colorability by exhaustive enumeration.
inline UnsplittableCertificate certify_unsplittable(const ShiftChain& c) {
    UnsplittableCertificate cert;
    cert.is_chain = is_shift_chain(c).ok;
    if (!cert.is_chain) return cert;
    cert.special_check = is_special(c);
    cert.non_special = !cert.special_check.special;
    cert.coloring = brute_force_color(c);
    cert.non_colorable = !cert.coloring.has_value();
    return cert;
}

struct ChainSearchResult {
    std::optional<ShiftChain> found;
    std::uint64_t nodes = 0;
    std::uint64_t restarts = 0;
    bool budget_exhausted = false;
};

namespace detail {

constexpr int kSearchMaxN = 12;
using ColoringSet = std::bitset<1 << kSearchMaxN>;

struct ChainSearcher {
    int n, max_edges;
    std::uint64_t node_budget;
    double second_budget;
    Rng rng;
    std::chrono::steady_clock::time_point t0;

    std::vector<std::array<int, 3>> triples;
    std::vector<ColoringSet> kill;
    std::vector<std::vector<std::uint8_t>> comparable;  // precedence-comparability matrix

    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> chosen;                   // candidate indices, insertion order
    std::unordered_set<std::uint64_t> seen;    // transposition table over chosen sets

    ChainSearcher(int n_, int max_edges_, std::uint64_t node_budget_, double second_budget_,
                  std::uint64_t seed)
        : n(n_), max_edges(max_edges_), node_budget(node_budget_),
          second_budget(second_budget_), rng(seed) {
        t0 = std::chrono::steady_clock::now();
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c) triples.push_back({a, b, c});
        const std::uint64_t total = std::uint64_t(1) << n;
        kill.resize(triples.size());
        for (std::size_t t = 0; t < triples.size(); ++t) {
            std::uint32_t em = 0;
            for (int v : triples[t]) em |= std::uint32_t(1) << (v - 1);
            for (std::uint64_t msk = 0; msk < total; ++msk) {
                const std::uint32_t x = static_cast<std::uint32_t>(msk) & em;
                if (x == em || x == 0) kill[t].set(msk);
            }
        }
        comparable.assign(triples.size(), std::vector<std::uint8_t>(triples.size(), 0));
        for (std::size_t i = 0; i < triples.size(); ++i)
            for (std::size_t j = 0; j < triples.size(); ++j) {
                bool le = true, ge = true;
                for (int q = 0; q < 3; ++q) {
                    le &= triples[i][q] <= triples[j][q];
                    ge &= triples[i][q] >= triples[j][q];
                }
                comparable[i][j] = le || ge;
            }
    }

    bool budget_left() {
        if (nodes >= node_budget) return false;
        if (second_budget > 0 && (nodes & 0xfff) == 0) {
            const auto dt = std::chrono::steady_clock::now() - t0;
            if (std::chrono::duration<double>(dt).count() > second_budget) return false;
        }
        return true;
    }

    std::uint64_t chosen_hash() const {
        std::vector<int> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        std::uint64_t h = 1469598103934665603ull;
        for (int t : sorted) {
            h ^= static_cast<std::uint64_t>(t) + 1;
            h *= 1099511628211ull;
        }
        return h;
    }

    bool dfs(const ColoringSet& valid, const std::vector<int>& compat) {
        if (!budget_left()) {
            out_of_budget = true;
            return false;
        }
        ++nodes;
        if (valid.none()) return true;
        if ((int)chosen.size() >= max_edges) return false;
        if (seen.size() > (1u << 22)) seen.clear();  // bounded transposition memory
        if (!seen.insert(chosen_hash()).second) return false;

        // the surviving coloring with the fewest compatible killers is the
        // branching point: some chain member must kill it
        const std::uint64_t total = std::uint64_t(1) << n;
        std::vector<std::uint16_t> killers(total, 0);
        for (int t : compat) {
            const auto live = kill[t] & valid;
            for (std::size_t w = live._Find_first(); w < live.size();
                 w = live._Find_next(w))
                killers[w]++;
        }
        std::uint64_t target = total;
        std::uint16_t best = UINT16_MAX;
        for (std::uint64_t c = valid._Find_first(); c < total; c = valid._Find_next(c)) {
            if (killers[c] < best) {
                best = killers[c];
                target = c;
            }
        }
        if (best == 0) return false;  // some coloring can no longer be killed

        std::vector<int> branch;
        for (int t : compat)
            if (kill[t].test(target)) branch.push_back(t);
        for (std::size_t i = branch.size(); i > 1; --i)
            std::swap(branch[i - 1], branch[rng.below(i)]);

        for (int t : branch) {
            chosen.push_back(t);
            std::vector<int> next_compat;
            next_compat.reserve(compat.size());
            for (int u : compat)
                if (u != t && comparable[t][u]) next_compat.push_back(u);
            if (dfs(valid & ~kill[t], next_compat)) return true;
            chosen.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }

    ChainSearchResult run() {
        ChainSearchResult res;
        const std::uint64_t total = std::uint64_t(1) << n;
        ColoringSet all;
        for (std::uint64_t m = 0; m < total; ++m) all.set(m);

        while (budget_left()) {
            seen.clear();
            chosen.clear();
            std::vector<int> compat(triples.size());
            std::iota(compat.begin(), compat.end(), 0);
            if (dfs(all, compat)) {
                std::vector<int> sorted = chosen;
                std::sort(sorted.begin(), sorted.end());  // lexicographic = precedence order
                std::vector<std::vector<int>> edges;
                for (int t : sorted)
                    edges.push_back({triples[t][0], triples[t][1], triples[t][2]});
                ShiftChain c = make_shift_chain(n, 3, std::move(edges));
                auto cert = certify_unsplittable(c);
                if (cert.special_check.special)
                    throw std::logic_error(
                        "search produced a special chain with no valid coloring; this "
                        "contradicts the coloring theorem for special chains");
                if (!cert.certified())
                    throw std::logic_error("search hit failed certification");
                res.found = std::move(c);
                res.nodes = nodes;
                res.restarts += 1;
                return res;
            }
            res.restarts += 1;
        }
        res.nodes = nodes;
        res.budget_exhausted = true;
        return res;
    }
};

}  // namespace detail

/// Searches for a non-2-colorable 3-uniform shift-chain on [n] with at most
/// max_edges edges. Budgets: node count (deterministic) and optional wall
/// seconds (0 disables). A found chain is returned fully certified; an empty
/// result is only budget exhaustion, never a nonexistence proof.
inline ChainSearchResult search_unsplittable_chain(int n, int m, int max_edges,
                                                   std::uint64_t node_budget, double seconds,
                                                   std::uint64_t seed) {
    if (m != 3) throw std::invalid_argument("search_unsplittable_chain: m must be 3");
    if (n < 3 || n > detail::kSearchMaxN)
        throw std::invalid_argument("search_unsplittable_chain: n must be in [3, 12]");
    detail::ChainSearcher searcher(n, max_edges, node_budget, seconds, seed);
    return searcher.run();
}

}  // namespace coversplit
