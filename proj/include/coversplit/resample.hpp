#pragma once

// Constructive splitting of a cell hypergraph into k cover classes by
// resampling: color every disk uniformly at random, then repeatedly
// recolor the vertices of an edge that misses some color, until no edge
// does. Inside the local-lemma regime (edge sizes >= m, intersection
// degrees within lll_degree_threshold(k, m)) this terminates fast;
// outside it the loop may hit its round cap, which is reported as a
// failure with the stuck edges, not an error. Runs are deterministic per
// seed: the violated edge chosen each round is the lowest-indexed one and
// the random stream is fixed.

#include "coversplit/cells.hpp"
#include "coversplit/rng.hpp"

namespace coversplit {

struct SplitResult {
    bool success = false;
    std::vector<int> colors;      // per disk id, in [0, k)
    std::uint64_t rounds = 0;     // resampling steps taken
    std::vector<int> stuck_edges; // violated edge indices at the cap
};

namespace detail {

inline int first_missing_color(const CellEdge& e, const std::vector<int>& colors, int k,
                               std::vector<char>& scratch) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for (int id : e.disk_ids) scratch[colors[id]] = 1;
    for (int c = 0; c < k; ++c)
        if (!scratch[c]) return c;
    return -1;
}

}  // namespace detail

inline SplitResult resample_split(const CellHypergraph& h, int k, std::uint64_t seed,
                                  std::uint64_t max_rounds = 1'000'000) {
    if (k < 2) throw std::invalid_argument("resample_split: need k >= 2");
    SplitResult res;
    res.colors.assign(h.n_disks, 0);
    Rng rng(seed);
    for (int i = 0; i < h.n_disks; ++i) res.colors[i] = rng.below_int(k);

    // an edge smaller than k can never carry all colors
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        if (static_cast<int>(h.edges[e].disk_ids.size()) < k)
            res.stuck_edges.push_back(static_cast<int>(e));
    }
    if (!res.stuck_edges.empty()) return res;

    std::vector<char> scratch(k, 0);
    while (res.rounds < max_rounds) {
        int violated = -1;
        for (std::size_t e = 0; e < h.edges.size(); ++e) {
            if (detail::first_missing_color(h.edges[e], res.colors, k, scratch) >= 0) {
                violated = static_cast<int>(e);
                break;
            }
        }
        if (violated < 0) {
            res.success = true;
            return res;
        }
        ++res.rounds;
        for (int id : h.edges[violated].disk_ids) res.colors[id] = rng.below_int(k);
    }
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        if (detail::first_missing_color(h.edges[e], res.colors, k, scratch) >= 0)
            res.stuck_edges.push_back(static_cast<int>(e));
    return res;
}

}  // namespace coversplit
