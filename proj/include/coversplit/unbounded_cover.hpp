#pragma once

// End-to-end splitting of a 3-fold covering of a finite point set by
// translates of the unbounded shape, through the chain machinery: sweep the
// canonical lowest translates, 2-color the resulting special shift-chain,
// and verify that every canonical translate holding at least m points sees
// both colors. Any translate of the shape containing >= m points contains
// the m deepest points at its offset, i.e. a superset of some canonical
// set, so checking the canonical sets covers all translates.

#include "coversplit/chain_color.hpp"
#include "coversplit/sweep.hpp"

namespace coversplit {

struct UnboundedCoverReport {
    ShiftChain chain;
    ChainColoring coloring{0};
    bool chain_is_special = false;
    bool all_canonical_translates_bichromatic = false;
    int canonical_translate_count = 0;
    std::vector<Color> colors_by_input_point;  // in the caller's original point order
};

inline UnboundedCoverReport color_unbounded_cover(const SweepGenerator& g) {
    if (g.m != 3)
        throw std::invalid_argument("color_unbounded_cover: requires m = 3");
    UnboundedCoverReport rep;
    rep.chain = chain_from_points(g);
    auto sp = is_special(rep.chain);
    rep.chain_is_special = sp.special;
    if (!sp.special)
        throw std::logic_error("color_unbounded_cover: sweep produced a non-special chain");
    rep.coloring = color_special_chain(rep.chain, /*verify_special=*/false);
    rep.canonical_translate_count = static_cast<int>(rep.chain.edges.size());
    rep.all_canonical_translates_bichromatic =
        validate_chain_coloring(rep.chain, rep.coloring).valid;

    rep.colors_by_input_point.resize(g.points.size(), Color::Red);
    for (std::size_t rank = 0; rank < g.points.size(); ++rank)
        rep.colors_by_input_point[g.original_index[rank]] =
            rep.coloring.at(static_cast<int>(rank) + 1);
    return rep;
}

}  // namespace coversplit
