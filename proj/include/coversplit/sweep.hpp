#pragma once

// Chains from point sets swept by an unbounded convex shape. The built-in
// shape is the open region above an upward parabola, v > (u/s)^2 with
// rational scale s. For a horizontal offset x, the translate placed as low
// as possible while containing m points contains exactly the points with
// the m largest depth values
//
//   g_i(x) = py_i - ((px_i - x)/s)^2,
//
// and scaling by s^2 and dropping the shared -x^2 term turns depth
// comparison into comparison of lines L_i(x) = 2 px_i x + (s^2 py_i -
// px_i^2). Each pair of lines crosses at most once (distinct x-coordinates
// make slopes distinct), so the evolving top-m set is maintained by a
// kinetic sorted order processing all pairwise crossing events in x order.
// Events sharing an x value are processed as one batch: concurrent lines
// occupy a contiguous block of the order just before the event and the net
// effect is reversing the block, so boundary points never contribute sets
// (the translate is open).
//
// The emitted set sequence is a special shift-chain; callers and tests
// certify that with is_shift_chain / is_special.

#include "coversplit/geometry.hpp"
#include "coversplit/shift_chain.hpp"

#include <numeric>

namespace coversplit {

struct ParabolaShape {
    Rational scale{1};  // region v > (u/scale)^2
};

struct SweepGenerator {
    std::vector<RationalPoint> points;  // sorted by x; vertex v = rank = index+1
    std::vector<int> original_index;    // points[i] came from input position original_index[i]
    ParabolaShape shape;
    int m = 3;

    SweepGenerator(std::vector<RationalPoint> pts, ParabolaShape sh, int uniformity)
        : shape(sh), m(uniformity) {
        if (uniformity < 1) throw std::invalid_argument("SweepGenerator: m must be >= 1");
        if (!(sh.scale > 0)) throw std::invalid_argument("SweepGenerator: scale must be > 0");
        std::vector<int> idx(pts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return pts[a].x < pts[b].x; });
        for (int i : idx) {
            if (!points.empty() && points.back().x == pts[i].x)
                throw std::invalid_argument("SweepGenerator: duplicate x-coordinate");
            points.push_back(pts[i]);
            original_index.push_back(i);
        }
    }
};

namespace detail {

template <class IntT>
struct CrossEvent {
    IntT num;  // crossing x = num/den, den > 0
    IntT den;
    std::int32_t i, j;
};

template <class IntT>
bool event_less(const CrossEvent<IntT>& a, const CrossEvent<IntT>& b) {
    return a.num * b.den < b.num * a.den;
}

template <class IntT>
bool event_equal(const CrossEvent<IntT>& a, const CrossEvent<IntT>& b) {
    return a.num * b.den == b.num * a.den;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Kinetic sweep over integer line coefficients. Emits each distinct top-m
// set in order of appearance.
template <class IntT>
std::vector<std::vector<int>> sweep_top_sets(const std::vector<IntT>& A,
                                             const std::vector<IntT>& B, int m) {
    const int n = static_cast<int>(A.size());
    std::vector<CrossEvent<IntT>> events;
    events.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            IntT den = A[i] - A[j];
            if (den == 0) throw std::logic_error("sweep: parallel depth lines (duplicate x)");
            IntT num = B[j] - B[i];
            if (den < 0) {
                den = -den;
                num = -num;
            }
            events.push_back({std::move(num), std::move(den), i, j});
        }
    }
    std::sort(events.begin(), events.end(), event_less<IntT>);

    // initial order at x -> -inf: larger depth first <=> smaller slope first
    std::vector<int> order(n), pos(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return A[a] < A[b]; });
    for (int p = 0; p < n; ++p) pos[order[p]] = p;

    std::vector<std::vector<int>> sets;
    auto emit = [&]() {
        std::vector<int> top(order.begin(), order.begin() + m);
        std::sort(top.begin(), top.end());
        for (int& v : top) v += 1;  // ranks are 1-based vertices
        if (sets.empty() || sets.back() != top) sets.push_back(std::move(top));
    };
    emit();

    std::size_t e = 0;
    while (e < events.size()) {
        std::size_t batch_end = e + 1;
        while (batch_end < events.size() && event_equal(events[e], events[batch_end]))
            ++batch_end;

        bool boundary_crossed = false;
        if (batch_end == e + 1) {
            // generic case: a single crossing swaps an adjacent pair
            int pi = pos[events[e].i], pj = pos[events[e].j];
            if (pi > pj) std::swap(pi, pj);
            if (pj != pi + 1) throw std::logic_error("sweep: crossing pair not adjacent");
            std::swap(order[pi], order[pj]);
            pos[order[pi]] = pi;
            pos[order[pj]] = pj;
            boundary_crossed = (pi == m - 1);
        } else {
            // degenerate batch: concurrent lines form contiguous blocks of the
            // order just before the event; each block reverses as a whole
            std::vector<int> involved;
            for (std::size_t t = e; t < batch_end; ++t) {
                involved.push_back(events[t].i);
                involved.push_back(events[t].j);
            }
            std::sort(involved.begin(), involved.end());
            involved.erase(std::unique(involved.begin(), involved.end()), involved.end());
            DisjointSet dsu(static_cast<int>(involved.size()));
            auto local = [&](int v) {
                return static_cast<int>(std::lower_bound(involved.begin(), involved.end(), v) -
                                        involved.begin());
            };
            for (std::size_t t = e; t < batch_end; ++t)
                dsu.unite(local(events[t].i), local(events[t].j));
            std::vector<std::vector<int>> groups(involved.size());
            for (std::size_t t = 0; t < involved.size(); ++t)
                groups[dsu.find(static_cast<int>(t))].push_back(involved[t]);
            for (auto& members : groups) {
                if (members.size() < 2) continue;
                std::vector<int> ps;
                ps.reserve(members.size());
                for (int v : members) ps.push_back(pos[v]);
                std::sort(ps.begin(), ps.end());
                for (std::size_t t = 1; t < ps.size(); ++t)
                    if (ps[t] != ps[t - 1] + 1)
                        throw std::logic_error("sweep: concurrent lines not contiguous in order");
                const int lo = ps.front(), hi = ps.back();
                std::reverse(order.begin() + lo, order.begin() + hi + 1);
                for (int p = lo; p <= hi; ++p) pos[order[p]] = p;
                if (lo <= m - 1 && hi >= m) boundary_crossed = true;
            }
        }
        if (boundary_crossed) emit();
        e = batch_end;
    }
    return sets;
}

}  // namespace detail

/// Sweeps the shape across the sorted point set and returns the sequence of
/// distinct m-point sets of the lowest translates, as a shift-chain on the
/// x-ranks 1..n.
inline ShiftChain chain_from_points(const SweepGenerator& g) {
    const int n = static_cast<int>(g.points.size());
    if (n < g.m)
        throw std::invalid_argument("chain_from_points: fewer than m points");

    // line coefficients over a common denominator -> exact integers
    const Rational s2 = g.shape.scale * g.shape.scale;
    std::vector<Rational> a(n), b(n);
    BigInt common = 1;
    for (int i = 0; i < n; ++i) {
        a[i] = 2 * g.points[i].x;
        b[i] = s2 * g.points[i].y - g.points[i].x * g.points[i].x;
        common = boost::multiprecision::lcm(common, denominator(a[i]));
        common = boost::multiprecision::lcm(common, denominator(b[i]));
    }
    std::vector<BigInt> A(n), B(n);
    BigInt max_abs = 0;
    for (int i = 0; i < n; ++i) {
        A[i] = numerator(a[i]) * (common / denominator(a[i]));
        B[i] = numerator(b[i]) * (common / denominator(b[i]));
        const BigInt mag = BigInt(abs(A[i])) + BigInt(abs(B[i]));
        max_abs = std::max(max_abs, mag);
    }

    std::vector<std::vector<int>> sets;
    if (max_abs < (BigInt(1) << 62)) {
        // event comparisons stay within __int128
        std::vector<__int128> Ai(n), Bi(n);
        for (int i = 0; i < n; ++i) {
            Ai[i] = A[i].convert_to<long long>();
            Bi[i] = B[i].convert_to<long long>();
        }
        sets = detail::sweep_top_sets<__int128>(Ai, Bi, g.m);
    } else {
        sets = detail::sweep_top_sets<BigInt>(A, B, g.m);
    }

    ShiftChain c;
    c.n = n;
    c.m = g.m;
    c.edges = std::move(sets);
    auto chk = is_shift_chain(c);
    if (!chk.ok) throw std::logic_error("chain_from_points: sweep output invalid: " + chk.issue);
    return c;
}

}  // namespace coversplit
