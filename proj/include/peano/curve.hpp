#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "peano/chain.hpp"

// The curve tower: a weak 2^-n chain per level, each refining the last, with
// parameter breakpoints splitting [0,1] along the block structure.  The level
// n section map sends t to the chain piece over its interval (the union of
// the two incident pieces at an interior breakpoint).  Sections nest in n and
// their diameters halve, so the tower represents a continuous surjection
// [0,1] -> X with a certified error bound at every finite level.

namespace peano {

// k+1 equally spaced values from a to b, exact.
inline std::vector<Rational> split_uniform(Rational a, Rational b, int64_t k) {
    if (!(a < b)) throw std::invalid_argument("split_uniform: requires a < b");
    if (k < 1) throw std::invalid_argument("split_uniform: requires k >= 1");
    std::vector<Rational> out;
    out.reserve(k + 1);
    Rational step = (b - a) / Rational(k);
    for (int64_t i = 0; i <= k; ++i)
        out.push_back(i == 0 ? a : (i == k ? b : a + Rational(i) * step));
    return out;
}

struct TowerLevel {
    Chain chain;
    std::vector<Rational> breaks;  // chain.length() + 1 values, 0 .. 1
    RefinementCode code;
};

struct CurveTower {
    DyadicCompactum ambient;
    std::vector<TowerLevel> levels;  // levels[n-1] is the weak 2^-n chain

    int max_level() const { return (int)levels.size(); }
};

inline bool operator==(const TowerLevel& a, const TowerLevel& b) {
    return a.chain == b.chain && a.breaks == b.breaks && a.code == b.code;
}
inline bool operator==(const CurveTower& a, const CurveTower& b) {
    return a.ambient == b.ambient && a.levels == b.levels;
}

inline CurveTower build_tower(const DyadicCompactum& X, int N) {
    if (N < 1) throw std::invalid_argument("build_tower: N must be at least 1");
    if (!connected(X)) throw std::invalid_argument("build_tower: ambient not connected");

    CurveTower tower;
    tower.ambient = X;

    Point sigma = canonical_point(X);
    Chain psi1 = order_chain(cover_small_peano(X, Rational(1, 2)), sigma, sigma, dy_pow2(-1));
    int64_t len1 = (int64_t)psi1.length();
    TowerLevel l1;
    l1.chain = std::move(psi1);
    l1.breaks = split_uniform(Rational(0), Rational(1), len1);
    l1.code = RefinementCode{{1}, {len1}};
    tower.levels.push_back(std::move(l1));

    for (int n = 2; n <= N; ++n) {
        auto [fine, code] = refine_chain(tower.levels.back().chain, n);
        const auto& prevBreaks = tower.levels.back().breaks;
        std::vector<Rational> breaks;
        breaks.reserve(fine.length() + 1);
        breaks.push_back(Rational(0));
        for (size_t i = 0; i < code.nu.size(); ++i) {
            auto seg = split_uniform(prevBreaks[i], prevBreaks[i + 1], code.nu[i]);
            for (size_t j = 1; j < seg.size(); ++j) breaks.push_back(seg[j]);
        }
        if (breaks.size() != fine.length() + 1)
            throw std::logic_error("build_tower: breakpoint bookkeeping out of sync");
        TowerLevel lvl;
        lvl.chain = std::move(fine);
        lvl.breaks = std::move(breaks);
        lvl.code = std::move(code);
        tower.levels.push_back(std::move(lvl));
    }
    return tower;
}

inline DyadicCompactum union_cells(const DyadicCompactum& a0, const DyadicCompactum& b0) {
    DyadicCompactum a = a0, b = b0;
    common_level(a, b);
    std::vector<int32_t> flat = a.cells;
    flat.insert(flat.end(), b.cells.begin(), b.cells.end());
    return make_compactum(a.dim, a.level, std::move(flat));
}

// Section of the level-n chain at parameter t: the piece over t's interval,
// or the union of both incident pieces when t is an interior breakpoint.
inline DyadicCompactum section(const CurveTower& tower, int n, Rational t) {
    if (n < 1 || n > tower.max_level())
        throw std::invalid_argument("section: level out of range");
    if (t < Rational(0) || Rational(1) < t)
        throw std::invalid_argument("section: parameter outside [0,1]");
    const auto& lvl = tower.levels[n - 1];
    const auto& br = lvl.breaks;
    size_t m = lvl.chain.length();
    if (t == Rational(0)) return lvl.chain.pieces[0];
    if (t == Rational(1)) return lvl.chain.pieces[m - 1];
    size_t i = std::upper_bound(br.begin(), br.end(), t) - br.begin();  // br[i-1] <= t < br[i]
    if (br[i - 1] == t)  // interior breakpoint between pieces i-2 and i-1
        return union_cells(lvl.chain.pieces[i - 2], lvl.chain.pieces[i - 1]);
    return lvl.chain.pieces[i - 1];
}

inline Point eval_at(const CurveTower& tower, int n, Rational t) {
    return canonical_point(section(tower, n, t));
}

struct EvalResult {
    Point point;
    Dyadic error_bound;  // the limit point is within this in the sup metric
};

inline EvalResult eval(const CurveTower& tower, Rational t) {
    int N = tower.max_level();
    return {eval_at(tower, N, t), dy_pow2(1 - N)};
}

// Endpoint reanchoring: run the curve backwards from a to 0, forward across
// all of [0,1], then backwards from 1 to b, squeezed into thirds.  Image is
// unchanged; the ends evaluate next to the chosen points.
struct AnchoredCurve {
    std::shared_ptr<const CurveTower> tower;
    Rational a, b;
};

inline Rational anchored_reparam(const AnchoredCurve& c, Rational t) {
    if (t < Rational(0) || Rational(1) < t)
        throw std::invalid_argument("anchored curve: parameter outside [0,1]");
    Rational third(1, 3), twoThirds(2, 3);
    if (t < third) return c.a - Rational(3) * c.a * t;
    if (t <= twoThirds) return Rational(3) * t - Rational(1);
    return Rational(3) * t * (c.b - Rational(1)) - Rational(2) * c.b + Rational(3);
}

inline Point anchored_eval(const AnchoredCurve& c, Rational t) {
    return eval(*c.tower, anchored_reparam(c, t)).point;
}

// Least level-N breakpoint whose section contains the point.
inline Rational parameter_of(const CurveTower& tower, const Point& x) {
    int N = tower.max_level();
    const auto& br = tower.levels[N - 1].breaks;
    for (const auto& t : br)
        if (closed_member(section(tower, N, t), x)) return t;
    throw std::invalid_argument("parameter_of: point outside the ambient space");
}

inline AnchoredCurve anchor(std::shared_ptr<const CurveTower> tower, const Point& x,
                            const Point& y) {
    if (!closed_member(tower->ambient, x) || !closed_member(tower->ambient, y))
        throw std::invalid_argument("anchor: endpoint outside the ambient space");
    Rational a = parameter_of(*tower, x);
    Rational b = parameter_of(*tower, y);
    return AnchoredCurve{std::move(tower), a, b};
}

// Parameters where the anchored curve needs samples: the stage boundaries and
// every preimage of a tower breakpoint, so consecutive samples always live in
// the same or adjacent sections.
inline std::vector<Rational> anchored_breaks(const AnchoredCurve& c) {
    const auto& br = c.tower->levels[c.tower->max_level() - 1].breaks;
    std::vector<Rational> grid{Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)};
    if (!(c.a == Rational(0)))
        for (const auto& tau : br)
            if (tau <= c.a) grid.push_back((c.a - tau) / (Rational(3) * c.a));
    for (const auto& tau : br) grid.push_back((tau + Rational(1)) / Rational(3));
    if (!(c.b == Rational(1)))
        for (const auto& tau : br)
            if (c.b <= tau)
                grid.push_back((tau - Rational(3) + Rational(2) * c.b) /
                               (Rational(3) * (c.b - Rational(1))));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<Rational> out;
    out.reserve(grid.size() * 2);
    for (size_t i = 0; i < grid.size(); ++i) {
        if (i) out.push_back((grid[i - 1] + grid[i]) * Rational(1, 2));
        out.push_back(grid[i]);
    }
    return out;
}

// Closed parameter intervals at the top level whose piece touches K; an outer
// approximation of the preimage of K under the limit curve.
inline std::vector<std::pair<Rational, Rational>> preimage(const CurveTower& tower,
                                                           const DyadicCompactum& K) {
    if (K.dim != tower.ambient.dim) throw std::invalid_argument("preimage: dimension mismatch");
    int N = tower.max_level();
    const auto& lvl = tower.levels[N - 1];
    std::vector<std::pair<Rational, Rational>> out;
    for (size_t i = 0; i < lvl.chain.length(); ++i) {
        if (!touches(lvl.chain.pieces[i], K)) continue;
        Rational lo = lvl.breaks[i], hi = lvl.breaks[i + 1];
        if (!out.empty() && out.back().second == lo)
            out.back().second = hi;
        else
            out.emplace_back(lo, hi);
    }
    return out;
}

namespace detail {

// Graph of the level-N approximation as a cell set in [0,1]^(1+d): parameter
// axis quantized to dyadic cells at level N+2, each carrying the union of the
// sections meeting it.
inline DyadicCompactum graph_cells(const CurveTower& tower) {
    int N = tower.max_level();
    int P = N + 2;
    const auto& lvl = tower.levels[N - 1];
    int L = 0;
    for (auto& p : lvl.chain.pieces) L = std::max(L, p.level);
    int LL = std::max(P, L);
    int d = tower.ambient.dim;

    std::vector<int32_t> flat;
    size_t m = lvl.chain.length();
    for (int64_t q = 0; q < (int64_t(1) << P); ++q) {
        Rational qlo(q, int64_t(1) << P), qhi(q + 1, int64_t(1) << P);
        std::vector<int32_t> unionFlat;
        for (size_t i = 0; i < m; ++i) {
            if (lvl.breaks[i + 1] < qlo || qhi < lvl.breaks[i]) continue;
            DyadicCompactum p = lvl.chain.pieces[i].level == LL
                                    ? lvl.chain.pieces[i]
                                    : subdivide(lvl.chain.pieces[i], LL);
            unionFlat.insert(unionFlat.end(), p.cells.begin(), p.cells.end());
        }
        if (unionFlat.empty()) continue;
        auto sec = make_compactum(d, LL, std::move(unionFlat));
        for (int64_t sub = q << (LL - P); sub < (q + 1) << (LL - P); ++sub)
            for (size_t i = 0; i < sec.size(); ++i) {
                flat.push_back((int32_t)sub);
                auto c = sec.cell(i);
                flat.insert(flat.end(), c.begin(), c.end());
            }
    }
    return make_compactum(1 + d, LL, std::move(flat));
}

}  // namespace detail

// Hausdorff distance between the two graph approximations; bounded by the sup
// distance of the section selections plus the section diameter 2^(1-N).
inline Dyadic graph_distance(const CurveTower& F, const CurveTower& G) {
    if (F.ambient.dim != G.ambient.dim)
        throw std::invalid_argument("graph_distance: dimension mismatch");
    if (F.max_level() != G.max_level())
        throw std::invalid_argument("graph_distance: level mismatch");
    return hausdorff(detail::graph_cells(F), detail::graph_cells(G));
}

}  // namespace peano
