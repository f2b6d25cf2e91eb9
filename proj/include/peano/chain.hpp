#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "peano/geometry.hpp"
#include "peano/hilbert.hpp"

// Weak chains and coded refinements.
//
// A weak eps-chain covering X is an ordered list of connected pieces, each of
// diameter < eps, consecutive pieces touching, whose union is X.  A finer
// chain refines a coarser one when its consecutive blocks union exactly to
// the coarse pieces; the block structure is recorded as index vectors
// mu (block starts, mu[0] = 1) and nu (block lengths).
//
// Connected cubical sets are automatically locally connected, so every chain
// piece here is a Peano continuum for free.
//
// Diameter bounds are exact Rationals rather than dyadics because the Peano
// cover works at a third of its budget, and thirds are not dyadic.

namespace peano {

struct Chain {
    Dyadic epsilon;
    std::vector<DyadicCompactum> pieces;

    size_t length() const { return pieces.size(); }
};

struct RefinementCode {
    std::vector<int64_t> mu;  // 1-based block start indices, mu[0] == 1
    std::vector<int64_t> nu;  // block lengths, sum == fine length
};

inline bool operator==(const Chain& a, const Chain& b) {
    return a.epsilon == b.epsilon && a.pieces == b.pieces;
}
inline bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }
inline bool operator==(const RefinementCode& a, const RefinementCode& b) {
    return a.mu == b.mu && a.nu == b.nu;
}
inline bool operator!=(const RefinementCode& a, const RefinementCode& b) { return !(a == b); }

struct AccretionParams {
    DyadicCompactum base;     // A
    Rational epsilon;
    DyadicCompactum ambient;  // X, connected, with A inside it
};

// Cover of connected X by connected cell subsets of diameter < eps, union X.
// Greedy BFS balls: subdivide until the cell side drops below eps/4, then
// repeatedly grow a ball around the lex-least uncovered cell, of the largest
// graph radius whose metric span stays below eps.
inline std::vector<DyadicCompactum> cover_small(const DyadicCompactum& X0, Rational eps) {
    if (!(Rational(0) < eps)) throw std::invalid_argument("cover_small: eps must be positive");
    if (!connected(X0)) throw std::invalid_argument("cover_small: ambient not connected");
    if (Rational(diam(X0)) < eps) return {X0};

    DyadicCompactum X = X0;
    while (!(Rational(4) * Rational(X.side()) < eps)) X = subdivide(X, X.level + 1);

    // largest k with (2k+1) * side < eps; k >= 1 since side < eps/4
    int k = 0;
    while (Rational(2 * (k + 1) + 1) * Rational(X.side()) < eps) ++k;

    detail::CellIndex idx(X);
    auto offs = detail::neighbor_offsets(X.dim);
    int64_t bound = int64_t(1) << X.level;
    std::vector<int8_t> covered(X.size(), 0);
    std::vector<DyadicCompactum> out;
    std::vector<int32_t> nb(X.dim);
    std::vector<int32_t> dist(X.size());

    for (size_t seed = 0; seed < X.size(); ++seed) {
        if (covered[seed]) continue;
        std::vector<int32_t> ball;
        std::vector<int32_t> frontier{(int32_t)seed};
        std::fill(dist.begin(), dist.end(), -1);
        dist[seed] = 0;
        for (int depth = 0; depth <= k && !frontier.empty(); ++depth) {
            std::vector<int32_t> next;
            for (int32_t i : frontier) {
                auto c = X.cell(i);
                ball.insert(ball.end(), c.begin(), c.end());
                covered[i] = 1;
                if (depth == k) continue;
                for (auto& o : offs) {
                    bool ok = true;
                    for (int j = 0; j < X.dim; ++j) {
                        nb[j] = c[j] + o[j];
                        if (nb[j] < 0 || nb[j] >= bound) { ok = false; break; }
                    }
                    if (!ok) continue;
                    int32_t t = idx.find(nb);
                    if (t >= 0 && dist[t] < 0) { dist[t] = depth + 1; next.push_back(t); }
                }
            }
            frontier = std::move(next);
        }
        out.push_back(make_compactum(X.dim, X.level, std::move(ball)));
    }
    return out;
}

// S(X, A, eps): everything in X reachable from A through a finite sequence of
// connected cell sets D_1, D_2, ... with diam(D_i) <= eps * 2^-i, D_1 meeting
// A and consecutive sets meeting.  Round i adds every component of X clipped
// to an m_i-cell window that meets the current set, where m_i is the largest
// extent with m_i * side <= eps * 2^-i; rounds stop once that drops below one
// cell.  The result contains A, stays connected, and its diameter is at most
// 2*eps + diam(A) because the window extents sum below eps.
inline DyadicCompactum s_accretion(const AccretionParams& p) {
    DyadicCompactum X = p.ambient, A = p.base;
    if (X.dim != A.dim) throw std::invalid_argument("s_accretion: dimension mismatch");
    common_level(A, X);
    if (!connected(X)) throw std::invalid_argument("s_accretion: ambient not connected");
    detail::CellIndex idx(X);
    for (size_t i = 0; i < A.size(); ++i)
        if (idx.find(A.cell(i)) < 0)
            throw std::invalid_argument("s_accretion: base not inside ambient");

    auto offs = detail::neighbor_offsets(X.dim);
    int64_t bound = int64_t(1) << X.level;
    std::vector<int8_t> inS(X.size(), 0);
    for (size_t i = 0; i < A.size(); ++i) inS[idx.find(A.cell(i))] = 1;

    Rational side(X.side());
    std::vector<int32_t> nb(X.dim);
    auto meets_set = [&](int32_t i, const std::vector<int8_t>& mark) {
        if (mark[i]) return true;
        auto c = X.cell(i);
        for (auto& o : offs) {
            bool ok = true;
            for (int j = 0; j < X.dim; ++j) {
                nb[j] = c[j] + o[j];
                if (nb[j] < 0 || nb[j] >= bound) { ok = false; break; }
            }
            if (!ok) continue;
            int32_t t = idx.find(nb);
            if (t >= 0 && mark[t]) return true;
        }
        return false;
    };

    std::vector<int32_t> lo(X.dim), hi(X.dim);
    for (int j = 0; j < X.dim; ++j) {
        lo[j] = hi[j] = X.cell(0)[j];
        for (size_t i = 1; i < X.size(); ++i) {
            lo[j] = std::min(lo[j], X.cell(i)[j]);
            hi[j] = std::max(hi[j], X.cell(i)[j]);
        }
    }

    Rational radius = p.epsilon;
    for (int round = 1;; ++round) {
        radius = radius * Rational(1, 2);
        int64_t m = 0;
        while (Rational(m + 1) * side <= radius) ++m;
        if (m < 1) break;

        std::vector<int8_t> cur = inS;
        std::vector<int32_t> anchor(X.dim);
        for (int j = 0; j < X.dim; ++j)
            anchor[j] = (int32_t)std::max<int64_t>(0, int64_t(lo[j]) - m + 1);
        while (true) {
            std::vector<int32_t> inWin;
            for (size_t i = 0; i < X.size(); ++i) {
                auto c = X.cell(i);
                bool ok = true;
                for (int j = 0; j < X.dim; ++j)
                    if (c[j] < anchor[j] || c[j] >= anchor[j] + m) { ok = false; break; }
                if (ok) inWin.push_back((int32_t)i);
            }
            if (!inWin.empty()) {
                std::vector<int8_t> winMark(X.size(), 0), seen(X.size(), 0);
                for (int32_t i : inWin) winMark[i] = 1;
                for (int32_t s : inWin) {
                    if (seen[s]) continue;
                    std::vector<int32_t> comp, stack{s};
                    seen[s] = 1;
                    bool meets = false;
                    while (!stack.empty()) {
                        int32_t i = stack.back();
                        stack.pop_back();
                        comp.push_back(i);
                        if (meets_set(i, cur)) meets = true;
                        auto c = X.cell(i);
                        for (auto& o : offs) {
                            bool ok = true;
                            for (int j = 0; j < X.dim; ++j) {
                                nb[j] = c[j] + o[j];
                                if (nb[j] < 0 || nb[j] >= bound) { ok = false; break; }
                            }
                            if (!ok) continue;
                            int32_t t = idx.find(nb);
                            if (t >= 0 && winMark[t] && !seen[t]) {
                                seen[t] = 1;
                                stack.push_back(t);
                            }
                        }
                    }
                    if (meets)
                        for (int32_t i : comp) inS[i] = 1;
                }
            }
            int j = X.dim - 1;
            while (j >= 0 && anchor[j] >= hi[j]) {
                anchor[j] = (int32_t)std::max<int64_t>(0, int64_t(lo[j]) - m + 1);
                --j;
            }
            if (j < 0) break;
            ++anchor[j];
        }
    }

    std::vector<int32_t> flat;
    for (size_t i = 0; i < X.size(); ++i)
        if (inS[i]) {
            auto c = X.cell(i);
            flat.insert(flat.end(), c.begin(), c.end());
        }
    return make_compactum(X.dim, X.level, std::move(flat));
}

inline DyadicCompactum s_accretion(const DyadicCompactum& X, const DyadicCompactum& A,
                                   Rational eps) {
    return s_accretion(AccretionParams{A, eps, X});
}

// Cover by small Peano continua: seed pieces from cover_small at eps/3, each
// grown by accretion at eps/3.  Every output contains its seed, has diameter
// < eps, and the outputs still union to X.
inline std::vector<DyadicCompactum> cover_small_peano(const DyadicCompactum& X, Rational eps) {
    Rational third = eps * Rational(1, 3);
    auto seeds = cover_small(X, third);
    std::vector<DyadicCompactum> out;
    out.reserve(seeds.size());
    for (auto& s : seeds) out.push_back(s_accretion(X, s, third));
    return out;
}

// Walk on the touching graph of pieces от a piece containing x to a piece
// containing y: depth-first tree from the lex-least piece containing x, with
// the Euler tour cut along the tree path to the lex-least piece containing y,
// then shortcut wherever a repeated entry can be skipped.  Every piece
// appears, consecutive entries touch, and the walk length stays <= 2n.
inline Chain order_chain(const std::vector<DyadicCompactum>& pieces0, const Point& x,
                         const Point& y, Dyadic chainEps) {
    if (pieces0.empty()) throw std::invalid_argument("order_chain: no pieces");
    int n = (int)pieces0.size();

    // normalize to a common level so Chain invariants hold
    int lvl = 0;
    for (auto& p : pieces0) lvl = std::max(lvl, p.level);
    std::vector<DyadicCompactum> pieces;
    pieces.reserve(n);
    for (auto& p : pieces0) pieces.push_back(p.level == lvl ? p : subdivide(p, lvl));

    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (touches(pieces[i], pieces[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }

    auto least_containing = [&](const Point& p) {
        int best = -1;
        for (int i = 0; i < n; ++i)
            if (closed_member(pieces[i], p))
                if (best < 0 || compactum_less(pieces[i], pieces[best])) best = i;
        if (best < 0) throw std::invalid_argument("order_chain: point outside the union");
        return best;
    };
    int start = least_containing(x);
    int target = least_containing(y);

    // children priority: Hilbert index of the lex-least cell, then canonical order
    std::vector<uint64_t> hkey(n);
    for (int i = 0; i < n; ++i) hkey[i] = hilbert_index(pieces[i].cell(0), lvl, pieces[i].dim);
    auto prio_less = [&](int a, int b) {
        if (hkey[a] != hkey[b]) return hkey[a] < hkey[b];
        return compactum_less(pieces[a], pieces[b]);
    };
    for (auto& v : adj) std::sort(v.begin(), v.end(), prio_less);

    // DFS tree from start
    std::vector<int> parent(n, -2);
    std::vector<std::vector<int>> kids(n);
    {
        std::vector<int> stack{start};
        parent[start] = -1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (parent[v] == -2) {
                    parent[v] = u;
                    kids[u].push_back(v);
                    stack.push_back(v);
                }
        }
    }
    for (int i = 0; i < n; ++i)
        if (parent[i] == -2)
            throw std::invalid_argument("order_chain: union of pieces not connected");
    for (auto& v : kids) std::sort(v.begin(), v.end(), prio_less);

    // next hop toward target along the tree path
    std::vector<int> toTarget(n, -1);
    for (int u = target; parent[u] >= 0; u = parent[u]) toTarget[parent[u]] = u;

    // Euler tour with the target branch visited last at every node on the
    // path; backtracks along that path are omitted, so the walk ends at the
    // target after visiting everything.
    std::vector<std::vector<int>> ordered(n);
    for (int u = 0; u < n; ++u) {
        ordered[u] = kids[u];
        if (toTarget[u] >= 0) {
            auto& v = ordered[u];
            v.erase(std::find(v.begin(), v.end(), toTarget[u]));
            v.push_back(toTarget[u]);
        }
    }
    std::vector<int> walk;
    walk.reserve(2 * n);
    {
        struct Frame { int u; size_t i; };
        std::vector<Frame> fs;
        fs.push_back({start, 0});
        walk.push_back(start);
        while (!fs.empty()) {
            Frame& f = fs.back();
            if (f.i < ordered[f.u].size()) {
                int v = ordered[f.u][f.i++];
                walk.push_back(v);
                fs.push_back({v, 0});
            } else {
                int done = f.u;
                fs.pop_back();
                if (fs.empty()) break;
                // returning from the target branch means everything after is
                // already visited: stop without emitting the backtrack
                if (toTarget[fs.back().u] == done) {
                    fs.clear();
                    break;
                }
                walk.push_back(fs.back().u);
            }
        }
    }

    // Shortcut pass: drop a repeated entry when its removal leaves the walk
    // touching.  The verified successor is emitted in the same step so a later
    // removal cannot invalidate the pair that justified this one.
    std::vector<int> occurrences(n, 0);
    for (int u : walk) ++occurrences[u];
    auto touch_idx = [&](int a, int b) {
        return a == b || std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    };
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> next;
        next.reserve(walk.size());
        for (size_t i = 0; i < walk.size(); ++i) {
            int u = walk[i];
            bool interior = !next.empty() && i + 1 < walk.size();
            if (interior && occurrences[u] > 1) {
                int prev = next.back(), nxt = walk[i + 1];
                if (prev == u || touch_idx(prev, nxt)) {
                    --occurrences[u];
                    changed = true;
                    next.push_back(nxt);
                    ++i;
                    continue;
                }
            }
            next.push_back(u);
        }
        walk = std::move(next);
    }

    Chain out;
    out.epsilon = chainEps;
    out.pieces.reserve(walk.size());
    for (int u : walk) out.pieces.push_back(pieces[u]);
    return out;
}

namespace detail {

// Components of K intersected with the dyadic boxes of side 2^-(n+1): the
// tight refinement cover.  Pieces are disjoint, connected, of diameter
// <= 2^-(n+1) < 2^-n, and union to K exactly.
inline std::vector<DyadicCompactum> quadrant_components(const DyadicCompactum& K0, int n) {
    DyadicCompactum K = K0.level >= n + 1 ? K0 : subdivide(K0, n + 1);
    int shift = K.level - (n + 1);
    std::unordered_map<uint64_t, std::vector<int32_t>> byBox;
    for (size_t i = 0; i < K.size(); ++i) {
        auto c = K.cell(i);
        uint64_t key = 0;
        for (int j = 0; j < K.dim; ++j)
            key = (key << (n + 2)) | uint64_t(uint32_t(c[j] >> shift));
        auto& flat = byBox[key];
        flat.insert(flat.end(), c.begin(), c.end());
    }
    std::vector<DyadicCompactum> out;
    for (auto& [key, flat] : byBox) {
        auto comps = components(make_compactum(K.dim, K.level, std::move(flat)));
        out.insert(out.end(), comps.begin(), comps.end());
    }
    std::sort(out.begin(), out.end(), compactum_less);
    return out;
}

}  // namespace detail

// One refinement step: each coarse piece K_i is covered by its quadrant
// components and walked from the contact point with K_{i-1} to the contact
// point with K_{i+1} (the chain endpoints for the first and last block).
// Blocks concatenate into a weak 2^-n chain refining the input, coded by
// mu (block starts) and nu (block lengths).
inline std::pair<Chain, RefinementCode> refine_chain(const Chain& coarse, int n) {
    if (coarse.pieces.empty()) throw std::invalid_argument("refine_chain: empty chain");
    Dyadic prevEps = dy_pow2(-(n - 1));
    for (auto& p : coarse.pieces) {
        if (!(diam(p) < prevEps))
            throw std::invalid_argument("refine_chain: coarse piece too large for its level");
        if (!connected(p)) throw std::invalid_argument("refine_chain: coarse piece not connected");
    }
    for (size_t i = 1; i < coarse.pieces.size(); ++i)
        if (!touches(coarse.pieces[i - 1], coarse.pieces[i]))
            throw std::invalid_argument("refine_chain: coarse pieces must touch consecutively");

    size_t k = coarse.pieces.size();
    Dyadic eps = dy_pow2(-n);
    Chain fine;
    fine.epsilon = eps;
    RefinementCode code;
    code.mu.reserve(k);
    code.nu.reserve(k);

    int64_t pos = 1;
    for (size_t i = 0; i < k; ++i) {
        const auto& Ki = coarse.pieces[i];
        Point entry = (i == 0) ? canonical_point(Ki) : contact_point(coarse.pieces[i - 1], Ki);
        Point exit = (i + 1 == k) ? canonical_point(Ki) : contact_point(Ki, coarse.pieces[i + 1]);
        auto pieces = detail::quadrant_components(Ki, n);
        Chain block = order_chain(pieces, entry, exit, eps);
        code.mu.push_back(pos);
        code.nu.push_back((int64_t)block.pieces.size());
        pos += (int64_t)block.pieces.size();
        for (auto& p : block.pieces) fine.pieces.push_back(std::move(p));
    }
    return {std::move(fine), std::move(code)};
}

struct ChainValidation {
    bool nonempty = false;
    bool pieces_connected = false;
    bool diam_ok = false;
    bool touch_ok = false;
    bool union_ok = false;
    bool ok() const { return nonempty && pieces_connected && diam_ok && touch_ok && union_ok; }
};

// The weak-chain clauses, checked verbatim.
inline ChainValidation validate_chain(const Chain& chain, const DyadicCompactum& X) {
    ChainValidation v;
    v.nonempty = !chain.pieces.empty();
    if (!v.nonempty) return v;
    v.pieces_connected = true;
    v.diam_ok = true;
    for (auto& p : chain.pieces) {
        if (!(diam(p) < chain.epsilon)) v.diam_ok = false;
        if (!connected(p)) v.pieces_connected = false;
    }
    v.touch_ok = true;
    for (size_t i = 1; i < chain.pieces.size(); ++i)
        if (!touches(chain.pieces[i - 1], chain.pieces[i])) v.touch_ok = false;

    int lvl = X.level;
    for (auto& p : chain.pieces) lvl = std::max(lvl, p.level);
    std::unordered_set<uint64_t> cover;
    for (auto& p0 : chain.pieces) {
        DyadicCompactum p = p0.level == lvl ? p0 : subdivide(p0, lvl);
        for (size_t i = 0; i < p.size(); ++i) cover.insert(detail::cell_key(p.cell(i), lvl));
    }
    DyadicCompactum Xs = X.level == lvl ? X : subdivide(X, lvl);
    v.union_ok = cover.size() == Xs.size();
    if (v.union_ok)
        for (size_t i = 0; i < Xs.size() && v.union_ok; ++i)
            if (!cover.count(detail::cell_key(Xs.cell(i), lvl))) v.union_ok = false;
    return v;
}

struct RefinementValidation {
    bool mu_ok = false;      // mu strictly increasing from 1, lengths match
    bool nu_ok = false;      // nu from mu by differencing; sums to fine length
    bool blocks_ok = false;  // block unions equal the coarse pieces exactly
    bool ok() const { return mu_ok && nu_ok && blocks_ok; }
};

inline RefinementValidation validate_refinement(const Chain& coarse, const Chain& fine,
                                                const RefinementCode& code) {
    RefinementValidation v;
    size_t k = coarse.pieces.size();
    int64_t l = (int64_t)fine.pieces.size();
    v.mu_ok = code.mu.size() == k && !code.mu.empty() && code.mu[0] == 1;
    for (size_t i = 1; i < code.mu.size() && v.mu_ok; ++i)
        if (!(code.mu[i - 1] < code.mu[i]) || code.mu[i] > l) v.mu_ok = false;
    v.nu_ok = code.nu.size() == k;
    if (v.nu_ok && v.mu_ok) {
        int64_t sum = 0;
        for (size_t i = 0; i < k; ++i) {
            int64_t expect = (i + 1 < k) ? code.mu[i + 1] - code.mu[i] : l + 1 - code.mu[i];
            if (code.nu[i] != expect) { v.nu_ok = false; break; }
            sum += code.nu[i];
        }
        if (v.nu_ok && sum != l) v.nu_ok = false;
    }
    v.blocks_ok = v.mu_ok && v.nu_ok;
    if (v.blocks_ok) {
        for (size_t i = 0; i < k && v.blocks_ok; ++i) {
            int lvl = coarse.pieces[i].level;
            for (int64_t j = code.mu[i] - 1; j < code.mu[i] - 1 + code.nu[i]; ++j)
                lvl = std::max(lvl, fine.pieces[j].level);
            std::unordered_set<uint64_t> unionCells;
            for (int64_t j = code.mu[i] - 1; j < code.mu[i] - 1 + code.nu[i]; ++j) {
                DyadicCompactum p = fine.pieces[j].level == lvl
                                        ? fine.pieces[j]
                                        : subdivide(fine.pieces[j], lvl);
                for (size_t c = 0; c < p.size(); ++c)
                    unionCells.insert(detail::cell_key(p.cell(c), lvl));
            }
            DyadicCompactum Ki = coarse.pieces[i].level == lvl ? coarse.pieces[i]
                                                               : subdivide(coarse.pieces[i], lvl);
            if (unionCells.size() != Ki.size()) { v.blocks_ok = false; break; }
            for (size_t c = 0; c < Ki.size(); ++c)
                if (!unionCells.count(detail::cell_key(Ki.cell(c), lvl))) {
                    v.blocks_ok = false;
                    break;
                }
        }
    }
    return v;
}

}  // namespace peano
