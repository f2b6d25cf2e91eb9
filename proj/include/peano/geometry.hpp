#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "peano/rational.hpp"

// Dyadic-cell geometry in [0,1]^d under the sup metric.
//
// A cell at level r is the closed box prod_i [c_i/2^r, (c_i+1)/2^r] with
// integer coordinates 0 <= c_i < 2^r.  A DyadicCompactum is a nonempty finite
// set of cells sharing one level; it stands for the closed union of its
// boxes.  Everything here is a pure function over immutable values and all
// distances come out as exact dyadic rationals.
//
// Adjacency includes corner contact: two closed cells touch iff their integer
// coordinates differ by at most 1 in every axis, which matches topological
// connectivity of the closed union.

namespace peano {

struct Point {
    std::vector<Dyadic> coords;

    int dim() const { return (int)coords.size(); }
};

inline bool operator==(const Point& a, const Point& b) {
    if (a.coords.size() != b.coords.size()) return false;
    for (size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] != b.coords[i]) return false;
    return true;
}
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }

inline bool lex_less(const Point& a, const Point& b) {
    for (size_t i = 0; i < a.coords.size() && i < b.coords.size(); ++i) {
        if (a.coords[i] < b.coords[i]) return true;
        if (b.coords[i] < a.coords[i]) return false;
    }
    return a.coords.size() < b.coords.size();
}

inline Dyadic linf(const Point& a, const Point& b) {
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("linf: dimension mismatch");
    Dyadic m(0);
    for (size_t i = 0; i < a.coords.size(); ++i)
        m = dy_max(m, dy_abs(a.coords[i] - b.coords[i]));
    return m;
}

struct DyadicCompactum {
    int dim = 0;
    int level = 0;
    std::vector<int32_t> cells;  // flat, dim-strided, lex sorted, deduplicated

    size_t size() const { return dim ? cells.size() / dim : 0; }
    std::span<const int32_t> cell(size_t i) const {
        return std::span<const int32_t>(cells.data() + i * dim, dim);
    }
    Dyadic side() const { return dy_pow2(-level); }
};

namespace detail {

inline bool cell_lex_less(std::span<const int32_t> a, std::span<const int32_t> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Cells pack into one 64-bit key while dim*level stays small; the factories
// reject resolutions past that, which is far beyond anything this library
// is meant to run at.
inline uint64_t cell_key(std::span<const int32_t> c, int level) {
    uint64_t k = 0;
    for (int32_t v : c) k = (k << (level + 1)) | uint64_t(uint32_t(v));
    return k;
}

struct CellIndex {
    std::unordered_map<uint64_t, int32_t> map;
    int level;
    explicit CellIndex(const DyadicCompactum& K) : level(K.level) {
        map.reserve(K.size() * 2);
        for (size_t i = 0; i < K.size(); ++i)
            map.emplace(cell_key(K.cell(i), K.level), (int32_t)i);
    }
    int32_t find(std::span<const int32_t> c) const {
        auto it = map.find(cell_key(c, level));
        return it == map.end() ? -1 : it->second;
    }
};

// All 3^d - 1 neighbor offsets.
inline std::vector<std::vector<int32_t>> neighbor_offsets(int dim) {
    std::vector<std::vector<int32_t>> out;
    std::vector<int32_t> cur(dim, -1);
    while (true) {
        bool zero = std::all_of(cur.begin(), cur.end(), [](int32_t v) { return v == 0; });
        if (!zero) out.push_back(cur);
        int i = dim - 1;
        while (i >= 0 && cur[i] == 1) cur[i--] = -1;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

}  // namespace detail

inline DyadicCompactum make_compactum(int dim, int level, std::vector<int32_t> flat) {
    if (dim < 1) throw std::invalid_argument("compactum: dim must be positive");
    if (level < 0 || (level + 1) * dim > 62)
        throw std::invalid_argument("compactum: level out of supported range");
    if (flat.empty() || flat.size() % dim != 0)
        throw std::invalid_argument("compactum: needs a nonempty multiple-of-dim cell list");
    int64_t bound = int64_t(1) << level;
    for (int32_t v : flat)
        if (v < 0 || v >= bound) throw std::invalid_argument("compactum: cell out of range");

    size_t n = flat.size() / dim;
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    auto at = [&](size_t i) {
        return std::span<const int32_t>(flat.data() + i * dim, (size_t)dim);
    };
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return detail::cell_lex_less(at(a), at(b)); });

    DyadicCompactum K;
    K.dim = dim;
    K.level = level;
    K.cells.reserve(flat.size());
    for (size_t i = 0; i < n; ++i) {
        auto c = at(order[i]);
        if (!K.cells.empty()) {
            std::span<const int32_t> last(K.cells.data() + K.cells.size() - dim, (size_t)dim);
            if (std::equal(last.begin(), last.end(), c.begin())) continue;
        }
        K.cells.insert(K.cells.end(), c.begin(), c.end());
    }
    return K;
}

inline bool operator==(const DyadicCompactum& a, const DyadicCompactum& b) {
    return a.dim == b.dim && a.level == b.level && a.cells == b.cells;
}
inline bool operator!=(const DyadicCompactum& a, const DyadicCompactum& b) { return !(a == b); }

// Canonical total order: lex-least cell, then size, then full cell list.
inline bool compactum_less(const DyadicCompactum& a, const DyadicCompactum& b) {
    if (a.cells != b.cells)
        return std::lexicographical_compare(a.cells.begin(), a.cells.end(),
                                            b.cells.begin(), b.cells.end());
    return false;
}

inline DyadicCompactum subdivide(const DyadicCompactum& K, int targetLevel) {
    if (targetLevel < K.level)
        throw std::invalid_argument("subdivide: target level below current");
    if (targetLevel == K.level) return K;
    int delta = targetLevel - K.level;
    if ((targetLevel + 1) * K.dim > 62)
        throw std::invalid_argument("subdivide: level out of supported range");
    std::vector<int32_t> flat;
    flat.reserve(K.cells.size() << (K.dim * delta));
    std::vector<int32_t> child(K.dim);
    for (size_t i = 0; i < K.size(); ++i) {
        auto c = K.cell(i);
        // enumerate the 2^(d*delta) children
        std::vector<int32_t> off(K.dim, 0);
        while (true) {
            for (int j = 0; j < K.dim; ++j) child[j] = (c[j] << delta) + off[j];
            flat.insert(flat.end(), child.begin(), child.end());
            int j = K.dim - 1;
            while (j >= 0 && off[j] == (1 << delta) - 1) off[j--] = 0;
            if (j < 0) break;
            ++off[j];
        }
    }
    return make_compactum(K.dim, targetLevel, std::move(flat));
}

inline void common_level(DyadicCompactum& a, DyadicCompactum& b) {
    if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
    int lvl = std::max(a.level, b.level);
    if (a.level < lvl) a = subdivide(a, lvl);
    if (b.level < lvl) b = subdivide(b, lvl);
}

// Sup-metric diameter of the closed union: the largest axis extent.
inline Dyadic diam(const DyadicCompactum& K) {
    Dyadic best(0);
    for (int j = 0; j < K.dim; ++j) {
        int32_t lo = K.cell(0)[j], hi = lo;
        for (size_t i = 1; i < K.size(); ++i) {
            lo = std::min(lo, K.cell(i)[j]);
            hi = std::max(hi, K.cell(i)[j]);
        }
        best = dy_max(best, Dyadic(int64_t(hi) - lo + 1, K.level));
    }
    return best;
}

inline bool touches(const DyadicCompactum& K0, const DyadicCompactum& L0) {
    DyadicCompactum K = K0, L = L0;
    common_level(K, L);
    const DyadicCompactum& small = K.size() <= L.size() ? K : L;
    const DyadicCompactum& big = K.size() <= L.size() ? L : K;
    detail::CellIndex idx(big);
    auto offs = detail::neighbor_offsets(K.dim);
    int64_t bound = int64_t(1) << K.level;
    std::vector<int32_t> nb(K.dim);
    for (size_t i = 0; i < small.size(); ++i) {
        auto c = small.cell(i);
        if (idx.find(c) >= 0) return true;
        for (auto& o : offs) {
            bool ok = true;
            for (int j = 0; j < K.dim; ++j) {
                nb[j] = c[j] + o[j];
                if (nb[j] < 0 || nb[j] >= bound) { ok = false; break; }
            }
            if (ok && idx.find(nb) >= 0) return true;
        }
    }
    return false;
}

struct Intersection {
    DyadicCompactum cells;
    bool contact_only = false;
};

// Shared cells when the interiors overlap; otherwise the cells of K realizing
// boundary contact, flagged contact_only.  Only ever used to pick a point
// inside the (closed) intersection.
inline Intersection intersect(const DyadicCompactum& K0, const DyadicCompactum& L0) {
    DyadicCompactum K = K0, L = L0;
    common_level(K, L);
    detail::CellIndex idx(L);
    std::vector<int32_t> shared;
    for (size_t i = 0; i < K.size(); ++i) {
        auto c = K.cell(i);
        if (idx.find(c) >= 0) shared.insert(shared.end(), c.begin(), c.end());
    }
    if (!shared.empty())
        return {make_compactum(K.dim, K.level, std::move(shared)), false};

    auto offs = detail::neighbor_offsets(K.dim);
    int64_t bound = int64_t(1) << K.level;
    std::vector<int32_t> nb(K.dim), contact;
    for (size_t i = 0; i < K.size(); ++i) {
        auto c = K.cell(i);
        bool hit = false;
        for (auto& o : offs) {
            bool ok = true;
            for (int j = 0; j < K.dim; ++j) {
                nb[j] = c[j] + o[j];
                if (nb[j] < 0 || nb[j] >= bound) { ok = false; break; }
            }
            if (ok && idx.find(nb) >= 0) { hit = true; break; }
        }
        if (hit) contact.insert(contact.end(), c.begin(), c.end());
    }
    if (contact.empty()) throw std::invalid_argument("intersect: disjoint inputs");
    return {make_compactum(K.dim, K.level, std::move(contact)), true};
}

inline std::vector<DyadicCompactum> components(const DyadicCompactum& K) {
    detail::CellIndex idx(K);
    auto offs = detail::neighbor_offsets(K.dim);
    int64_t bound = int64_t(1) << K.level;
    std::vector<int8_t> seen(K.size(), 0);
    std::vector<DyadicCompactum> out;
    std::vector<int32_t> nb(K.dim);
    for (size_t s = 0; s < K.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int32_t> flat;
        std::vector<int32_t> stack{(int32_t)s};
        seen[s] = 1;
        while (!stack.empty()) {
            int32_t i = stack.back();
            stack.pop_back();
            auto c = K.cell(i);
            flat.insert(flat.end(), c.begin(), c.end());
            for (auto& o : offs) {
                bool ok = true;
                for (int j = 0; j < K.dim; ++j) {
                    nb[j] = c[j] + o[j];
                    if (nb[j] < 0 || nb[j] >= bound) { ok = false; break; }
                }
                if (!ok) continue;
                int32_t t = idx.find(nb);
                if (t >= 0 && !seen[t]) { seen[t] = 1; stack.push_back(t); }
            }
        }
        out.push_back(make_compactum(K.dim, K.level, std::move(flat)));
    }
    // cells were discovered from increasing seeds, so components are already
    // ordered by their lex-least cell
    return out;
}

inline bool connected(const DyadicCompactum& K) { return components(K).size() == 1; }

inline Point canonical_point(const DyadicCompactum& K) {
    Point p;
    p.coords.reserve(K.dim);
    auto c = K.cell(0);  // lex-least cell
    for (int j = 0; j < K.dim; ++j) p.coords.push_back(Dyadic(c[j], K.level));
    return p;
}

inline bool closed_member(const DyadicCompactum& K, const Point& p) {
    if (p.dim() != K.dim) throw std::invalid_argument("closed_member: dimension mismatch");
    for (size_t i = 0; i < K.size(); ++i) {
        auto c = K.cell(i);
        bool in = true;
        for (int j = 0; j < K.dim && in; ++j) {
            Dyadic lo(c[j], K.level), hi(int64_t(c[j]) + 1, K.level);
            if (p.coords[j] < lo || p.coords[j] > hi) in = false;
        }
        if (in) return true;
    }
    return false;
}

// Corner of K minimizing a score; ties broken lexicographically.
template <class ScoreFn>
inline Point argmin_select(const DyadicCompactum& K, ScoreFn&& score) {
    bool have = false;
    Point best;
    Dyadic bestScore(0);
    std::vector<int32_t> off(K.dim, 0);
    for (size_t i = 0; i < K.size(); ++i) {
        auto c = K.cell(i);
        std::fill(off.begin(), off.end(), 0);
        while (true) {
            Point p;
            p.coords.reserve(K.dim);
            for (int j = 0; j < K.dim; ++j)
                p.coords.push_back(Dyadic(int64_t(c[j]) + off[j], K.level));
            Dyadic s = score(p);
            if (!have || s < bestScore || (s == bestScore && lex_less(p, best))) {
                have = true;
                best = p;
                bestScore = s;
            }
            int j = K.dim - 1;
            while (j >= 0 && off[j] == 1) off[j--] = 0;
            if (j < 0) break;
            ++off[j];
        }
    }
    return best;
}

// Lex-least point of the closed intersection of two touching compacta.  For a
// touching cell pair the intersection is the box with lower corner
// max(a_i,b_i) per axis, so the overall minimum over pairs is exact.
inline Point contact_point(const DyadicCompactum& K0, const DyadicCompactum& L0) {
    DyadicCompactum K = K0, L = L0;
    common_level(K, L);
    detail::CellIndex idx(L);
    auto offs = detail::neighbor_offsets(K.dim);
    int64_t bound = int64_t(1) << K.level;
    bool have = false;
    std::vector<int32_t> bestCorner(K.dim), nb(K.dim), corner(K.dim);
    auto consider = [&](std::span<const int32_t> a, std::span<const int32_t> b) {
        for (int j = 0; j < K.dim; ++j) corner[j] = std::max(a[j], b[j]);
        if (!have || std::lexicographical_compare(corner.begin(), corner.end(),
                                                  bestCorner.begin(), bestCorner.end())) {
            have = true;
            bestCorner = corner;
        }
    };
    for (size_t i = 0; i < K.size(); ++i) {
        auto c = K.cell(i);
        if (idx.find(c) >= 0) consider(c, c);
        for (auto& o : offs) {
            bool ok = true;
            for (int j = 0; j < K.dim; ++j) {
                nb[j] = c[j] + o[j];
                if (nb[j] < 0 || nb[j] >= bound) { ok = false; break; }
            }
            if (ok && idx.find(nb) >= 0) consider(c, nb);
        }
    }
    if (!have) throw std::invalid_argument("contact_point: disjoint inputs");
    Point p;
    p.coords.reserve(K.dim);
    for (int j = 0; j < K.dim; ++j) p.coords.push_back(Dyadic(bestCorner[j], K.level));
    return p;
}

namespace detail {

// dist(p, closed union of B) for p a lattice point, by direct box scan.
inline Dyadic point_to_cells(const std::vector<int64_t>& p, int plevel,
                             const DyadicCompactum& B) {
    Dyadic best(0);
    bool have = false;
    for (size_t i = 0; i < B.size(); ++i) {
        auto c = B.cell(i);
        Dyadic d(0);
        for (int j = 0; j < B.dim; ++j) {
            Dyadic x(p[j], plevel);
            Dyadic lo(c[j], B.level), hi(int64_t(c[j]) + 1, B.level);
            if (x < lo) d = dy_max(d, lo - x);
            else if (x > hi) d = dy_max(d, x - hi);
        }
        if (!have || d < best) { have = true; best = d; }
        if (best.is_zero()) break;
    }
    return best;
}

// max over points of the half lattice of A (corners of the once-subdivided
// cells) of the distance to B.  Under the sup metric the distance field to a
// union of boxes is piecewise linear with breakpoints on the half lattice, so
// this scan is exact, not an approximation.
inline Dyadic directed_hausdorff(const DyadicCompactum& A, const DyadicCompactum& B) {
    int plevel = A.level + 1;
    std::unordered_set<uint64_t> seen;
    Dyadic best(0);
    std::vector<int64_t> p(A.dim);
    std::vector<int32_t> off(A.dim, 0);
    for (size_t i = 0; i < A.size(); ++i) {
        auto c = A.cell(i);
        std::fill(off.begin(), off.end(), 0);
        while (true) {
            uint64_t key = 0;
            for (int j = 0; j < A.dim; ++j) {
                p[j] = int64_t(c[j]) * 2 + off[j];
                key = (key << (plevel + 2)) | uint64_t(p[j]);
            }
            if (seen.insert(key).second) best = dy_max(best, point_to_cells(p, plevel, B));
            int j = A.dim - 1;
            while (j >= 0 && off[j] == 2) off[j--] = 0;
            if (j < 0) break;
            ++off[j];
        }
    }
    return best;
}

// Chebyshev distance field on the level-g corner lattice, seeded from the
// lattice points of the source cells (king-move BFS gives the exact sup
// metric distance between lattice points).
inline std::vector<int32_t> lattice_field(const DyadicCompactum& src, int g) {
    if (src.level + 1 != g) throw std::invalid_argument("lattice_field: level mismatch");
    int d = src.dim;
    int64_t n = (int64_t(1) << g) + 1;
    size_t total = 1;
    for (int j = 0; j < d; ++j) {
        total *= (size_t)n;
        if (total > size_t(6e7)) throw std::invalid_argument("lattice_field: grid too large");
    }
    std::vector<int32_t> dist(total, -1);
    auto flatten = [&](const std::vector<int64_t>& q) {
        size_t f = 0;
        for (int j = 0; j < d; ++j) f = f * n + (size_t)q[j];
        return f;
    };
    std::deque<std::vector<int64_t>> queue;
    std::vector<int64_t> q(d);
    std::vector<int32_t> off(d, 0);
    for (size_t i = 0; i < src.size(); ++i) {
        auto c = src.cell(i);
        std::fill(off.begin(), off.end(), 0);
        while (true) {
            for (int j = 0; j < d; ++j) q[j] = int64_t(c[j]) * 2 + off[j];
            size_t f = flatten(q);
            if (dist[f] != 0) { dist[f] = 0; queue.push_back(q); }
            int j = d - 1;
            while (j >= 0 && off[j] == 2) off[j--] = 0;
            if (j < 0) break;
            ++off[j];
        }
    }
    auto offs = neighbor_offsets(d);
    std::vector<int64_t> nb(d);
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        int32_t dc = dist[flatten(cur)];
        for (auto& o : offs) {
            bool ok = true;
            for (int j = 0; j < d; ++j) {
                nb[j] = cur[j] + o[j];
                if (nb[j] < 0 || nb[j] >= n) { ok = false; break; }
            }
            if (!ok) continue;
            size_t f = flatten(nb);
            if (dist[f] < 0) { dist[f] = dc + 1; queue.push_back(nb); }
        }
    }
    return dist;
}

inline Dyadic directed_hausdorff_lattice(const DyadicCompactum& A,
                                         const std::vector<int32_t>& fieldFromB, int g) {
    int d = A.dim;
    int64_t n = (int64_t(1) << g) + 1;
    int32_t worst = 0;
    std::vector<int64_t> q(d);
    std::vector<int32_t> off(d, 0);
    for (size_t i = 0; i < A.size(); ++i) {
        auto c = A.cell(i);
        std::fill(off.begin(), off.end(), 0);
        while (true) {
            size_t f = 0;
            for (int j = 0; j < d; ++j) f = f * n + size_t(int64_t(c[j]) * 2 + off[j]);
            worst = std::max(worst, fieldFromB[f]);
            int j = d - 1;
            while (j >= 0 && off[j] == 2) off[j--] = 0;
            if (j < 0) break;
            ++off[j];
        }
    }
    return Dyadic(worst, g);
}

}  // namespace detail

// Exact Hausdorff distance between the closed unions, sup metric.  Small
// inputs use a direct corner scan; larger ones a lattice BFS.  Both are exact
// because the sup-metric distance field to a union of boxes is piecewise
// linear with all breakpoints on the half-cell lattice.
inline Dyadic hausdorff(const DyadicCompactum& K0, const DyadicCompactum& L0) {
    DyadicCompactum K = K0, L = L0;
    common_level(K, L);
    size_t scanCost = K.size() * L.size() << K.dim;
    if (scanCost > 2'000'000) {
        int g = K.level + 1;
        double nodes = 1;
        for (int j = 0; j < K.dim; ++j) nodes *= double((int64_t(1) << g) + 1);
        if (nodes <= 6e7) {
            auto fieldK = detail::lattice_field(K, g);
            auto fieldL = detail::lattice_field(L, g);
            return dy_max(detail::directed_hausdorff_lattice(K, fieldL, g),
                          detail::directed_hausdorff_lattice(L, fieldK, g));
        }
    }
    return dy_max(detail::directed_hausdorff(K, L), detail::directed_hausdorff(L, K));
}

// max over the closed union of X of the distance to a finite point set whose
// coordinates all lie on the level `glevel` lattice.  Runs a Chebyshev BFS on
// that lattice; exact for the same piecewise-linear reason as hausdorff.
inline Dyadic max_dist_to_points(const DyadicCompactum& X, const std::vector<Point>& pts,
                                 int glevel) {
    if (pts.empty()) throw std::invalid_argument("max_dist_to_points: empty point set");
    if (X.dim > 2 && glevel > 8)
        throw std::invalid_argument("max_dist_to_points: lattice too large");
    int64_t n = (int64_t(1) << glevel) + 1;
    int d = X.dim;
    size_t total = 1;
    for (int j = 0; j < d; ++j) total *= (size_t)n;
    std::vector<int32_t> dist(total, -1);
    auto flatten = [&](const std::vector<int64_t>& q) {
        size_t f = 0;
        for (int j = 0; j < d; ++j) f = f * n + (size_t)q[j];
        return f;
    };
    std::deque<std::vector<int64_t>> queue;
    for (const auto& p : pts) {
        std::vector<int64_t> q(d);
        for (int j = 0; j < d; ++j) {
            Dyadic scaled = p.coords[j] * Dyadic(int64_t(1) << glevel, 0);
            if (scaled.exp != 0) throw std::invalid_argument("point off the sample lattice");
            q[j] = scaled.num;
        }
        size_t f = flatten(q);
        if (dist[f] != 0) { dist[f] = 0; queue.push_back(std::move(q)); }
    }
    auto offs = detail::neighbor_offsets(d);
    while (!queue.empty()) {
        auto q = queue.front();
        queue.pop_front();
        int32_t dcur = dist[flatten(q)];
        std::vector<int64_t> nb(d);
        for (auto& o : offs) {
            bool ok = true;
            for (int j = 0; j < d; ++j) {
                nb[j] = q[j] + o[j];
                if (nb[j] < 0 || nb[j] >= n) { ok = false; break; }
            }
            if (!ok) continue;
            size_t f = flatten(nb);
            if (dist[f] < 0) { dist[f] = dcur + 1; queue.push_back(nb); }
        }
    }
    // scan lattice points of X's closed union
    DyadicCompactum Xs = X.level >= glevel ? X : subdivide(X, glevel);
    int shift = Xs.level - glevel;
    if (shift < 0) throw std::invalid_argument("max_dist_to_points: lattice coarser than X");
    int32_t worst = 0;
    std::vector<int64_t> q(d);
    std::vector<int32_t> off(d, 0);
    for (size_t i = 0; i < Xs.size(); ++i) {
        auto c = Xs.cell(i);
        std::fill(off.begin(), off.end(), 0);
        while (true) {
            bool onGrid = true;
            for (int j = 0; j < d; ++j) {
                int64_t num = int64_t(c[j]) + off[j];  // corner at Xs.level
                if (num & ((int64_t(1) << shift) - 1)) { onGrid = false; break; }
                q[j] = num >> shift;
            }
            if (onGrid) worst = std::max(worst, dist[flatten(q)]);
            int j = d - 1;
            while (j >= 0 && off[j] == 1) off[j--] = 0;
            if (j < 0) break;
            ++off[j];
        }
    }
    return Dyadic(worst, glevel);
}

}  // namespace peano
