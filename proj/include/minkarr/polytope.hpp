#pragma once

// Exact convex hulls, volumes and interior-disjointness for d <= 3.

#include "minkarr/body.hpp"
#include "minkarr/scalar.hpp"
#include "minkarr/vector.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace minkarr {

template <Scalar S>
struct Polytope {
    std::size_t dim = 0;
    std::vector<Vector<S>> vertices;
    std::vector<Facet<S>> facets;  // outward: normal·x <= offset
    std::vector<std::vector<std::size_t>> facet_vertices;

    bool contains(const Vector<S>& p) const
    {
        return std::all_of(facets.begin(), facets.end(),
                           [&](const Facet<S>& f) { return num::le(f.normal.dot(p), f.offset); });
    }
};

template <Scalar S>
struct HullResult {
    std::size_t affine_dim = 0;
    std::optional<Polytope<S>> polytope;  // set only when full-dimensional
    bool full_dimensional() const { return polytope.has_value(); }
};

inline constexpr std::size_t max_exact_dim = 3;

template <Scalar S>
std::size_t affine_dimension(const std::vector<Vector<S>>& pts)
{
    if (pts.size() < 2) return 0;
    std::vector<Vector<S>> diffs;
    for (std::size_t k = 1; k < pts.size(); ++k) diffs.push_back(pts[k] - pts[0]);
    return linalg::rank(diffs);
}

// Coordinates of the points in a basis of their affine hull (an injective
// affine map onto R^{affine_dim}).
template <Scalar S>
std::vector<Vector<S>> affine_coordinates(const std::vector<Vector<S>>& pts)
{
    if (pts.empty()) return {};
    const std::size_t d = pts.front().dim();
    std::vector<Vector<S>> basis;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        auto trial = basis;
        trial.push_back(pts[k] - pts[0]);
        if (linalg::rank(trial) > basis.size()) basis = std::move(trial);
    }
    const std::size_t m = basis.size();
    // pick m coordinates on which the basis is invertible
    std::vector<std::size_t> rows;
    for (std::size_t c = 0; c < d && rows.size() < m; ++c) {
        auto trial = rows;
        trial.push_back(c);
        std::vector<Vector<S>> sub;
        for (std::size_t r : trial) {
            Vector<S> row(m);
            for (std::size_t b = 0; b < m; ++b) row[b] = basis[b][r];
            sub.push_back(row);
        }
        if (linalg::rank(sub) == trial.size()) rows = std::move(trial);
    }
    std::vector<Vector<S>> a;
    for (std::size_t r : rows) {
        Vector<S> row(m);
        for (std::size_t b = 0; b < m; ++b) row[b] = basis[b][r];
        a.push_back(row);
    }
    std::vector<Vector<S>> out;
    for (const auto& p : pts) {
        Vector<S> rhs(m);
        for (std::size_t k = 0; k < m; ++k) rhs[k] = p[rows[k]] - pts[0][rows[k]];
        if (m == 0) {
            out.emplace_back(0);
            continue;
        }
        out.push_back(*linalg::solve(a, rhs));
    }
    return out;
}

namespace detail {

// Scales a facet so the first nonzero normal coordinate has absolute value 1.
template <Scalar S>
Facet<S> canonical(Facet<S> f)
{
    std::size_t c = 0;
    while (num::is_zero(f.normal[c])) ++c;
    const S s = num::abs(f.normal[c]);
    f.normal /= s;
    f.offset /= s;
    return f;
}

template <Scalar S>
void order_polygon(std::vector<std::size_t>& idx, const std::vector<Vector<S>>& v,
                   const std::optional<Vector<S>>& normal)
{
    if (idx.size() < 3) return;
    auto pivot_it = std::min_element(idx.begin(), idx.end(),
                                     [&](std::size_t a, std::size_t b) { return lex_less(v[a], v[b]); });
    std::iter_swap(idx.begin(), pivot_it);
    const auto& p = v[idx.front()];
    std::sort(idx.begin() + 1, idx.end(), [&](std::size_t a, std::size_t b) {
        const Vector<S> da = v[a] - p, db = v[b] - p;
        S turn;
        if (normal) {
            turn = normal->dot(cross(da, db));
        } else {
            turn = da[0] * db[1] - da[1] * db[0];
        }
        return num::sign(turn) > 0;
    });
}

}  // namespace detail

template <Scalar S>
HullResult<S> hull(std::vector<Vector<S>> pts)
{
    if (pts.empty()) throw geometry_error("hull of an empty point set");
    const std::size_t d = pts.front().dim();
    if (d == 0 || d > max_exact_dim) throw geometry_error("exact hulls are limited to 1 <= d <= 3");
    for (const auto& p : pts)
        if (p.dim() != d) throw dimension_error("hull: mixed point dimensions");
    std::vector<Vector<S>> uniq;
    for (auto& p : pts)
        if (std::none_of(uniq.begin(), uniq.end(), [&](const Vector<S>& q) { return q.approx_equal(p); }))
            uniq.push_back(std::move(p));

    HullResult<S> res;
    res.affine_dim = affine_dimension(uniq);
    if (res.affine_dim < d) return res;

    std::vector<Facet<S>> facets;
    std::vector<std::size_t> idx(d);
    auto visit = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == d) {
            std::vector<Vector<S>> diffs;
            for (std::size_t k = 1; k < d; ++k) diffs.push_back(uniq[idx[k]] - uniq[idx[0]]);
            const auto ns = linalg::nullspace(diffs, d);
            if (ns.size() != 1) return;
            Facet<S> f{ns.front(), ns.front().dot(uniq[idx[0]])};
            int pos = 0, neg = 0;
            for (const auto& q : uniq) {
                const int s = num::sign(S(f.normal.dot(q) - f.offset));
                pos += s > 0;
                neg += s < 0;
                if (pos && neg) return;
            }
            if (pos) f = {-f.normal, -f.offset};
            f = detail::canonical(std::move(f));
            for (const auto& g : facets)
                if (g.normal.approx_equal(f.normal) && num::eq(g.offset, f.offset)) return;
            facets.push_back(std::move(f));
            return;
        }
        for (std::size_t i = start; i < uniq.size(); ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    visit(visit, 0, 0);

    Polytope<S> poly;
    poly.dim = d;
    for (const auto& p : uniq) {
        std::vector<Vector<S>> active;
        for (const auto& f : facets)
            if (num::eq(f.normal.dot(p), f.offset)) active.push_back(f.normal);
        if (linalg::rank(active) == d) poly.vertices.push_back(p);
    }
    poly.facets = std::move(facets);
    for (const auto& f : poly.facets) {
        std::vector<std::size_t> on;
        for (std::size_t k = 0; k < poly.vertices.size(); ++k)
            if (num::eq(f.normal.dot(poly.vertices[k]), f.offset)) on.push_back(k);
        if (d == 3) detail::order_polygon(on, poly.vertices, std::optional<Vector<S>>(f.normal));
        poly.facet_vertices.push_back(std::move(on));
    }
    res.polytope = std::move(poly);
    return res;
}

template <Scalar S>
S volume(const Polytope<S>& p)
{
    if (p.vertices.empty()) throw geometry_error("volume of an empty polytope");
    switch (p.dim) {
    case 1: {
        S lo = p.vertices.front()[0], hi = lo;
        for (const auto& v : p.vertices) {
            if (v[0] < lo) lo = v[0];
            if (v[0] > hi) hi = v[0];
        }
        return hi - lo;
    }
    case 2: {
        std::vector<std::size_t> idx(p.vertices.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        detail::order_polygon(idx, p.vertices, std::optional<Vector<S>>{});
        S twice(0);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const auto& a = p.vertices[idx[k]];
            const auto& b = p.vertices[idx[(k + 1) % idx.size()]];
            twice += a[0] * b[1] - a[1] * b[0];
        }
        return num::abs(twice) / 2;
    }
    case 3: {
        // fan from the vertex centroid over each facet polygon
        Vector<S> c(3);
        for (const auto& v : p.vertices) c += v;
        c /= num::from_int<S>(static_cast<long>(p.vertices.size()));
        S six(0);
        for (const auto& fv : p.facet_vertices) {
            for (std::size_t k = 1; k + 1 < fv.size(); ++k) {
                const S det = linalg::determinant<S>({p.vertices[fv[0]] - c, p.vertices[fv[k]] - c,
                                                      p.vertices[fv[k + 1]] - c});
                six += num::abs(det);
            }
        }
        return six / 6;
    }
    default:
        throw geometry_error("exact volume is limited to d <= 3");
    }
}

// x + (P - x) / (1 + lambda), checked to lie inside P.
template <Scalar S>
Polytope<S> shrink(const Polytope<S>& p, const Vector<S>& x, const S& lambda)
{
    if (num::sign(lambda) <= 0) throw geometry_error("shrink needs lambda > 0");
    if (!p.contains(x)) throw geometry_error("shrink center " + x.str() + " lies outside the polytope");
    const S factor = S(1) / (1 + lambda);
    Polytope<S> out;
    out.dim = p.dim;
    out.facet_vertices = p.facet_vertices;
    for (const auto& v : p.vertices) out.vertices.push_back(x + Vector<S>(v - x) * factor);
    for (const auto& f : p.facets) {
        const S at_x = f.normal.dot(x);
        out.facets.push_back({f.normal, S(at_x + (f.offset - at_x) * factor)});
    }
    for (const auto& v : out.vertices)
        if (!p.contains(v)) throw geometry_error("shrunken copy escapes the polytope");
    return out;
}

template <Scalar S>
std::vector<Vector<S>> edge_directions(const Polytope<S>& p)
{
    std::vector<Vector<S>> dirs;
    for (std::size_t a = 0; a < p.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < p.vertices.size(); ++b) {
            int shared = 0;
            for (const auto& fv : p.facet_vertices) {
                const bool ha = std::find(fv.begin(), fv.end(), a) != fv.end();
                const bool hb = std::find(fv.begin(), fv.end(), b) != fv.end();
                shared += ha && hb;
            }
            if (shared >= 2) dirs.push_back(p.vertices[b] - p.vertices[a]);
        }
    }
    return dirs;
}

// True iff some hyperplane weakly separates the two polytopes. Candidate
// normals are the facet normals of P - Q: facet normals of both and, in 3D,
// cross products of edge pairs.
template <Scalar S>
bool interiors_disjoint(const Polytope<S>& p, const Polytope<S>& q)
{
    if (p.dim != q.dim) throw dimension_error("interiors_disjoint: dimension mismatch");
    std::vector<Vector<S>> axes;
    for (const auto& f : p.facets) axes.push_back(f.normal);
    for (const auto& f : q.facets) axes.push_back(f.normal);
    if (p.dim == 3) {
        const auto ep = edge_directions(p), eq = edge_directions(q);
        for (const auto& a : ep)
            for (const auto& b : eq) {
                auto c = cross(a, b);
                if (!c.is_zero()) axes.push_back(std::move(c));
            }
    }
    auto range = [](const Polytope<S>& poly, const Vector<S>& a) {
        S lo = a.dot(poly.vertices.front()), hi = lo;
        for (const auto& v : poly.vertices) {
            const S t = a.dot(v);
            if (t < lo) lo = t;
            if (t > hi) hi = t;
        }
        return std::pair<S, S>{lo, hi};
    };
    for (const auto& a : axes) {
        const auto [plo, phi] = range(p, a);
        const auto [qlo, qhi] = range(q, a);
        if (num::le(phi, qlo) || num::le(qhi, plo)) return true;
    }
    return false;
}

}  // namespace minkarr
