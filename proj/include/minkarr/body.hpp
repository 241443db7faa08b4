#pragma once

// o-symmetric convex bodies and their gauge/support machinery.

#include "minkarr/lp.hpp"
#include "minkarr/scalar.hpp"
#include "minkarr/vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace minkarr {

enum class BodyKind { hpoly, vpoly, ball };

inline const char* to_string(BodyKind k)
{
    switch (k) {
    case BodyKind::hpoly: return "hpoly";
    case BodyKind::vpoly: return "vpoly";
    case BodyKind::ball: return "ball";
    }
    return "?";
}

// Half-space normal·x <= offset.
template <Scalar S>
struct Facet {
    Vector<S> normal;
    S offset;
};

template <Scalar S>
class SymmetricBody {
public:
    static SymmetricBody hpolytope(std::vector<Facet<S>> facets)
    {
        if (facets.empty()) throw geometry_error("hpoly body needs facets");
        SymmetricBody b(BodyKind::hpoly, facets.front().normal.dim());
        std::vector<Vector<S>> normals;
        for (const auto& f : facets) {
            if (f.normal.dim() != b.dim_) throw dimension_error("facet normal dimension mismatch");
            if (f.normal.is_zero()) throw geometry_error("facet normal is zero");
            if (num::sign(f.offset) <= 0)
                throw geometry_error("facet offset must be positive (origin strictly interior)");
            normals.push_back(f.normal);
        }
        for (const auto& f : facets) {
            const bool mirrored = std::any_of(facets.begin(), facets.end(), [&](const Facet<S>& g) {
                return (f.normal * g.offset + g.normal * f.offset).is_zero();
            });
            if (!mirrored)
                throw geometry_error("hpoly body is not centrally symmetric: no facet mirrors normal " +
                                     f.normal.str());
        }
        // Normals closed under negation positively span iff they span.
        if (linalg::rank(normals) != b.dim_) throw geometry_error("hpoly body is unbounded");
        b.facets_ = std::move(facets);
        return b;
    }

    static SymmetricBody vpolytope(std::vector<Vector<S>> vertices)
    {
        if (vertices.empty()) throw geometry_error("vpoly body needs vertices");
        SymmetricBody b(BodyKind::vpoly, vertices.front().dim());
        for (const auto& v : vertices) {
            if (v.dim() != b.dim_) throw dimension_error("vertex dimension mismatch");
            const bool mirrored = std::any_of(vertices.begin(), vertices.end(),
                                              [&](const Vector<S>& w) { return (v + w).is_zero(); });
            if (!mirrored)
                throw geometry_error("vpoly body is not centrally symmetric: missing -" + v.str());
        }
        if (linalg::rank(vertices) != b.dim_)
            throw geometry_error("vpoly body has empty interior");
        b.vertices_ = std::move(vertices);
        return b;
    }

    static SymmetricBody ball(std::size_t dim)
    {
        if constexpr (scalar_traits<S>::exact) {
            throw geometry_error("the Euclidean ball needs float mode");
        }
        if (dim == 0) throw dimension_error("ball dimension must be positive");
        return SymmetricBody(BodyKind::ball, dim);
    }

    // Unit ball of the max norm.
    static SymmetricBody cube(std::size_t dim)
    {
        std::vector<Facet<S>> f;
        for (std::size_t i = 0; i < dim; ++i) {
            f.push_back({Vector<S>::unit(dim, i), S(1)});
            f.push_back({-Vector<S>::unit(dim, i), S(1)});
        }
        return hpolytope(std::move(f));
    }

    // Unit ball of the l1 norm, in facet form (2^dim facets).
    static SymmetricBody cross_polytope(std::size_t dim)
    {
        std::vector<Facet<S>> f;
        for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
            Vector<S> n(dim);
            for (std::size_t i = 0; i < dim; ++i) n[i] = (mask >> i) & 1 ? S(-1) : S(1);
            f.push_back({std::move(n), S(1)});
        }
        return hpolytope(std::move(f));
    }

    BodyKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Facet<S>>& facets() const { return facets_; }
    const std::vector<Vector<S>>& vertices() const { return vertices_; }

    void require_dim(const Vector<S>& x) const
    {
        if (x.dim() != dim_)
            throw dimension_error("point of dimension " + std::to_string(x.dim()) +
                                  " used with body of dimension " + std::to_string(dim_));
    }

private:
    SymmetricBody(BodyKind k, std::size_t d) : kind_(k), dim_(d) {}

    BodyKind kind_;
    std::size_t dim_;
    std::vector<Facet<S>> facets_;
    std::vector<Vector<S>> vertices_;
};

// Minkowski functional ||x||_K = min{t >= 0 : x in tK}.
template <Scalar S>
S gauge(const SymmetricBody<S>& body, const Vector<S>& x)
{
    body.require_dim(x);
    switch (body.kind()) {
    case BodyKind::hpoly: {
        S best(0);
        for (const auto& f : body.facets()) {
            const S t = f.normal.dot(x) / f.offset;
            if (t > best) best = t;
        }
        return best;
    }
    case BodyKind::vpoly: {
        if (x.is_zero()) return S(0);
        // min sum(mu) with sum mu_v v = x, mu >= 0
        const auto& vs = body.vertices();
        std::vector<std::vector<S>> a(body.dim(), std::vector<S>(vs.size()));
        for (std::size_t i = 0; i < body.dim(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j) a[i][j] = vs[j][i];
        const auto r = lp::minimize(std::vector<S>(vs.size(), S(1)), a,
                                    std::vector<S>(x.begin(), x.end()));
        if (r.status != lp::Status::optimal) throw geometry_error("vpoly gauge LP failed");
        return r.value;
    }
    case BodyKind::ball:
        if constexpr (!scalar_traits<S>::exact) return std::sqrt(x.norm2());
        break;
    }
    throw geometry_error("unsupported body for gauge");
}

// Support function h_K(a) = max{a·x : x in K}.
template <Scalar S>
S support(const SymmetricBody<S>& body, const Vector<S>& a)
{
    body.require_dim(a);
    if (a.is_zero()) throw geometry_error("support function needs a nonzero direction");
    switch (body.kind()) {
    case BodyKind::hpoly: {
        // LP dual: min sum c_i y_i with sum y_i n_i = a, y >= 0
        const auto& fs = body.facets();
        std::vector<std::vector<S>> m(body.dim(), std::vector<S>(fs.size()));
        std::vector<S> cost;
        for (std::size_t j = 0; j < fs.size(); ++j) {
            cost.push_back(fs[j].offset);
            for (std::size_t i = 0; i < body.dim(); ++i) m[i][j] = fs[j].normal[i];
        }
        const auto r = lp::minimize(cost, m, std::vector<S>(a.begin(), a.end()));
        if (r.status != lp::Status::optimal) throw geometry_error("hpoly support LP failed");
        return r.value;
    }
    case BodyKind::vpoly: {
        S best = a.dot(body.vertices().front());
        for (const auto& v : body.vertices()) {
            const S t = a.dot(v);
            if (t > best) best = t;
        }
        return best;
    }
    case BodyKind::ball:
        if constexpr (!scalar_traits<S>::exact) return std::sqrt(a.norm2());
        break;
    }
    throw geometry_error("unsupported body for support");
}

// The point of the boundary positively proportional to u.
template <Scalar S>
Vector<S> boundary_point(const SymmetricBody<S>& body, const Vector<S>& u)
{
    body.require_dim(u);
    if (u.is_zero()) throw geometry_error("boundary_point needs a nonzero direction");
    return u / gauge(body, u);
}

// Facet form of a vertex-described body; facet enumeration is limited to d <= 3.
template <Scalar S>
SymmetricBody<S> to_hpolytope(const SymmetricBody<S>& body)
{
    if (body.kind() == BodyKind::hpoly) return body;
    if (body.kind() == BodyKind::ball) throw geometry_error("the ball has no facet form");
    const std::size_t d = body.dim();
    if (d > 3) throw geometry_error("vertex-to-facet conversion is only provided for d <= 3");
    const auto& vs = body.vertices();
    std::vector<Facet<S>> facets;
    std::vector<std::size_t> idx(d);
    // enumerate d-subsets
    auto visit = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == d) {
            std::vector<Vector<S>> rows;
            for (auto i : idx) rows.push_back(vs[i]);
            Vector<S> ones(d);
            for (std::size_t i = 0; i < d; ++i) ones[i] = S(1);
            const auto n = linalg::solve(rows, ones);
            if (!n) return;
            for (const auto& v : vs)
                if (num::gt(n->dot(v), S(1))) return;
            for (const auto& f : facets)
                if (f.normal.approx_equal(*n)) return;
            facets.push_back({*n, S(1)});
            return;
        }
        for (std::size_t i = start; i < vs.size(); ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    visit(visit, 0, 0);
    std::sort(facets.begin(), facets.end(),
              [](const Facet<S>& a, const Facet<S>& b) { return lex_less(a.normal, b.normal); });
    return SymmetricBody<S>::hpolytope(std::move(facets));
}

// Supporting half-space a·x <= c of K at a boundary point p, with a·p = c.
// Ties between facets go to the lexicographically smallest normal.
template <Scalar S>
Facet<S> supporting_hyperplane(const SymmetricBody<S>& body, const Vector<S>& p)
{
    body.require_dim(p);
    if (!num::eq(gauge(body, p), S(1)))
        throw geometry_error("supporting_hyperplane: point " + p.str() + " is not on the boundary");
    switch (body.kind()) {
    case BodyKind::hpoly: {
        const Facet<S>* best = nullptr;
        for (const auto& f : body.facets()) {
            if (!num::eq(f.normal.dot(p), f.offset)) continue;
            if (!best || lex_less(f.normal, best->normal)) best = &f;
        }
        if (!best) throw geometry_error("no active facet at boundary point " + p.str());
        return *best;
    }
    case BodyKind::vpoly: {
        if (body.dim() <= 3) return supporting_hyperplane(to_hpolytope(body), p);
        // max p·a s.t. v·a <= 1, with a split into positive and negative parts
        const auto& vs = body.vertices();
        const std::size_t d = body.dim();
        std::vector<S> cost(2 * d + vs.size(), S(0));
        for (std::size_t i = 0; i < d; ++i) {
            cost[i] = -p[i];
            cost[d + i] = p[i];
        }
        std::vector<std::vector<S>> a;
        for (std::size_t r = 0; r < vs.size(); ++r) {
            std::vector<S> row(2 * d + vs.size(), S(0));
            for (std::size_t i = 0; i < d; ++i) {
                row[i] = vs[r][i];
                row[d + i] = -vs[r][i];
            }
            row[2 * d + r] = S(1);
            a.push_back(std::move(row));
        }
        const auto res = lp::minimize(cost, a, std::vector<S>(vs.size(), S(1)));
        if (res.status != lp::Status::optimal) throw geometry_error("vpoly supporting LP failed");
        Vector<S> n(d);
        for (std::size_t i = 0; i < d; ++i) n[i] = res.solution[i] - res.solution[d + i];
        return {n, S(1)};
    }
    case BodyKind::ball:
        return {p, S(1)};
    }
    throw geometry_error("unsupported body");
}

}  // namespace minkarr
