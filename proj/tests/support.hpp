#pragma once

// Test-only helpers: seeded generators for bodies and arrangements, a
// homogeneous-coordinate cross-ratio oracle and a Monte Carlo overlap check.

#include "minkarr/minkarr.hpp"

#include <random>

namespace minkarr::testing {

using Q = mpq_class;

inline Q rat(long p, long q = 1)
{
    Q r(p, q);
    r.canonicalize();
    return r;
}

inline long uniform_int(std::mt19937_64& rng, long lo, long hi)
{
    return lo + static_cast<long>(detail::draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Random rational in [lo, hi] on a 1/den lattice.
inline Q uniform_rat(std::mt19937_64& rng, const Q& lo, const Q& hi, long den = 16)
{
    return detail::uniform_lattice(rng, lo, hi, den);
}

inline Vector<Q> random_point(std::mt19937_64& rng, std::size_t d, long half_width, long den = 8)
{
    Vector<Q> v(d);
    for (std::size_t c = 0; c < d; ++c) v[c] = rat(uniform_int(rng, -half_width * den, half_width * den), den);
    return v;
}

// Symmetric hexagon from three generators in convex position, converted to facets.
inline SymmetricBody<Q> random_hexagon(std::mt19937_64& rng)
{
    for (;;) {
        std::vector<Vector<Q>> vs;
        for (int k = 0; k < 3; ++k) {
            Vector<Q> p(2);
            p[0] = rat(uniform_int(rng, -6, 6), uniform_int(rng, 1, 3));
            p[1] = rat(uniform_int(rng, -6, 6), uniform_int(rng, 1, 3));
            vs.push_back(p);
            vs.push_back(-p);
        }
        try {
            auto h = to_hpolytope(SymmetricBody<Q>::vpolytope(vs));
            if (h.facets().size() == 6) return h;
        } catch (const geometry_error&) {
        }
    }
}

enum class BodyFamily { l1, linf, hexagon };

inline SymmetricBody<Q> planar_body(std::mt19937_64& rng, BodyFamily fam)
{
    switch (fam) {
    case BodyFamily::l1: return SymmetricBody<Q>::cross_polytope(2);
    case BodyFamily::linf: return SymmetricBody<Q>::cube(2);
    case BodyFamily::hexagon: return random_hexagon(rng);
    }
    return SymmetricBody<Q>::cube(2);
}

// Rejection sampler: homothets are added while they meet every member (and,
// with `minkowski`, respect the center condition both ways).
template <Scalar S>
Arrangement<S> random_arrangement(std::mt19937_64& rng, const SymmetricBody<S>& body, std::size_t target,
                                  bool minkowski, std::size_t attempts = 400)
{
    const std::size_t d = body.dim();
    std::vector<Homothet<S>> members;
    for (std::size_t a = 0; a < attempts && members.size() < target; ++a) {
        Vector<S> c(d);
        for (std::size_t k = 0; k < d; ++k) c[k] = detail::lattice<S>(uniform_int(rng, -24, 24), 8);
        const S r = detail::lattice<S>(uniform_int(rng, 2, 24), 8);
        Homothet<S> h(std::move(c), r);
        bool ok = true;
        for (const auto& m : members) {
            if (m.center.approx_equal(h.center) || !intersects(body, m, h)) ok = false;
            else if (minkowski && (center_in_interior(body, m, h.center) || center_in_interior(body, h, m.center)))
                ok = false;
            if (!ok) break;
        }
        if (ok) members.push_back(std::move(h));
    }
    return Arrangement<S>(body, std::move(members));
}

// Cross-ratio through 2x2 determinants of homogeneous coordinates; infinity is (1, 0).
inline Q homogeneous_cross_ratio(const LinePoint<Q>& x1, const LinePoint<Q>& x2, const LinePoint<Q>& x3,
                                 const LinePoint<Q>& x4)
{
    auto hom = [](const LinePoint<Q>& x) { return x ? std::pair<Q, Q>{*x, 1} : std::pair<Q, Q>{1, 0}; };
    auto det = [&](const LinePoint<Q>& a, const LinePoint<Q>& b) {
        const auto p = hom(a), q = hom(b);
        return Q(p.first * q.second - p.second * q.first);
    };
    return det(x1, x3) * det(x2, x4) / (det(x2, x3) * det(x1, x4));
}

// x -> (a x + b) / (c x + e) on the projective line.
struct Mobius {
    Q a, b, c, e;
    LinePoint<Q> operator()(const LinePoint<Q>& x) const
    {
        if (!x) {
            if (c == 0) return std::nullopt;
            return Q(a / c);
        }
        const Q den = c * *x + e;
        if (den == 0) return std::nullopt;
        return Q((a * *x + b) / den);
    }
};

inline Mobius random_mobius(std::mt19937_64& rng)
{
    for (;;) {
        Mobius m{rat(uniform_int(rng, -9, 9), uniform_int(rng, 1, 4)), rat(uniform_int(rng, -9, 9), uniform_int(rng, 1, 4)),
                 rat(uniform_int(rng, -9, 9), uniform_int(rng, 1, 4)), rat(uniform_int(rng, -9, 9), uniform_int(rng, 1, 4))};
        if (m.a * m.e - m.b * m.c != 0) return m;
    }
}

// Samples points of the first homothet's bounding box and reports whether one
// of them lies in both homothets.
inline bool monte_carlo_overlap(std::mt19937_64& rng, const SymmetricBody<double>& body, const Homothet<double>& p,
                                const Homothet<double>& q, int samples = 20000)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t d = body.dim();
    // the body fits in the box of half-width max support along the axes
    double half = 0;
    for (std::size_t k = 0; k < d; ++k) half = std::max(half, support(body, Vector<double>::unit(d, k)));
    for (int s = 0; s < samples; ++s) {
        Vector<double> x(d);
        for (std::size_t k = 0; k < d; ++k) x[k] = p.center[k] + p.ratio * half * u(rng);
        if (gauge(body, Vector<double>(x - p.center)) <= p.ratio && gauge(body, Vector<double>(x - q.center)) <= q.ratio)
            return true;
    }
    return false;
}

inline std::size_t pigeonhole_target(std::size_t n, std::size_t k)
{
    // ceil(log_k n) + 1 without floating point
    std::size_t e = 0;
    std::size_t p = 1;
    while (p < n) {
        p *= k;
        ++e;
    }
    return e + 1;
}

}  // namespace minkarr::testing
