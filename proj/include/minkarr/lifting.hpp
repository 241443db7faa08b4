#pragma once

// Per-pair projection frames, shadow intervals and the lift of an arrangement
// into one dimension higher, where every pair (i, j) yields a slab containing
// all lifted centers.
//
// Coordinates used below. A homothet (v, lambda) is the point (v, lambda, 1)
// of R^{d+2}; the base space is {t = 0, w = 1} and the lifted copy lives in
// h1 = {t = 1}. Central projection from the origin sends (v, lambda, 1) to
// (v/lambda, 1, 1/lambda); dropping the constant coordinate gives
// y = (v/lambda, 1/lambda) in R^{d+1}.

#include "minkarr/arrangement.hpp"
#include "minkarr/body.hpp"
#include "minkarr/parallel.hpp"
#include "minkarr/scalar.hpp"
#include "minkarr/vector.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace minkarr {

template <Scalar S>
struct ProjectionFrame {
    std::size_t i = 0;
    std::size_t j = 0;
    Vector<S> r_vec;     // boundary point of K in direction v_j - v_i
    Vector<S> f_normal;  // supporting half-space of K at r_vec
    S f_offset;
};

template <Scalar S>
struct Interval {
    S lo;
    S hi;
    bool contains(const S& x) const { return num::le(lo, x) && num::le(x, hi); }
};

// All lengths are in units of r_vec along the line through v_i and v_j,
// with v_i at 0.
template <Scalar S>
struct ShadowData {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<S> alphas;
    std::vector<Interval<S>> t;
    Interval<S> common;
    S x_coord;
    S u_i;
    S u_j;
};

class shadow_error : public geometry_error {
public:
    shadow_error(std::size_t p, std::size_t q, const std::string& what)
        : geometry_error(what), witness(p, q)
    {
    }
    IndexPair witness;
};

template <Scalar S>
ProjectionFrame<S> build_frame(const Arrangement<S>& arr, std::size_t i, std::size_t j)
{
    if (i >= arr.size() || j >= arr.size() || i == j)
        throw geometry_error("invalid pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    const Vector<S> dir = arr[j].center - arr[i].center;
    if (dir.is_zero()) throw geometry_error("homothets " + std::to_string(i) + " and " +
                                            std::to_string(j) + " have coincident centers");
    ProjectionFrame<S> fr;
    fr.i = i;
    fr.j = j;
    fr.r_vec = boundary_point(arr.body(), dir);
    const auto f = supporting_hyperplane(arr.body(), fr.r_vec);
    fr.f_normal = f.normal;
    fr.f_offset = f.offset;
    return fr;
}

// Projects every homothet along f onto the r-line. `x_override` picks the
// common point; the default is the midpoint of the common interval.
template <Scalar S>
ShadowData<S> shadow(const Arrangement<S>& arr, const ProjectionFrame<S>& fr,
                     const std::optional<S>& x_override = std::nullopt)
{
    ShadowData<S> sd;
    sd.i = fr.i;
    sd.j = fr.j;
    const S scale = fr.f_normal.dot(fr.r_vec);
    if (num::sign(scale) <= 0) throw geometry_error("supporting normal does not see r_vec");
    std::size_t lo_at = 0, hi_at = 0;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const S alpha = fr.f_normal.dot(Vector<S>(arr[k].center - arr[fr.i].center)) / scale;
        sd.t.push_back({S(alpha - arr[k].ratio), S(alpha + arr[k].ratio)});
        sd.alphas.push_back(alpha);
        if (k == 0 || sd.t[k].lo > sd.t[lo_at].lo) lo_at = k;
        if (k == 0 || sd.t[k].hi < sd.t[hi_at].hi) hi_at = k;
    }
    sd.common = {sd.t[lo_at].lo, sd.t[hi_at].hi};
    if (num::gt(sd.common.lo, sd.common.hi)) {
        const auto p = std::min(lo_at, hi_at), q = std::max(lo_at, hi_at);
        throw shadow_error(p, q, "shadow intervals have empty intersection; homothets " +
                                     std::to_string(p) + " and " + std::to_string(q) + " do not meet");
    }
    if (x_override) {
        if (!sd.common.contains(*x_override))
            throw geometry_error("chosen common point lies outside the common interval");
        sd.x_coord = *x_override;
    } else {
        sd.x_coord = (sd.common.lo + sd.common.hi) / 2;
    }
    sd.u_i = sd.x_coord - sd.alphas[fr.i];
    sd.u_j = sd.alphas[fr.j] - sd.x_coord;
    return sd;
}

// 2 l_i l_j / (l_i u_j + l_j u_i), with explicit markers for a vanishing or
// negative denominator.
template <Scalar S>
struct SlabRatio {
    enum class Kind { finite, unbounded, invalid };
    Kind kind = Kind::finite;
    S value = S(0);
    S denominator = S(0);
    bool finite() const { return kind == Kind::finite; }
};

template <Scalar S>
SlabRatio<S> ratio(const S& lambda_i, const S& lambda_j, const S& u_i, const S& u_j)
{
    if (num::sign(lambda_i) <= 0 || num::sign(lambda_j) <= 0)
        throw geometry_error("ratio needs positive homothety ratios");
    SlabRatio<S> r;
    r.denominator = lambda_i * u_j + lambda_j * u_i;
    const S numer = 2 * lambda_i * lambda_j;
    const int s = num::sign(r.denominator);
    if (s == 0) {
        r.kind = SlabRatio<S>::Kind::unbounded;
    } else {
        r.value = numer / r.denominator;
        if (s < 0) r.kind = SlabRatio<S>::Kind::invalid;
    }
    return r;
}

template <Scalar S>
struct LiftedConfig {
    std::vector<Vector<S>> points;

    Homothet<S> unlift(std::size_t k) const
    {
        const auto& y = points[k];
        const std::size_t d = y.dim() - 1;
        const S lambda = S(1) / y[d];
        Vector<S> v(d);
        for (std::size_t c = 0; c < d; ++c) v[c] = y[c] * lambda;
        return {std::move(v), lambda};
    }
};

template <Scalar S>
LiftedConfig<S> lift(const Arrangement<S>& arr)
{
    const std::size_t d = arr.dim();
    LiftedConfig<S> out;
    for (const auto& h : arr.members()) {
        // homogeneous (v, lambda, 1), projected onto {coordinate d == 1}
        Vector<S> p = append(append(h.center, h.ratio), S(1));
        const S w = p[d];
        Vector<S> y(d + 1);
        for (std::size_t c = 0; c < d; ++c) y[c] = p[c] / w;
        y[d] = p[d + 1] / w;
        out.points.push_back(std::move(y));
    }
    return out;
}

// Parallel planes normal·y = k_ij and normal·y = k_ji in the lifted space,
// the parallel planes through y_i and y_j, and where the line y_i y_j meets
// the outer planes. The normal is oriented so that g_ij <= g_ji; it is not
// normalized, distances divide by |normal|.
template <Scalar S>
struct SlabPair {
    Vector<S> normal;
    S k_ij;
    S k_ji;
    S g_ij;
    S g_ji;
    std::optional<Vector<S>> s_i;
    std::optional<Vector<S>> s_j;
};

namespace detail {

// Image in h1 of the linear hyperplane {M·p = 0} of R^{d+2}, as (N, c) with N·y = c.
template <Scalar S>
Facet<S> image_in_h1(const Vector<S>& m, std::size_t d)
{
    Vector<S> n(d + 1);
    for (std::size_t c = 0; c < d; ++c) n[c] = m[c];
    n[d] = m[d + 1];
    return {n, S(-m[d])};
}

template <Scalar S>
Vector<S> embed(const Vector<S>& z, const S& t, const S& w)
{
    return append(append(z, t), w);
}

}  // namespace detail

template <Scalar S>
SlabPair<S> slab_pair(const Arrangement<S>& arr, const ProjectionFrame<S>& fr, const ShadowData<S>& sd)
{
    const std::size_t d = arr.dim();
    const Vector<S>& r = fr.r_vec;
    // x as a point of the base space, and the directions of f
    const Vector<S> x_point = arr[fr.i].center + r * sd.x_coord;
    const auto f_dirs = linalg::nullspace(std::vector<Vector<S>>{fr.f_normal}, d);

    auto wedge_plane = [&](int side) {
        std::vector<Vector<S>> span;
        span.push_back(detail::embed(x_point, S(0), S(1)));
        for (const auto& e : f_dirs) span.push_back(detail::embed(e, S(0), S(0)));
        // b_i leaves x backwards along r while rising; b_j forwards.
        span.push_back(detail::embed(Vector<S>(r * num::from_int<S>(side)), S(1), S(0)));
        const auto normal = linalg::nullspace(span, d + 2);
        if (normal.size() != 1) throw geometry_error("degenerate wedge: plane through x is not a hyperplane");
        return detail::image_in_h1(normal.front(), d);
    };
    const Facet<S> bi = wedge_plane(-1);
    Facet<S> bj = wedge_plane(+1);
    if (bi.normal.is_zero() || bj.normal.is_zero())
        throw geometry_error("degenerate wedge: a wedge plane maps to infinity");

    // express bj with the normal of bi
    std::size_t pivot = 0;
    while (num::is_zero(bi.normal[pivot])) ++pivot;
    const S kappa = bj.normal[pivot] / bi.normal[pivot];
    if (!(bj.normal - bi.normal * kappa).is_zero())
        throw geometry_error("wedge images are not parallel");
    bj.offset /= kappa;
    if (num::eq(bi.offset, bj.offset)) throw geometry_error("degenerate wedge: B_i and B_j coincide");

    const auto lifted = lift(arr);
    const Vector<S>& yi = lifted.points[fr.i];
    const Vector<S>& yj = lifted.points[fr.j];

    SlabPair<S> sp;
    sp.normal = bi.normal;
    sp.k_ij = bi.offset;
    sp.k_ji = bj.offset;
    if (sp.normal.dot(yi) > sp.normal.dot(yj)) {
        sp.normal = -sp.normal;
        sp.k_ij = -sp.k_ij;
        sp.k_ji = -sp.k_ji;
    }
    sp.g_ij = sp.normal.dot(yi);
    sp.g_ji = sp.normal.dot(yj);
    const S dg = sp.g_ji - sp.g_ij;
    if (!num::is_zero(dg)) {
        const Vector<S> dir = yj - yi;
        sp.s_i = yi + dir * S((sp.k_ij - sp.g_ij) / dg);
        sp.s_j = yi + dir * S((sp.k_ji - sp.g_ij) / dg);
    }
    return sp;
}

struct SlabCheck {
    bool ok = true;
    std::optional<std::size_t> offending;
    explicit operator bool() const { return ok; }
};

template <Scalar S>
SlabCheck verify_slab(const LiftedConfig<S>& lifted, const SlabPair<S>& slab)
{
    // float mode compares offsets of the unit normal, so epsilon is a distance
    S unit(1);
    if constexpr (!scalar_traits<S>::exact) unit = std::sqrt(slab.normal.dot(slab.normal));
    const S lo = (slab.k_ij < slab.k_ji ? slab.k_ij : slab.k_ji) / unit;
    const S hi = (slab.k_ij < slab.k_ji ? slab.k_ji : slab.k_ij) / unit;
    for (std::size_t k = 0; k < lifted.points.size(); ++k) {
        const S v = slab.normal.dot(lifted.points[k]) / unit;
        if (num::lt(v, lo) || num::gt(v, hi)) return {false, k};
    }
    return {};
}

template <Scalar S>
struct RatioIdentity {
    bool holds = false;
    S plane_ratio;          // dist(k_ij, k_ji) / dist(g_ij, g_ji)
    S segment_ratio_sq;     // |s_i - s_j|^2 / |y_i - y_j|^2
    S expected;
};

// Both equalities of the slab-width identity. Plane distances are unsigned, so
// the comparison is against |expected|; the two agree in sign exactly when the
// common point splits [v_i, v_j] with a positive weighted sum.
template <Scalar S>
RatioIdentity<S> verify_ratio_identity(const SlabPair<S>& slab, const Vector<S>& yi, const Vector<S>& yj,
                                       const S& expected)
{
    const Vector<S> dy = yj - yi;
    if (dy.is_zero()) throw geometry_error("ratio identity needs distinct lifted points");
    const S norm2 = slab.normal.norm2();
    const S dk = slab.k_ji - slab.k_ij;
    const S dg = slab.normal.dot(yj) - slab.normal.dot(yi);
    if (num::is_zero(dg) || !slab.s_i || !slab.s_j)
        throw geometry_error("ratio identity: y_i and y_j lie on a common slab-parallel plane");
    const S dist_k_sq = dk * dk / norm2;
    const S dist_g_sq = dg * dg / norm2;

    RatioIdentity<S> out;
    out.plane_ratio = num::abs(S(dk / dg));
    out.segment_ratio_sq = Vector<S>(*slab.s_j - *slab.s_i).norm2() / dy.norm2();
    out.expected = expected;
    const S abs_expected = num::abs(expected);
    out.holds = num::rel_eq(S(dist_k_sq / dist_g_sq), S(out.plane_ratio * out.plane_ratio)) &&
                num::rel_eq(S(out.plane_ratio * out.plane_ratio), out.segment_ratio_sq) &&
                num::rel_eq(out.plane_ratio, abs_expected);
    return out;
}

// ---- cross-ratio and the trapezoid combination ----------------------------

// A point of the projective line: a finite coordinate or nullopt for infinity.
template <Scalar S>
using LinePoint = std::optional<S>;

template <Scalar S>
S cross_ratio(const LinePoint<S>& x1, const LinePoint<S>& x2, const LinePoint<S>& x3, const LinePoint<S>& x4)
{
    const int infinite = !x1 + !x2 + !x3 + !x4;
    if (infinite > 1) throw geometry_error("cross_ratio: at most one point may be infinite");
    // (x1-x3)(x2-x4) / ((x2-x3)(x1-x4)), dropping the factors through infinity
    auto diff = [](const LinePoint<S>& a, const LinePoint<S>& b) -> std::optional<S> {
        if (!a || !b) return std::nullopt;
        return S(*a - *b);
    };
    const auto n1 = diff(x1, x3), n2 = diff(x2, x4), d1 = diff(x2, x3), d2 = diff(x1, x4);
    S num(1), den(1);
    if (n1) num *= *n1;
    if (n2) num *= *n2;
    if (d1) den *= *d1;
    if (d2) den *= *d2;
    if (num::is_zero(den)) throw geometry_error("cross_ratio: indeterminate (coincident points)");
    return num / den;
}

// The predicted b2 - a2 given theta1 (a1 - a2) = theta2 (a2 - a3) and the same for b.
template <Scalar S>
Vector<S> trapezoid_combine(const S& theta1, const S& theta2, const Vector<S>& a1, const Vector<S>& a3,
                            const Vector<S>& b1, const Vector<S>& b3)
{
    const S total = theta1 + theta2;
    if (num::is_zero(total)) throw geometry_error("trapezoid_combine: theta1 + theta2 = 0");
    return Vector<S>(b1 - a1) * S(theta1 / total) + Vector<S>(b3 - a3) * S(theta2 / total);
}

template <Scalar S>
struct Lemma6Check {
    bool premise = false;  // t_i ∩ t_j lies inside [v_i, v_j]
    SlabRatio<S> value;
    bool holds = true;
};

template <Scalar S>
Lemma6Check<S> check_lemma6(const ShadowData<S>& sd, const S& lambda_i, const S& lambda_j)
{
    Lemma6Check<S> out;
    const auto& ti = sd.t[sd.i];
    const auto& tj = sd.t[sd.j];
    const S lo = ti.lo > tj.lo ? ti.lo : tj.lo;
    const S hi = ti.hi < tj.hi ? ti.hi : tj.hi;
    out.premise = num::ge(lo, sd.alphas[sd.i]) && num::le(hi, sd.alphas[sd.j]);
    out.value = ratio(lambda_i, lambda_j, sd.u_i, sd.u_j);
    if (out.premise) out.holds = out.value.finite() && num::le(out.value.value, S(2));
    return out;
}

// ---- everything for one pair ----------------------------------------------

template <Scalar S>
struct PairAnalysis {
    ProjectionFrame<S> frame;
    ShadowData<S> shadow;
    SlabRatio<S> value;
    SlabPair<S> slab;
    SlabCheck containment;
};

template <Scalar S>
PairAnalysis<S> analyze_pair(const Arrangement<S>& arr, std::size_t i, std::size_t j,
                             const std::optional<S>& x_override = std::nullopt)
{
    PairAnalysis<S> pa;
    pa.frame = build_frame(arr, i, j);
    pa.shadow = shadow(arr, pa.frame, x_override);
    pa.value = ratio(arr[i].ratio, arr[j].ratio, pa.shadow.u_i, pa.shadow.u_j);
    pa.slab = slab_pair(arr, pa.frame, pa.shadow);
    pa.containment = verify_slab(lift(arr), pa.slab);
    return pa;
}

// All ordered pairs i < j, in lexicographic pair order.
template <Scalar S>
std::vector<PairAnalysis<S>> analyze_all_pairs(const Arrangement<S>& arr)
{
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = i + 1; j < arr.size(); ++j) pairs.emplace_back(i, j);
    std::vector<std::optional<PairAnalysis<S>>> slots(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t p) { slots[p] = analyze_pair(arr, pairs[p].first, pairs[p].second); });
    std::vector<PairAnalysis<S>> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace minkarr
