#pragma once

// Volume-packing certificate for point sets with per-pair slabs, and the
// planar end-to-end pipeline that feeds it from a lifted arrangement.

#include "minkarr/arrangement.hpp"
#include "minkarr/lifting.hpp"
#include "minkarr/parallel.hpp"
#include "minkarr/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minkarr {

template <Scalar S>
struct PairSlab {
    std::size_t i = 0;
    std::size_t j = 0;
    Vector<S> normal;
    S k_ij;
    S k_ji;
};

template <Scalar S>
struct SlabFamily {
    std::vector<Vector<S>> points;
    std::vector<PairSlab<S>> slabs;
};

// Slab for (i, j) with normal x_j - x_i, spanned by the extreme points of X.
template <Scalar S>
SlabFamily<S> direction_slabs(std::vector<Vector<S>> pts)
{
    SlabFamily<S> fam;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            PairSlab<S> s{i, j, Vector<S>(pts[j] - pts[i]), S(0), S(0)};
            s.k_ij = s.k_ji = s.normal.dot(pts[0]);
            for (const auto& p : pts) {
                const S v = s.normal.dot(p);
                if (v < s.k_ij) s.k_ij = v;
                if (v > s.k_ji) s.k_ji = v;
            }
            fam.slabs.push_back(std::move(s));
        }
    fam.points = std::move(pts);
    return fam;
}

template <Scalar S>
struct PairRatio {
    std::size_t i = 0;
    std::size_t j = 0;
    std::optional<S> ratio;  // nullopt: the g-planes coincide
    bool ok = false;
};

struct Stage {
    std::string name;
    bool passed = false;
    std::string detail;
};

template <Scalar S>
struct PackingCertificate {
    S lambda;
    std::size_t dim = 0;
    std::size_t affine_dim = 0;  // < dim when the induction branch was taken
    std::size_t n = 0;
    S bound;                     // (1 + lambda)^affine_dim
    std::vector<Stage> stages;
    std::vector<PairRatio<S>> eq1;
    std::optional<IndexPair> offending_pair;
    std::size_t hull_vertices = 0;
    std::optional<S> volume_hull;
    std::vector<S> volume_copies;
    std::optional<S> volume_sum;
    std::vector<std::vector<bool>> disjoint;
    bool verdict = false;

    bool induction_branch() const { return affine_dim < dim; }

    std::string failed_stage() const
    {
        for (const auto& s : stages)
            if (!s.passed) return s.name;
        return {};
    }
};

template <Scalar S>
S power(const S& base, std::size_t e)
{
    S r(1);
    for (std::size_t k = 0; k < e; ++k) r *= base;
    return r;
}

namespace detail {

template <Scalar S>
PackingCertificate<S>& fail(PackingCertificate<S>& cert, std::string stage, std::string detail)
{
    cert.stages.push_back({std::move(stage), false, std::move(detail)});
    cert.verdict = false;
    return cert;
}

}  // namespace detail

template <Scalar S>
PackingCertificate<S> lemma1_check(const SlabFamily<S>& fam, const S& lambda)
{
    if (num::lt(lambda, S(1))) throw geometry_error("lemma1_check needs lambda >= 1");
    if (fam.points.empty()) throw geometry_error("lemma1_check needs at least one point");
    PackingCertificate<S> cert;
    cert.lambda = lambda;
    cert.n = fam.points.size();
    cert.dim = fam.points.front().dim();
    cert.affine_dim = cert.dim;
    cert.bound = power(S(1 + lambda), cert.dim);
    if (cert.dim == 0 || cert.dim > max_exact_dim) throw geometry_error("exact packing check is limited to d <= 3");
    const auto& pts = fam.points;
    const std::size_t n = pts.size();

    // every unordered pair needs its slab
    std::vector<std::vector<const PairSlab<S>*>> lookup(n, std::vector<const PairSlab<S>*>(n, nullptr));
    for (const auto& s : fam.slabs) {
        if (s.i >= n || s.j >= n || s.i == s.j) return detail::fail(cert, "slabs", "slab with invalid pair");
        lookup[s.i][s.j] = lookup[s.j][s.i] = &s;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!lookup[i][j]) {
                cert.offending_pair = IndexPair{i, j};
                return detail::fail(cert, "slabs", "no slab for pair (" + std::to_string(i) + ", " +
                                                       std::to_string(j) + ")");
            }
    cert.stages.push_back({"slabs", true, "one slab per pair"});

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& s = *lookup[i][j];
            const bool distinct = !s.normal.is_zero() && !num::eq(s.k_ij, s.k_ji);
            const S lo = s.k_ij < s.k_ji ? s.k_ij : s.k_ji;
            const S hi = s.k_ij < s.k_ji ? s.k_ji : s.k_ij;
            for (std::size_t k = 0; k < n && distinct; ++k) {
                const S v = s.normal.dot(pts[k]);
                if (num::lt(v, lo) || num::gt(v, hi)) {
                    cert.offending_pair = IndexPair{i, j};
                    return detail::fail(cert, "containment", "point " + std::to_string(k) +
                                                                 " lies outside the slab of pair (" +
                                                                 std::to_string(i) + ", " + std::to_string(j) + ")");
                }
            }
            if (!distinct) {
                cert.offending_pair = IndexPair{i, j};
                return detail::fail(cert, "containment", "slab planes of pair (" + std::to_string(i) + ", " +
                                                             std::to_string(j) + ") are not distinct");
            }
        }
    cert.stages.push_back({"containment", true, "all points inside every slab"});

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& s = *lookup[i][j];
            // g-planes through x_i and x_j; the |normal| factors cancel
            const S dg = num::abs(S(s.normal.dot(pts[j]) - s.normal.dot(pts[i])));
            PairRatio<S> pr{i, j, std::nullopt, false};
            if (!num::is_zero(dg)) {
                pr.ratio = num::abs(S(s.k_ji - s.k_ij)) / dg;
                pr.ok = num::le(*pr.ratio, lambda);
            }
            cert.eq1.push_back(pr);
            if (!pr.ok && !cert.offending_pair) cert.offending_pair = IndexPair{i, j};
        }
    if (cert.offending_pair) {
        const auto [i, j] = *cert.offending_pair;
        return detail::fail(cert, "eq1", "slab width ratio exceeds lambda at pair (" + std::to_string(i) +
                                             ", " + std::to_string(j) + ")");
    }
    cert.stages.push_back({"eq1", true, "dist(k)/dist(g) <= lambda for every pair"});

    // hull, dropping to the affine hull when X is flat
    cert.affine_dim = affine_dimension(pts);
    cert.bound = power(S(1 + lambda), cert.affine_dim);
    if (cert.affine_dim == 0) {
        cert.stages.push_back({"hull", true, "single point"});
        cert.volume_hull = S(1);
        cert.volume_copies.assign(n, S(1));
        cert.volume_sum = S(static_cast<long>(n));
    } else {
        const auto work = cert.affine_dim < cert.dim ? affine_coordinates(pts) : pts;
        const auto h = hull(work);
        const Polytope<S>& poly = *h.polytope;
        cert.hull_vertices = poly.vertices.size();
        cert.stages.push_back({"hull", true,
                               cert.induction_branch()
                                   ? "flat point set, checked in its affine hull of dimension " +
                                         std::to_string(cert.affine_dim)
                                   : "full-dimensional hull"});

        std::vector<Polytope<S>> copies;
        try {
            for (const auto& x : work) copies.push_back(shrink(poly, x, lambda));
        } catch (const geometry_error& e) {
            return detail::fail(cert, "shrink", e.what());
        }
        cert.stages.push_back({"shrink", true, "every shrunken copy lies in the hull"});

        cert.disjoint.assign(n, std::vector<bool>(n, true));
        std::vector<IndexPair> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        std::vector<char> sep(pairs.size(), 0);
        parallel_for(pairs.size(), [&](std::size_t p) {
            sep[p] = interiors_disjoint(copies[pairs[p].first], copies[pairs[p].second]) ? 1 : 0;
        });
        std::optional<IndexPair> overlap;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto [i, j] = pairs[p];
            cert.disjoint[i][j] = cert.disjoint[j][i] = sep[p] != 0;
            if (!sep[p] && !overlap) overlap = pairs[p];
        }
        if (overlap) {
            cert.offending_pair = overlap;
            return detail::fail(cert, "disjointness", "shrunken copies " + std::to_string(overlap->first) +
                                                          " and " + std::to_string(overlap->second) +
                                                          " share interior points");
        }
        cert.stages.push_back({"disjointness", true, "shrunken copies have pairwise disjoint interiors"});

        cert.volume_hull = volume(poly);
        S sum(0);
        bool each_ok = true;
        for (const auto& c : copies) {
            cert.volume_copies.push_back(volume(c));
            sum += cert.volume_copies.back();
            each_ok = each_ok && num::rel_eq(cert.volume_copies.back(), S(*cert.volume_hull / cert.bound));
        }
        cert.volume_sum = sum;
        if (!each_ok) return detail::fail(cert, "volume", "a shrunken copy has the wrong volume");
        if (!num::le(sum, *cert.volume_hull))
            return detail::fail(cert, "volume", "copies overfill the hull");
    }
    cert.stages.push_back({"volume", true, "sum of copy volumes <= hull volume"});

    if (!num::le(num::from_int<S>(static_cast<long>(n)), cert.bound))
        return detail::fail(cert, "cardinality", "n exceeds (1 + lambda)^d");
    cert.stages.push_back({"cardinality", true,
                           std::to_string(n) + " <= " + num::to_string(cert.bound)});
    cert.verdict = true;
    return cert;
}

// ---- planar end-to-end pipeline --------------------------------------------

template <Scalar S>
struct PairReport {
    std::size_t i = 0;
    std::size_t j = 0;
    SlabRatio<S> value;
    bool slab_ok = false;
    bool identity_ok = false;
    bool ratio_ok = false;  // finite and <= 2
};

template <Scalar S>
struct Theorem1Report {
    PairCheck minkowski;
    PairCheck intersecting;
    std::vector<PairReport<S>> pairs;
    std::optional<PackingCertificate<S>> certificate;
    std::size_t n = 0;
    std::uint64_t bound = 0;
    bool passed = false;
    std::string failure;
    std::optional<IndexPair> offending_pair;
};

template <Scalar S>
Theorem1Report<S> theorem1_pipeline(const Arrangement<S>& arr)
{
    if (arr.dim() != 2) throw geometry_error("the packing pipeline accepts planar arrangements only");
    Theorem1Report<S> rep;
    rep.n = arr.size();
    rep.bound = kappa_upper_bound(2);
    rep.minkowski = is_minkowski_arrangement(arr);
    rep.intersecting = is_pairwise_intersecting(arr);
    if (!rep.minkowski || !rep.intersecting) {
        rep.failure = !rep.minkowski ? "not a Minkowski arrangement" : "not pairwise intersecting";
        rep.offending_pair = !rep.minkowski ? rep.minkowski.witness : rep.intersecting.witness;
        return rep;
    }

    const auto lifted = lift(arr);
    SlabFamily<S> fam;
    fam.points = lifted.points;
    for (auto& pa : analyze_all_pairs(arr)) {
        PairReport<S> pr;
        pr.i = pa.frame.i;
        pr.j = pa.frame.j;
        pr.value = pa.value;
        pr.slab_ok = pa.containment.ok;
        pr.ratio_ok = pa.value.finite() && num::le(pa.value.value, S(2));
        if (pa.value.finite() && pa.slab.s_i) {
            const auto id = verify_ratio_identity(pa.slab, lifted.points[pr.i], lifted.points[pr.j], pa.value.value);
            pr.identity_ok = id.holds;
        }
        if ((!pr.slab_ok || !pr.ratio_ok || !pr.identity_ok) && rep.failure.empty()) {
            rep.failure = !pr.slab_ok ? "lifted point outside slab" : !pr.ratio_ok ? "slab ratio exceeds 2" : "ratio identity failed";
            rep.offending_pair = IndexPair{pr.i, pr.j};
        }
        fam.slabs.push_back({pr.i, pr.j, pa.slab.normal, pa.slab.k_ij, pa.slab.k_ji});
        rep.pairs.push_back(std::move(pr));
    }
    if (!rep.failure.empty()) return rep;

    rep.certificate = lemma1_check(fam, S(2));
    if (!rep.certificate->verdict) {
        rep.failure = "packing certificate failed at stage " + rep.certificate->failed_stage();
        rep.offending_pair = rep.certificate->offending_pair;
        return rep;
    }
    if (rep.n > rep.bound) {
        rep.failure = "arrangement exceeds 3^(d+1)";
        return rep;
    }
    rep.passed = true;
    return rep;
}

}  // namespace minkarr
