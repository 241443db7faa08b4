#include "support.hpp"

#include <gtest/gtest.h>

using namespace minkarr;
using minkarr::testing::Q;
using minkarr::testing::rat;

namespace {

std::vector<Vector<Q>> pts(std::initializer_list<std::initializer_list<long>> list)
{
    std::vector<Vector<Q>> out;
    for (const auto& p : list) out.push_back(Vector<Q>::from_ints(p));
    return out;
}

Polytope<Q> box(std::initializer_list<long> lo, std::initializer_list<long> hi)
{
    std::vector<Vector<Q>> corners;
    const auto a = Vector<Q>::from_ints(lo), b = Vector<Q>::from_ints(hi);
    const std::size_t d = a.dim();
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Vector<Q> c(d);
        for (std::size_t k = 0; k < d; ++k) c[k] = (mask >> k) & 1 ? b[k] : a[k];
        corners.push_back(c);
    }
    return *hull(corners).polytope;
}

}  // namespace

TEST(Hull, SquareAndInteriorPoint)
{
    const auto h = hull(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    ASSERT_TRUE(h.full_dimensional());
    EXPECT_EQ(h.polytope->vertices.size(), 4u);
    EXPECT_EQ(h.polytope->facets.size(), 4u);
    const auto h5 = hull(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}));
    EXPECT_EQ(h5.polytope->vertices.size(), 4u);
    const auto flat = hull(pts({{0, 0}, {1, 1}, {3, 3}}));
    EXPECT_FALSE(flat.full_dimensional());
    EXPECT_EQ(flat.affine_dim, 1u);
    EXPECT_THROW(hull(std::vector<Vector<Q>>{Vector<Q>::from_ints({1, 2, 3, 4})}), geometry_error);
}

TEST(Hull, RandomPointsAreContained)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Vector<Q>> ps;
        for (int k = 0; k < 12; ++k) ps.push_back(minkarr::testing::random_point(rng, 3, 3, 2));
        const auto h = hull(ps);
        if (!h.full_dimensional()) continue;
        for (const auto& p : ps) EXPECT_TRUE(h.polytope->contains(p));
        for (const auto& fv : h.polytope->facet_vertices) EXPECT_GE(fv.size(), 3u);
    }
}

TEST(Volume, StandardShapes)
{
    EXPECT_EQ(volume(box({0, 0}, {1, 1})), Q(1));
    EXPECT_EQ(volume(box({0, 0, 0}, {1, 1, 1})), Q(1));
    EXPECT_EQ(volume(*hull(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).polytope), rat(1, 6));
    EXPECT_EQ(volume(*hull(pts({{0}, {3}, {1}})).polytope), Q(3));
    EXPECT_EQ(volume(*hull(pts({{0, 0}, {4, 0}, {0, 3}})).polytope), Q(6));
}

TEST(Shrink, HomothetyAndContainment)
{
    const auto p = box({0, 0}, {2, 2});
    const auto s = shrink(p, Vector<Q>::from_ints({0, 0}), Q(1));
    EXPECT_EQ(volume(s), Q(1));
    for (const auto& v : s.vertices) EXPECT_TRUE(p.contains(v));
    EXPECT_TRUE(std::any_of(s.vertices.begin(), s.vertices.end(), [](const Vector<Q>& v) { return v.is_zero(); }));
    EXPECT_THROW(shrink(p, Vector<Q>::from_ints({3, 0}), Q(1)), geometry_error);
    const auto c = box({0, 0, 0}, {3, 3, 3});
    EXPECT_EQ(volume(shrink(c, Vector<Q>::from_ints({1, 2, 0}), Q(2))), Q(volume(c) / 27));
}

TEST(Disjointness, Examples)
{
    EXPECT_TRUE(interiors_disjoint(box({0, 0}, {1, 1}), box({1, 0}, {2, 1})));
    EXPECT_FALSE(interiors_disjoint(box({0, 0}, {2, 2}), box({1, 1}, {3, 3})));
    EXPECT_TRUE(interiors_disjoint(box({0, 0, 0}, {1, 1, 1}), box({1, 1, 1}, {2, 2, 2})));
    // tetrahedra on either side of x + y + z = 2
    const auto t1 = *hull(pts({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}})).polytope;
    const auto t2 = *hull(pts({{2, 2, 2}, {1, 1, 3}, {3, 1, 1}, {1, 3, 1}})).polytope;
    EXPECT_TRUE(interiors_disjoint(t1, t2));
    EXPECT_FALSE(interiors_disjoint(t1, t1));
}

TEST(Lemma1, SquareVerticesCertify)
{
    const auto fam = direction_slabs(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    const auto cert = lemma1_check(fam, Q(1));
    EXPECT_TRUE(cert.verdict);
    EXPECT_EQ(cert.bound, Q(4));
    EXPECT_EQ(*cert.volume_sum, *cert.volume_hull);
    EXPECT_EQ(cert.stages.back().detail, "4 <= 4");
}

TEST(Lemma1, FivePlanarPointsFail)
{
    const auto fam = direction_slabs(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}));
    const auto cert = lemma1_check(fam, Q(1));
    EXPECT_FALSE(cert.verdict);
    const auto stage = cert.failed_stage();
    EXPECT_TRUE(stage == "eq1" || stage == "disjointness") << stage;
    EXPECT_TRUE(cert.offending_pair.has_value());
}

TEST(Lemma1, InputErrors)
{
    const auto fam = direction_slabs(pts({{0, 0}, {1, 0}}));
    EXPECT_THROW(lemma1_check(fam, rat(1, 2)), geometry_error);
    SlabFamily<Q> missing;
    missing.points = pts({{0, 0}, {1, 0}, {0, 1}});
    const auto cert = lemma1_check(missing, Q(1));
    EXPECT_EQ(cert.failed_stage(), "slabs");
}

TEST(Lemma1, RandomDirectionSlabFamilies)
{
    // whatever lambda the points need, a passing certificate keeps n <= (1+lambda)^d
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Vector<Q>> ps;
        const std::size_t d = 2 + trial % 2;
        for (int k = 0; k < 6; ++k) ps.push_back(minkarr::testing::random_point(rng, d, 4, 1));
        bool distinct = true;
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = 0; b < a; ++b) distinct = distinct && !(ps[a] == ps[b]);
        if (!distinct) continue;
        const auto fam = direction_slabs(ps);
        const auto cert = lemma1_check(fam, Q(3));
        if (cert.verdict) {
            EXPECT_LE(Q(static_cast<long>(ps.size())), cert.bound);
            EXPECT_TRUE(num::le(*cert.volume_sum, *cert.volume_hull));
        } else {
            EXPECT_FALSE(cert.failed_stage().empty());
        }
    }
}

TEST(Pipeline, CubeArrangement)
{
    const auto rep = theorem1_pipeline(cube_arrangement<Q>(2));
    EXPECT_TRUE(rep.passed) << rep.failure;
    EXPECT_EQ(rep.n, 9u);
    EXPECT_EQ(rep.bound, 27u);
    ASSERT_TRUE(rep.certificate.has_value());
    EXPECT_TRUE(rep.certificate->induction_branch());
    EXPECT_EQ(rep.pairs.size(), 36u);
}

TEST(Pipeline, RejectsNonArrangements)
{
    const auto linf = SymmetricBody<Q>::cube(2);
    const Arrangement<Q> overlapping(linf, {Homothet<Q>(Vector<Q>::from_ints({0, 0}), 2),
                                            Homothet<Q>(Vector<Q>::from_ints({1, 0}), 1)});
    const auto rep = theorem1_pipeline(overlapping);
    EXPECT_FALSE(rep.passed);
    EXPECT_EQ(*rep.offending_pair, IndexPair(0, 1));
    EXPECT_THROW(theorem1_pipeline(cube_arrangement<Q>(3)), geometry_error);
}

TEST(Pipeline, RandomMinkowskiArrangements)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const auto body = minkarr::testing::planar_body(rng, static_cast<minkarr::testing::BodyFamily>(trial % 3));
        const auto arr = minkarr::testing::random_arrangement(rng, body, 10, true);
        const auto rep = theorem1_pipeline(arr);
        EXPECT_TRUE(rep.passed) << rep.failure;
        for (const auto& p : rep.pairs) EXPECT_TRUE(p.ratio_ok);
        if (rep.certificate && rep.certificate->volume_hull && !rep.certificate->induction_branch()) {
            EXPECT_EQ(*rep.certificate->volume_sum, Q(*rep.certificate->volume_hull * static_cast<long>(arr.size()) / 27));
        }
    }
}
