#include "support.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace minkarr;
using minkarr::testing::Q;
using minkarr::testing::rat;

namespace {

Homothet<Q> hq(std::initializer_list<long> c, Q r) { return {Vector<Q>::from_ints(c), std::move(r)}; }

}  // namespace

TEST(Arrangement, PairPredicates)
{
    const auto linf = SymmetricBody<Q>::cube(2);
    // touching boxes intersect
    EXPECT_TRUE(intersects(linf, hq({0, 0}, 1), hq({2, 0}, 1)));
    EXPECT_FALSE(intersects(linf, hq({0, 0}, 1), hq({3, 0}, rat(3, 2))));
    // a center on the boundary is not interior
    EXPECT_FALSE(center_in_interior(linf, hq({0, 0}, 1), Vector<Q>::from_ints({1, 0})));
    EXPECT_TRUE(center_in_interior(linf, hq({0, 0}, 1), Vector<Q>(std::vector<Q>{rat(1, 2), 0})));
}

TEST(Arrangement, CubeArrangementCounts)
{
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto start = std::chrono::steady_clock::now();
        const auto arr = cube_arrangement<Q>(d);
        std::size_t expected = 1;
        for (std::size_t k = 0; k < d; ++k) expected *= 3;
        EXPECT_EQ(arr.size(), expected);
        EXPECT_TRUE(is_minkowski_arrangement(arr).ok);
        EXPECT_TRUE(is_pairwise_intersecting(arr).ok);
        EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
    }
    EXPECT_THROW(cube_arrangement<Q>(0), dimension_error);
}

TEST(Arrangement, WitnessesNameTheFirstBadPair)
{
    const auto linf = SymmetricBody<Q>::cube(2);
    const Arrangement<Q> far(linf, {hq({0, 0}, 1), hq({1, 0}, 2), hq({9, 0}, 1)});
    const auto pi = is_pairwise_intersecting(far);
    EXPECT_FALSE(pi.ok);
    ASSERT_TRUE(pi.witness.has_value());
    EXPECT_EQ(*pi.witness, IndexPair(0, 2));
    const auto mk = is_minkowski_arrangement(far);
    EXPECT_FALSE(mk.ok);
    EXPECT_EQ(*mk.witness, IndexPair(1, 0));
}

TEST(Arrangement, FloatIntersectionAgreesWithSampling)
{
    std::mt19937_64 rng(5);
    const auto body = SymmetricBody<double>::ball(2);
    std::uniform_real_distribution<double> u(-3, 3), r(0.2, 2);
    int overlaps = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Homothet<double> a(Vector<double>{u(rng), u(rng)}, r(rng));
        const Homothet<double> b(Vector<double>{u(rng), u(rng)}, r(rng));
        // a sampled common point proves intersection
        if (minkarr::testing::monte_carlo_overlap(rng, body, a, b, 4000)) {
            ++overlaps;
            EXPECT_TRUE(intersects(body, a, b));
        }
    }
    EXPECT_GT(overlaps, 20);
}

TEST(Arrangement, ChainToArrangement)
{
    const auto linf = SymmetricBody<Q>::cube(2);
    const std::vector<Vector<Q>> pts{Vector<Q>::from_ints({0, 0}), Vector<Q>::from_ints({2, 0}),
                                     Vector<Q>::from_ints({1, 1})};
    const std::vector<Q> lambdas{2, 1};
    EXPECT_THROW(chain_to_arrangement(pts, lambdas, linf), chain_violation);
    const std::vector<Vector<Q>> good{Vector<Q>::from_ints({0, 0}), Vector<Q>::from_ints({0, 2}),
                                      Vector<Q>::from_ints({2, 0}), Vector<Q>::from_ints({2, 1})};
    const auto arr = chain_to_arrangement(good, std::vector<Q>{2, 2, 1}, linf);
    EXPECT_EQ(arr.size(), 4u);
    EXPECT_TRUE(is_pairwise_intersecting(arr).ok);
    try {
        chain_to_arrangement(pts, lambdas, linf);
    } catch (const chain_violation& e) {
        EXPECT_EQ(e.first, 0u);
        EXPECT_EQ(e.second, 2u);
    }
}

TEST(Arrangement, RandomMinkowskiFamiliesRespectBound)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto body = minkarr::testing::planar_body(rng, static_cast<minkarr::testing::BodyFamily>(trial % 3));
        const auto arr = minkarr::testing::random_arrangement(rng, body, 30, true);
        EXPECT_TRUE(is_minkowski_arrangement(arr).ok);
        EXPECT_TRUE(is_pairwise_intersecting(arr).ok);
        EXPECT_LE(arr.size(), kappa_upper_bound(2));
    }
}

TEST(Partition, LabelsForDimensionThree)
{
    const double mu = partition_mu(3);
    EXPECT_NEAR(mu, 1.0 / std::sqrt(2.0), 1e-15);
    const auto labels = partition_classes(std::vector<double>{1.0, 0.8, 0.5, 0.3, 0.2, 0.1}, 3);
    EXPECT_EQ(labels[0], (PartitionLabel{1, 1}));
    // 0.5 = mu^2 sits on a right-closed endpoint: exponent 2
    EXPECT_EQ(labels[2], (PartitionLabel{3, 1}));
    EXPECT_EQ(labels[3], (PartitionLabel{1, 2}));
    EXPECT_THROW(partition_classes(std::vector<double>{1.0, 0.0}, 3), geometry_error);
    EXPECT_THROW(partition_mu(1), dimension_error);
}

TEST(Partition, ClassesAreScaleFreeAndBounded)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(1e-6, 1.0);
    for (int d = 3; d <= 5; ++d) {
        std::vector<double> ls(2000);
        for (auto& l : ls) l = u(rng);
        const auto labels = partition_classes(ls, d);
        const double mu = partition_mu(d);
        for (std::size_t a = 0; a < ls.size(); a += 7)
            for (std::size_t b = 0; b < ls.size(); b += 11) {
                if (!(labels[a] == labels[b])) continue;
                const double q = ls[a] / ls[b];
                EXPECT_GE(q, mu * (1 - 1e-12));
                EXPECT_LE(q, (1 + 1e-12) / mu);
            }
    }
}

TEST(Bounds, KappaAndTheoremTwo)
{
    EXPECT_EQ(kappa_upper_bound(1), 9u);
    EXPECT_EQ(kappa_upper_bound(2), 27u);
    EXPECT_EQ(kappa_upper_bound(3), 81u);
    EXPECT_THROW(kappa_upper_bound(39), std::overflow_error);
    EXPECT_TRUE(std::holds_alternative<Infinite>(theorem2_bound(2)));
    EXPECT_NEAR(static_cast<double>(std::get<long double>(theorem2_bound(3))), 1139.0285707, 1e-6);
    // the bound is Theta(d 3^{d+1}) with a constant that tends to e^{(2 ln 2)/3}
    const long double b20 = std::get<long double>(theorem2_bound(20));
    const long double ratio = b20 / (20.0L * std::pow(3.0L, 21.0L));
    EXPECT_GT(ratio, 1.0L);
    EXPECT_LT(ratio, 2.0L);
    EXPECT_THROW(theorem2_bound(1), dimension_error);
}
