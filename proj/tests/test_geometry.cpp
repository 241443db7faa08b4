#include "support.hpp"

#include <gtest/gtest.h>

using namespace minkarr;
using minkarr::testing::Q;
using minkarr::testing::rat;

TEST(Scalar, ParsesRationalsAndDecimalsExactly)
{
    EXPECT_EQ(num::parse_rational("3/6"), rat(1, 2));
    EXPECT_EQ(num::parse_rational("-0.125"), rat(-1, 8));
    EXPECT_EQ(num::parse_rational("1.5e2"), Q(150));
    EXPECT_EQ(num::parse_rational("25e-2"), rat(1, 4));
    EXPECT_EQ(num::parse_rational(" 7 "), Q(7));
    EXPECT_THROW(num::parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(num::parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(num::parse_rational(""), std::invalid_argument);
    EXPECT_DOUBLE_EQ(num::parse<double>("0.1"), 0.1);
    EXPECT_DOUBLE_EQ(num::parse<double>("1/3"), 1.0 / 3.0);
}

TEST(Scalar, FloatPredicatesUseEpsilon)
{
    EXPECT_TRUE(num::eq(1.0, 1.0 + 1e-12));
    EXPECT_FALSE(num::eq(1.0, 1.0 + 1e-6));
    EXPECT_TRUE(num::lt(rat(1, 3), rat(1, 2)));
    EXPECT_FALSE(num::eq(rat(1, 3), Q(Q(1, 3) + Q(1, 1000000000) / 1000000000)));
}

TEST(Vector, ArithmeticAndDimensionChecks)
{
    const auto a = Vector<Q>::from_ints({1, 2, 3});
    const auto b = Vector<Q>::from_ints({4, 5, 6});
    EXPECT_EQ(a.dot(b), Q(32));
    EXPECT_EQ((a + b)[2], Q(9));
    EXPECT_EQ(cross(a, b), Vector<Q>::from_ints({-3, 6, -3}));
    EXPECT_THROW(a.dot(Vector<Q>::from_ints({1, 2})), dimension_error);
    EXPECT_TRUE(lex_less(a, b));
}

TEST(Linalg, RankNullspaceSolveDeterminant)
{
    std::vector<Vector<Q>> rows{Vector<Q>::from_ints({1, 2, 3}), Vector<Q>::from_ints({2, 4, 6})};
    EXPECT_EQ(linalg::rank(rows), 1u);
    const auto ns = linalg::nullspace(rows, 3);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& n : ns) EXPECT_TRUE(num::is_zero(rows[0].dot(n)));
    const auto x = linalg::solve({Vector<Q>::from_ints({2, 1}), Vector<Q>::from_ints({1, 3})}, Vector<Q>::from_ints({3, 5}));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], rat(4, 5));
    EXPECT_EQ((*x)[1], rat(7, 5));
    EXPECT_FALSE(linalg::solve(rows, Vector<Q>::from_ints({1, 3})).has_value());
    EXPECT_EQ(linalg::determinant<Q>({Vector<Q>::from_ints({1, 2}), Vector<Q>::from_ints({3, 4})}), Q(-2));
}

TEST(LinearProgram, SmallProblems)
{
    // min -y1 - y2 s.t. y1 + y3 = 1, y2 + y4 = 2
    const std::vector<Q> c{-1, -1, 0, 0};
    const std::vector<std::vector<Q>> a{{1, 0, 1, 0}, {0, 1, 0, 1}};
    const auto r = lp::minimize(c, a, std::vector<Q>{1, 2});
    ASSERT_EQ(r.status, lp::Status::optimal);
    EXPECT_EQ(r.value, Q(-3));
    const auto inf = lp::minimize(std::vector<Q>{1}, {{1}}, std::vector<Q>{-1});
    EXPECT_EQ(inf.status, lp::Status::infeasible);
    const auto unb = lp::minimize(std::vector<Q>{-1, 0}, {{1, -1}}, std::vector<Q>{0});
    EXPECT_EQ(unb.status, lp::Status::unbounded);
}

TEST(Body, GaugeOfStandardNorms)
{
    const auto linf = SymmetricBody<Q>::cube(2);
    const auto l1 = SymmetricBody<Q>::cross_polytope(2);
    EXPECT_EQ(gauge(linf, Vector<Q>::from_ints({3, -4})), Q(4));
    EXPECT_EQ(gauge(l1, Vector<Q>::from_ints({3, -4})), Q(7));
    EXPECT_EQ(gauge(linf, Vector<Q>(2)), Q(0));
    const auto ball = SymmetricBody<double>::ball(2);
    EXPECT_NEAR(gauge(ball, Vector<double>::from_ints({3, 4})), 5.0, 1e-12);
    EXPECT_THROW(gauge(linf, Vector<Q>::from_ints({1, 2, 3})), dimension_error);
}

TEST(Body, VertexAndFacetFormsAgree)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto hex = minkarr::testing::random_hexagon(rng);
        std::vector<Vector<Q>> verts;
        // vertices of the facet form are the pairwise facet intersections that satisfy every facet
        for (std::size_t a = 0; a < hex.facets().size(); ++a)
            for (std::size_t b = a + 1; b < hex.facets().size(); ++b) {
                const auto& fa = hex.facets()[a];
                const auto& fb = hex.facets()[b];
                const auto x = linalg::solve({fa.normal, fb.normal}, Vector<Q>(std::vector<Q>{fa.offset, fb.offset}));
                if (!x) continue;
                bool inside = true;
                for (const auto& f : hex.facets()) inside = inside && num::le(f.normal.dot(*x), f.offset);
                if (inside) verts.push_back(*x);
            }
        const auto v = SymmetricBody<Q>::vpolytope(verts);
        for (int k = 0; k < 10; ++k) {
            const auto p = minkarr::testing::random_point(rng, 2, 5);
            EXPECT_EQ(gauge(hex, p), gauge(v, p));
            if (!p.is_zero()) {
                EXPECT_EQ(support(hex, p), support(v, p));
            }
        }
    }
}

TEST(Body, SupportFunction)
{
    const auto linf = SymmetricBody<Q>::cube(3);
    EXPECT_EQ(support(linf, Vector<Q>::from_ints({1, -2, 3})), Q(6));
    const auto l1 = SymmetricBody<Q>::cross_polytope(3);
    EXPECT_EQ(support(l1, Vector<Q>::from_ints({1, -2, 3})), Q(3));
    EXPECT_THROW(support(l1, Vector<Q>(3)), geometry_error);
}

TEST(Body, BoundaryPointAndSupportingHyperplane)
{
    const auto linf = SymmetricBody<Q>::cube(2);
    const auto r = boundary_point(linf, Vector<Q>::from_ints({2, 1}));
    EXPECT_EQ(r, Vector<Q>(std::vector<Q>{1, rat(1, 2)}));
    const auto f = supporting_hyperplane(linf, r);
    EXPECT_EQ(f.normal, Vector<Q>::from_ints({1, 0}));
    EXPECT_EQ(f.offset, Q(1));
    // at a vertex the lexicographically smallest active normal wins
    const auto g = supporting_hyperplane(linf, Vector<Q>::from_ints({1, 1}));
    EXPECT_EQ(g.normal, Vector<Q>::from_ints({0, 1}));
    EXPECT_THROW(supporting_hyperplane(linf, Vector<Q>(std::vector<Q>{rat(1, 2), 0})), geometry_error);
}

TEST(Body, ConstructionErrors)
{
    EXPECT_THROW(SymmetricBody<Q>::hpolytope({{Vector<Q>::from_ints({1, 0}), 1}}), geometry_error);
    EXPECT_THROW(SymmetricBody<Q>::hpolytope({{Vector<Q>::from_ints({1, 0}), 1}, {Vector<Q>::from_ints({-1, 0}), 1}}),
                 geometry_error);
    EXPECT_THROW(SymmetricBody<Q>::hpolytope({{Vector<Q>::from_ints({1, 0}), 1}, {Vector<Q>::from_ints({-1, 0}), 2}}),
                 geometry_error);
    EXPECT_THROW(SymmetricBody<Q>::vpolytope({Vector<Q>::from_ints({1, 1}), Vector<Q>::from_ints({-1, -1})}), geometry_error);
    EXPECT_THROW(SymmetricBody<Q>::vpolytope({Vector<Q>::from_ints({1, 1}), Vector<Q>::from_ints({1, -1})}), geometry_error);
    EXPECT_THROW(SymmetricBody<Q>::ball(2), geometry_error);
}

TEST(Body, GaugeIsANormProperty)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto body = minkarr::testing::random_hexagon(rng);
        const auto x = minkarr::testing::random_point(rng, 2, 4);
        const auto y = minkarr::testing::random_point(rng, 2, 4);
        EXPECT_EQ(gauge(body, x), gauge(body, Vector<Q>(-x)));
        EXPECT_TRUE(num::le(gauge(body, Vector<Q>(x + y)), Q(gauge(body, x) + gauge(body, y))));
        EXPECT_EQ(gauge(body, Vector<Q>(x * Q(3))), Q(3 * gauge(body, x)));
        if (!x.is_zero()) {
            EXPECT_EQ(gauge(body, boundary_point(body, x)), Q(1));
        }
    }
}
