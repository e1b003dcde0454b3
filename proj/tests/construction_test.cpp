// Copyright 2026 The davoid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "davoid/construction.hpp"
#include "davoid/errors.hpp"
#include "davoid/random.hpp"
#include "oracles.hpp"

#include "gtest/gtest.h"

#include <cmath>
#include <random>

namespace davoid
{
namespace
{

Point axis_point(int n, double x1)
{
    Point p(static_cast<std::size_t>(n), 0.0);
    p[0] = x1;
    return p;
}

TEST(CanonicalOffset, IsRootOfQuadratic)
{
    const double root = oracle::bisect([](double a) { return 3 * a * a - a - 0.75; }, 0.5, 1.0);
    EXPECT_NEAR(canonical_offset(), root, 1e-14);
    EXPECT_NEAR(canonical_offset(), 0.6937129434, 1e-10);
    EXPECT_GT(canonical_offset(), 0.5);
    EXPECT_LT(canonical_offset(), 1.0);
}

TEST(ChordCoordinate, HandValues)
{
    const double a = canonical_offset();
    EXPECT_NEAR(chord_coordinate(a), 0.8874258867, 1e-9);
    EXPECT_NEAR(chord_coordinate(a), 2.0 * a - 0.5, 1e-15);
    EXPECT_DOUBLE_EQ(chord_coordinate(0.75), 0.875);
    EXPECT_THROW(chord_coordinate(0.5), GeometryError);
    EXPECT_THROW(chord_coordinate(0.3), GeometryError);
    EXPECT_THROW(chord_coordinate(1.0), DomainError);
    // Just inside the admissible range the chord plane approaches x_1 = 1.
    const double c = chord_coordinate(0.5 + 1e-9);
    EXPECT_GT(c, 0.5);
    EXPECT_LT(c, 1.0);
}

TEST(ChordCoordinate, LiesOnBothSpheres)
{
    for (double a : {0.51, 0.6, canonical_offset(), 0.8, 0.95}) {
        const double c = chord_coordinate(a);
        EXPECT_GT(c, 0.5);
        EXPECT_LT(c, 1.0);
        // 1 - c² = 1/4 - (c - a)²: both spheres give the same chord half-width.
        EXPECT_NEAR(1.0 - c * c, 0.25 - (c - a) * (c - a), 1e-15) << a;
    }
}

TEST(EquidistanceResidual, ZeroAtCanonicalAndIncreasing)
{
    EXPECT_NEAR(equidistance_residual(canonical_offset()), 0.0, 1e-12);
    EXPECT_DOUBLE_EQ(equidistance_residual(0.75), 0.125);
    double previous = equidistance_residual(0.5 + 1e-6);
    EXPECT_LT(previous, 0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double a = 0.5 + 1e-6 + i * (0.5 - 2e-6) / 1000;
        const double r = equidistance_residual(a);
        EXPECT_GT(r, previous) << a;
        previous = r;
    }
    EXPECT_GT(previous, 0.0);
}

TEST(EqualChords, AtCanonicalOffset)
{
    const double a = canonical_offset();
    const double c = chord_coordinate(a);
    EXPECT_NEAR(0.25 - (a - 0.5) * (a - 0.5), 1.0 - c * c, 1e-12);
}

TEST(Params, Validation)
{
    EXPECT_THROW(ConstructionParams(1, 0.7), DomainError);
    EXPECT_THROW(ConstructionParams(3, 0.5), DomainError);
    EXPECT_THROW(ConstructionParams(3, 1.0), DomainError);
    EXPECT_THROW(ConstructionParams(3, std::nan("")), DomainError);
    const ConstructionParams p = ConstructionParams::canonical(4);
    EXPECT_EQ(p.dimension(), 4);
    EXPECT_EQ(p.offset(), canonical_offset());
    EXPECT_EQ(ConstructionParams::cap_radius, 0.5);
    EXPECT_EQ(ConstructionParams::threshold, 0.5);
}

TEST(Membership, AxisExamples)
{
    const double a = canonical_offset();
    for (int n : {2, 3, 7}) {
        const ConstructionParams p = ConstructionParams::canonical(n);
        EXPECT_TRUE(in_T(p, axis_point(n, a)));
        EXPECT_FALSE(in_T(p, axis_point(n, 0.5)));
        EXPECT_TRUE(in_T(p, axis_point(n, 0.99)));
        EXPECT_FALSE(in_T(p, axis_point(n, 1.0)));
        EXPECT_TRUE(in_S(p, axis_point(n, -a)));
        EXPECT_FALSE(in_T(p, axis_point(n, -a)));
        EXPECT_FALSE(in_S(p, axis_point(n, 0.0)));
        EXPECT_TRUE(in_S(p, axis_point(n, 0.99)));
    }
}

TEST(Membership, DimensionMismatch)
{
    const ConstructionParams p = ConstructionParams::canonical(3);
    EXPECT_THROW(in_T(p, Point{0.7, 0.0}), DomainError);
    EXPECT_THROW(in_S(p, Point{0.7, 0.0, 0.0, 0.0}), DomainError);
    EXPECT_THROW(classify_pair(p, Point{0.7, 0.0, 0.0}, Point{0.7, 0.0}), DomainError);
}

TEST(Membership, SymmetryAndCoordinateBounds)
{
    RandomStream stream(5);
    for (int n : {2, 3, 5, 12}) {
        const ConstructionParams p = ConstructionParams::canonical(n);
        int accepted = 0;
        for (int i = 0; i < 50000; ++i) {
            Point x(static_cast<std::size_t>(n));
            for (double& v : x) v = 2.0 * stream.uniform() - 1.0;
            Point minus = x;
            for (double& v : minus) v = -v;
            ASSERT_EQ(in_S(p, x), in_S(p, minus));
            if (in_T(p, x)) {
                ++accepted;
                double norm2 = 0.0;
                for (double v : x) norm2 += v * v;
                EXPECT_GT(x[0], 0.5);
                EXPECT_LT(x[0], 1.0);
                EXPECT_GT(std::sqrt(norm2), 0.5);
                EXPECT_LT(std::sqrt(norm2), 1.0);
            }
        }
        if (n <= 5) {
            EXPECT_GT(accepted, 0) << n;
        }
    }
}

TEST(ClassifyPair, Examples)
{
    const double a = canonical_offset();
    const ConstructionParams p = ConstructionParams::canonical(2);
    const PairClass cross = classify_pair(p, axis_point(2, a), axis_point(2, -a));
    EXPECT_EQ(cross.tag, PairTag::cross_component);
    EXPECT_NEAR(cross.distance, 1.3874258867, 1e-9);

    const PairClass same = classify_pair(p, axis_point(2, a), axis_point(2, 0.99));
    EXPECT_EQ(same.tag, PairTag::same_component);
    EXPECT_NEAR(same.distance, 0.99 - a, 1e-15);
    EXPECT_LT(same.distance, 1.0);

    EXPECT_EQ(classify_pair(p, axis_point(2, 0.0), axis_point(2, a)).tag, PairTag::outside);
    EXPECT_EQ(classify_pair(p, axis_point(2, -0.99), axis_point(2, -a)).tag, PairTag::same_component);
    EXPECT_EQ(to_string(PairTag::cross_component), "cross_component");
}

TEST(InnerApproximation, Examples)
{
    const double a = canonical_offset();
    const ConstructionParams p = ConstructionParams::canonical(2);
    EXPECT_THROW(inner_approximation(p, 0.0), DomainError);
    EXPECT_THROW(inner_approximation(p, 0.5 * (a - 0.5)), DomainError);
    const InnerApproximation inner = inner_approximation(p, 1e-3);
    EXPECT_TRUE(inner.contains(axis_point(2, a)));
    EXPECT_TRUE(inner.contains(axis_point(2, -a)));

    // In the eps-shell next to the threshold plane: in T_2, not in the inner set.
    const Point shell{0.5 + 5e-4, 0.1};
    EXPECT_TRUE(in_T(p, shell));
    EXPECT_FALSE(inner.contains(shell));

    // Closed: boundary of the tightened half-space is included.
    EXPECT_TRUE(inner.contains(Point{0.5 + 1e-3 + 1e-12, 0.0}));
}

TEST(InnerApproximation, SubsetOfS)
{
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n : {2, 3, 6}) {
        const ConstructionParams p = ConstructionParams::canonical(n);
        for (double eps : {1e-6, 1e-3, 0.05, 0.09}) {
            const InnerApproximation inner = inner_approximation(p, eps);
            for (int i = 0; i < 20000; ++i) {
                Point x(static_cast<std::size_t>(n));
                for (double& v : x) v = u(gen);
                if (inner.contains(x)) {
                    ASSERT_TRUE(in_S(p, x));
                }
            }
        }
    }
}

}  // namespace
}  // namespace davoid
