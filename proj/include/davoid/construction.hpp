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

#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace davoid
{

/// A point of R^n; coordinate 0 is the distinguished axis e_1.
using Point = std::vector<double>;

/// Parameters of the half-ball construction T_n and its symmetric union S_n.
///
/// T_n = { x : x_1 > 1/2, |x - a e_1| < 1/2, |x| < 1 } and S_n = T_n ∪ -T_n.
/// The cap radius and the threshold plane are both fixed at 1/2; only the
/// dimension and the offset a vary. Immutable once validated.
class ConstructionParams
{
public:
    static constexpr double cap_radius = 0.5;
    static constexpr double threshold = 0.5;

    /// Throws DomainError unless n >= 2 and 1/2 < a < 1.
    ConstructionParams(int n, double a);

    /// Parameters at the volume-maximising offset.
    static ConstructionParams canonical(int n);

    int dimension() const noexcept { return n_; }
    double offset() const noexcept { return a_; }

    /// x_1-coordinate of the plane through the intersection of |x| = 1 and
    /// |x - a e_1| = 1/2.
    double chord() const noexcept { return chord_; }

private:
    int n_;
    double a_;
    double chord_;
};

/// The offset (1 + √10) / 6, the unique root in (1/2, 1) of 3a² - a - 3/4 = 0.
double canonical_offset();

/// (a² + 3/4) / (2a). Throws GeometryError when a + 1/2 <= 1 (the small
/// sphere does not cross the unit sphere) and DomainError when a >= 1.
double chord_coordinate(double a);
double chord_coordinate(const ConstructionParams& params);

/// (a - 1/2) - (chord - a): signed gap between the distances from a e_1 to the
/// threshold plane and to the chord plane. Vanishes exactly at canonical_offset().
double equidistance_residual(double a);

bool in_T(const ConstructionParams& params, std::span<const double> x);
bool in_S(const ConstructionParams& params, std::span<const double> x);

enum class PairTag
{
    same_component,
    cross_component,
    outside,
};

std::string_view to_string(PairTag tag);

struct PairClass
{
    PairTag tag;
    double distance;
};

/// Classifies a pair of points of S_n.
///
/// Two points of the same component lie in one open ball of radius 1/2, so
/// their distance is below 1. Points of opposite components satisfy
/// x_1 > 1/2 and y_1 < -1/2, so their distance exceeds x_1 - y_1 > 1. Neither
/// inequality is assumed here: the distance is measured and reported so that
/// audits can count any violation.
PairClass classify_pair(const ConstructionParams& params, std::span<const double> x, std::span<const double> y);

/// Closed subset of S_n obtained by tightening each strict inequality by eps:
/// x_1 >= 1/2 + eps, |x - a e_1| <= 1/2 - eps, |x| <= 1 - eps, and the mirror
/// image of that set.
class InnerApproximation
{
public:
    /// Throws DomainError unless 0 < eps < (a - 1/2) / 2.
    InnerApproximation(const ConstructionParams& params, double eps);

    bool contains_positive(std::span<const double> x) const;
    bool contains(std::span<const double> x) const;

    const ConstructionParams& params() const noexcept { return params_; }
    double epsilon() const noexcept { return eps_; }

private:
    ConstructionParams params_;
    double eps_;
};

InnerApproximation inner_approximation(const ConstructionParams& params, double eps);

}  // namespace davoid
