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

#include <cmath>
#include <string>

namespace davoid
{
namespace
{

void check_dimension(const ConstructionParams& params, std::span<const double> x)
{
    if (x.size() != static_cast<std::size_t>(params.dimension())) {
        throw DomainError("point has dimension " + std::to_string(x.size()) + ", expected " +
                          std::to_string(params.dimension()));
    }
}

// |x - s e_1|^2 and |x|^2 in one pass; s = ±a.
struct Norms
{
    double shifted;
    double plain;
};

Norms squared_norms(std::span<const double> x, double shift)
{
    double tail = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) tail += x[i] * x[i];
    const double d = x[0] - shift;
    return {d * d + tail, x[0] * x[0] + tail};
}

// T_n membership, or -T_n membership when sign = -1, without copying x.
bool in_component(double a, std::span<const double> x, double sign)
{
    if (!(sign * x[0] > ConstructionParams::threshold)) return false;
    const Norms norms = squared_norms(x, sign * a);
    return norms.shifted < ConstructionParams::cap_radius * ConstructionParams::cap_radius && norms.plain < 1.0;
}

}  // namespace

ConstructionParams::ConstructionParams(int n, double a) : n_(n), a_(a), chord_(0.0)
{
    if (n < 2) throw DomainError("dimension must be at least 2, got " + std::to_string(n));
    if (!(a > 0.5 && a < 1.0)) throw DomainError("offset a must lie in (1/2, 1)");
    chord_ = chord_coordinate(a);
}

ConstructionParams ConstructionParams::canonical(int n)
{
    return ConstructionParams(n, canonical_offset());
}

double canonical_offset()
{
    return (1.0 + std::sqrt(10.0)) / 6.0;
}

double chord_coordinate(double a)
{
    if (!(a + ConstructionParams::cap_radius > 1.0)) {
        throw GeometryError("spheres |x| = 1 and |x - a e_1| = 1/2 do not cross for a <= 1/2");
    }
    if (!(a < 1.0)) throw DomainError("offset a must be below 1");
    return (a * a + 0.75) / (2.0 * a);
}

double chord_coordinate(const ConstructionParams& params)
{
    return params.chord();
}

double equidistance_residual(double a)
{
    return (a - ConstructionParams::threshold) - (chord_coordinate(a) - a);
}

bool in_T(const ConstructionParams& params, std::span<const double> x)
{
    check_dimension(params, x);
    return in_component(params.offset(), x, 1.0);
}

bool in_S(const ConstructionParams& params, std::span<const double> x)
{
    check_dimension(params, x);
    return in_component(params.offset(), x, 1.0) || in_component(params.offset(), x, -1.0);
}

std::string_view to_string(PairTag tag)
{
    switch (tag) {
        case PairTag::same_component: return "same_component";
        case PairTag::cross_component: return "cross_component";
        case PairTag::outside: return "outside";
    }
    return "unknown";
}

PairClass classify_pair(const ConstructionParams& params, std::span<const double> x, std::span<const double> y)
{
    check_dimension(params, x);
    check_dimension(params, y);

    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += d * d;
    }
    const double distance = std::sqrt(sum);

    const double a = params.offset();
    const bool x_pos = in_component(a, x, 1.0);
    const bool x_neg = !x_pos && in_component(a, x, -1.0);
    const bool y_pos = in_component(a, y, 1.0);
    const bool y_neg = !y_pos && in_component(a, y, -1.0);

    if (!(x_pos || x_neg) || !(y_pos || y_neg)) return {PairTag::outside, distance};
    if (x_pos == y_pos) return {PairTag::same_component, distance};
    return {PairTag::cross_component, distance};
}

InnerApproximation::InnerApproximation(const ConstructionParams& params, double eps) : params_(params), eps_(eps)
{
    if (!(eps > 0.0 && eps < 0.5 * (params.offset() - 0.5))) {
        throw DomainError("inner approximation needs 0 < eps < (a - 1/2)/2");
    }
}

bool InnerApproximation::contains_positive(std::span<const double> x) const
{
    check_dimension(params_, x);
    if (!(x[0] >= ConstructionParams::threshold + eps_)) return false;
    const Norms norms = squared_norms(x, params_.offset());
    const double small = ConstructionParams::cap_radius - eps_;
    const double big = 1.0 - eps_;
    return norms.shifted <= small * small && norms.plain <= big * big;
}

bool InnerApproximation::contains(std::span<const double> x) const
{
    if (contains_positive(x)) return true;
    Point reflected(x.begin(), x.end());
    for (double& v : reflected) v = -v;
    return contains_positive(reflected);
}

InnerApproximation inner_approximation(const ConstructionParams& params, double eps)
{
    return InnerApproximation(params, eps);
}

}  // namespace davoid
