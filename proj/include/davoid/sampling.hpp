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

#include "davoid/construction.hpp"
#include "davoid/random.hpp"
#include "davoid/volume.hpp"

#include <cstdint>
#include <optional>

namespace davoid
{

struct SamplerConfig
{
    std::uint64_t seed;
    std::uint64_t sample_count;
    ConstructionParams params;
};

/// Uniform point of the open unit n-ball: normalised Gaussian direction,
/// radius U^{1/n}.
Point sample_unit_ball(int n, RandomStream& stream);

/// Rejection sampler for T_n with proposals from the radius-1/2 ball about
/// a e_1. An optional inner approximation tightens acceptance to its
/// positive component.
class TSampler
{
public:
    explicit TSampler(const ConstructionParams& params, std::optional<InnerApproximation> inner = std::nullopt);

    /// Throws NumericError if fewer than 1e-4 of the first kProbeTrials
    /// proposals are accepted.
    Point sample(RandomStream& stream);

    std::uint64_t trials() const noexcept { return trials_; }
    std::uint64_t accepted() const noexcept { return accepted_; }
    double acceptance_rate() const;

    static constexpr std::uint64_t kProbeTrials = 100000;

private:
    bool accept(const Point& x) const;

    ConstructionParams params_;
    std::optional<InnerApproximation> inner_;
    std::uint64_t trials_ = 0;
    std::uint64_t accepted_ = 0;
};

/// Uniform point of T_n.
Point sample_T(const ConstructionParams& params, RandomStream& stream);

inline constexpr double kZ99 = 2.5758293035489004;

struct McRatio
{
    std::uint64_t samples;
    std::uint64_t hits;
    double ratio;        ///< hits / samples
    double half_width;   ///< 99% normal-approximation half-width
    VolumeEstimate estimate() const;
};

/// Fraction of uniform unit-ball samples that land in S_n. Requires
/// sample_count >= 1e4.
McRatio mc_volume_ratio(const SamplerConfig& config);

struct ViolatingPair
{
    Point x;
    Point y;
    PairClass classification;
};

struct AuditReport
{
    std::uint64_t pairs_tested = 0;
    std::uint64_t same_pairs = 0;
    std::uint64_t cross_pairs = 0;
    std::uint64_t violations = 0;
    std::uint64_t membership_failures = 0;  ///< sampled points outside their own set
    double min_cross_distance = 0.0;
    double max_same_distance = 0.0;
    std::uint64_t seed = 0;
    std::optional<ViolatingPair> first_violation;

    bool passed() const { return violations == 0 && membership_failures == 0; }
};

/// Draws sample_count pairs of points of S_n (each point in T_n or -T_n by a
/// fair coin) and checks that same-component pairs are closer than 1 and
/// cross-component pairs farther than 1. Requires sample_count >= 1e4.
AuditReport pair_audit(const SamplerConfig& config);

/// Pair audit restricted to the closed inner approximation with parameter
/// eps. Every sampled point is also checked against S_n itself.
AuditReport pair_audit(const SamplerConfig& config, double eps);

}  // namespace davoid
