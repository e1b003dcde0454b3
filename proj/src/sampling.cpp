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

#include "davoid/sampling.hpp"

#include "davoid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace davoid
{
namespace
{

constexpr std::uint64_t kMinSamples = 10000;

void check_count(const SamplerConfig& config, const char* what)
{
    if (config.sample_count < kMinSamples) {
        throw DomainError(std::string(what) + ": sample_count must be at least 10000");
    }
}

}  // namespace

Point sample_unit_ball(int n, RandomStream& stream)
{
    if (n < 1) throw DomainError("sample_unit_ball: dimension must be positive");
    Point x(static_cast<std::size_t>(n));
    while (true) {
        double norm2 = 0.0;
        for (double& v : x) {
            v = stream.normal();
            norm2 += v * v;
        }
        if (norm2 == 0.0) continue;
        const double radius = std::pow(stream.uniform(), 1.0 / n);
        // pow can round up to exactly 1 for U within an ulp of 1.
        if (!(radius < 1.0)) continue;
        const double scale = radius / std::sqrt(norm2);
        for (double& v : x) v *= scale;
        return x;
    }
}

TSampler::TSampler(const ConstructionParams& params, std::optional<InnerApproximation> inner)
    : params_(params), inner_(std::move(inner))
{
}

bool TSampler::accept(const Point& x) const
{
    return inner_ ? inner_->contains_positive(x) : in_T(params_, x);
}

Point TSampler::sample(RandomStream& stream)
{
    const int n = params_.dimension();
    const double a = params_.offset();
    while (true) {
        Point x = sample_unit_ball(n, stream);
        for (double& v : x) v *= ConstructionParams::cap_radius;
        x[0] += a;
        ++trials_;
        if (accept(x)) {
            ++accepted_;
            return x;
        }
        if (trials_ == kProbeTrials && acceptance_rate() < 1e-4) {
            std::ostringstream msg;
            msg << "rejection sampler for T_n accepted " << accepted_ << " of " << trials_ << " proposals (n=" << n
                << ", a=" << a << ")";
            throw NumericError(msg.str(), acceptance_rate(), 0.0);
        }
    }
}

double TSampler::acceptance_rate() const
{
    return trials_ == 0 ? 0.0 : static_cast<double>(accepted_) / static_cast<double>(trials_);
}

Point sample_T(const ConstructionParams& params, RandomStream& stream)
{
    TSampler sampler(params);
    return sampler.sample(stream);
}

VolumeEstimate McRatio::estimate() const
{
    return {LogValue::from_linear(ratio), VolumeMethod::monte_carlo, half_width};
}

McRatio mc_volume_ratio(const SamplerConfig& config)
{
    check_count(config, "mc_volume_ratio");
    RandomStream stream(config.seed);
    const int n = config.params.dimension();
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < config.sample_count; ++i) {
        if (in_S(config.params, sample_unit_ball(n, stream))) ++hits;
    }
    const double samples = static_cast<double>(config.sample_count);
    const double p = static_cast<double>(hits) / samples;
    return {config.sample_count, hits, p, kZ99 * std::sqrt(p * (1.0 - p) / samples)};
}

namespace
{

AuditReport run_audit(const SamplerConfig& config, std::optional<InnerApproximation> inner)
{
    check_count(config, "pair_audit");
    RandomStream stream(config.seed);
    TSampler sampler(config.params, inner);

    AuditReport report;
    report.seed = config.seed;
    report.min_cross_distance = std::numeric_limits<double>::infinity();
    report.max_same_distance = 0.0;

    auto draw = [&] {
        const bool flip = stream.coin();
        Point x = sampler.sample(stream);
        if (flip) {
            for (double& v : x) v = -v;
        }
        const bool ok = inner ? inner->contains(x) && in_S(config.params, x) : in_S(config.params, x);
        if (!ok) ++report.membership_failures;
        return x;
    };

    for (std::uint64_t i = 0; i < config.sample_count; ++i) {
        Point x = draw();
        Point y = draw();
        const PairClass pc = classify_pair(config.params, x, y);
        ++report.pairs_tested;
        bool violation = false;
        switch (pc.tag) {
            case PairTag::same_component:
                ++report.same_pairs;
                report.max_same_distance = std::max(report.max_same_distance, pc.distance);
                violation = !(pc.distance < 1.0);
                break;
            case PairTag::cross_component:
                ++report.cross_pairs;
                report.min_cross_distance = std::min(report.min_cross_distance, pc.distance);
                violation = !(pc.distance > 1.0);
                break;
            case PairTag::outside:
                // Only reachable if a sampled point left S_n; already counted
                // as a membership failure.
                break;
        }
        if (violation) {
            ++report.violations;
            if (!report.first_violation) report.first_violation = ViolatingPair{x, y, pc};
        }
    }
    return report;
}

}  // namespace

AuditReport pair_audit(const SamplerConfig& config)
{
    return run_audit(config, std::nullopt);
}

AuditReport pair_audit(const SamplerConfig& config, double eps)
{
    return run_audit(config, InnerApproximation(config.params, eps));
}

}  // namespace davoid
