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

#include <cmath>
#include <cstdint>
#include <optional>

namespace davoid
{

/// SplitMix64 (Steele, Lea & Flood 2014). Every output is a pure function of
/// the seed and the call count, so streams are reproducible on any platform.
class SplitMix64
{
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Seed for shard k of a run seeded with `seed`.
constexpr std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard)
{
    SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * (shard + 1)));
    return mix.next();
}

/// Single random stream: uniforms, fair coins and standard normals drawn in
/// call order from one SplitMix64 generator.
class RandomStream
{
public:
    explicit constexpr RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_.next() >> 11) * 0x1.0p-53; }

    bool coin() { return (engine_.next() >> 63) != 0; }

    /// Standard normal by the Marsaglia polar method; the second variate of
    /// each accepted pair is returned by the next call.
    double normal()
    {
        if (spare_) {
            const double value = *spare_;
            spare_.reset();
            return value;
        }
        double u = 0.0;
        double v = 0.0;
        double s = 0.0;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double factor = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * factor;
        return u * factor;
    }

private:
    SplitMix64 engine_;
    std::optional<double> spare_;
};

}  // namespace davoid
