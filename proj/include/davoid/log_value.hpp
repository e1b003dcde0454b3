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
#include <limits>

namespace davoid
{

/// Natural-log representation of a non-negative quantity.
///
/// Ball volumes fall below the double range for a few thousand dimensions and
/// 2^-n scale ratios lose relative precision long before that, so every volume
/// in the library travels as a logarithm. The linear value is produced only on
/// request, together with a flag telling whether it under- or overflowed.
class LogValue
{
public:
    constexpr LogValue() = default;

    static constexpr LogValue from_log(double log_magnitude) { return LogValue(log_magnitude); }
    static LogValue from_linear(double value) { return LogValue(std::log(value)); }
    static constexpr LogValue zero() { return LogValue(-std::numeric_limits<double>::infinity()); }

    constexpr double log() const { return log_; }
    double linear() const { return std::exp(log_); }

    /// True when the linear value is not representable as a normal double.
    bool underflows() const
    {
        return log_ < std::log(std::numeric_limits<double>::min()) && log_ != -std::numeric_limits<double>::infinity();
    }
    bool overflows() const { return log_ > std::log(std::numeric_limits<double>::max()); }
    bool is_zero() const { return log_ == -std::numeric_limits<double>::infinity(); }

    friend constexpr LogValue operator*(LogValue lhs, LogValue rhs) { return LogValue(lhs.log_ + rhs.log_); }
    friend constexpr LogValue operator/(LogValue lhs, LogValue rhs) { return LogValue(lhs.log_ - rhs.log_); }

    /// log(exp(lhs) + exp(rhs)) without leaving the log domain.
    friend LogValue operator+(LogValue lhs, LogValue rhs)
    {
        if (lhs.is_zero()) return rhs;
        if (rhs.is_zero()) return lhs;
        const double hi = std::fmax(lhs.log_, rhs.log_);
        const double lo = std::fmin(lhs.log_, rhs.log_);
        return LogValue(hi + std::log1p(std::exp(lo - hi)));
    }

    friend constexpr bool operator<(LogValue lhs, LogValue rhs) { return lhs.log_ < rhs.log_; }
    friend constexpr bool operator<=(LogValue lhs, LogValue rhs) { return lhs.log_ <= rhs.log_; }

private:
    constexpr explicit LogValue(double log_magnitude) : log_(log_magnitude) {}

    double log_ = -std::numeric_limits<double>::infinity();
};

}  // namespace davoid
