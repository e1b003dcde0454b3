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

#include <array>
#include <functional>

namespace davoid::quadrature
{

inline constexpr int kRuleOrder = 15;

struct GaussLegendreRule
{
    std::array<double, kRuleOrder> nodes;    ///< on [-1, 1], ascending
    std::array<double, kRuleOrder> weights;
};

/// 15-point Gauss-Legendre rule, computed once by Newton iteration on P_15.
const GaussLegendreRule& gauss_legendre_15();

struct Result
{
    double value;
    double error;       ///< absolute error estimate
    int panels;
    bool converged;
};

/// Adaptive Gauss-Legendre integration of f over [lo, hi].
///
/// Each panel is integrated with the 15-point rule and again as two halves;
/// the difference is the panel's error estimate and the halves are kept as its
/// value. The panel with the largest estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|) or max_panels is hit.
Result integrate(const std::function<double(double)>& f, double lo, double hi, double rel_tol, double abs_tol = 0.0,
                 int max_panels = 5000);

struct LogResult
{
    double log_value;
    double rel_error;   ///< relative error estimate of exp(log_value)
    int panels;
    bool converged;
};

/// Same scheme for an integrand given as ln f. Node values and panel sums are
/// combined with log-sum-exp so that integrals far below the double range
/// keep full relative precision.
LogResult integrate_log(const std::function<double(double)>& log_f, double lo, double hi, double rel_tol,
                        int max_panels = 5000);

}  // namespace davoid::quadrature
