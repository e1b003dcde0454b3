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

#include "davoid/log_value.hpp"

namespace davoid::specfun
{

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// Volume of the unit ball in R^n, v_n = π^{n/2} / Γ(1 + n/2), as a logarithm.
LogValue unit_ball_volume(int n);

/// Regularized incomplete beta function I_z(alpha, beta).
double reg_inc_beta(double z, double alpha, double beta);

/// ln I_z(alpha, beta) and ln(1 - I_z(alpha, beta)), each accurate in the tail
/// where the linear value would underflow or cancel.
struct IncBetaLogs
{
    double log_lower;  ///< ln I_z(alpha, beta)
    double log_upper;  ///< ln (1 - I_z(alpha, beta))
};

IncBetaLogs log_reg_inc_beta(double z, double alpha, double beta);

/// Same as above, with 1 - z supplied by the caller when it is known more
/// accurately than the subtraction would give.
IncBetaLogs log_reg_inc_beta(double z, double one_minus_z, double alpha, double beta);

/// Fraction of the unit n-ball whose first coordinate lies in [u0, u1].
double slab_fraction(int n, double u0, double u1);

/// Natural log of slab_fraction; stays finite far below the double range.
double log_slab_fraction(int n, double u0, double u1);

/// log(exp(x) + exp(y)).
double log_add_exp(double x, double y);

/// log(exp(x) - exp(y)) for x >= y.
double log_sub_exp(double x, double y);

}  // namespace davoid::specfun
