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
#include "davoid/log_value.hpp"

#include <string_view>
#include <vector>

namespace davoid
{

enum class VolumeMethod
{
    quadrature,
    closed_form,
    monte_carlo,
    lower_bound,
};

std::string_view to_string(VolumeMethod method);

/// A volume (or volume ratio) in log form with the method that produced it.
/// error_bound is a relative error for deterministic methods and a 99%
/// confidence half-width for Monte Carlo.
struct VolumeEstimate
{
    LogValue log_value;
    VolumeMethod method;
    double error_bound;
};

/// vol S_n / vol B_n for one dimension.
struct RatioRow
{
    int n;
    double log_ratio;
    double ratio;   ///< exp(log_ratio); 0 once it underflows
    double scaled;  ///< 2^n * ratio
    double margin;  ///< scaled - 1; positive means vol S_n > (1/2)^n vol B_n
    /// ln(2 - scaled). For the closed form it is assembled from tail masses, so
    /// it stays finite and accurate after scaled itself has rounded to 2.
    double log_deficit;
};

inline constexpr double kDefaultTolerance = 1e-12;

/// vol T_n as the sum of the slab piece (radius-1/2 ball between the threshold
/// plane and the chord plane) and the cap piece (unit ball beyond the chord
/// plane). Both pieces are integrated numerically over x_1.
VolumeEstimate vol_T_quadrature(const ConstructionParams& params, double tol = kDefaultTolerance);

/// Same two pieces written as slab fractions of the radius-1/2 and unit balls.
VolumeEstimate vol_T_closed_form(const ConstructionParams& params);

/// The slab piece alone, a lower bound for vol T_n.
VolumeEstimate lower_bound_vol_T(const ConstructionParams& params);

struct VolumePieces
{
    LogValue slab;  ///< (1/2)^n v_n * slab_fraction(n, 1 - 2a, 2(c - a))
    LogValue cap;   ///< v_n * slab_fraction(n, c, 1)
};

VolumePieces volume_pieces(const ConstructionParams& params);

/// Ratio row using the chosen method for vol T_n. Monte Carlo is not accepted
/// here; see sampling.
RatioRow ratio_S(const ConstructionParams& params, VolumeMethod method = VolumeMethod::closed_form,
                 double tol = kDefaultTolerance);

/// d vol T_n / da, held as mantissa * exp(log_scale) so that large n does not
/// underflow.
struct ScaledDerivative
{
    double mantissa;
    double log_scale;

    double value() const;
};

/// v_{n-1} [ (1/4 - (a - 1/2)^2)^{(n-1)/2} - (1/4 - (c - a)^2)^{(n-1)/2} ].
/// The boundary terms at the chord plane cancel because both integrands agree
/// there.
ScaledDerivative dvol_da(const ConstructionParams& params);

/// Golden-section search for the offset maximising vol T_n, over
/// [1/2 + 1e-6, 1 - 1e-6]. Independent of dvol_da.
double maximize_a(int n, double tol = 1e-12);

/// One row per dimension in [n_min, n_max].
std::vector<RatioRow> ratio_table(int n_min, int n_max, double a, VolumeMethod method = VolumeMethod::closed_form,
                                  double tol = kDefaultTolerance);

}  // namespace davoid
