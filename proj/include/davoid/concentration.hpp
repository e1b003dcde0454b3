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

#include <vector>

namespace davoid
{

/// A constant c for which the equatorial-slab bound proves vol S_n / vol B_n > (1/2)^n
/// for every n >= n_min.
struct ConcentrationCertificate
{
    double c;
    int n_min;
    double bound_factor;  ///< 2 (1 - (2/c) e^{-c²/2}), the certified lower bound on 2^n vol S_n / vol B_n
    int width_ok_from;    ///< smallest n with c / √(n-1) <= slab width
};

/// 1 - (2/c) e^{-c²/2}: lower bound on the fraction of B_n with |x_1| <= c/√(n-1),
/// valid for n >= 3 and c >= 1. Returned unclamped; it is negative for c near 1.
double concentration_bound(double c);

/// Full width, in units of the radius-1/2 ball, of the largest symmetric slab
/// about a e_1 inside T_n: 2 min(a - 1/2, chord - a). Equals 2a - 1 for
/// a at or below the canonical offset.
double certified_slab_width(double a);

/// 2^n-scaled lower bound 2 * concentration_bound(c) on vol S_n / vol B_n.
/// Throws CertificateError (carrying the smallest admissible n) when the
/// theorem's slab c/√(n-1) does not fit inside the construction's slab.
double certified_ratio_lower_bound(int n, double c, double a);

/// Smallest n >= 3 certified by c. Throws NoCertificateError if the bound
/// factor does not exceed 1.
ConcentrationCertificate minimal_certified_n(double c, double a);

struct CertificateSearch
{
    ConcentrationCertificate best;
    /// Every grid constant achieving best.n_min, ascending.
    std::vector<double> certifying_c;
    int grid_points;
};

/// Grid search c = c_min, c_min + resolution, ..., c_max for the certificate
/// with the smallest n_min; ties go to the smallest c. Throws
/// NoCertificateError if no grid point certifies anything.
CertificateSearch best_certificate(double a, double c_min = 1.0, double c_max = 3.0, double resolution = 1e-3);

/// Checks the bound against the exact slab fraction of B_n.
struct TheoremCheck
{
    int n;
    double c;
    double half_width;  ///< c / √(n-1)
    double exact;       ///< slab_fraction(n, -half_width, half_width)
    double bound;
    double slack() const { return exact - bound; }
    bool holds() const { return exact >= bound; }
};

TheoremCheck check_theorem(int n, double c);

/// True when the exact slab fraction is at least concentration_bound(c).
/// Requires n >= 3, c >= 1 and c/√(n-1) <= 1.
bool validate_theorem(int n, double c);

}  // namespace davoid
