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

#include "davoid/concentration.hpp"

#include "davoid/construction.hpp"
#include "davoid/errors.hpp"
#include "davoid/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace davoid
{
namespace
{

void check_constant(double c)
{
    if (!(c >= 1.0) || !std::isfinite(c)) throw DomainError("concentration constant c must be >= 1");
}

// c / √(n-1) <= width, up to the few ulps of rounding in forming the product.
bool width_fits(int n, double c, double width)
{
    return c <= width * std::sqrt(static_cast<double>(n - 1)) * (1.0 + 8.0 * std::numeric_limits<double>::epsilon());
}

int smallest_fitting_n(double c, double width)
{
    const double ratio = c / width;
    int n = std::max(3, static_cast<int>(std::ceil(1.0 + ratio * ratio)));
    // The ceil is only a starting point; the direct test is authoritative.
    while (n > 3 && width_fits(n - 1, c, width)) --n;
    while (!width_fits(n, c, width)) ++n;
    return n;
}

}  // namespace

double concentration_bound(double c)
{
    check_constant(c);
    return 1.0 - (2.0 / c) * std::exp(-0.5 * c * c);
}

double certified_slab_width(double a)
{
    const double c = chord_coordinate(a);
    return 2.0 * std::fmin(a - 0.5, c - a);
}

double certified_ratio_lower_bound(int n, double c, double a)
{
    check_constant(c);
    if (n < 3) throw DomainError("certified_ratio_lower_bound: needs n >= 3");
    const double width = certified_slab_width(a);
    if (!width_fits(n, c, width)) {
        const int minimal = smallest_fitting_n(c, width);
        std::ostringstream msg;
        msg << "slab c/sqrt(n-1) exceeds " << width << " at n=" << n << "; c=" << c << " needs n >= " << minimal;
        throw CertificateError(msg.str(), minimal);
    }
    return 2.0 * concentration_bound(c);
}

ConcentrationCertificate minimal_certified_n(double c, double a)
{
    const double factor = 2.0 * concentration_bound(c);
    if (!(factor > 1.0)) {
        std::ostringstream msg;
        msg << "c=" << c << " gives bound factor " << factor << " <= 1; no dimension is certified";
        throw NoCertificateError(msg.str());
    }
    const int from = smallest_fitting_n(c, certified_slab_width(a));
    return {c, std::max(from, 3), factor, from};
}

CertificateSearch best_certificate(double a, double c_min, double c_max, double resolution)
{
    check_constant(c_min);
    if (!(c_max >= c_min)) throw DomainError("best_certificate: c_max < c_min");
    if (!(resolution > 0.0 && resolution <= 1e-3)) throw DomainError("best_certificate: resolution must be in (0, 1e-3]");

    // Grid points are generated from integer steps so that a finer grid whose
    // step divides the coarser one visits a superset of candidates.
    const long steps = static_cast<long>(std::floor((c_max - c_min) / resolution + 1e-9));
    CertificateSearch search{{0.0, 0, 0.0, 0}, {}, 0};
    bool found = false;
    auto consider = [&](double c) {
        ++search.grid_points;
        ConcentrationCertificate cert;
        try {
            cert = minimal_certified_n(c, a);
        } catch (const NoCertificateError&) {
            return;
        }
        if (!found || cert.n_min < search.best.n_min) {
            search.best = cert;
            search.certifying_c.assign(1, c);
            found = true;
        } else if (cert.n_min == search.best.n_min) {
            search.certifying_c.push_back(c);
        }
    };
    for (long k = 0; k <= steps; ++k) consider(c_min + static_cast<double>(k) * resolution);
    const double last = c_min + static_cast<double>(steps) * resolution;
    if (c_max - last > 1e-12) consider(c_max);

    if (!found) {
        std::ostringstream msg;
        msg << "no constant in [" << c_min << ", " << c_max << "] certifies any dimension";
        throw NoCertificateError(msg.str());
    }
    return search;
}

TheoremCheck check_theorem(int n, double c)
{
    check_constant(c);
    if (n < 3) throw DomainError("concentration bound requires n >= 3");
    const double h = c / std::sqrt(static_cast<double>(n - 1));
    if (h > 1.0) throw DomainError("slab half-width c/sqrt(n-1) exceeds 1");
    return {n, c, h, specfun::slab_fraction(n, -h, h), concentration_bound(c)};
}

bool validate_theorem(int n, double c)
{
    return check_theorem(n, c).holds();
}

}  // namespace davoid
