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

#include "davoid/volume.hpp"

#include "davoid/errors.hpp"
#include "davoid/quadrature.hpp"
#include "davoid/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace davoid
{
namespace
{
// Above this dimension the integrands are summed in log form.
constexpr int kLinearLimit = 60;

struct PieceIntegral
{
    double log_value;
    double rel_error;
    bool converged;
};

// ∫_{lo}^{hi} v_{n-1} ((r - t)(r + t))^{(n-1)/2} dt
PieceIntegral integrate_section(int n, double radius, double lo, double hi, double tol)
{
    const double exponent = 0.5 * (n - 1);
    const double log_v = specfun::unit_ball_volume(n - 1).log();
    if (n <= kLinearLimit) {
        const double v = std::exp(log_v);
        auto f = [=](double t) {
            const double s = (radius - t) * (radius + t);
            return s > 0.0 ? v * std::pow(s, exponent) : 0.0;
        };
        const quadrature::Result r = quadrature::integrate(f, lo, hi, tol);
        return {std::log(r.value), r.value > 0.0 ? r.error / r.value : 0.0, r.converged};
    }
    auto log_f = [=](double t) {
        const double s = (radius - t) * (radius + t);
        return s > 0.0 ? log_v + exponent * std::log(s) : -std::numeric_limits<double>::infinity();
    };
    const quadrature::LogResult r = quadrature::integrate_log(log_f, lo, hi, tol);
    return {r.log_value, r.rel_error, r.converged};
}

}  // namespace

std::string_view to_string(VolumeMethod method)
{
    switch (method) {
        case VolumeMethod::quadrature: return "quadrature";
        case VolumeMethod::closed_form: return "closed_form";
        case VolumeMethod::monte_carlo: return "monte_carlo";
        case VolumeMethod::lower_bound: return "lower_bound";
    }
    return "unknown";
}

VolumeEstimate vol_T_quadrature(const ConstructionParams& params, double tol)
{
    if (!(tol >= 1e-14 && tol <= 1e-6)) throw DomainError("quadrature tolerance must lie in [1e-14, 1e-6]");
    const int n = params.dimension();
    const double a = params.offset();
    const double c = params.chord();

    // Slab piece in coordinates centred at a e_1; cap piece in x_1 itself.
    const PieceIntegral slab = integrate_section(n, 0.5, 0.5 - a, c - a, tol);
    const PieceIntegral cap = integrate_section(n, 1.0, c, 1.0, tol);

    const double log_total = specfun::log_add_exp(slab.log_value, cap.log_value);
    const double rel_error =
        slab.rel_error * std::exp(slab.log_value - log_total) + cap.rel_error * std::exp(cap.log_value - log_total);
    if (!slab.converged || !cap.converged || !(rel_error <= tol)) {
        std::ostringstream msg;
        msg << "vol_T_quadrature: tolerance " << tol << " not reached for n=" << n << " a=" << a
            << " (achieved relative error " << rel_error << ")";
        throw NumericError(msg.str(), log_total, rel_error);
    }
    return {LogValue::from_log(log_total), VolumeMethod::quadrature, rel_error};
}

VolumePieces volume_pieces(const ConstructionParams& params)
{
    const int n = params.dimension();
    const double a = params.offset();
    const double c = params.chord();
    const LogValue ball = specfun::unit_ball_volume(n);
    const LogValue half_ball = ball * LogValue::from_log(-n * std::numbers::ln2);
    const double slab_lo = 2.0 * (0.5 - a);
    const double slab_hi = 2.0 * (c - a);
    return {
        half_ball * LogValue::from_log(specfun::log_slab_fraction(n, slab_lo, slab_hi)),
        ball * LogValue::from_log(specfun::log_slab_fraction(n, c, 1.0)),
    };
}

VolumeEstimate vol_T_closed_form(const ConstructionParams& params)
{
    const VolumePieces pieces = volume_pieces(params);
    return {pieces.slab + pieces.cap, VolumeMethod::closed_form, 1e-13};
}

VolumeEstimate lower_bound_vol_T(const ConstructionParams& params)
{
    return {volume_pieces(params).slab, VolumeMethod::lower_bound, 1e-13};
}

RatioRow ratio_S(const ConstructionParams& params, VolumeMethod method, double tol)
{
    VolumeEstimate estimate;
    switch (method) {
        case VolumeMethod::quadrature: estimate = vol_T_quadrature(params, tol); break;
        case VolumeMethod::closed_form: estimate = vol_T_closed_form(params); break;
        case VolumeMethod::lower_bound: estimate = lower_bound_vol_T(params); break;
        case VolumeMethod::monte_carlo:
            throw DomainError("ratio_S: Monte Carlo ratios come from mc_volume_ratio");
    }
    const int n = params.dimension();
    const double log_ratio =
        std::numbers::ln2 + estimate.log_value.log() - specfun::unit_ball_volume(n).log();
    const double scaled = std::exp(log_ratio + n * std::numbers::ln2);
    double log_deficit = scaled < 2.0 ? std::log(2.0 - scaled) : -std::numeric_limits<double>::infinity();
    if (method == VolumeMethod::closed_form) {
        // 2 - scaled = 2 [(mass of the radius-1/2 ball outside the slab) - 2^n (unit cap fraction)]
        const double a = params.offset();
        const double c = params.chord();
        const double outside_slab = specfun::log_add_exp(specfun::log_slab_fraction(n, -1.0, 2.0 * (0.5 - a)),
                                                         specfun::log_slab_fraction(n, 2.0 * (c - a), 1.0));
        const double cap = n * std::numbers::ln2 + specfun::log_slab_fraction(n, c, 1.0);
        log_deficit = cap < outside_slab ? std::numbers::ln2 + specfun::log_sub_exp(outside_slab, cap)
                                         : -std::numeric_limits<double>::infinity();
    }
    return {n, log_ratio, std::exp(log_ratio), scaled, scaled - 1.0, log_deficit};
}

double ScaledDerivative::value() const
{
    return mantissa == 0.0 ? 0.0 : mantissa * std::exp(log_scale);
}

ScaledDerivative dvol_da(const ConstructionParams& params)
{
    const int n = params.dimension();
    const double a = params.offset();
    const double gap = params.chord() - a;
    // 1/4 - (a - 1/2)^2 = a (1 - a)
    const double threshold_section = a * (1.0 - a);
    const double chord_section = (0.5 - gap) * (0.5 + gap);
    const double exponent = 0.5 * (n - 1);
    const double log_hi = std::log(std::fmax(threshold_section, chord_section));
    const double log_lo = std::log(std::fmin(threshold_section, chord_section));
    const double sign = threshold_section >= chord_section ? 1.0 : -1.0;
    return {
        sign * -std::expm1(exponent * (log_lo - log_hi)),
        specfun::unit_ball_volume(n - 1).log() + exponent * log_hi,
    };
}

double maximize_a(int n, double tol)
{
    if (n < 2) throw DomainError("maximize_a: dimension must be at least 2");
    if (!(tol >= 1e-12)) throw DomainError("maximize_a: tolerance must be at least 1e-12");

    constexpr double delta = 1e-6;
    // ln(vol T_n / ((1/2)^n v_n)): same maximiser as vol T_n, but of order one,
    // so the constant ln v_n does not swamp the a-dependent digits.
    auto objective = [n](double a) {
        const ConstructionParams params(n, a);
        const double slab = specfun::log_slab_fraction(n, 2.0 * (0.5 - a), 2.0 * (params.chord() - a));
        const double cap = n * std::numbers::ln2 + specfun::log_slab_fraction(n, params.chord(), 1.0);
        return specfun::log_add_exp(slab, cap);
    };

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.5 + delta;
    double hi = 1.0 - delta;
    const double f_lo = objective(lo);
    const double f_hi = objective(hi);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    if (!(std::fmax(f1, f2) > std::fmax(f_lo, f_hi))) {
        throw NumericError("maximize_a: interior not above the bracket ends (objective not unimodal)", x1,
                           hi - lo);
    }
    while (hi - lo > tol) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<RatioRow> ratio_table(int n_min, int n_max, double a, VolumeMethod method, double tol)
{
    if (!(2 <= n_min && n_min <= n_max && n_max <= 10000)) {
        throw DomainError("ratio_table: need 2 <= n_min <= n_max <= 10000");
    }
    std::vector<RatioRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) rows.push_back(ratio_S(ConstructionParams(n, a), method, tol));
    return rows;
}

}  // namespace davoid
