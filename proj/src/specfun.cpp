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

#include "davoid/specfun.hpp"

#include "davoid/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace davoid::specfun
{
namespace
{
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

// Continued fraction for I_z(a, b) in modified Lentz form. Converges quickly
// for z < (a + 1) / (a + b + 2).
double beta_continued_fraction(double z, double a, double b)
{
    const int max_iterations = 20000 + static_cast<int>(20.0 * std::sqrt(std::fmax(a, b)));
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * z / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    double delta = 0.0;
    for (int m = 1; m <= max_iterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * z / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * z / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) <= kEps) return h;
    }
    std::ostringstream msg;
    msg << "incomplete beta continued fraction did not converge: z=" << z << " a=" << a << " b=" << b
        << " iterations=" << max_iterations << " last |delta-1|=" << std::fabs(delta - 1.0);
    throw NumericError(msg.str(), h, std::fabs(delta - 1.0));
}

// ln z computed from whichever of z, 1 - z carries more precision.
double log_of(double z, double one_minus_z)
{
    return z < 0.5 ? std::log(z) : std::log1p(-one_minus_z);
}

void check_beta_args(double z, double one_minus_z, double alpha, double beta)
{
    if (!(z >= 0.0 && z <= 1.0) || !(one_minus_z >= 0.0 && one_minus_z <= 1.0)) {
        throw DomainError("reg_inc_beta: z must lie in [0, 1]");
    }
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw DomainError("reg_inc_beta: alpha and beta must be positive and finite");
    }
}

}  // namespace

double log_gamma(double x)
{
    if (!std::isfinite(x) || !(x > 0.0)) {
        throw DomainError("log_gamma: argument must be positive and finite");
    }
    return boost::math::lgamma(x);
}

LogValue unit_ball_volume(int n)
{
    if (n <= 0) throw DomainError("unit_ball_volume: dimension must be positive");
    const double half_n = 0.5 * n;
    return LogValue::from_log(half_n * std::log(std::numbers::pi) - log_gamma(1.0 + half_n));
}

double log_add_exp(double x, double y)
{
    if (x == -kInf) return y;
    if (y == -kInf) return x;
    const double hi = std::fmax(x, y);
    return hi + std::log1p(std::exp(std::fmin(x, y) - hi));
}

double log_sub_exp(double x, double y)
{
    if (y == -kInf) return x;
    if (y > x) throw DomainError("log_sub_exp: result would be negative");
    if (y == x) return -kInf;
    // log(1 - e^{-t}) switches form at t = ln 2 to keep full precision.
    const double t = x - y;
    return x + (t > std::numbers::ln2 ? std::log1p(-std::exp(-t)) : std::log(-std::expm1(-t)));
}

IncBetaLogs log_reg_inc_beta(double z, double one_minus_z, double alpha, double beta)
{
    check_beta_args(z, one_minus_z, alpha, beta);
    if (z == 0.0) return {-kInf, 0.0};
    if (one_minus_z == 0.0) return {0.0, -kInf};

    // Evaluate the fraction on whichever side converges; the other side follows
    // from I_z(a, b) = 1 - I_{1-z}(b, a).
    const bool swapped = z > (alpha + 1.0) / (alpha + beta + 2.0);
    const double x = swapped ? one_minus_z : z;
    const double xc = swapped ? z : one_minus_z;
    const double a = swapped ? beta : alpha;
    const double b = swapped ? alpha : beta;

    const double log_beta = log_gamma(a) + log_gamma(b) - log_gamma(a + b);
    const double log_prefix = a * log_of(x, xc) + b * log_of(xc, x) - log_beta - std::log(a);
    const double log_direct = log_prefix + std::log(beta_continued_fraction(x, a, b));

    // log(1 - e^{l}) for l <= 0.
    auto log_one_minus = [](double l) {
        if (l >= 0.0) return -kInf;
        return l > -std::numbers::ln2 ? std::log(-std::expm1(l)) : std::log1p(-std::exp(l));
    };
    const double direct = std::fmin(log_direct, 0.0);
    if (swapped) return {log_one_minus(direct), direct};
    return {direct, log_one_minus(direct)};
}

IncBetaLogs log_reg_inc_beta(double z, double alpha, double beta)
{
    return log_reg_inc_beta(z, 1.0 - z, alpha, beta);
}

double reg_inc_beta(double z, double alpha, double beta)
{
    const IncBetaLogs logs = log_reg_inc_beta(z, alpha, beta);
    // Report from whichever side is smaller; the larger side is 1 minus it.
    if (logs.log_lower <= logs.log_upper) return std::exp(logs.log_lower);
    return -std::expm1(logs.log_upper);
}

double log_slab_fraction(int n, double u0, double u1)
{
    if (n < 1) throw DomainError("slab_fraction: dimension must be positive");
    if (!(u0 >= -1.0 && u1 <= 1.0)) throw DomainError("slab_fraction: bounds must lie in [-1, 1]");
    if (u0 > u1) throw DomainError("slab_fraction: lower bound exceeds upper bound");
    if (u0 == u1) return -kInf;
    if (u1 <= 0.0) return log_slab_fraction(n, -u1, -u0);

    // The first coordinate of a uniform point in the unit n-ball satisfies
    // P(|x_1| <= t) = I_{t^2}(1/2, (n+1)/2).
    const double shape = 0.5 * (n + 1);
    auto central = [&](double t) {
        return log_reg_inc_beta(t * t, (1.0 - t) * (1.0 + t), 0.5, shape);
    };
    const double log_half = -std::numbers::ln2;

    const IncBetaLogs hi = central(u1);
    if (u0 <= 0.0) {
        const IncBetaLogs lo = central(-u0);
        return log_half + log_add_exp(hi.log_lower, lo.log_lower);
    }
    const IncBetaLogs lo = central(u0);
    // Rounding can order two nearly equal masses the wrong way; the slab is
    // then thinner than the precision of either.
    auto difference = [](double x, double y) { return y >= x ? -kInf : log_sub_exp(x, y); };
    // Difference of two one-sided tails or of two central masses, whichever
    // subtracts smaller numbers.
    if (lo.log_upper < hi.log_lower) {
        return log_half + difference(lo.log_upper, hi.log_upper);
    }
    return log_half + difference(hi.log_lower, lo.log_lower);
}

double slab_fraction(int n, double u0, double u1)
{
    return std::exp(log_slab_fraction(n, u0, u1));
}

}  // namespace davoid::specfun
