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

#include "davoid/quadrature.hpp"

#include "davoid/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace davoid::quadrature
{
namespace
{
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

GaussLegendreRule build_rule()
{
    GaussLegendreRule rule{};
    constexpr int n = kRuleOrder;
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like starting guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::fabs(step) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    // The middle node of an odd rule is exactly zero.
    rule.nodes[n / 2] = 0.0;
    return rule;
}

struct LinearPanel
{
    double lo;
    double hi;
    double value;
    double error;
};

struct RuleSum
{
    double value;
    double abs_value;
};

RuleSum apply_rule(const std::function<double(double)>& f, double lo, double hi)
{
    const GaussLegendreRule& rule = gauss_legendre_15();
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    double abs_sum = 0.0;
    for (int i = 0; i < kRuleOrder; ++i) {
        const double fx = f(mid + half * rule.nodes[i]);
        sum += rule.weights[i] * fx;
        abs_sum += rule.weights[i] * std::fabs(fx);
    }
    return {sum * half, abs_sum * std::fabs(half)};
}

LinearPanel make_panel(const std::function<double(double)>& f, double lo, double hi)
{
    const double mid = 0.5 * (lo + hi);
    const RuleSum whole = apply_rule(f, lo, hi);
    const RuleSum left = apply_rule(f, lo, mid);
    const RuleSum right = apply_rule(f, mid, hi);
    const double refined = left.value + right.value;
    double error = std::fabs(whole.value - refined);
    // Differences at the rounding level of the panel carry no information.
    if (error <= 50.0 * kEps * (left.abs_value + right.abs_value)) error = 0.0;
    return {lo, hi, refined, error};
}

struct LogPanel
{
    double lo;
    double hi;
    double log_value;
    double log_error;
};

double apply_log_rule(const std::function<double(double)>& log_f, double lo, double hi)
{
    const GaussLegendreRule& rule = gauss_legendre_15();
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    std::array<double, kRuleOrder> terms{};
    double peak = kNegInf;
    for (int i = 0; i < kRuleOrder; ++i) {
        terms[i] = std::log(rule.weights[i]) + log_f(mid + half * rule.nodes[i]);
        peak = std::max(peak, terms[i]);
    }
    if (peak == kNegInf) return kNegInf;
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - peak);
    return peak + std::log(sum) + std::log(half);
}

LogPanel make_log_panel(const std::function<double(double)>& log_f, double lo, double hi)
{
    const double mid = 0.5 * (lo + hi);
    const double whole = apply_log_rule(log_f, lo, hi);
    const double refined = specfun::log_add_exp(apply_log_rule(log_f, lo, mid), apply_log_rule(log_f, mid, hi));
    if (refined == kNegInf) {
        return {lo, hi, refined, whole == kNegInf ? kNegInf : whole};
    }
    const double rel = std::fabs(std::expm1(whole - refined));
    double log_error = rel <= 50.0 * kEps ? kNegInf : refined + std::log(rel);
    return {lo, hi, refined, log_error};
}

bool splittable(double lo, double hi)
{
    const double mid = 0.5 * (lo + hi);
    return mid > lo && mid < hi && (hi - lo) > 1e-15 * std::max(std::fabs(lo), std::fabs(hi));
}

}  // namespace

const GaussLegendreRule& gauss_legendre_15()
{
    static const GaussLegendreRule rule = build_rule();
    return rule;
}

Result integrate(const std::function<double(double)>& f, double lo, double hi, double rel_tol, double abs_tol,
                 int max_panels)
{
    auto by_error = [](const LinearPanel& x, const LinearPanel& y) { return x.error < y.error; };
    std::vector<LinearPanel> heap{make_panel(f, lo, hi)};
    std::vector<LinearPanel> frozen;

    auto totals = [&] {
        double value = 0.0;
        double error = 0.0;
        for (const auto& p : heap) {
            value += p.value;
            error += p.error;
        }
        for (const auto& p : frozen) {
            value += p.value;
            error += p.error;
        }
        return std::pair{value, error};
    };

    while (true) {
        const auto [value, error] = totals();
        const int panels = static_cast<int>(heap.size() + frozen.size());
        if (error <= std::max(abs_tol, rel_tol * std::fabs(value))) return {value, error, panels, true};
        if (heap.empty() || panels >= max_panels) return {value, error, panels, false};

        std::pop_heap(heap.begin(), heap.end(), by_error);
        const LinearPanel worst = heap.back();
        heap.pop_back();
        if (worst.error == 0.0) {
            // Everything left is exact to rounding; only frozen panels carry error.
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), by_error);
            const auto [v, e] = totals();
            return {v, e, panels, false};
        }
        if (!splittable(worst.lo, worst.hi)) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        heap.push_back(make_panel(f, worst.lo, mid));
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(make_panel(f, mid, worst.hi));
        std::push_heap(heap.begin(), heap.end(), by_error);
    }
}

LogResult integrate_log(const std::function<double(double)>& log_f, double lo, double hi, double rel_tol,
                        int max_panels)
{
    auto by_error = [](const LogPanel& x, const LogPanel& y) { return x.log_error < y.log_error; };
    std::vector<LogPanel> heap{make_log_panel(log_f, lo, hi)};
    std::vector<LogPanel> frozen;

    auto totals = [&] {
        double log_value = kNegInf;
        double log_error = kNegInf;
        for (const auto* list : {&heap, &frozen}) {
            for (const auto& p : *list) {
                log_value = specfun::log_add_exp(log_value, p.log_value);
                log_error = specfun::log_add_exp(log_error, p.log_error);
            }
        }
        const double rel = log_value == kNegInf ? (log_error == kNegInf ? 0.0 : std::numeric_limits<double>::infinity())
                                                : std::exp(log_error - log_value);
        return std::pair{log_value, rel};
    };

    while (true) {
        const auto [log_value, rel] = totals();
        const int panels = static_cast<int>(heap.size() + frozen.size());
        if (rel <= rel_tol) return {log_value, rel, panels, true};
        if (heap.empty() || panels >= max_panels) return {log_value, rel, panels, false};

        std::pop_heap(heap.begin(), heap.end(), by_error);
        const LogPanel worst = heap.back();
        heap.pop_back();
        if (!splittable(worst.lo, worst.hi)) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        heap.push_back(make_log_panel(log_f, worst.lo, mid));
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(make_log_panel(log_f, mid, worst.hi));
        std::push_heap(heap.begin(), heap.end(), by_error);
    }
}

}  // namespace davoid::quadrature
