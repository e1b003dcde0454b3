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

#include "davoid/figure.hpp"

#include "davoid/construction.hpp"
#include "davoid/errors.hpp"
#include "davoid/report.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace davoid::figure
{
namespace
{

double distance(Vec2 p, Vec2 q)
{
    return std::hypot(p.x - q.x, p.y - q.y);
}

double angle_of(Vec2 p, Vec2 center)
{
    return std::atan2(p.y - center.y, p.x - center.x);
}

// Outline of the positive component of
// { x_1 >= t, |x - a e_1| <= small, |x| <= big }.
Outline positive_outline(double a, double t, double small, double big)
{
    const Vec2 small_center{a, 0.0};
    const Vec2 origin{0.0, 0.0};
    const double y_t = std::sqrt((small - (t - a)) * (small + (t - a)));
    const double x_c = (a * a + big * big - small * small) / (2.0 * a);
    const double y_c = std::sqrt((big - x_c) * (big + x_c));

    const Vec2 t_top{t, y_t};
    const Vec2 t_bottom{t, -y_t};
    const Vec2 c_top{x_c, y_c};
    const Vec2 c_bottom{x_c, -y_c};

    Outline outline;
    outline.pieces.emplace_back(Segment{t_bottom, t_top});
    outline.pieces.emplace_back(Arc{small_center, small, angle_of(t_top, small_center), angle_of(c_top, small_center)});
    outline.pieces.emplace_back(Arc{origin, big, angle_of(c_top, origin), angle_of(c_bottom, origin)});
    outline.pieces.emplace_back(
        Arc{small_center, small, angle_of(c_bottom, small_center), angle_of(t_bottom, small_center)});
    return outline;
}

Outline reflect(const Outline& outline)
{
    Outline out;
    for (const PathPiece& piece : outline.pieces) {
        if (const auto* s = std::get_if<Segment>(&piece)) {
            out.pieces.emplace_back(Segment{{-s->from.x, -s->from.y}, {-s->to.x, -s->to.y}});
        } else {
            const Arc& arc = std::get<Arc>(piece);
            out.pieces.emplace_back(Arc{{-arc.center.x, -arc.center.y},
                                        arc.radius,
                                        arc.start_angle + std::numbers::pi,
                                        arc.end_angle + std::numbers::pi});
        }
    }
    return out;
}

std::string num(double v)
{
    return cli::format_roundtrip(v);
}

std::string path_data(const Outline& outline)
{
    std::ostringstream d;
    const Vec2 first = piece_start(outline.pieces.front());
    d << "M " << num(first.x) << " " << num(first.y);
    for (const PathPiece& piece : outline.pieces) {
        const Vec2 end = piece_end(piece);
        if (const auto* arc = std::get_if<Arc>(&piece)) {
            const double sweep = arc->end_angle - arc->start_angle;
            d << " A " << num(arc->radius) << " " << num(arc->radius) << " 0 " << (std::fabs(sweep) > std::numbers::pi ? 1 : 0)
              << " " << (sweep > 0.0 ? 1 : 0) << " " << num(end.x) << " " << num(end.y);
        } else {
            d << " L " << num(end.x) << " " << num(end.y);
        }
    }
    d << " Z";
    return d.str();
}

}  // namespace

Vec2 Arc::start() const
{
    return {center.x + radius * std::cos(start_angle), center.y + radius * std::sin(start_angle)};
}

Vec2 Arc::end() const
{
    return {center.x + radius * std::cos(end_angle), center.y + radius * std::sin(end_angle)};
}

Vec2 piece_start(const PathPiece& piece)
{
    if (const auto* s = std::get_if<Segment>(&piece)) return s->from;
    return std::get<Arc>(piece).start();
}

Vec2 piece_end(const PathPiece& piece)
{
    if (const auto* s = std::get_if<Segment>(&piece)) return s->to;
    return std::get<Arc>(piece).end();
}

std::vector<Arc> FigureSpec::arcs() const
{
    std::vector<Arc> out;
    for (const Outline* outline : {&positive, &negative}) {
        for (const PathPiece& piece : outline->pieces) {
            if (const auto* arc = std::get_if<Arc>(&piece)) out.push_back(*arc);
        }
    }
    return out;
}

std::vector<Segment> FigureSpec::segments() const
{
    std::vector<Segment> out;
    for (const Outline* outline : {&positive, &negative}) {
        for (const PathPiece& piece : outline->pieces) {
            if (const auto* s = std::get_if<Segment>(&piece)) out.push_back(*s);
        }
    }
    return out;
}

FigureSpec build_figure(double a, double scale, double epsilon)
{
    const ConstructionParams params(2, a);
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("figure scale must be positive");
    if (epsilon != 0.0) {
        // Validates 0 < epsilon < (a - 1/2)/2.
        inner_approximation(params, epsilon);
    }

    FigureSpec spec;
    spec.a = a;
    spec.chord = params.chord();
    spec.threshold_half_width = std::sqrt(a * (1.0 - a));
    spec.chord_half_width = std::sqrt((1.0 - spec.chord) * (1.0 + spec.chord));
    spec.positive = positive_outline(a, ConstructionParams::threshold, ConstructionParams::cap_radius, 1.0);
    spec.negative = reflect(spec.positive);
    spec.epsilon = epsilon;
    spec.scale = scale;
    if (epsilon > 0.0) {
        const Outline inner = positive_outline(a, ConstructionParams::threshold + epsilon,
                                               ConstructionParams::cap_radius - epsilon, 1.0 - epsilon);
        spec.inner = {inner, reflect(inner)};
    }

    const double t = ConstructionParams::threshold;
    const double c = spec.chord;
    const double w = spec.threshold_half_width;
    const double wc = spec.chord_half_width;
    spec.junctions = {
        {"threshold_upper_+", {t, w}},     {"threshold_lower_+", {t, -w}},
        {"chord_upper_+", {c, wc}},        {"chord_lower_+", {c, -wc}},
        {"threshold_upper_-", {-t, -w}},   {"threshold_lower_-", {-t, w}},
        {"chord_upper_-", {-c, -wc}},      {"chord_lower_-", {-c, wc}},
    };
    return spec;
}

double max_endpoint_gap(const FigureSpec& spec)
{
    double gap = 0.0;
    auto scan = [&](const Outline& outline) {
        const std::size_t count = outline.pieces.size();
        for (std::size_t i = 0; i < count; ++i) {
            gap = std::fmax(gap, distance(piece_end(outline.pieces[i]), piece_start(outline.pieces[(i + 1) % count])));
        }
    };
    scan(spec.positive);
    scan(spec.negative);
    for (const Outline& outline : spec.inner) scan(outline);
    return gap;
}

std::string render_svg(const FigureSpec& spec)
{
    constexpr double extent = 1.1;
    const double size = 22.0 * spec.scale / 10.0;  // 2 * extent; 2.2 itself is inexact
    const double stroke = 1.5 / spec.scale;
    const double dash = 6.0 / spec.scale;
    const double mark = 6.0 / spec.scale;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\"" << num(size)
        << "\" viewBox=\"0 0 " << num(size) << " " << num(size) << "\">\n";
    svg << "  <title>S_2 for a = " << num(spec.a) << "</title>\n";
    // Model coordinates below; y flipped once here.
    svg << "  <g transform=\"translate(" << num(size / 2) << " " << num(size / 2) << ") scale(" << num(spec.scale)
        << " " << num(-spec.scale) << ")\" stroke-width=\"" << num(stroke) << "\">\n";
    svg << "    <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\"/>\n";
    for (double sign : {1.0, -1.0}) {
        svg << "    <circle cx=\"" << num(sign * spec.a) << "\" cy=\"0\" r=\"0.5\" fill=\"none\" stroke=\"gray\" "
            << "stroke-dasharray=\"" << num(dash) << " " << num(dash) << "\"/>\n";
    }
    for (double sign : {1.0, -1.0}) {
        const double x = sign * ConstructionParams::threshold;
        svg << "    <line x1=\"" << num(x) << "\" y1=\"" << num(-extent) << "\" x2=\"" << num(x) << "\" y2=\""
            << num(extent) << "\" stroke=\"gray\" stroke-dasharray=\"" << num(dash / 3) << " " << num(dash)
            << "\"/>\n";
    }
    for (const Outline* outline : {&spec.positive, &spec.negative}) {
        svg << "    <path d=\"" << path_data(*outline)
            << "\" fill=\"#4c72b0\" fill-opacity=\"0.55\" stroke=\"#1f3b6b\"/>\n";
    }
    for (const Outline& outline : spec.inner) {
        svg << "    <path d=\"" << path_data(outline) << "\" fill=\"none\" stroke=\"#c44e52\" stroke-dasharray=\""
            << num(dash / 2) << " " << num(dash / 2) << "\"/>\n";
    }
    for (double sign : {1.0, -1.0}) {
        const double x = sign * spec.a;
        svg << "    <line x1=\"" << num(x - mark) << "\" y1=\"" << num(-mark) << "\" x2=\"" << num(x + mark)
            << "\" y2=\"" << num(mark) << "\" stroke=\"black\"/>\n";
        svg << "    <line x1=\"" << num(x - mark) << "\" y1=\"" << num(mark) << "\" x2=\"" << num(x + mark)
            << "\" y2=\"" << num(-mark) << "\" stroke=\"black\"/>\n";
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

std::string junction_csv(const FigureSpec& spec)
{
    std::ostringstream out;
    out << "label,x,y\r\n";
    for (const Junction& j : spec.junctions) out << j.label << "," << num(j.point.x) << "," << num(j.point.y) << "\r\n";
    return out.str();
}

}  // namespace davoid::figure
