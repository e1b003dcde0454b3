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

#include <string>
#include <variant>
#include <vector>

namespace davoid::figure
{

struct Vec2
{
    double x;
    double y;
};

/// Circular arc traversed from start_angle to end_angle (radians, model
/// coordinates with y up; decreasing angles run clockwise).
struct Arc
{
    Vec2 center;
    double radius;
    double start_angle;
    double end_angle;

    Vec2 start() const;
    Vec2 end() const;
};

struct Segment
{
    Vec2 from;
    Vec2 to;
};

using PathPiece = std::variant<Segment, Arc>;

Vec2 piece_start(const PathPiece& piece);
Vec2 piece_end(const PathPiece& piece);

/// Closed outline of one component: threshold chord, small-circle arc,
/// unit-circle arc, small-circle arc.
struct Outline
{
    std::vector<PathPiece> pieces;
};

struct Junction
{
    std::string label;
    Vec2 point;
};

/// Geometry of the planar set S_2 (and optionally its closed inner
/// approximation) in untransformed model coordinates.
struct FigureSpec
{
    double a;
    double chord;
    double threshold_half_width;  ///< √(1/4 - (a - 1/2)²)
    double chord_half_width;      ///< √(1 - chord²)
    Outline positive;
    Outline negative;
    std::vector<Outline> inner;   ///< empty unless an epsilon was requested
    double epsilon;
    std::vector<Junction> junctions;
    double scale;                 ///< pixels per model unit

    std::vector<Arc> arcs() const;
    std::vector<Segment> segments() const;
};

/// Builds the figure for offset a. epsilon > 0 adds the outlines of the
/// closed inner approximation.
FigureSpec build_figure(double a, double scale = 256.0, double epsilon = 0.0);

/// Largest gap between the end of one piece and the start of the next
/// (cyclically) over every outline.
double max_endpoint_gap(const FigureSpec& spec);

std::string render_svg(const FigureSpec& spec);

/// label,x,y rows for every junction point.
std::string junction_csv(const FigureSpec& spec);

}  // namespace davoid::figure
