#pragma once

// Parametric open arcs, closed curves and straight probe segments.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace crackmono {

using Point = Eigen::Vector2d;

// Smooth open arc z(s), s in [-1, 1], given by analytic position and
// derivative maps. Construction checks regularity and (sample-based)
// simplicity; the object is immutable afterwards.
class ParametricArc {
public:
    using Map = std::function<Point(double)>;

    ParametricArc(std::string name, Map position, Map derivative);

    const std::string& name() const { return name_; }

    // Range-checked evaluation; throws std::invalid_argument outside [-1, 1].
    Point point(double s) const;
    Point tangent(double s) const;

    // Unchecked evaluation used on quadrature grids.
    Point position_unchecked(double s) const { return position_(s); }
    Point tangent_unchecked(double s) const { return derivative_(s); }

    // count equispaced samples s_i = -1 + 2i/(count-1).
    std::vector<Point> sample(std::size_t count) const;

    // Polyline length on a fine grid.
    double length() const { return length_; }

private:
    std::string name_;
    Map position_;
    Map derivative_;
    double length_ = 0.0;
};

// Closed curve b(t), t in [0, 2pi), periodic.
class ClosedCurve {
public:
    using Map = std::function<Point(double)>;

    ClosedCurve(std::string description, Map position, Map derivative);

    const std::string& description() const { return description_; }
    Point point(double t) const { return position_(t); }
    Point tangent(double t) const { return derivative_(t); }
    std::vector<Point> sample(std::size_t count) const;
    double length() const { return length_; }

private:
    std::string description_;
    Map position_;
    Map derivative_;
    double length_ = 0.0;
};

// Straight probe segment c + [-L/2, L/2] d with |d| = 1.
struct ProbeSegment {
    ProbeSegment(Point center, Point direction, double length);

    Point center;
    Point direction;
    double length;
};

enum class BenchmarkArc { gamma1 = 1, gamma2 = 2, gamma3 = 3 };

// The three benchmark cracks:
//   gamma1: (s, s)
//   gamma2: (2 sin(pi/8 + (1+s) 3pi/8) - 2/3, sin(pi/4 + (1+s) 3pi/4))
//   gamma3: (s, sin(pi/4 + (1+s) 3pi/4))
ParametricArc benchmark_arc(int id);
ParametricArc benchmark_arc(BenchmarkArc id);

// Lookup by CLI name ("gamma1" | "gamma2" | "gamma3").
ParametricArc arc_by_name(const std::string& name);

Point arc_point(const ParametricArc& arc, double s);

// Image of the arc under (x, y) -> (y, x); same parameterization.
ParametricArc swap_axes(const ParametricArc& arc);

ClosedCurve circle(const Point& center, double radius);

std::pair<Point, Point> probe_endpoints(const ProbeSegment& probe);

// Euclidean distance from p to a polyline.
double distance_to_arc(const std::vector<Point>& polyline, const Point& p);

}  // namespace crackmono
