#include "crackmono/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace crackmono {

namespace {

constexpr std::size_t kRegularitySamples = 10000;
constexpr std::size_t kSimplicitySamples = 1000;
constexpr double kMinSpeed = 1e-10;
// relative to the mean sampled speed, so zeros between samples are caught
constexpr double kRelativeMinSpeed = 1e-6;

double polyline_length(const std::vector<Point>& pts, bool closed) {
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += (pts[i] - pts[i - 1]).norm();
    if (closed && pts.size() > 1) len += (pts.front() - pts.back()).norm();
    return len;
}

// Flags pairs of samples that are closer than tol while being separated by
// more than a few tolerances along the curve.
void check_simple(const std::vector<Point>& pts, bool closed, double total, const std::string& what) {
    const double tol = 1e-3 * total;
    std::vector<double> arclen(pts.size(), 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i)
        arclen[i] = arclen[i - 1] + (pts[i] - pts[i - 1]).norm();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 2; j < pts.size(); ++j) {
            double along = arclen[j] - arclen[i];
            if (closed) along = std::min(along, total - along);
            if (along <= 4.0 * tol) continue;
            if ((pts[i] - pts[j]).norm() < tol)
                throw std::invalid_argument(what + ": curve is not simple (self-intersection near sample " +
                                            std::to_string(i) + ")");
        }
    }
}

void check_regular(const std::function<Point(double)>& derivative, double lo, double hi, bool include_hi,
                   const std::string& what) {
    const std::size_t count = kRegularitySamples;
    std::vector<double> speed(count);
    double mean = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double s = include_hi ? lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1)
                                    : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count);
        const Point d = derivative(s);
        if (!d.allFinite())
            throw std::invalid_argument(what + ": derivative is not finite at parameter " + std::to_string(s));
        speed[i] = d.norm();
        mean += speed[i] / static_cast<double>(count);
    }
    const double floor = std::max(kMinSpeed, kRelativeMinSpeed * mean);
    for (std::size_t i = 0; i < count; ++i)
        if (speed[i] <= floor)
            throw std::invalid_argument(what + ": derivative vanishes near sample " + std::to_string(i));
}

}  // namespace

ParametricArc::ParametricArc(std::string name, Map position, Map derivative)
    : name_(std::move(name)), position_(std::move(position)), derivative_(std::move(derivative)) {
    if (!position_ || !derivative_) throw std::invalid_argument("ParametricArc: empty map");
    check_regular(derivative_, -1.0, 1.0, true, "ParametricArc " + name_);
    const auto pts = sample(kSimplicitySamples);
    for (const auto& p : pts)
        if (!p.allFinite()) throw std::invalid_argument("ParametricArc " + name_ + ": non-finite position");
    length_ = polyline_length(sample(kRegularitySamples), false);
    check_simple(pts, false, length_, "ParametricArc " + name_);
}

Point ParametricArc::point(double s) const {
    if (!(s >= -1.0 && s <= 1.0))
        throw std::invalid_argument("arc parameter out of range [-1, 1]: " + std::to_string(s));
    return position_(s);
}

Point ParametricArc::tangent(double s) const {
    if (!(s >= -1.0 && s <= 1.0))
        throw std::invalid_argument("arc parameter out of range [-1, 1]: " + std::to_string(s));
    return derivative_(s);
}

std::vector<Point> ParametricArc::sample(std::size_t count) const {
    if (count < 2) throw std::invalid_argument("ParametricArc::sample needs at least 2 points");
    std::vector<Point> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double s = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(count - 1);
        pts.push_back(position_(s));
    }
    return pts;
}

ClosedCurve::ClosedCurve(std::string description, Map position, Map derivative)
    : description_(std::move(description)), position_(std::move(position)), derivative_(std::move(derivative)) {
    if (!position_ || !derivative_) throw std::invalid_argument("ClosedCurve: empty map");
    const double two_pi = 2.0 * std::numbers::pi;
    check_regular(derivative_, 0.0, two_pi, false, "ClosedCurve " + description_);
    const Point start = position_(0.0);
    const Point end = position_(two_pi);
    length_ = polyline_length(sample(kRegularitySamples), true);
    if ((start - end).norm() > 1e-10 * std::max(1.0, length_))
        throw std::invalid_argument("ClosedCurve " + description_ + ": b(0) != b(2pi)");
    check_simple(sample(kSimplicitySamples), true, length_, "ClosedCurve " + description_);
}

std::vector<Point> ClosedCurve::sample(std::size_t count) const {
    if (count < 3) throw std::invalid_argument("ClosedCurve::sample needs at least 3 points");
    std::vector<Point> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        pts.push_back(position_(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count)));
    return pts;
}

ProbeSegment::ProbeSegment(Point c, Point d, double len) : center(std::move(c)), direction(std::move(d)), length(len) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("ProbeSegment: length must be positive");
    if (!center.allFinite()) throw std::invalid_argument("ProbeSegment: center must be finite");
    if (!direction.allFinite() || std::abs(direction.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("ProbeSegment: direction must be a unit vector");
}

ParametricArc benchmark_arc(int id) {
    using std::numbers::pi;
    switch (id) {
    case 1:
        return ParametricArc(
            "gamma1", [](double s) { return Point(s, s); }, [](double) { return Point(1.0, 1.0); });
    case 2:
        return ParametricArc(
            "gamma2",
            [](double s) {
                return Point(2.0 * std::sin(pi / 8 + (1 + s) * 3 * pi / 8) - 2.0 / 3.0,
                             std::sin(pi / 4 + (1 + s) * 3 * pi / 4));
            },
            [](double s) {
                return Point(2.0 * (3 * pi / 8) * std::cos(pi / 8 + (1 + s) * 3 * pi / 8),
                             (3 * pi / 4) * std::cos(pi / 4 + (1 + s) * 3 * pi / 4));
            });
    case 3:
        return ParametricArc(
            "gamma3", [](double s) { return Point(s, std::sin(pi / 4 + (1 + s) * 3 * pi / 4)); },
            [](double s) { return Point(1.0, (3 * pi / 4) * std::cos(pi / 4 + (1 + s) * 3 * pi / 4)); });
    default:
        throw std::invalid_argument("unknown benchmark arc id " + std::to_string(id));
    }
}

ParametricArc benchmark_arc(BenchmarkArc id) { return benchmark_arc(static_cast<int>(id)); }

ParametricArc arc_by_name(const std::string& name) {
    if (name == "gamma1") return benchmark_arc(1);
    if (name == "gamma2") return benchmark_arc(2);
    if (name == "gamma3") return benchmark_arc(3);
    throw std::invalid_argument("unknown arc '" + name + "' (expected gamma1, gamma2 or gamma3)");
}

Point arc_point(const ParametricArc& arc, double s) { return arc.point(s); }

ParametricArc swap_axes(const ParametricArc& arc) {
    auto pos = [arc](double s) {
        const Point p = arc.position_unchecked(s);
        return Point(p.y(), p.x());
    };
    auto der = [arc](double s) {
        const Point p = arc.tangent_unchecked(s);
        return Point(p.y(), p.x());
    };
    return ParametricArc(arc.name() + "_swapped", pos, der);
}

ClosedCurve circle(const Point& center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("circle: radius must be positive");
    const std::string desc = "circle center=(" + std::to_string(center.x()) + "," + std::to_string(center.y()) +
                             ") radius=" + std::to_string(radius);
    return ClosedCurve(
        desc, [center, radius](double t) { return Point(center + radius * Point(std::cos(t), std::sin(t))); },
        [radius](double t) { return Point(radius * Point(-std::sin(t), std::cos(t))); });
}

std::pair<Point, Point> probe_endpoints(const ProbeSegment& probe) {
    const Point half = 0.5 * probe.length * probe.direction;
    return {probe.center - half, probe.center + half};
}

double distance_to_arc(const std::vector<Point>& polyline, const Point& p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        const Point a = polyline[i];
        const Point ab = polyline[i + 1] - a;
        const double len2 = ab.squaredNorm();
        double t = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, (a + t * ab - p).norm());
    }
    if (polyline.size() == 1) best = (polyline.front() - p).norm();
    return best;
}

}  // namespace crackmono
