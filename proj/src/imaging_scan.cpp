#include "crackmono/imaging_scan.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "crackmono/indicator.hpp"
#include "crackmono/numeric_text.hpp"
#include "crackmono/special_functions.hpp"

namespace crackmono {

namespace {

constexpr std::size_t kArcPolylineSamples = 10000;

}  // namespace

Orientation Orientation::parse(const std::string& text) {
    if (text == "ver" || text == "vertical") return vertical();
    if (text == "hor" || text == "horizontal") return horizontal();
    const std::string prefix = "angle:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string value = text.substr(prefix.size());
        bool ok = true;
        double deg = 0.0;
        try {
            deg = parse_double(value);
        } catch (const std::invalid_argument&) {
            ok = false;
        }
        if (!ok || !std::isfinite(deg))
            throw std::invalid_argument("orientation angle must be a finite number: '" + text + "'");
        return angle(deg);
    }
    throw std::invalid_argument("orientation must be ver, hor or angle:<deg>, got '" + text + "'");
}

std::string Orientation::to_string() const {
    switch (mode) {
    case Mode::vertical: return "ver";
    case Mode::horizontal: return "hor";
    case Mode::angle: return "angle:" + format_double(degrees);
    }
    return "ver";
}

Point Orientation::direction() const {
    switch (mode) {
    case Mode::vertical: return {0.0, 1.0};
    case Mode::horizontal: return {1.0, 0.0};
    case Mode::angle: {
        const double rad = degrees * std::numbers::pi / 180.0;
        return {std::cos(rad), std::sin(rad)};
    }
    }
    return {0.0, 1.0};
}

void ScanConfig::validate() const {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) throw std::invalid_argument("R must be positive");
    if (resolution < 1) throw std::invalid_argument("M must be >= 1");
    if (orientation.mode == Orientation::Mode::angle && !std::isfinite(orientation.degrees))
        throw std::invalid_argument("orientation angle must be finite");
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be >= 0");
    if (!(noise >= 0.0) || !std::isfinite(noise)) throw std::invalid_argument("noise level must be >= 0");
    if (threads < 0) throw std::invalid_argument("thread count must be >= 0");
}

IndicatorGrid::IndicatorGrid(ScanConfig cfg, double wavenumber, int directions)
    : config_(cfg), wavenumber_(wavenumber), directions_(directions) {
    config_.validate();
    counts_.assign(static_cast<std::size_t>(side()) * side(), 0);
}

std::size_t IndicatorGrid::index(int i, int j) const {
    const int m = config_.resolution;
    if (i < -m || i > m || j < -m || j > m) throw std::out_of_range("grid index out of range");
    return static_cast<std::size_t>(i + m) * side() + static_cast<std::size_t>(j + m);
}

Point IndicatorGrid::center(int i, int j) const {
    const double r = config_.half_width;
    const int m = config_.resolution;
    return {r * i / m, r * j / m};
}

ProbeSegment probe_at(const ScanConfig& cfg, int i, int j) {
    const double r = cfg.half_width;
    const int m = cfg.resolution;
    return ProbeSegment(Point(r * i / m, r * j / m), cfg.orientation.direction(), cfg.step());
}

IndicatorGrid scan(const FarFieldMatrix& F, const ScanConfig& cfg) {
    cfg.validate();
    const FarFieldMatrix data = cfg.noise > 0.0 ? add_noise(F, cfg.noise, cfg.seed) : F;
    const SegmentIndicator indicator(data, cfg.delta);
    IndicatorGrid grid(cfg, F.wavenumber, F.directions());

    const int m = cfg.resolution;
    const int side = grid.side();
    const int cells = side * side;
    std::vector<int> out(cells, 0);

    auto work = [&](int first, int stride) {
        for (int c = first; c < cells; c += stride) {
            const int i = c / side - m;
            const int j = c % side - m;
            try {
                out[c] = indicator(probe_at(cfg, i, j));
            } catch (const NumericalError& e) {
                throw NumericalError("scan cell (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
            }
        }
    };

    int threads = cfg.threads;
    if (threads == 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, cells);
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    work(t, threads);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    for (int c = 0; c < cells; ++c) grid.at(c / side - m, c % side - m) = out[c];
    return grid;
}

ContrastStatistics contrast_statistics(const IndicatorGrid& grid, const ParametricArc& arc, double near_distance,
                                       double far_distance) {
    if (!(near_distance > 0.0) || !(far_distance > near_distance))
        throw std::invalid_argument("contrast_statistics: need 0 < near_distance < far_distance");
    const auto polyline = arc.sample(kArcPolylineSamples);
    const int m = grid.resolution();
    ContrastStatistics out;
    double near_sum = 0.0;
    double far_sum = 0.0;
    for (int i = -m; i <= m; ++i)
        for (int j = -m; j <= m; ++j) {
            const double dist = distance_to_arc(polyline, grid.center(i, j));
            if (dist <= near_distance) {
                near_sum += grid.at(i, j);
                ++out.near_cells;
            } else if (dist > far_distance) {
                far_sum += grid.at(i, j);
                ++out.far_cells;
            }
        }
    if (out.near_cells == 0) throw std::invalid_argument("contrast_statistics: no grid centers near the arc");
    if (out.far_cells == 0) throw std::invalid_argument("contrast_statistics: no grid centers far from the arc");
    out.mean_near = near_sum / out.near_cells;
    out.mean_far = far_sum / out.far_cells;
    return out;
}

}  // namespace crackmono
