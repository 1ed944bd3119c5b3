#pragma once

// Sweeps probe segments over the sampling square [-R, R]^2.

#include <cstdint>
#include <string>
#include <vector>

#include "crackmono/forward_solver.hpp"
#include "crackmono/geometry.hpp"

namespace crackmono {

struct Orientation {
    enum class Mode { vertical, horizontal, angle };

    Mode mode = Mode::vertical;
    double degrees = 90.0;  // only read in angle mode

    static Orientation vertical() { return {Mode::vertical, 90.0}; }
    static Orientation horizontal() { return {Mode::horizontal, 0.0}; }
    static Orientation angle(double deg) { return {Mode::angle, deg}; }

    // "ver" | "hor" | "angle:<deg>"
    static Orientation parse(const std::string& text);
    std::string to_string() const;

    Point direction() const;
};

struct ScanConfig {
    double half_width = 1.5;  // R
    int resolution = 40;      // M; grid step and probe length R/M
    Orientation orientation;
    double delta = 0.0;
    double noise = 0.0;
    std::uint64_t seed = 0;
    int threads = 0;  // 0: hardware concurrency, 1: serial

    void validate() const;
    double step() const { return half_width / resolution; }
};

// (2M+1) x (2M+1) negative-eigenvalue counts at z_ij = (R i / M, R j / M).
class IndicatorGrid {
public:
    IndicatorGrid(ScanConfig cfg, double wavenumber, int directions);

    int resolution() const { return config_.resolution; }
    int side() const { return 2 * config_.resolution + 1; }
    const ScanConfig& config() const { return config_; }
    double wavenumber() const { return wavenumber_; }
    int directions() const { return directions_; }

    // i, j in [-M, M].
    int at(int i, int j) const { return counts_[index(i, j)]; }
    int& at(int i, int j) { return counts_[index(i, j)]; }
    Point center(int i, int j) const;

    const std::vector<int>& counts() const { return counts_; }

private:
    std::size_t index(int i, int j) const;

    ScanConfig config_;
    double wavenumber_;
    int directions_;
    std::vector<int> counts_;
};

ProbeSegment probe_at(const ScanConfig& cfg, int i, int j);

IndicatorGrid scan(const FarFieldMatrix& F, const ScanConfig& cfg);

struct ContrastStatistics {
    double mean_near = 0.0;
    double mean_far = 0.0;
    int near_cells = 0;
    int far_cells = 0;

    double margin() const { return mean_far - mean_near; }
};

// Mean count over centers within near_distance of the arc against the mean
// over centers farther than far_distance.
ContrastStatistics contrast_statistics(const IndicatorGrid& grid, const ParametricArc& arc, double near_distance,
                                       double far_distance);

}  // namespace crackmono
