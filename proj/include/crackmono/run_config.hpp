#pragma once

// Experiment configuration shared by the CLI subcommands. Serialized as a
// plain key=value text file; '#' starts a comment line.

#include <cstdint>
#include <string>
#include <vector>

#include "crackmono/forward_solver.hpp"
#include "crackmono/imaging_scan.hpp"

namespace crackmono {

enum class Command { forward, scan, domain_test, selftest };

std::string to_string(Command command);
Command parse_command(const std::string& text);

struct CircleSpec {
    Point center{0.0, 0.0};
    double radius = 1.0;

    bool operator==(const CircleSpec& other) const {
        return center == other.center && radius == other.radius;
    }
};

struct RunConfig {
    Command command = Command::selftest;
    std::string arc = "gamma1";
    double wavenumber = 1.0;
    int directions = 60;
    int quadrature_points = 128;
    double half_width = 1.5;
    int resolution = 40;
    Orientation orientation;
    double delta = 0.0;
    double noise = 0.0;
    std::uint64_t seed = 0;
    int threads = 0;
    int boundary_points = 256;
    std::string output_dir = ".";
    std::string cache_dir;
    std::vector<CircleSpec> circles;

    // Numeric constraints only; directory checks happen when running.
    void validate() const;

    SolverConfig solver() const { return {wavenumber, quadrature_points, directions}; }
    ScanConfig scan() const;

    bool operator==(const RunConfig& other) const;
};

std::string to_config_text(const RunConfig& cfg);

// Keys absent from text keep their value from base.
RunConfig parse_config_text(const std::string& text, RunConfig base = {});

// Applies one key=value assignment; throws std::invalid_argument on unknown
// keys or malformed values.
void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

CircleSpec parse_circle(const std::string& text);  // "cx,cy,r"

}  // namespace crackmono
