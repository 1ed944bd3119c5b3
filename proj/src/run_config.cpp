#include "crackmono/run_config.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "crackmono/numeric_text.hpp"

namespace crackmono {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string circles_text(const std::vector<CircleSpec>& circles) {
    std::string out;
    for (std::size_t c = 0; c < circles.size(); ++c) {
        if (c) out += ';';
        out += format_double(circles[c].center.x()) + ',' + format_double(circles[c].center.y()) + ',' +
               format_double(circles[c].radius);
    }
    return out;
}

}  // namespace

std::string to_string(Command command) {
    switch (command) {
    case Command::forward: return "forward";
    case Command::scan: return "scan";
    case Command::domain_test: return "domain-test";
    case Command::selftest: return "selftest";
    }
    return "selftest";
}

Command parse_command(const std::string& text) {
    if (text == "forward") return Command::forward;
    if (text == "scan") return Command::scan;
    if (text == "domain-test") return Command::domain_test;
    if (text == "selftest") return Command::selftest;
    throw std::invalid_argument("unknown command '" + text + "'");
}

CircleSpec parse_circle(const std::string& text) {
    std::vector<std::string> parts;
    std::string field;
    std::istringstream ss(text);
    while (std::getline(ss, field, ',')) parts.push_back(field);
    if (parts.size() != 3) throw std::invalid_argument("circle must be 'cx,cy,r', got '" + text + "'");
    CircleSpec c{Point(parse_double(parts[0]), parse_double(parts[1])), parse_double(parts[2])};
    if (!c.center.allFinite() || !(c.radius > 0.0) || !std::isfinite(c.radius))
        throw std::invalid_argument("circle needs a finite center and positive radius: '" + text + "'");
    return c;
}

ScanConfig RunConfig::scan() const {
    ScanConfig s;
    s.half_width = half_width;
    s.resolution = resolution;
    s.orientation = orientation;
    s.delta = delta;
    s.noise = noise;
    s.seed = seed;
    s.threads = threads;
    return s;
}

void RunConfig::validate() const {
    solver().validate();
    scan().validate();
    if (boundary_points < 16 || boundary_points % 2 != 0)
        throw std::invalid_argument("boundary quadrature size must be even and >= 16");
    if (output_dir.empty()) throw std::invalid_argument("output directory must not be empty");
}

bool RunConfig::operator==(const RunConfig& o) const {
    return command == o.command && arc == o.arc && wavenumber == o.wavenumber && directions == o.directions &&
           quadrature_points == o.quadrature_points && half_width == o.half_width && resolution == o.resolution &&
           orientation.mode == o.orientation.mode &&
           (orientation.mode != Orientation::Mode::angle || orientation.degrees == o.orientation.degrees) &&
           delta == o.delta && noise == o.noise && seed == o.seed && threads == o.threads &&
           boundary_points == o.boundary_points && output_dir == o.output_dir && cache_dir == o.cache_dir &&
           circles == o.circles;
}

std::string to_config_text(const RunConfig& cfg) {
    std::ostringstream os;
    os << "command=" << to_string(cfg.command) << '\n'
       << "arc=" << cfg.arc << '\n'
       << "k=" << format_double(cfg.wavenumber) << '\n'
       << "N=" << cfg.directions << '\n'
       << "n=" << cfg.quadrature_points << '\n'
       << "R=" << format_double(cfg.half_width) << '\n'
       << "M=" << cfg.resolution << '\n'
       << "orientation=" << cfg.orientation.to_string() << '\n'
       << "delta=" << format_double(cfg.delta) << '\n'
       << "noise=" << format_double(cfg.noise) << '\n'
       << "seed=" << cfg.seed << '\n'
       << "threads=" << cfg.threads << '\n'
       << "boundary_points=" << cfg.boundary_points << '\n'
       << "out=" << cfg.output_dir << '\n'
       << "cache=" << cfg.cache_dir << '\n'
       << "circles=" << circles_text(cfg.circles) << '\n';
    return os.str();
}

void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "command") cfg.command = parse_command(value);
    else if (key == "arc") cfg.arc = value;
    else if (key == "k") cfg.wavenumber = parse_double(value);
    else if (key == "N") cfg.directions = parse_integer<int>(value);
    else if (key == "n") cfg.quadrature_points = parse_integer<int>(value);
    else if (key == "R") cfg.half_width = parse_double(value);
    else if (key == "M") cfg.resolution = parse_integer<int>(value);
    else if (key == "orientation") cfg.orientation = Orientation::parse(value);
    else if (key == "delta") cfg.delta = parse_double(value);
    else if (key == "noise") cfg.noise = parse_double(value);
    else if (key == "seed") cfg.seed = parse_integer<std::uint64_t>(value);
    else if (key == "threads") cfg.threads = parse_integer<int>(value);
    else if (key == "boundary_points") cfg.boundary_points = parse_integer<int>(value);
    else if (key == "out") cfg.output_dir = value;
    else if (key == "cache") cfg.cache_dir = value;
    else if (key == "circles") {
        cfg.circles.clear();
        std::istringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ';'))
            if (!trim(item).empty()) cfg.circles.push_back(parse_circle(trim(item)));
    } else
        throw std::invalid_argument("unknown config key '" + key + "'");
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        try {
            apply_config_value(base, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return base;
}

}  // namespace crackmono
