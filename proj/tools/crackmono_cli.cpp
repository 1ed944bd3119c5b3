// crackmono: forward crack scattering and monotonicity imaging from the
// command line.
//
// Exit codes: 0 success, 1 invalid configuration, 2 I/O failure,
// 3 numerical failure, 4 selftest failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crackmono/forward_solver.hpp"
#include "crackmono/imaging_scan.hpp"
#include "crackmono/indicator.hpp"
#include "crackmono/io.hpp"
#include "crackmono/numeric_text.hpp"
#include "crackmono/run_config.hpp"
#include "crackmono/selftest.hpp"
#include "crackmono/special_functions.hpp"

namespace fs = std::filesystem;
using namespace crackmono;

namespace {

constexpr double kNearDistance = 0.05;
constexpr double kFarDistance = 0.5;

struct Flag {
    const char* name;
    const char* key;
    const char* help;
};

const std::vector<Flag> kFlags = {
    {"--arc", "arc", "crack geometry: gamma1 | gamma2 | gamma3"},
    {"--k", "k", "wavenumber"},
    {"--N", "N", "number of observation/incidence directions (even)"},
    {"--n", "n", "quadrature points of the forward solver (even)"},
    {"--R", "R", "half-width of the sampling square [-R, R]^2"},
    {"--M", "M", "grid resolution; probe length and step R/M"},
    {"--orientation", "orientation", "probe orientation: ver | hor | angle:<deg>"},
    {"--delta", "delta", "eigenvalue threshold: count lambda < -delta"},
    {"--noise", "noise", "relative noise level added to the far field matrix"},
    {"--seed", "seed", "random seed"},
    {"--out", "out", "output directory"},
    {"--cache", "cache", "far field cache directory (empty disables caching)"},
    {"--threads", "threads", "worker threads for scans (0 = all cores)"},
    {"--boundary-points", "boundary_points", "quadrature points on circle boundaries"},
};

std::string file_tag(double v) {
    std::string s = format_double(v);
    for (auto& c : s)
        if (c == '.') c = 'p';
    return s;
}

fs::path prepare_output(const RunConfig& cfg) {
    const fs::path out(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec || !fs::is_directory(out)) throw IoError("cannot create output directory '" + out.string() + "'");
    const fs::path record = out / (to_string(cfg.command) + ".cfg");
    std::ofstream os(record, std::ios::trunc);
    if (!os) throw IoError("output directory '" + out.string() + "' is not writable");
    os << to_config_text(cfg);
    return out;
}

int run_forward(const RunConfig& cfg) {
    const fs::path out = prepare_output(cfg);
    const auto arc = arc_by_name(cfg.arc);
    bool cached = false;
    const auto F = cached_far_field_matrix(cfg.cache_dir, arc, cfg.solver(), &cached);
    const fs::path file = out / ("farfield_" + cfg.arc + "_k" + file_tag(cfg.wavenumber) + "_N" +
                                 std::to_string(cfg.directions) + "_n" + std::to_string(cfg.quadrature_points) + ".csv");
    save_far_field(file, F);

    SolverConfig fine = cfg.solver();
    fine.quadrature_points *= 2;
    const auto F_fine = far_field_matrix(arc, fine);
    std::cout << "far field matrix: " << file.string() << (cached ? " (from cache)" : "") << '\n'
              << "entries: " << F.samples.size() << '\n'
              << "reciprocity residual: " << reciprocity_residual(F) << '\n'
              << "self-convergence estimate (n vs 2n): " << (F.samples - F_fine.samples).cwiseAbs().maxCoeff()
              << '\n';
    return 0;
}

int run_scan(const RunConfig& cfg) {
    const fs::path out = prepare_output(cfg);
    const auto arc = arc_by_name(cfg.arc);
    const auto F = cached_far_field_matrix(cfg.cache_dir, arc, cfg.solver());
    const auto grid = scan(F, cfg.scan());

    std::string orient = cfg.orientation.to_string();
    for (auto& c : orient)
        if (c == ':' || c == '.') c = '_';
    const std::string stem = "indicator_" + cfg.arc + "_" + orient + "_M" + std::to_string(cfg.resolution);
    save_grid(out / (stem + ".csv"), out / (stem + ".pgm"), grid);

    std::cout << "grid: " << grid.side() << "x" << grid.side() << " -> " << (out / stem).string() << ".{csv,pgm}\n";
    try {
        const auto stats = contrast_statistics(grid, arc, kNearDistance, kFarDistance);
        std::cout << "mean count within " << kNearDistance << " of arc: " << stats.mean_near << " (" << stats.near_cells
                  << " cells)\n"
                  << "mean count farther than " << kFarDistance << ": " << stats.mean_far << " (" << stats.far_cells
                  << " cells)\n"
                  << "contrast margin: " << stats.margin() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cout << "contrast statistics unavailable: " << e.what() << '\n';
    }
    return 0;
}

int run_domain_test(const RunConfig& cfg) {
    const fs::path out = prepare_output(cfg);
    const auto arc = arc_by_name(cfg.arc);
    const fs::path file = out / ("domain_" + cfg.arc + ".csv");
    std::ostringstream csv;
    csv << "cx,cy,radius,contains,count\n";
    if (!cfg.circles.empty()) {
        const auto F = cached_far_field_matrix(cfg.cache_dir, arc, cfg.solver());
        const auto samples = arc.sample(10000);
        for (const auto& c : cfg.circles) {
            const int count = indicator_domain(F, circle(c.center, c.radius), cfg.delta, cfg.boundary_points);
            bool contains = true;
            for (const auto& p : samples) contains = contains && (p - c.center).norm() < c.radius;
            csv << format_double(c.center.x()) << ',' << format_double(c.center.y()) << ','
                << format_double(c.radius) << ',' << (contains ? 1 : 0) << ',' << count << '\n';
        }
    }
    std::ofstream os(file, std::ios::trunc);
    if (!os) throw IoError("cannot write '" + file.string() + "'");
    os << csv.str();
    std::cout << csv.str();
    return 0;
}

int run_selftest_command(const RunConfig& cfg) {
    SelftestInput in;
    in.arc = cfg.arc;
    in.solver = cfg.solver();
    in.seed = cfg.seed;
    arc_by_name(cfg.arc);
    if (!cfg.cache_dir.empty()) {
        const auto path = far_field_cache_path(cfg.cache_dir, cfg.arc, cfg.solver());
        if (fs::exists(path)) {
            in.far_field = load_far_field(path);
            std::cout << "using cached far field matrix " << path.string() << '\n';
        }
    }
    const auto results = run_selftest(in);
    for (const auto& r : results)
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
    const bool ok = all_passed(results);
    std::cout << (ok ? "selftest passed\n" : "selftest FAILED\n");
    return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crack reconstruction from far field data by the monotonicity method"};
    app.require_subcommand(1);

    std::map<std::string, std::string> flag_values;
    std::string config_path;
    std::vector<std::string> circle_args;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"forward", "solve the forward problem and write the far field matrix"},
        {"scan", "image the crack with segment probes over the sampling square"},
        {"domain-test", "evaluate the enclosing-domain test for circles"},
        {"selftest", "run the oracle checks"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, desc] : commands) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", config_path, "key=value configuration file");
        for (const auto& f : kFlags) sub->add_option(f.name, flag_values[f.key], f.help);
        if (name == "domain-test") sub->add_option("--circle", circle_args, "circle 'cx,cy,r' (repeatable)");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        CLI::App* active = nullptr;
        for (std::size_t s = 0; s < subs.size(); ++s)
            if (subs[s]->parsed()) {
                active = subs[s];
                cfg.command = parse_command(commands[s].first);
            }
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) {
                std::cerr << "error: cannot read config file '" << config_path << "'\n";
                return 2;
            }
            std::stringstream buf;
            buf << is.rdbuf();
            const Command command = cfg.command;
            cfg = parse_config_text(buf.str(), cfg);
            cfg.command = command;
        }
        for (const auto& f : kFlags)
            if (active->count(f.name) > 0) apply_config_value(cfg, f.key, flag_values[f.key]);
        if (!circle_args.empty()) {
            cfg.circles.clear();
            for (const auto& c : circle_args) cfg.circles.push_back(parse_circle(c));
        }
        cfg.validate();
        arc_by_name(cfg.arc);
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 1;
    }

    try {
        switch (cfg.command) {
        case Command::forward: return run_forward(cfg);
        case Command::scan: return run_scan(cfg);
        case Command::domain_test: return run_domain_test(cfg);
        case Command::selftest: return run_selftest_command(cfg);
        }
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
