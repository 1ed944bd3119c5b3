#include "crackmono/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "crackmono/numeric_text.hpp"

namespace crackmono {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string next_line(std::istream& is, const char* what) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument(std::string("matrix CSV: missing ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

void write_matrix_body(std::ostream& os, const Eigen::MatrixXcd& values, double k, double weight) {
    const auto n = values.rows();
    os << "N,k,weight\n" << n << ',' << format_double(k) << ',' << format_double(weight) << '\n';
    os << "l,m,re,im\n";
    for (Eigen::Index l = 0; l < n; ++l)
        for (Eigen::Index m = 0; m < n; ++m)
            os << l + 1 << ',' << m + 1 << ',' << format_double(values(l, m).real()) << ','
               << format_double(values(l, m).imag()) << '\n';
}

struct MatrixBody {
    Eigen::MatrixXcd values;
    double wavenumber = 0.0;
    double weight = 0.0;
};

MatrixBody read_matrix_body(std::istream& is, std::string header) {
    if (header != "N,k,weight") throw std::invalid_argument("matrix CSV: expected 'N,k,weight' header");
    const auto meta = split(next_line(is, "metadata row"), ',');
    if (meta.size() != 3) throw std::invalid_argument("matrix CSV: metadata row needs 3 fields");
    MatrixBody body;
    const int n = parse_integer<int>(meta[0]);
    if (n < 1) throw std::invalid_argument("matrix CSV: N must be positive");
    body.wavenumber = parse_double(meta[1]);
    body.weight = parse_double(meta[2]);
    if (next_line(is, "entry header") != "l,m,re,im") throw std::invalid_argument("matrix CSV: expected 'l,m,re,im'");
    body.values.resize(n, n);
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (long e = 0; e < static_cast<long>(n) * n; ++e) {
        const auto f = split(next_line(is, "entry row"), ',');
        if (f.size() != 4) throw std::invalid_argument("matrix CSV: entry row needs 4 fields");
        const int l = parse_integer<int>(f[0]);
        const int m = parse_integer<int>(f[1]);
        if (l < 1 || l > n || m < 1 || m > n) throw std::invalid_argument("matrix CSV: index out of range");
        auto& flag = seen[static_cast<std::size_t>(l - 1) * n + (m - 1)];
        if (flag) throw std::invalid_argument("matrix CSV: duplicate entry");
        flag = 1;
        body.values(l - 1, m - 1) = Complex(parse_double(f[2]), parse_double(f[3]));
    }
    return body;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream os(path, mode | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
    return os;
}

}  // namespace

void write_far_field_csv(std::ostream& os, const FarFieldMatrix& F) {
    write_matrix_body(os, F.samples, F.wavenumber, F.weight);
}

FarFieldMatrix read_far_field_csv(std::istream& is) {
    auto body = read_matrix_body(is, next_line(is, "header"));
    FarFieldMatrix F;
    F.samples = std::move(body.values);
    F.wavenumber = body.wavenumber;
    F.weight = body.weight;
    return F;
}

void save_far_field(const std::filesystem::path& path, const FarFieldMatrix& F) {
    auto os = open_out(path);
    write_far_field_csv(os, F);
    if (!os) throw IoError("failed writing '" + path.string() + "'");
}

FarFieldMatrix load_far_field(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path.string() + "'");
    try {
        return read_far_field_csv(is);
    } catch (const std::invalid_argument& e) {
        throw IoError("malformed far field file '" + path.string() + "': " + e.what());
    }
}

void write_test_matrix_csv(std::ostream& os, const TestMatrix& A) {
    std::string geometry = A.geometry;
    std::replace(geometry.begin(), geometry.end(), '\n', ' ');
    os << "# geometry: " << (A.kind == GramKind::segment ? "segment" : "boundary") << ' ' << geometry << '\n';
    write_matrix_body(os, A.values, A.wavenumber, 2.0 * std::numbers::pi / A.directions());
}

TestMatrix read_test_matrix_csv(std::istream& is) {
    const std::string first = next_line(is, "geometry line");
    const std::string prefix = "# geometry: ";
    if (first.rfind(prefix, 0) != 0) throw std::invalid_argument("test matrix CSV: missing geometry line");
    const std::string rest = first.substr(prefix.size());
    const auto space = rest.find(' ');
    const std::string kind = rest.substr(0, space);
    TestMatrix A;
    if (kind == "segment")
        A.kind = GramKind::segment;
    else if (kind == "boundary")
        A.kind = GramKind::boundary;
    else
        throw std::invalid_argument("test matrix CSV: unknown kind '" + kind + "'");
    A.geometry = space == std::string::npos ? std::string() : rest.substr(space + 1);
    auto body = read_matrix_body(is, next_line(is, "header"));
    A.values = std::move(body.values);
    A.wavenumber = body.wavenumber;
    return A;
}

void write_grid_csv(std::ostream& os, const IndicatorGrid& grid) {
    const int m = grid.resolution();
    os << "i,j,x,y,count\n";
    for (int i = -m; i <= m; ++i)
        for (int j = -m; j <= m; ++j) {
            const Point c = grid.center(i, j);
            os << i << ',' << j << ',' << format_double(c.x()) << ',' << format_double(c.y()) << ',' << grid.at(i, j)
               << '\n';
        }
}

void write_grid_pgm(std::ostream& os, const IndicatorGrid& grid) {
    const int m = grid.resolution();
    const int side = grid.side();
    const auto [lo_it, hi_it] = std::minmax_element(grid.counts().begin(), grid.counts().end());
    const int lo = *lo_it;
    const int hi = *hi_it;
    os << "P5\n" << side << ' ' << side << "\n255\n";
    std::vector<unsigned char> row(side);
    for (int j = m; j >= -m; --j) {
        for (int i = -m; i <= m; ++i) {
            const double t = hi > lo ? static_cast<double>(grid.at(i, j) - lo) / (hi - lo) : 0.0;
            row[i + m] = static_cast<unsigned char>(std::lround(255.0 * t));
        }
        os.write(reinterpret_cast<const char*>(row.data()), side);
    }
}

void save_grid(const std::filesystem::path& csv_path, const std::filesystem::path& pgm_path,
               const IndicatorGrid& grid) {
    {
        auto os = open_out(csv_path);
        write_grid_csv(os, grid);
        if (!os) throw IoError("failed writing '" + csv_path.string() + "'");
    }
    auto os = open_out(pgm_path, std::ios::out | std::ios::binary);
    write_grid_pgm(os, grid);
    if (!os) throw IoError("failed writing '" + pgm_path.string() + "'");
}

std::string eigen_report_csv_header() { return "cx,cy,dx,dy,L,delta,count,ev1,ev2,ev3,ev4,ev5"; }

std::string eigen_report_csv_row(const ProbeSegment& probe, const EigenReport& report) {
    std::ostringstream os;
    os << format_double(probe.center.x()) << ',' << format_double(probe.center.y()) << ','
       << format_double(probe.direction.x()) << ',' << format_double(probe.direction.y()) << ','
       << format_double(probe.length) << ',' << format_double(report.tolerance) << ',' << report.negative_count;
    for (std::size_t q = 0; q < 5; ++q) {
        os << ',';
        if (q < report.eigenvalues.size()) os << format_double(report.eigenvalues[q]);
    }
    return os.str();
}

std::string content_hash(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int q = 15; q >= 0; --q) {
        out[q] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::filesystem::path far_field_cache_path(const std::filesystem::path& cache_dir, const std::string& arc_name,
                                           const SolverConfig& cfg) {
    const std::string key = "arc=" + arc_name + ";k=" + format_double(cfg.wavenumber) +
                            ";N=" + std::to_string(cfg.directions) + ";n=" + std::to_string(cfg.quadrature_points);
    return cache_dir / ("farfield-" + content_hash(key) + ".csv");
}

FarFieldMatrix cached_far_field_matrix(const std::filesystem::path& cache_dir, const ParametricArc& arc,
                                       const SolverConfig& cfg, bool* from_cache) {
    cfg.validate();
    if (from_cache) *from_cache = false;
    if (cache_dir.empty()) return far_field_matrix(arc, cfg);
    const auto path = far_field_cache_path(cache_dir, arc.name(), cfg);
    if (std::filesystem::exists(path)) {
        auto F = load_far_field(path);
        if (F.directions() != cfg.directions || F.wavenumber != cfg.wavenumber)
            throw IoError("cache file '" + path.string() + "' does not match the requested configuration");
        if (from_cache) *from_cache = true;
        return F;
    }
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    if (ec) throw IoError("cannot create cache directory '" + cache_dir.string() + "': " + ec.message());
    auto F = far_field_matrix(arc, cfg);
    save_far_field(path, F);
    return F;
}

}  // namespace crackmono
