#include "crackmono/forward_solver.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "crackmono/special_functions.hpp"

namespace crackmono {

namespace {

using std::numbers::pi;

constexpr double kMinRcond = 1e-13;

// Weights R_d, d = 0..n-1, of the trapezoidal rule adapted to the kernel
// ln(4 sin^2((t - tau)/2)) on n = 2P nodes, indexed by the node offset.
std::vector<double> log_weights(int n) {
    const int p = n / 2;
    std::vector<double> w(n);
    for (int d = 0; d < n; ++d) {
        const double delta = pi * d / p;
        double sum = 0.0;
        for (int m = 1; m < p; ++m) sum += std::cos(m * delta) / m;
        w[d] = -(2.0 * pi / p) * sum - (pi / (static_cast<double>(p) * p)) * std::cos(p * delta);
    }
    return w;
}

}  // namespace

void SolverConfig::validate() const {
    if (!(wavenumber > 0.0) || !std::isfinite(wavenumber))
        throw std::invalid_argument("wavenumber must be positive and finite");
    if (quadrature_points < 8 || quadrature_points % 2 != 0)
        throw std::invalid_argument("quadrature size n must be even and >= 8");
    if (directions < 4 || directions % 2 != 0)
        throw std::invalid_argument("direction count N must be even and >= 4");
}

Point direction(int index, int count) {
    const double angle = 2.0 * pi * index / count;
    return {std::cos(angle), std::sin(angle)};
}

Complex far_field_constant(double wavenumber) {
    return std::polar(1.0 / std::sqrt(8.0 * pi * wavenumber), pi / 4.0);
}

CrackSolver::CrackSolver(ParametricArc arc, SolverConfig cfg) : arc_(std::move(arc)), cfg_(cfg) {
    cfg_.validate();
    const int n = cfg_.quadrature_points;
    const int p = n / 2;
    const double k = cfg_.wavenumber;

    std::vector<double> cos_t(n);
    nodes_.resize(n);
    for (int j = 0; j < n; ++j) {
        cos_t[j] = std::cos(pi * j / p);
        nodes_[j] = arc_.position_unchecked(cos_t[j]);
    }
    const auto weights = log_weights(n);

    // Phi(r) = -(1/2pi) J0(kr) ln|cos t - cos tau| + smooth; the log part is
    // folded onto the single kernel ln(4 sin^2((t - tau)/2)) using the
    // evenness of psi, and the remainder B is integrated by the plain rule.
    const Complex iquarter(0.0, 0.25);
    const double diag_const = -(std::log(k / 2.0) + kEulerGamma - std::log(2.0)) / (2.0 * pi);
    Eigen::MatrixXcd full(p + 1, n);
    for (int i = 0; i <= p; ++i) {
        const double speed = arc_.tangent_unchecked(cos_t[i]).norm();
        for (int j = 0; j < n; ++j) {
            const int offset = ((i - j) % n + n) % n;
            const bool coincident = (j == i) || (j == (n - i) % n);
            double r = (nodes_[i] - nodes_[j]).norm();
            Complex smooth;
            double j0;
            if (coincident) {
                j0 = 1.0;
                smooth = iquarter + diag_const - std::log(speed) / (2.0 * pi);
            } else {
                j0 = bessel_j0(k * r);
                const Complex phi = iquarter * hankel0(k * r);
                smooth = phi + j0 * std::log(2.0 * std::abs(cos_t[i] - cos_t[j])) / (2.0 * pi);
            }
            full(i, j) = -weights[offset] * j0 / (4.0 * pi) + (pi / n) * smooth;
        }
    }

    Eigen::MatrixXcd reduced(p + 1, p + 1);
    reduced.col(0) = full.col(0);
    reduced.col(p) = full.col(p);
    for (int j = 1; j < p; ++j) reduced.col(j) = full.col(j) + full.col(n - j);

    if (!reduced.allFinite()) throw NumericalError("crack solver: non-finite system matrix");
    lu_.compute(reduced);
    rcond_ = lu_.rcond();
    if (!(rcond_ > kMinRcond))
        throw NumericalError("crack solver: system is singular or ill-conditioned (condition estimate " +
                                 std::to_string(rcond_ > 0.0 ? 1.0 / rcond_ : INFINITY) + ")",
                             rcond_ > 0.0 ? 1.0 / rcond_ : INFINITY);
}

Density CrackSolver::solve(const std::function<Complex(const Point&)>& data) const {
    const int n = cfg_.quadrature_points;
    const int p = n / 2;
    Eigen::VectorXcd rhs(p + 1);
    for (int i = 0; i <= p; ++i) rhs[i] = data(nodes_[i]);
    const Eigen::VectorXcd half = lu_.solve(rhs);
    if (!half.allFinite()) throw NumericalError("crack solver: non-finite density");
    Density out{Eigen::VectorXcd(n), arc_.name(), cfg_.wavenumber};
    for (int j = 0; j < n; ++j) out.values[j] = half[j <= p ? j : n - j];
    return out;
}

Density CrackSolver::solve_plane_wave(const Point& d, Complex amplitude) const {
    if (std::abs(d.norm() - 1.0) > 1e-12) throw std::invalid_argument("incident direction must be a unit vector");
    const double k = cfg_.wavenumber;
    return solve([&](const Point& x) { return -amplitude * std::exp(Complex(0.0, k * d.dot(x))); });
}

Eigen::MatrixXcd CrackSolver::solve_plane_waves(const std::vector<Point>& dirs) const {
    const int n = cfg_.quadrature_points;
    const int p = n / 2;
    const double k = cfg_.wavenumber;
    const auto count = static_cast<Eigen::Index>(dirs.size());
    Eigen::MatrixXcd rhs(p + 1, count);
    for (Eigen::Index m = 0; m < count; ++m)
        for (int i = 0; i <= p; ++i) rhs(i, m) = -std::exp(Complex(0.0, k * dirs[m].dot(nodes_[i])));
    const Eigen::MatrixXcd half = lu_.solve(rhs);
    Eigen::MatrixXcd out(n, count);
    for (Eigen::Index m = 0; m < count; ++m) {
        if (!half.col(m).allFinite())
            throw NumericalError("crack solver: non-finite density for incidence m=" + std::to_string(m + 1));
        for (int j = 0; j < n; ++j) out(j, m) = half(j <= p ? j : n - j, m);
    }
    return out;
}

void CrackSolver::check_density(const Density& density) const {
    if (density.arc_name != arc_.name() || density.wavenumber != cfg_.wavenumber ||
        density.values.size() != cfg_.quadrature_points)
        throw std::invalid_argument("density does not belong to this arc/configuration");
}

Complex CrackSolver::far_field(const Density& density, const Point& xhat) const {
    check_density(density);
    const int n = cfg_.quadrature_points;
    const double k = cfg_.wavenumber;
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) sum += std::exp(Complex(0.0, -k * xhat.dot(nodes_[j]))) * density.values[j];
    return far_field_constant(k) * (pi / n) * sum;
}

Complex CrackSolver::scattered_field(const Density& density, const Point& x) const {
    check_density(density);
    const int n = cfg_.quadrature_points;
    const double k = cfg_.wavenumber;
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double r = (x - nodes_[j]).norm();
        if (r == 0.0) throw std::invalid_argument("scattered_field: evaluation point lies on a quadrature node");
        sum += Complex(0.0, 0.25) * hankel0(k * r) * density.values[j];
    }
    return (pi / n) * sum;
}

Density solve_density(const ParametricArc& arc, const SolverConfig& cfg, const Point& incident_direction) {
    return CrackSolver(arc, cfg).solve_plane_wave(incident_direction);
}

Complex far_field(const ParametricArc& arc, const SolverConfig& cfg, const Density& density,
                  const Point& observation) {
    cfg.validate();
    if (density.arc_name != arc.name() || density.wavenumber != cfg.wavenumber ||
        density.values.size() != cfg.quadrature_points)
        throw std::invalid_argument("density does not belong to this arc/configuration");
    const int n = cfg.quadrature_points;
    const double k = cfg.wavenumber;
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const Point y = arc.position_unchecked(std::cos(2.0 * pi * j / n));
        sum += std::exp(Complex(0.0, -k * observation.dot(y))) * density.values[j];
    }
    return far_field_constant(k) * (pi / n) * sum;
}

FarFieldMatrix far_field_matrix(const CrackSolver& solver) {
    const auto& cfg = solver.config();
    const int count = cfg.directions;
    const int n = cfg.quadrature_points;
    const double k = cfg.wavenumber;
    std::vector<Point> dirs;
    dirs.reserve(count);
    for (int m = 1; m <= count; ++m) dirs.push_back(direction(m, count));
    const Eigen::MatrixXcd densities = solver.solve_plane_waves(dirs);

    Eigen::MatrixXcd kernel(count, n);
    for (int l = 0; l < count; ++l)
        for (int j = 0; j < n; ++j) kernel(l, j) = std::exp(Complex(0.0, -k * dirs[l].dot(solver.nodes()[j])));

    FarFieldMatrix out;
    out.samples = (far_field_constant(k) * (pi / n)) * (kernel * densities);
    out.wavenumber = k;
    out.weight = 2.0 * pi / count;
    return out;
}

FarFieldMatrix far_field_matrix(const ParametricArc& arc, const SolverConfig& cfg) {
    return far_field_matrix(CrackSolver(arc, cfg));
}

FarFieldMatrix add_noise(const FarFieldMatrix& F, double level, std::uint64_t seed) {
    if (!(level >= 0.0) || !std::isfinite(level)) throw std::invalid_argument("noise level must be >= 0");
    FarFieldMatrix out = F;
    if (level == 0.0) return out;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double scale = level * F.samples.norm() / F.directions();
    for (Eigen::Index m = 0; m < out.samples.cols(); ++m)
        for (Eigen::Index l = 0; l < out.samples.rows(); ++l) {
            const double re = normal(rng);
            const double im = normal(rng);
            out.samples(l, m) += scale * Complex(re, im);
        }
    return out;
}

double reciprocity_residual(const FarFieldMatrix& F) {
    const int count = F.directions();
    if (F.samples.cols() != count || count % 2 != 0)
        throw std::invalid_argument("reciprocity_residual: square matrix with even N required");
    const int half = count / 2;
    double worst = 0.0;
    for (int l = 0; l < count; ++l)
        for (int m = 0; m < count; ++m) {
            // 0-based row/col r stands for direction index r + 1; negation
            // shifts the index by N/2.
            const int lp = (m + half) % count;
            const int mp = (l + half) % count;
            worst = std::max(worst, std::abs(F.samples(l, m) - F.samples(lp, mp)));
        }
    return worst;
}

}  // namespace crackmono
