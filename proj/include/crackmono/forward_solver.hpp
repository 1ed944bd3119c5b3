#pragma once

// Sound-soft crack scattering by a single-layer integral equation on an open
// arc, solved with a cosine-substituted Nystrom scheme.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "crackmono/geometry.hpp"

namespace crackmono {

using Complex = std::complex<double>;

struct SolverConfig {
    double wavenumber = 1.0;
    // Nodes t_j = 2 pi j / n on the periodic cosine grid; even, >= 8.
    int quadrature_points = 128;
    // Number of equispaced observation/incidence directions; even, >= 4.
    int directions = 60;

    // Throws std::invalid_argument when a constraint is violated.
    void validate() const;
};

// Transformed density psi(t) = phi(z(cos t)) |z'(cos t)| |sin t| sampled at
// the n nodes t_j = 2 pi j / n. psi is even, so values[j] == values[n - j].
struct Density {
    Eigen::VectorXcd values;
    std::string arc_name;
    double wavenumber = 0.0;
};

// Direction (cos(2 pi l / N), sin(2 pi l / N)); l is 1-based, l = N is angle 0.
Point direction(int index, int count);

// Factorizes the discretized single-layer operator once and solves for any
// Dirichlet data on the arc.
class CrackSolver {
public:
    CrackSolver(ParametricArc arc, SolverConfig cfg);

    const ParametricArc& arc() const { return arc_; }
    const SolverConfig& config() const { return cfg_; }

    // Reciprocal condition number estimate of the reduced system.
    double rcond() const { return rcond_; }

    // Solves S phi = data on the arc.
    Density solve(const std::function<Complex(const Point&)>& data) const;

    // Boundary data -amplitude * exp(i k theta . x) of an incident plane wave.
    Density solve_plane_wave(const Point& incident_direction, Complex amplitude = 1.0) const;

    // Batched plane-wave solve; column m of the result holds psi for
    // incident_directions[m].
    Eigen::MatrixXcd solve_plane_waves(const std::vector<Point>& incident_directions) const;

    Complex far_field(const Density& density, const Point& observation) const;

    // Single-layer potential at a point off the arc.
    Complex scattered_field(const Density& density, const Point& x) const;

    // Quadrature nodes on the arc, x_j = z(cos t_j).
    const std::vector<Point>& nodes() const { return nodes_; }

private:
    void check_density(const Density& density) const;

    ParametricArc arc_;
    SolverConfig cfg_;
    std::vector<Point> nodes_;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
    double rcond_ = 0.0;
};

// Far-field normalization e^{i pi/4} / sqrt(8 pi k).
Complex far_field_constant(double wavenumber);

Density solve_density(const ParametricArc& arc, const SolverConfig& cfg, const Point& incident_direction);

Complex far_field(const ParametricArc& arc, const SolverConfig& cfg, const Density& density,
                  const Point& observation);

// Raw (unweighted) samples u_inf(x_l, theta_m); consumers apply the weight.
struct FarFieldMatrix {
    Eigen::MatrixXcd samples;  // (l - 1, m - 1): observation l, incidence m
    double wavenumber = 0.0;
    double weight = 0.0;       // 2 pi / N

    int directions() const { return static_cast<int>(samples.rows()); }
    Eigen::MatrixXcd weighted() const { return weight * samples; }
};

FarFieldMatrix far_field_matrix(const ParametricArc& arc, const SolverConfig& cfg);
FarFieldMatrix far_field_matrix(const CrackSolver& solver);

// Entrywise complex Gaussian perturbation with standard deviation
// level * ||U||_F / N per real component; deterministic in seed.
FarFieldMatrix add_noise(const FarFieldMatrix& F, double level, std::uint64_t seed);

// max |U(l, m) - U(m + N/2, l + N/2)|, the discrete form of
// u_inf(x, theta) = u_inf(-theta, -x).
double reciprocity_residual(const FarFieldMatrix& F);

}  // namespace crackmono
