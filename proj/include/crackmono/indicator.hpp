#pragma once

// Negative-eigenvalue counting and the two monotonicity tests.

#include <vector>

#include <Eigen/Dense>

#include "crackmono/forward_solver.hpp"
#include "crackmono/geometry.hpp"
#include "crackmono/test_operators.hpp"

namespace crackmono {

struct EigenReport {
    std::vector<double> eigenvalues;  // ascending
    int negative_count = 0;           // #{lambda < -tolerance}
    double tolerance = 0.0;
};

// (A + A^*) / 2.
Eigen::MatrixXcd re_part(const Eigen::MatrixXcd& a);

// Full Hermitian eigendecomposition of re_part(h); counts eigenvalues
// strictly below -tolerance.
EigenReport negative_eigenvalue_count(const Eigen::MatrixXcd& h, double tolerance = 0.0);

// Inner test: #negative eigenvalues of -Re(wU) - G_sigma. Small values mean
// the probe lies on (or near) the crack.
int indicator_segment(const FarFieldMatrix& F, const ProbeSegment& probe, double tolerance = 0.0);
int indicator_segment(const FarFieldMatrix& F, const TestMatrix& gram, double tolerance = 0.0);

// Outer test: #negative eigenvalues of G_dB + Re(wU). Small values mean the
// curve encloses the crack.
int indicator_domain(const FarFieldMatrix& F, const ClosedCurve& curve, double tolerance = 0.0,
                     int quadrature_points = 256);
int indicator_domain(const FarFieldMatrix& F, const TestMatrix& gram, double tolerance = 0.0);

// Caches -Re(wU) for repeated segment probes.
class SegmentIndicator {
public:
    explicit SegmentIndicator(const FarFieldMatrix& F, double tolerance = 0.0);

    int operator()(const ProbeSegment& probe) const { return report(probe).negative_count; }
    EigenReport report(const ProbeSegment& probe) const;

    const Eigen::MatrixXcd& data_term() const { return neg_re_; }
    double wavenumber() const { return wavenumber_; }
    int directions() const { return static_cast<int>(neg_re_.rows()); }

private:
    Eigen::MatrixXcd neg_re_;
    double wavenumber_;
    double tolerance_;
};

}  // namespace crackmono
