#include "crackmono/indicator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "crackmono/special_functions.hpp"

namespace crackmono {

namespace {

void check_compatible(const FarFieldMatrix& F, const TestMatrix& gram) {
    if (gram.directions() != F.directions())
        throw std::invalid_argument("test matrix and far field matrix differ in direction count N");
    if (gram.wavenumber != F.wavenumber)
        throw std::invalid_argument("test matrix and far field matrix differ in wavenumber k");
}

void check_tolerance(double tolerance) {
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance))
        throw std::invalid_argument("eigenvalue tolerance must be finite and >= 0");
}

}  // namespace

Eigen::MatrixXcd re_part(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("re_part: matrix must be square");
    return 0.5 * (a + a.adjoint());
}

EigenReport negative_eigenvalue_count(const Eigen::MatrixXcd& h, double tolerance) {
    check_tolerance(tolerance);
    const Eigen::MatrixXcd sym = re_part(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
    EigenReport out;
    out.tolerance = tolerance;
    const auto& ev = solver.eigenvalues();
    out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    out.negative_count = static_cast<int>(
        std::count_if(out.eigenvalues.begin(), out.eigenvalues.end(), [&](double v) { return v < -tolerance; }));
    return out;
}

int indicator_segment(const FarFieldMatrix& F, const TestMatrix& gram, double tolerance) {
    check_compatible(F, gram);
    const Eigen::MatrixXcd a = -re_part(F.weighted()) - gram.values;
    return negative_eigenvalue_count(a, tolerance).negative_count;
}

int indicator_segment(const FarFieldMatrix& F, const ProbeSegment& probe, double tolerance) {
    return indicator_segment(F, segment_gram(probe, F.wavenumber, F.directions()), tolerance);
}

int indicator_domain(const FarFieldMatrix& F, const TestMatrix& gram, double tolerance) {
    check_compatible(F, gram);
    const Eigen::MatrixXcd a = gram.values + re_part(F.weighted());
    return negative_eigenvalue_count(a, tolerance).negative_count;
}

int indicator_domain(const FarFieldMatrix& F, const ClosedCurve& curve, double tolerance, int quadrature_points) {
    return indicator_domain(F, boundary_gram(curve, F.wavenumber, F.directions(), quadrature_points), tolerance);
}

SegmentIndicator::SegmentIndicator(const FarFieldMatrix& F, double tolerance)
    : neg_re_(-re_part(F.weighted())), wavenumber_(F.wavenumber), tolerance_(tolerance) {
    check_tolerance(tolerance);
}

EigenReport SegmentIndicator::report(const ProbeSegment& probe) const {
    const TestMatrix gram = segment_gram(probe, wavenumber_, directions());
    return negative_eigenvalue_count(neg_re_ - gram.values, tolerance_);
}

}  // namespace crackmono
