#pragma once

// Independent reference computations used to cross-check the production
// routines. None of these share code paths with the routines they check.

#include <complex>

#include <Eigen/Dense>

#include "crackmono/geometry.hpp"

namespace crackmono::oracles {

// int_sigma e^{i k y.v} ds(y) by composite Simpson with `intervals`
// subintervals (even).
std::complex<double> segment_integral(const ProbeSegment& probe, double wavenumber, const Point& v,
                                      int intervals = 10000);

// Segment Gram assembled entrywise from segment_integral.
Eigen::MatrixXcd segment_gram_quadrature(const ProbeSegment& probe, double wavenumber, int directions,
                                         int intervals = 10000);

// Circle Gram from the Bessel identity
// int_{|y-c|=rho} e^{i k y.v} ds = 2 pi rho e^{i k c.v} J0(k rho |v|).
Eigen::MatrixXcd circle_gram_closed_form(const Point& center, double radius, double wavenumber, int directions);

// #{eigenvalues < -tolerance} of a Hermitian matrix through Householder
// tridiagonalization and a Sturm sequence.
int sturm_negative_count(const Eigen::MatrixXcd& hermitian, double tolerance = 0.0);

}  // namespace crackmono::oracles
