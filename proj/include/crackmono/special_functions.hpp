#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace crackmono {

// Raised when a numerical routine cannot deliver a trustworthy result.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what, double condition_estimate = 0.0)
        : std::runtime_error(what), condition_estimate_(condition_estimate) {}

    // Reciprocal-condition based estimate; 0 when not applicable.
    double condition_estimate() const { return condition_estimate_; }

private:
    double condition_estimate_;
};

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

double bessel_j0(double x);

// Y0; requires x > 0.
double bessel_y0(double x);

// H0^(1)(x) = J0(x) + i Y0(x); requires x > 0.
std::complex<double> hankel0(double x);

// Normalized sinc: sin(pi x)/(pi x), sinc(0) = 1.
double sinc(double x);

}  // namespace crackmono
