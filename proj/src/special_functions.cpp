#include "crackmono/special_functions.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>

namespace crackmono {

double bessel_j0(double x) {
    if (!std::isfinite(x)) throw NumericalError("bessel_j0: non-finite argument");
    try {
        return boost::math::cyl_bessel_j(0, x);
    } catch (const std::exception& e) {
        throw NumericalError(std::string("bessel_j0: ") + e.what());
    }
}

double bessel_y0(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw NumericalError("bessel_y0: argument must be positive and finite");
    try {
        return boost::math::cyl_neumann(0, x);
    } catch (const std::exception& e) {
        throw NumericalError(std::string("bessel_y0: ") + e.what());
    }
}

std::complex<double> hankel0(double x) { return {bessel_j0(x), bessel_y0(x)}; }

double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = std::numbers::pi * x;
    // Taylor branch avoids cancellation in sin(px)/px for tiny px.
    if (std::abs(px) < 1e-4) {
        const double p2 = px * px;
        return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
    }
    return std::sin(px) / px;
}

}  // namespace crackmono
