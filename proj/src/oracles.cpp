#include "crackmono/oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "crackmono/special_functions.hpp"

namespace crackmono::oracles {

namespace {

using Complex = std::complex<double>;
using std::numbers::pi;

Point unit_direction(int index, int count) {
    const double a = 2.0 * pi * index / count;
    return {std::cos(a), std::sin(a)};
}

}  // namespace

Complex segment_integral(const ProbeSegment& probe, double k, const Point& v, int intervals) {
    if (intervals < 2 || intervals % 2 != 0) throw std::invalid_argument("Simpson rule needs an even interval count");
    const double h = probe.length / intervals;
    const Point start = probe.center - 0.5 * probe.length * probe.direction;
    auto f = [&](int q) {
        const Point y = start + (q * h) * probe.direction;
        return std::exp(Complex(0.0, k * y.dot(v)));
    };
    Complex sum = f(0) + f(intervals);
    for (int q = 1; q < intervals; ++q) sum += (q % 2 ? 4.0 : 2.0) * f(q);
    return sum * (h / 3.0);
}

Eigen::MatrixXcd segment_gram_quadrature(const ProbeSegment& probe, double k, int directions, int intervals) {
    Eigen::MatrixXcd out(directions, directions);
    const double w = 2.0 * pi / directions;
    for (int l = 1; l <= directions; ++l)
        for (int m = 1; m <= directions; ++m)
            out(l - 1, m - 1) =
                w * segment_integral(probe, k, unit_direction(m, directions) - unit_direction(l, directions), intervals);
    return out;
}

Eigen::MatrixXcd circle_gram_closed_form(const Point& center, double radius, double k, int directions) {
    Eigen::MatrixXcd out(directions, directions);
    const double w = 2.0 * pi / directions;
    for (int l = 1; l <= directions; ++l)
        for (int m = 1; m <= directions; ++m) {
            const Point v = unit_direction(m, directions) - unit_direction(l, directions);
            out(l - 1, m - 1) =
                w * 2.0 * pi * radius * std::exp(Complex(0.0, k * center.dot(v))) * bessel_j0(k * radius * v.norm());
        }
    return out;
}

int sturm_negative_count(const Eigen::MatrixXcd& hermitian, double tolerance) {
    const int n = static_cast<int>(hermitian.rows());
    if (hermitian.cols() != n) throw std::invalid_argument("sturm_negative_count: matrix must be square");
    // Work on a plain row-major copy, symmetrized.
    std::vector<Complex> a(static_cast<std::size_t>(n) * n);
    auto at = [&](int r, int c) -> Complex& { return a[static_cast<std::size_t>(r) * n + c]; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) at(r, c) = 0.5 * (hermitian(r, c) + std::conj(hermitian(c, r)));

    std::vector<Complex> v(n);
    std::vector<Complex> tmp(n);
    for (int k = 0; k + 2 < n; ++k) {
        double norm_x = 0.0;
        for (int r = k + 1; r < n; ++r) norm_x += std::norm(at(r, k));
        norm_x = std::sqrt(norm_x);
        if (norm_x == 0.0) continue;
        const Complex x0 = at(k + 1, k);
        const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0, 0.0);
        const Complex alpha = -phase * norm_x;
        for (int r = 0; r < n; ++r) v[r] = 0.0;
        for (int r = k + 1; r < n; ++r) v[r] = at(r, k);
        v[k + 1] -= alpha;
        double norm_v = 0.0;
        for (int r = k + 1; r < n; ++r) norm_v += std::norm(v[r]);
        norm_v = std::sqrt(norm_v);
        if (norm_v == 0.0) continue;
        for (int r = k + 1; r < n; ++r) v[r] /= norm_v;
        // A <- (I - 2 v v^*) A
        for (int c = 0; c < n; ++c) {
            Complex s = 0.0;
            for (int r = k + 1; r < n; ++r) s += std::conj(v[r]) * at(r, c);
            for (int r = k + 1; r < n; ++r) at(r, c) -= 2.0 * v[r] * s;
        }
        // A <- A (I - 2 v v^*)
        for (int r = 0; r < n; ++r) {
            Complex s = 0.0;
            for (int c = k + 1; c < n; ++c) s += at(r, c) * v[c];
            for (int c = k + 1; c < n; ++c) at(r, c) -= 2.0 * s * std::conj(v[c]);
        }
    }

    const double x = -tolerance;
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
        const double d = at(i, i).real();
        if (i == 0) {
            q = d - x;
        } else {
            const double e2 = std::norm(at(i, i - 1));
            q = d - x - e2 / q;
        }
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace crackmono::oracles
