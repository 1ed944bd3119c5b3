#include "crackmono/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "crackmono/indicator.hpp"
#include "crackmono/numeric_text.hpp"
#include "crackmono/oracles.hpp"
#include "crackmono/test_operators.hpp"

namespace crackmono {

namespace {

constexpr double kSincTolerance = 1e-10;
constexpr double kReciprocityTolerance = 1e-6;
constexpr double kConvergenceTolerance = 1e-8;
constexpr double kHermitianTolerance = 1e-12;
constexpr double kPsdRelativeTolerance = 1e-10;

std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

template <typename Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

Point random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double a = angle(rng);
    return {std::cos(a), std::sin(a)};
}

CheckResult check_sinc(const SelftestInput& in, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> len(0.01, 0.5);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const ProbeSegment probe(Point(coord(rng), coord(rng)), random_unit(rng), len(rng));
        const auto closed = segment_gram(probe, in.solver.wavenumber, 8).values;
        const auto brute = oracles::segment_gram_quadrature(probe, in.solver.wavenumber, 8);
        worst = std::max(worst, (closed - brute).cwiseAbs().maxCoeff());
    }
    return {"sinc closed form vs quadrature", worst <= kSincTolerance, "max abs error " + sci(worst)};
}

CheckResult check_reciprocity(const FarFieldMatrix& F) {
    const double r = reciprocity_residual(F);
    return {"far field reciprocity", r <= kReciprocityTolerance, "max residual " + sci(r)};
}

CheckResult check_convergence(const ParametricArc& arc, const SolverConfig& cfg) {
    SolverConfig fine = cfg;
    fine.quadrature_points = 2 * cfg.quadrature_points;
    const auto coarse_f = far_field_matrix(arc, cfg);
    const auto fine_f = far_field_matrix(arc, fine);
    const double diff = (coarse_f.samples - fine_f.samples).cwiseAbs().maxCoeff();
    return {"self-convergence n vs 2n", diff <= kConvergenceTolerance,
            "n=" + std::to_string(cfg.quadrature_points) + " max abs change " + sci(diff)};
}

CheckResult check_gram_structure(const SelftestInput& in, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    const ProbeSegment probe(Point(coord(rng), coord(rng)), random_unit(rng), 0.2);
    const auto seg = segment_gram(probe, in.solver.wavenumber, in.solver.directions);
    const auto bnd = boundary_gram(circle(Point(0.0, 0.0), 3.0), in.solver.wavenumber, in.solver.directions, 256);
    double herm = 0.0;
    double psd = 0.0;
    for (const auto* m : {&seg, &bnd}) {
        herm = std::max(herm, m->hermitian_defect());
        const auto rep = negative_eigenvalue_count(m->values);
        const double norm2 = std::max(std::abs(rep.eigenvalues.front()), std::abs(rep.eigenvalues.back()));
        psd = std::max(psd, -rep.eigenvalues.front() / std::max(norm2, 1e-300));
    }
    const bool ok = herm <= kHermitianTolerance && psd <= kPsdRelativeTolerance;
    return {"test matrices Hermitian PSD", ok,
            "hermitian defect " + sci(herm) + ", relative min eigenvalue " + sci(-psd)};
}

CheckResult check_sturm(std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_int_distribution<int> size(4, 16);
    int mismatches = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
        const int n = size(rng);
        Eigen::MatrixXcd a(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a(r, c) = Complex(normal(rng), normal(rng));
        const Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
        if (negative_eigenvalue_count(h).negative_count != oracles::sturm_negative_count(h)) ++mismatches;
    }
    return {"eigen count vs Sturm bisection", mismatches == 0,
            std::to_string(mismatches) + " mismatches in " + std::to_string(trials) + " matrices"};
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestInput& in) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(in.seed);
    out.push_back(guarded("sinc closed form vs quadrature", [&] { return check_sinc(in, rng); }));
    out.push_back(guarded("far field reciprocity", [&] {
        if (in.far_field) return check_reciprocity(*in.far_field);
        return check_reciprocity(far_field_matrix(arc_by_name(in.arc), in.solver));
    }));
    out.push_back(
        guarded("self-convergence n vs 2n", [&] { return check_convergence(arc_by_name(in.arc), in.solver); }));
    out.push_back(guarded("test matrices Hermitian PSD", [&] { return check_gram_structure(in, rng); }));
    out.push_back(guarded("eigen count vs Sturm bisection", [&] { return check_sturm(rng); }));
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace crackmono
