#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "crackmono/forward_solver.hpp"
#include "crackmono/indicator.hpp"
#include "crackmono/oracles.hpp"

using namespace crackmono;
using std::numbers::pi;

namespace {

const FarFieldMatrix& gamma1_data() {
    static const FarFieldMatrix F = far_field_matrix(benchmark_arc(1), SolverConfig{1.0, 128, 60});
    return F;
}

Eigen::MatrixXcd random_hermitian(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = Complex(g(rng), g(rng));
    return (a + a.adjoint()) / 2.0;
}

FarFieldMatrix zero_data(int n, double k) {
    FarFieldMatrix F;
    F.samples = Eigen::MatrixXcd::Zero(n, n);
    F.wavenumber = k;
    F.weight = 2 * pi / n;
    return F;
}

}  // namespace

TEST_CASE("re_part examples") {
    Eigen::MatrixXcd a(2, 2);
    a << Complex(0, 1), 2.0, 0.0, Complex(0, -1);
    Eigen::MatrixXcd expect(2, 2);
    expect << 0.0, 1.0, 1.0, 0.0;
    CHECK(re_part(a) == expect);
    CHECK_THROWS_AS(re_part(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("negative eigenvalue count examples") {
    CHECK(negative_eigenvalue_count(Eigen::MatrixXcd::Identity(5, 5)).negative_count == 0);
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d(0, 0) = -1.0;
    d(1, 1) = -1e-15;
    d(2, 2) = 2.0;
    const auto rep = negative_eigenvalue_count(d, 1e-12);
    CHECK(rep.negative_count == 1);
    CHECK(rep.tolerance == 1e-12);
    CHECK(rep.eigenvalues.size() == 3);
    CHECK(rep.eigenvalues.front() == doctest::Approx(-1.0));
    CHECK(negative_eigenvalue_count(d, 0.0).negative_count == 2);
    CHECK_THROWS_AS(negative_eigenvalue_count(d, -1.0), std::invalid_argument);
}

TEST_CASE("eigenvalue count agrees with the Sturm sequence oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const auto h = random_hermitian(rng, 8);
        CHECK(negative_eigenvalue_count(h).negative_count == oracles::sturm_negative_count(h));
    }
}

TEST_CASE("adding a positive semi-definite matrix never raises the count") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    for (int t = 0; t < 50; ++t) {
        const auto a = random_hermitian(rng, 10);
        Eigen::MatrixXcd b(10, 3);
        for (int r = 0; r < 10; ++r)
            for (int c = 0; c < 3; ++c) b(r, c) = Complex(g(rng), g(rng));
        const Eigen::MatrixXcd p = b * b.adjoint();
        CHECK(negative_eigenvalue_count(a + p).negative_count <= negative_eigenvalue_count(a).negative_count);
    }
}

TEST_CASE("count is bounded by N") {
    const auto& F = gamma1_data();
    const int c = indicator_segment(F, ProbeSegment(Point(1.0, -1.0), Point(0, 1), 0.0375));
    CHECK(c >= 0);
    CHECK(c <= 60);
}

TEST_CASE("vanishing probe length recovers the count of -Re(wU)") {
    const auto& F = gamma1_data();
    const double delta = 1e-10;
    const int base = negative_eigenvalue_count(-re_part(F.weighted()), delta).negative_count;
    CHECK(indicator_segment(F, ProbeSegment(Point(0.7, -0.4), Point(0, 1), 1e-12), delta) == base);
}

TEST_CASE("probe on the crack counts no more than a probe far from it") {
    const auto& F = gamma1_data();
    const ProbeSegment on(Point(0.0, 0.0), Point(1, 1).normalized(), 0.015);
    const ProbeSegment off(Point(1.2, -1.2), Point(1, 1).normalized(), 0.015);
    CHECK(indicator_segment(F, on) <= indicator_segment(F, off));
}

TEST_CASE("count is invariant under a simultaneous permutation of directions") {
    // With delta above the eigensolver's backward error the count depends
    // only on the spectrum.
    const auto& F = gamma1_data();
    const double delta = 1e-10;
    const ProbeSegment probe(Point(0.3, 0.6), Point(0, 1), 0.0375);
    const auto gram = segment_gram(probe, 1.0, 60);
    const int base = indicator_segment(F, gram, delta);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        Eigen::PermutationMatrix<Eigen::Dynamic> perm(60);
        perm.setIdentity();
        std::shuffle(perm.indices().data(), perm.indices().data() + 60, rng);
        FarFieldMatrix Fp = F;
        Fp.samples = perm * F.samples * perm.transpose();
        TestMatrix gp = gram;
        gp.values = perm * gram.values * perm.transpose();
        CHECK(indicator_segment(Fp, gp, delta) == base);
    }
}

TEST_CASE("indicator rejects mismatched data") {
    const auto& F = gamma1_data();
    const ProbeSegment probe(Point(0, 0), Point(0, 1), 0.1);
    CHECK_THROWS_AS(indicator_segment(F, segment_gram(probe, 1.0, 30)), std::invalid_argument);
    CHECK_THROWS_AS(indicator_segment(F, segment_gram(probe, 2.0, 60)), std::invalid_argument);
    CHECK_THROWS_AS(indicator_domain(F, boundary_gram(circle(Point(0, 0), 3.0), 1.0, 40, 64)),
                    std::invalid_argument);
}

TEST_CASE("domain test separates enclosing and distant circles") {
    const auto& F = gamma1_data();
    const int enclosing = indicator_domain(F, circle(Point(0, 0), 3.0));
    const int distant = indicator_domain(F, circle(Point(5, 5), 0.2));
    CHECK(enclosing < distant);
}

TEST_CASE("domain test on zero data counts nothing") {
    // The boundary Gram is numerically rank deficient; its tail eigenvalues
    // sit at +-1e-16 relative, so the count is taken just above that floor.
    const auto F = zero_data(60, 1.0);
    for (const auto& c : {circle(Point(0.5, -0.5), 1.0), circle(Point(5, 5), 0.2), circle(Point(0, 0), 3.0)}) {
        const auto g = boundary_gram(c, 1.0, 60, 256);
        const auto rep = negative_eigenvalue_count(g.values);
        CHECK(rep.eigenvalues.front() >= -1e-14 * rep.eigenvalues.back());
        CHECK(indicator_domain(F, c, 1e-12) == 0);
    }
}

TEST_CASE("shrinking circle approaches the count of Re(wU)") {
    const auto& F = gamma1_data();
    const double delta = 1e-8;
    const int limit = negative_eigenvalue_count(re_part(F.weighted()), delta).negative_count;
    CHECK(indicator_domain(F, circle(Point(4.0, 4.0), 1e-9), delta) == limit);
}

TEST_CASE("count is non-increasing as eps I is added") {
    const auto& F = gamma1_data();
    const ProbeSegment probe(Point(-0.5, 0.9), Point(1, 0), 0.0375);
    const Eigen::MatrixXcd h = -re_part(F.weighted()) - segment_gram(probe, 1.0, 60).values;
    const auto id = Eigen::MatrixXcd::Identity(60, 60);
    int previous = 61;
    for (double eps : {0.0, 0.01, 0.1}) {
        const int c = negative_eigenvalue_count(h + eps * id).negative_count;
        CHECK(c <= previous);
        previous = c;
    }
}

TEST_CASE("cached segment indicator matches the direct call and is deterministic") {
    const auto& F = gamma1_data();
    const SegmentIndicator ind(F, 0.0);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int t = 0; t < 10; ++t) {
        const ProbeSegment probe(Point(u(rng), u(rng)), Point(0, 1), 0.0375);
        const int direct = indicator_segment(F, probe);
        CHECK(ind(probe) == direct);
        CHECK(indicator_segment(F, probe) == direct);
    }
}
