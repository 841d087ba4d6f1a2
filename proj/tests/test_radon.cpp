#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qcauchy/errors.hpp"
#include "qcauchy/radon.hpp"

using namespace qcauchy;

namespace {

constexpr double kPi = std::numbers::pi;

// int_{asin s}^{pi/2} cos^m by the composite Simpson rule
double cosTail(int m, double s) {
    const double a = std::asin(s);
    const double b = 0.5 * kPi;
    const int n = 20000;
    const double h = (b - a) / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * std::pow(std::cos(a + i * h), m);
    }
    return sum * h / 3.0;
}

CylinderSpec diag2() { return CylinderSpec::make({0.5, 0.5}, Eigen::MatrixXd::Identity(2, 2)); }

Eigen::VectorXd dir2(double th) {
    Eigen::VectorXd v(2);
    v << std::cos(th), std::sin(th);
    return v;
}

}  // namespace

TEST_CASE("Radon time Q and its maximum") {
    const auto s = diag2();
    CHECK(std::abs(radonQ(s, dir2(0.0)) - 0.5) <= 1e-15);
    CHECK(std::abs(radonQ(s, dir2(0.25 * kPi)) - std::sqrt(0.5)) <= 1e-15);
    CHECK(std::abs(maxRadonQ(s) - std::sqrt(0.5)) <= 1e-12);
    CHECK_THROWS_AS(radonQ(s, Eigen::VectorXd::Ones(2)), DomainError);
    CHECK_THROWS_AS(radonQ(s, Eigen::VectorXd::Ones(3) / std::sqrt(3.0)), DomainError);
}

TEST_CASE("half-space measure equals the 1-D interval tail") {
    const auto s = diag2();
    for (double th : {0.0, 0.4, 1.9, 3.3}) {
        const double q = radonQ(s, dir2(th));
        for (double R : {1.5 * q, 3.0 * q, 40.0 * q}) {
            const Complex h = halfSpaceMeasure({s, dir2(th), R});
            const Complex tail = intervalMeasureT(q, R, std::numeric_limits<double>::infinity()).value;
            CHECK(std::abs(h - tail) <= 1e-12);
        }
    }
    const Complex half = halfSpaceMeasure({s, dir2(0.0), 1.0});  // P = 1/2
    CHECK(half == Complex(0.0, -std::log(3.0) / (2.0 * kPi)));
    CHECK_THROWS_AS(halfSpaceMeasure({s, dir2(0.0), 0.5}), DomainError);
}

TEST_CASE("ball complement: k = 1 closed form and sign/decay in k = 2, 3") {
    const auto one = CylinderSpec::make({0.4, 0.6}, Eigen::MatrixXd::Ones(2, 1));
    for (double rho : {1.5, 3.0}) {
        const auto outside = intervalMeasureT(1.0, rho, std::numeric_limits<double>::infinity()).value;
        CHECK(std::abs(ballComplementMeasure(one, rho) - 2.0 * outside) <= 1e-14);
    }
    const Eigen::MatrixXd id3 = Eigen::MatrixXd::Identity(3, 3);
    for (const auto& s : {diag2(), CylinderSpec::make({0.3, 0.3, 0.4}, id3)}) {
        const double q = maxRadonQ(s);
        double previous = 0.0;
        for (double r : {2.0, 4.0, 8.0, 16.0}) {
            const Complex b = ballComplementMeasure(s, r * q);
            CHECK(b.real() == 0.0);
            CHECK(b.imag() < 0.0);
            if (previous != 0.0) CHECK(std::abs(b.imag()) < std::abs(previous));
            previous = b.imag();
        }
        CHECK_THROWS_AS(ballComplementMeasure(s, 0.9 * q), DomainError);
    }
}

TEST_CASE("cap weights: recurrence against direct quadrature") {
    for (int n : {2, 3, 4, 7, 10}) {
        for (double s : {0.0, 0.2, 0.5, 0.9}) {
            for (auto v : {CapVariant::cosn, CapVariant::geometric}) {
                const int m = v == CapVariant::cosn ? n : n - 2;
                const double expected = 0.5 * cosTail(m, s) / cosTail(m, 0.0);
                CHECK(std::abs(capAverage({n, v}, s, 1.0) - expected) <= 1e-10);
            }
        }
    }
    CHECK(capAverage({3, CapVariant::cosn}, 0.5, 1.0) == doctest::Approx(0.15625).epsilon(1e-14));
    CHECK(capAverage({3, CapVariant::geometric}, 0.5, 1.0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(capAverage({2, CapVariant::geometric}, 0.5, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(capAverage({5, CapVariant::geometric}, 2.0, 1.0) == 0.0);
    CHECK(capAverage({1, CapVariant::geometric}, 0.3, 1.0) == 0.5);
}

TEST_CASE("geometric caps match Monte-Carlo within 3 sigma, cos^n caps do not at n = 3") {
    for (int n : {2, 3, 5}) {
        const auto mc = capFractionMonteCarlo(n, 0.5, 400000, 99 + static_cast<std::uint64_t>(n));
        CHECK(std::abs(capAverage({n, CapVariant::geometric}, 0.5, 1.0) - mc.fraction) <= 3.0 * mc.sigma);
    }
    const auto mc3 = capFractionMonteCarlo(3, 0.5, 400000, 5);
    CHECK(std::abs(capAverage({3, CapVariant::cosn}, 0.5, 1.0) - mc3.fraction) > 10.0 * mc3.sigma);
    // determinism
    CHECK(capFractionMonteCarlo(4, 0.3, 1000, 1).fraction == capFractionMonteCarlo(4, 0.3, 1000, 1).fraction);
}

TEST_CASE("sphere-average identity holds with the geometric weight") {
    const auto s = diag2();
    const double q = maxRadonQ(s);
    for (double r : {1.5, 4.0, 1000.0}) {
        const auto geo = sphereAverageIdentity(s, r * q, {2, CapVariant::geometric});
        const auto pap = sphereAverageIdentity(s, r * q, {2, CapVariant::cosn});
        CHECK(geo.residual <= 1e-10 * std::abs(geo.lhs));
        CHECK(pap.residual > 0.1 * std::abs(pap.lhs));
    }
    const Eigen::MatrixXd id3 = Eigen::MatrixXd::Identity(3, 3);
    const auto s3 = CylinderSpec::make({0.3, 0.3, 0.4}, id3);
    const auto geo3 = sphereAverageIdentity(s3, 2.0 * maxRadonQ(s3), {3, CapVariant::geometric});
    CHECK(geo3.residual <= 1e-8);
    CHECK_THROWS_AS(sphereAverageIdentity(s, 0.5 * q, {2, CapVariant::geometric}), DomainError);
    CHECK_THROWS_AS(sphereAverageIdentity(s, 2.0 * q, {3, CapVariant::geometric}), DomainError);
}

TEST_CASE("large-n cap average approaches the Gaussian tail") {
    const auto g100 = gaussianLimit(100, 0.1);
    const auto g400 = gaussianLimit(400, 0.1);
    CHECK(g100.relativeGap <= 0.02);
    CHECK(g400.relativeGap < g100.relativeGap);
    CHECK(std::abs(g100.gaussian - 0.5 * std::erfc(1.0 / std::sqrt(2.0))) <= 1e-15);
    const auto small = gaussianLimit(50, 1e-6);
    CHECK(std::abs(small.exact - 0.5) <= 1e-4);
    CHECK(std::abs(small.gaussian - 0.5) <= 1e-4);
}
