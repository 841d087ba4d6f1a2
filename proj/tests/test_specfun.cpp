#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qcauchy/errors.hpp"
#include "qcauchy/specfun.hpp"

using namespace qcauchy;
using namespace qcauchy::specfun;

namespace {

constexpr double kPi = std::numbers::pi;

double relErr(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("J, Y and K agree with the standard library special functions") {
    for (int n = 0; n <= 2; ++n) {
        for (double x : {0.05, 0.3, 1.0, 2.5, 5.0, 7.7, 11.0, 13.0, 20.0, 35.0, 80.0}) {
            CHECK(std::abs(besselJ(n, x) - std::cyl_bessel_j(n, x)) <= 1e-12);
            CHECK(relErr(besselY(n, x), std::cyl_neumann(n, x)) <= 1e-10);
            CHECK(relErr(macdonaldK(n, x), std::cyl_bessel_k(n, x)) <= 1e-11);
        }
    }
}

TEST_CASE("series and asymptotic branches agree across the overlap window") {
    for (int n = 0; n <= 2; ++n) {
        for (double x = 0.5 * kCrossover; x <= 2.0 * kCrossover; x += 0.75) {
            const auto s = branch::seriesJY(n, x);
            const auto h = branch::hankelJY(n, x);
            CHECK(std::abs(s.j - h.j) <= 1e-9);
            CHECK(std::abs(s.y - h.y) <= 1e-9);
            CHECK(relErr(branch::seriesK(n, x), branch::laplaceK(n, x)) <= 1e-9);
        }
    }
}

TEST_CASE("K on the imaginary axis follows the Hankel connection") {
    for (int n = 0; n <= 2; ++n) {
        for (double y : {0.2, 1.0, 4.0, 15.0, 40.0}) {
            const std::complex<double> h1(std::cyl_bessel_j(n, y), std::cyl_neumann(n, y));
            const std::complex<double> ipow = std::pow(std::complex<double>(0.0, 1.0), n + 1);
            const auto expected = 0.5 * kPi * ipow * h1;
            const auto km = macdonaldK(n, KernelArg::imaginary(-y));
            const auto kp = macdonaldK(n, KernelArg::imaginary(y));
            CHECK(std::abs(km - expected) <= 1e-10 * std::abs(expected));
            CHECK(std::abs(kp - std::conj(expected)) <= 1e-10 * std::abs(expected));
        }
    }
}

TEST_CASE("z K1(z) tends to 1 at small |z| on both axes") {
    for (double s : {1.0, -1.0}) {
        CHECK(std::abs(zK1(KernelArg::imaginary(s * 1e-4)) - 1.0) <= 1e-6);
    }
    CHECK(std::abs(zK1(KernelArg::real(1e-4)) - 1.0) <= 1e-6);
    // x K1(x) = 1 + (x^2/2) ln(x/2) + ... stays accurate where 1/x would cancel
    const double x = 1e-3;
    CHECK(std::abs(branch::seriesXK1(x) - x * std::cyl_bessel_k(1, x)) <= 1e-14);
}

TEST_CASE("order-2 remainders match the direct formulas away from zero") {
    for (double y : {0.5, 1.0, 1.9, 2.1, 5.0, 12.0}) {
        CHECK(std::abs(besselY2Remainder(y) - (std::cyl_neumann(2, y) + 4.0 / (kPi * y * y) + 1.0 / kPi)) <= 1e-10);
        CHECK(std::abs(macdonaldK2Remainder(y) - (std::cyl_bessel_k(2, y) - 2.0 / (y * y) + 0.5)) <= 1e-10);
    }
    // leading small-y behaviour: Y2 remainder ~ (y^2/(4 pi)) ... stays bounded
    CHECK(std::abs(besselY2Remainder(1e-6)) < 1e-6);
    CHECK(std::abs(macdonaldK2Remainder(1e-6)) < 1e-6);
}

TEST_CASE("regimes and argument validation") {
    CHECK(regimeFor(1.0) == Regime::series);
    CHECK(regimeFor(100.0) == Regime::asymptotic);
    CHECK(regimeFor(kCrossover) == Regime::crossover);
    CHECK_THROWS_AS(KernelArg::from({1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(macdonaldK(1, KernelArg::real(0.0)), PoleError);
    CHECK_THROWS_AS(macdonaldK(1, KernelArg::real(-1.0)), DomainError);
}
