#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcauchy/errors.hpp"
#include "qcauchy/quasiclassical.hpp"
#include "qcauchy/relativistic.hpp"

using namespace qcauchy;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("light-cone coordinates") {
    const LightconeCoord in{2.0, 1.0};
    CHECK(in.inside());
    CHECK(std::abs(in.l() - std::sqrt(3.0)) <= 1e-15);
    const LightconeCoord out{1.0, 2.0};
    CHECK_FALSE(out.inside());
    CHECK(std::abs(out.l() - Complex(0.0, std::sqrt(3.0))) <= 1e-15);
    CHECK(LightconeCoord{1.0, -1.0}.onCone());
}

TEST_CASE("B factor limits and the massive kernel inside the cone") {
    CHECK(bFactor(1.0, 0.3, 0.0) == Complex(1.0));
    CHECK(bFactor(1.0, 1.0, 2.0) == Complex(1.0));
    CHECK(std::abs(bFactor(1.0, 0.3, 1e-7) - 1.0) <= 1e-6);
    // outside the cone B = m k K1(m k) with k = sqrt(x^2 - t^2): real, in (0, 1)
    const double k = std::sqrt(3.0);
    CHECK(std::abs(bFactor(1.0, 2.0, 1.5) - 1.5 * k * std::cyl_bessel_k(1, 1.5 * k)) <= 1e-12);
    // inside: conj kernel = (t m / (pi l)) K1(i m l), K1(iy) = -(pi/2)(J1(y) - i Y1(y))
    const double t = 1.0, x = 0.6, m = 2.0, l = std::sqrt(t * t - x * x), y = m * l;
    const Complex k1(-0.5 * kPi * std::cyl_bessel_j(1, y), 0.5 * kPi * std::cyl_neumann(1, y));
    CHECK(std::abs(massiveKernelConj(t, x, m) - t * m / (kPi * l) * k1) <= 1e-12);
}

TEST_CASE("massive pairing through the B factor") {
    const auto inner = TestFunction1D::standardBump(0.1, 0.6);
    CHECK(massiveViaBCheck(1.0, 1.0, inner).residual <= 1e-5);
    const auto g = TestFunction1D::gaussianPacket(0.0, 0.08, 0.0);
    CHECK(massiveViaBCheck(1.0, 2.0, g).residual <= 1e-5);
    const auto ext = massiveViaBCheck(1.0, 1.0, TestFunction1D::standardBump(2.0, 0.5));
    CHECK(ext.exterior);
    CHECK(ext.residual <= 1e-5);
}

TEST_CASE("eikonal asymptotics") {
    const double t = 1.0, m = 100.0;
    auto at = [&](double ml) { return std::sqrt(t * t - (ml / m) * (ml / m)); };
    CHECK(eikonalError(t, at(20.0), m).modulusError <= 1e-2);
    CHECK(eikonalError(t, at(50.0), m).modulusError <= 3e-3);
    // the phase follows the eikonal m l
    const double x1 = 0.3, x2 = 0.5;
    const double l1 = std::sqrt(1.0 - x1 * x1), l2 = std::sqrt(1.0 - x2 * x2);
    const double dphase = std::arg(eikonalAsymptotic(t, x1, m) / eikonalAsymptotic(t, x2, m));
    const double expected = std::remainder(-m * (l1 - l2), 2.0 * kPi);
    CHECK(std::abs(std::remainder(dphase - expected, 2.0 * kPi)) <= 1e-3);
    // first correction is O(1/z): doubling m halves the complex error
    const double e1 = eikonalError(t, 0.4, 40.0).complexError;
    const double e2 = eikonalError(t, 0.4, 80.0).complexError;
    CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.05));
    CHECK_THROWS_AS(eikonalAsymptotic(t, 0.999, 10.0), DomainError);
    CHECK_THROWS_AS(eikonalAsymptotic(t, 1.5, 100.0), DomainError);
}

TEST_CASE("FW unitary tends to gamma^0 like rho / m") {
    const auto rows = fwClassicalLimit({0.3, 0.4, 0.5}, {10.0, 100.0, 1000.0, 10000.0});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i - 1].deviation / rows[i].deviation == doctest::Approx(10.0).epsilon(0.1));
    }
}
