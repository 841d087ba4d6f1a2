#include <doctest.h>

#include <cmath>
#include <numeric>

#include "qcauchy/quadrature.hpp"

using namespace qcauchy;

TEST_CASE("Gauss-Legendre rules integrate polynomials of degree 2n-1 exactly") {
    for (int n : {2, 5, 8, 16, 24}) {
        const auto& rule = quad::gaussLegendre(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        CHECK(std::abs(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0) - 2.0) <= 1e-14);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += rule.weights[static_cast<std::size_t>(i)] * std::pow(rule.nodes[static_cast<std::size_t>(i)], k);
            const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1.0);
            CHECK(std::abs(s - exact) <= 1e-14);
        }
    }
}

TEST_CASE("panel builders cover the interval without gaps") {
    const auto u = quad::uniform(-1.0, 3.0, 8);
    CHECK(u.size() == 8);
    CHECK(u.front().a == -1.0);
    CHECK(u.back().b == 3.0);
    const auto b = quad::fromBreakpoints({2.0, 0.0, 1.0, 1.0}, 0.3);
    CHECK(b.front().a == 0.0);
    CHECK(b.back().b == 2.0);
    for (std::size_t i = 1; i < b.size(); ++i) {
        CHECK(b[i].a == b[i - 1].b);
        CHECK(b[i].b - b[i].a <= 0.3 + 1e-15);
    }
    const auto g = quad::graded(0.0, 1.0, true, 40);
    CHECK(g.front().a == 0.0);
    CHECK(g.back().b == 1.0);
    // sqrt singularity at the graded endpoint
    const double v = quad::integrateReal(g, [](double x) { return 1.0 / std::sqrt(x); }, 16);
    CHECK(std::abs(v - 2.0) <= 1e-6);
}

TEST_CASE("serial and parallel executions agree bit for bit") {
    const auto panels = quad::uniform(-7.0, 9.0, 333);
    auto f = [](double x) { return std::exp(std::complex<double>(-0.1 * x * x, 2.0 * x)); };
    const auto s = quad::integrate(panels, f, 16, quad::Execution::serial);
    const auto p = quad::integrate(panels, f, 16, quad::Execution::parallel);
    CHECK(s == p);
}

TEST_CASE("two-level estimate tracks the true error") {
    const auto panels = quad::uniform(0.0, 1.0, 2);
    auto f = [](double x) { return std::complex<double>(std::exp(x) * std::sin(30.0 * x)); };
    const double exact = (std::exp(1.0) * (std::sin(30.0) - 30.0 * std::cos(30.0)) + 30.0) / 901.0;
    const auto e = quad::integrateWithEstimate(panels, f, 8);
    CHECK(std::abs(e.value.real() - exact) <= e.error);
}
