#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "qcauchy/errors.hpp"
#include "qcauchy/relativistic.hpp"

using namespace qcauchy;

namespace {

std::vector<Vec3> randomMomenta(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<Vec3> out;
    for (int i = 0; i < count; ++i) out.push_back({u(rng), u(rng), u(rng)});
    return out;
}

// Greedy multiset match of eigenvalues.
double spectrumMismatch(std::vector<Complex> got, std::vector<Complex> want) {
    double worst = 0.0;
    for (const auto& w : want) {
        auto it = std::min_element(got.begin(), got.end(),
                                   [&](const Complex& a, const Complex& b) { return std::abs(a - w) < std::abs(b - w); });
        worst = std::max(worst, std::abs(*it - w));
        got.erase(it);
    }
    return worst;
}

template <class M>
std::vector<Complex> eigenvalues(const M& m) {
    Eigen::ComplexEigenSolver<M> es(m);
    const auto v = es.eigenvalues();
    return std::vector<Complex>(v.data(), v.data() + v.size());
}

}  // namespace

TEST_CASE("Dirac gamma matrices satisfy the Clifford relations exactly") {
    const auto& g = diracBasis().gamma;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const double eta = mu != nu ? 0.0 : (mu == 0 ? 2.0 : -2.0);
            const Mat4 a = g[mu] * g[nu] + g[nu] * g[mu];
            CHECK(maxAbs(a - eta * Mat4::Identity()) == 0.0);
        }
    }
}

TEST_CASE("FW unitary is Hermitian, involutive and diagonalizes H") {
    for (double m : {0.3, 1.0, 4.0}) {
        for (const auto& p : randomMomenta(40, 3)) {
            const auto fw = fwUnitary(p, m);
            const Mat4& T = fw.matrix;
            CHECK(maxAbs(T - T.adjoint()) <= 1e-12);
            CHECK(maxAbs(T * T - Mat4::Identity()) <= 1e-12);
            CHECK(maxAbs(T.adjoint() * T - Mat4::Identity()) <= 1e-12);
            CHECK(maxAbs(T * diracHamiltonian(p, m) * T - fw.energy * diracBasis().gamma[0]) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(fwUnitary({0, 0, 0}, 0.0), DomainError);
}

TEST_CASE("Dirac propagator symbol: FW route, exponential route and spectrum") {
    for (const auto& p : randomMomenta(20, 5)) {
        const double m = 1.3, t = 0.7;
        const Mat4 u = diracSymbol(p, m, t);
        CHECK(maxAbs(u - diracSymbolExp(p, m, t)) <= 1e-11);
        CHECK(maxAbs(u.adjoint() * u - Mat4::Identity()) <= 1e-12);
        const double e = std::sqrt(m * m + dot(p, p));
        const Complex ep = std::exp(Complex(0.0, t * e));
        CHECK(spectrumMismatch(eigenvalues(u), {ep, ep, std::conj(ep), std::conj(ep)}) <= 1e-10);
    }
}

TEST_CASE("Klein-Gordon route reproduces the Dirac symbol with sigma = +1 only") {
    for (const auto& p : randomMomenta(20, 9)) {
        const auto c = pauliJordanSymbolCheck(p, 0.8, 1.1);
        CHECK(c.sigma == 1);
        CHECK(c.residual <= 1e-10);
        CHECK(c.alternativeResidual > 1e-3);
    }
    CHECK(kleinGordonResidual(1.7, 0.4) <= 1e-12);
}

TEST_CASE("J1 argument convention: the mass-argument form is selected") {
    for (double rho : {0.5, 1.3, 3.0}) {
        const auto j = j1ConventionCheck(1.0, rho, 2.0);
        CHECK(j.selected == "m*l");
        CHECK(j.massArgumentResidual <= 1e-4);
        CHECK(j.bareArgumentResidual > 1e-4);
    }
}

TEST_CASE("photon spin matrices and helicity frame") {
    const auto s = photonSpinMatrices().s;
    for (int j = 0; j < 3; ++j) {
        const int k = (j + 1) % 3, l = (j + 2) % 3;
        CHECK(maxAbs(s[j] * s[k] - s[k] * s[j] - Complex(0.0, 1.0) * s[l]) == 0.0);
        CHECK(maxAbs(s[j] - s[j].adjoint()) == 0.0);
    }
    // axis-aligned closed form
    const auto f = helicityDiagonalizer({0.0, 0.0, 2.0});
    Mat3 d = Mat3::Zero();
    d(0, 0) = 2.0;
    d(1, 1) = -2.0;
    CHECK(maxAbs(f.q * spinDot({0.0, 0.0, 2.0}) * f.q.adjoint() - d) <= 1e-14);
    for (const auto& p : randomMomenta(30, 13)) {
        const double rho = norm(p);
        const Mat3 q = helicityDiagonalizer(p).q;
        Mat3 e = Mat3::Zero();
        e(0, 0) = rho;
        e(1, 1) = -rho;
        CHECK(maxAbs(q * spinDot(p) * q.adjoint() - e) <= 1e-12);
        CHECK(maxAbs(q * q.adjoint() - Mat3::Identity()) <= 1e-13);
        // rotation about z keeps the spectrum ordering
        const double c = std::cos(0.8), sn = std::sin(0.8);
        const Vec3 pr{c * p[0] - sn * p[1], sn * p[0] + c * p[1], p[2]};
        const Mat3 qr = helicityDiagonalizer(pr).q;
        CHECK(maxAbs(qr * spinDot(pr) * qr.adjoint() - e) <= 1e-12);
    }
    CHECK_THROWS_AS(helicityDiagonalizer({0.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("photon symbol: unitarity, spectrum, identity cases and evolution order") {
    CHECK(photonSymbol({0, 0, 0}, 1.0) == Mat3::Identity());
    CHECK(maxAbs(photonSymbol({0.3, 0.2, -0.1}, 0.0) - Mat3::Identity()) <= 1e-15);
    for (const auto& p : randomMomenta(20, 17)) {
        const double t = 0.9, rho = norm(p);
        const Mat3 m = photonSymbol(p, t);
        CHECK(maxAbs(m.adjoint() * m - Mat3::Identity()) <= 1e-12);
        const Complex e = std::exp(Complex(0.0, -t * rho));
        CHECK(spectrumMismatch(eigenvalues(m), {e, std::conj(e), 1.0}) <= 1e-10);
    }
    const Vec3 p{0.3, -0.5, 0.8};
    auto defect = [&](double h) {
        const double t = 1.0;
        return maxAbs(Complex(0.0, 1.0) * (photonSymbol(p, t + h) - photonSymbol(p, t - h)) / (2.0 * h) -
                      spinDot(p) * photonSymbol(p, t));
    };
    CHECK(defect(1e-2) / defect(5e-3) == doctest::Approx(4.0).epsilon(0.05));
}
