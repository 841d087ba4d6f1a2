#include "qcauchy/relativistic.hpp"

#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "qcauchy/errors.hpp"
#include "qcauchy/quadrature.hpp"
#include "qcauchy/specfun.hpp"

namespace qcauchy {

namespace {

constexpr double kPi = std::numbers::pi;

DiracBasis makeDiracBasis() {
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    std::array<Eigen::Matrix2cd, 3> pauli;
    pauli[0] << 0, 1, 1, 0;
    pauli[1] << 0, Complex(0, -1), Complex(0, 1), 0;
    pauli[2] << 1, 0, 0, -1;

    DiracBasis b;
    b.gamma[0] = Mat4::Zero();
    b.gamma[0].topLeftCorner<2, 2>() = id;
    b.gamma[0].bottomRightCorner<2, 2>() = -id;
    for (int i = 0; i < 3; ++i) {
        Mat4 g = Mat4::Zero();
        g.topRightCorner<2, 2>() = pauli[static_cast<std::size_t>(i)];
        g.bottomLeftCorner<2, 2>() = -pauli[static_cast<std::size_t>(i)];
        b.gamma[static_cast<std::size_t>(i + 1)] = g;
    }
    return b;
}

double energy(const Vec3& p, double m) { return std::sqrt(m * m + dot(p, p)); }

Mat4 timeExp(double e, double t) {
    Mat4 d = Mat4::Zero();
    d(0, 0) = d(1, 1) = std::exp(kI * (t * e));
    d(2, 2) = d(3, 3) = std::exp(-kI * (t * e));
    return d;
}

}  // namespace

const DiracBasis& diracBasis() {
    static const DiracBasis basis = makeDiracBasis();
    return basis;
}

Mat4 gammaDot(const Vec3& p) {
    const auto& g = diracBasis().gamma;
    return p[0] * g[1] + p[1] * g[2] + p[2] * g[3];
}

Mat4 diracHamiltonian(const Vec3& p, double m) {
    const Mat4& g0 = diracBasis().gamma[0];
    return g0 * gammaDot(p) + m * g0;
}

FWUnitary fwUnitary(const Vec3& p, double m) {
    if (m < 0.0) throw DomainError("mass must be nonnegative");
    const double e = energy(p, m);
    if (e == 0.0) throw DomainError("Foldy-Wouthuysen unitary undefined at m = 0, p = 0");
    const Mat4& g0 = diracBasis().gamma[0];
    const Mat4 inner = gammaDot(p) + (m + e) * Mat4::Identity();
    return {p, m, e, g0 * inner / std::sqrt(2.0 * e * (m + e))};
}

Mat4 diracSymbol(const Vec3& p, double m, double t) {
    const auto fw = fwUnitary(p, m);
    return fw.matrix * timeExp(fw.energy, t) * fw.matrix;
}

Mat4 diracSymbolExp(const Vec3& p, double m, double t) {
    const Mat4 a = kI * t * diracHamiltonian(p, m);
    return a.exp();
}

Mat4 pauliJordanRoute(const Vec3& p, double m, double t, int sigma) {
    const double e = energy(p, m);
    const Mat4& g0 = diracBasis().gamma[0];
    // G = sin(tE)/E, dG/dt = cos(tE); E = 0 is the t-linear limit.
    const double g = e > 0.0 ? std::sin(t * e) / e : t;
    const double dg = std::cos(t * e);
    return g0 * (g0 * dg + kI * static_cast<double>(sigma) * gammaDot(p) * g + kI * m * g * Mat4::Identity());
}

PauliJordanCheck pauliJordanSymbolCheck(const Vec3& p, double m, double t) {
    const Mat4 u = diracSymbol(p, m, t);
    return {maxAbs(u - pauliJordanRoute(p, m, t, +1)), maxAbs(u - pauliJordanRoute(p, m, t, -1)), +1};
}

double kleinGordonResidual(double e, double t) {
    if (!(e > 0.0)) throw DomainError("energy must be positive");
    const double g = std::sin(t * e) / e;
    const double d2g = -e * std::sin(t * e);
    const double g0 = std::sin(0.0) / e;
    const double dg0 = std::cos(0.0);
    return std::max({std::abs(d2g + e * e * g), std::abs(g0), std::abs(dg0 - 1.0)});
}

J1Convention j1ConventionCheck(double t, double rho, double m, double tolerance) {
    if (!(t > 0.0) || !(rho > 0.0) || !(m > 0.0)) throw DomainError("t, rho and m must be positive");
    const double e = std::sqrt(m * m + rho * rho);
    const double lhs = std::sin(t * e) / e - std::sin(t * rho) / rho;
    // r = t sin(theta): int_0^t r J1(a l)/l sin(rho r) dr = int t sin(theta) J1(a t cos(theta)) sin(rho t sin(theta))
    auto transform = [&](double a) {
        auto f = [&](double th) {
            const double c = std::cos(th);
            const double j = c > 0.0 ? specfun::besselJ1(a * t * c) : 0.0;
            return t * std::sin(th) * j * std::sin(rho * t * std::sin(th));
        };
        const int panels = 8 + static_cast<int>(std::ceil((a + rho) * t));
        return -(m / rho) * quad::integrateReal(quad::uniform(0.0, kPi / 2.0, panels), f, 20, quad::Execution::serial);
    };
    const double scale = std::max(std::abs(lhs), 1e-300);
    J1Convention out{};
    out.massArgumentResidual = std::abs(lhs - transform(m)) / scale;
    out.bareArgumentResidual = std::abs(lhs - transform(1.0)) / scale;
    const bool massOk = out.massArgumentResidual <= tolerance;
    const bool bareOk = out.bareArgumentResidual <= tolerance;
    out.selected = massOk && bareOk ? "both" : massOk ? "m*l" : bareOk ? "l" : "none";
    return out;
}

PhotonSpin photonSpinMatrices() {
    PhotonSpin s;
    for (int j = 0; j < 3; ++j) {
        Mat3 m = Mat3::Zero();
        for (int k = 0; k < 3; ++k) {
            for (int l = 0; l < 3; ++l) {
                // Levi-Civita symbol epsilon_{jkl}
                const int eps = (j - k) * (k - l) * (l - j) / 2;
                m(k, l) = Complex(0.0, -static_cast<double>(eps));
            }
        }
        s.s[static_cast<std::size_t>(j)] = m;
    }
    return s;
}

Mat3 spinDot(const Vec3& p) {
    const auto s = photonSpinMatrices();
    return p[0] * s.s[0] + p[1] * s.s[1] + p[2] * s.s[2];
}

HelicityFrame helicityDiagonalizer(const Vec3& p) {
    const double rho = norm(p);
    if (!(rho > 0.0)) throw DomainError("helicity frame undefined at p = 0");
    const double theta = std::atan2(std::hypot(p[0], p[1]), p[2]);
    const double phi = std::atan2(p[1], p[0]);  // 0 on the axis
    const Eigen::Vector3d eTheta(std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), -std::sin(theta));
    const Eigen::Vector3d ePhi(-std::sin(phi), std::cos(phi), 0.0);
    const Eigen::Vector3d eR(p[0] / rho, p[1] / rho, p[2] / rho);

    const double r2 = 1.0 / std::sqrt(2.0);
    const Eigen::Vector3cd plus = r2 * (eTheta.cast<Complex>() + kI * ePhi.cast<Complex>());
    const Eigen::Vector3cd minus = r2 * (eTheta.cast<Complex>() - kI * ePhi.cast<Complex>());

    HelicityFrame f{p, Mat3::Zero(), "rows (e_theta -+ i e_phi)/sqrt2, p/rho; azimuth 0 on the axis"};
    f.q.row(0) = plus.adjoint();
    f.q.row(1) = minus.adjoint();
    f.q.row(2) = eR.cast<Complex>().transpose();
    return f;
}

Mat3 photonSymbol(const Vec3& p, double t) {
    const double rho = norm(p);
    if (rho == 0.0) return Mat3::Identity();
    const auto f = helicityDiagonalizer(p);
    Mat3 d = Mat3::Zero();
    d(0, 0) = std::exp(-kI * (t * rho));
    d(1, 1) = std::exp(kI * (t * rho));
    d(2, 2) = 1.0;
    return f.q.adjoint() * d * f.q;
}

}  // namespace qcauchy
