#include "qcauchy/specfun.hpp"

#include <quadmath.h>

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qcauchy/errors.hpp"
#include "qcauchy/quadrature.hpp"

namespace qcauchy::specfun {

namespace {

using Quad = __float128;

constexpr double kPi = std::numbers::pi;
const Quad kEulerGammaQ = 0.577215664901532860606512090082402431Q;
const Quad kPiQ = M_PIq;

void requireOrder(int order) {
    if (order < 0 || order > 2) throw DomainError("specfun: order must be 0, 1 or 2");
}

void requirePositiveFinite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite argument");
    if (!(x > 0.0)) throw DomainError(std::string(what) + ": argument must be positive");
}

Quad factorialQ(int n) {
    Quad f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Sums of the ascending series shared by J/Y (sign = -1) and I/K (sign = +1):
//   plain   = sum_k q^k / (k! (n+k)!)
//   digamma = sum_k {psi(k+1) + psi(n+k+1)} q^k / (k! (n+k)!)
// with q = sign * x^2 / 4.
struct AscendingSums {
    Quad plain = 0;
    Quad digamma = 0;
};

AscendingSums ascendingSums(int n, Quad x, int sign) {
    const Quad q = sign * x * x / 4;
    Quad term = 1 / factorialQ(n);
    Quad harmonicK = 0;
    Quad harmonicNK = 0;
    for (int j = 1; j <= n; ++j) harmonicNK += Quad(1) / j;
    AscendingSums s;
    for (int k = 0; k < 400; ++k) {
        if (k > 0) {
            term *= q / (Quad(k) * Quad(n + k));
            harmonicK += Quad(1) / k;
            harmonicNK += Quad(1) / (n + k);
        }
        const Quad psiSum = -2 * kEulerGammaQ + harmonicK + harmonicNK;
        s.plain += term;
        s.digamma += psiSum * term;
        if (k > 4 && fabsq(term) * (1 + fabsq(psiSum)) < 1e-40Q * (fabsq(s.plain) + fabsq(s.digamma))) break;
    }
    return s;
}

// sum_{k<n} (n-k-1)!/k! * q^k
Quad finiteSum(int n, Quad q) {
    Quad s = 0;
    Quad qk = 1;
    for (int k = 0; k < n; ++k) {
        s += factorialQ(n - k - 1) / factorialQ(k) * qk;
        qk *= q;
    }
    return s;
}

Quad powQ(Quad base, int n) {
    Quad r = 1;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

// Gauss-Legendre panels for the integral representations; built once.
const quad::Panels& hankelPanels() {
    static const quad::Panels panels = quad::uniform(0.0, 7.5, 15);
    return panels;
}

const quad::Panels& laplacePanels() {
    static const quad::Panels panels = quad::uniform(0.0, 1.0, 12);
    return panels;
}

constexpr int kIntegralOrder = 24;

}  // namespace

// ---------------------------------------------------------------------------
// KernelArg

Regime regimeFor(double modulus) {
    if (modulus >= 0.5 * kCrossover && modulus <= 2.0 * kCrossover) return Regime::crossover;
    return modulus < kCrossover ? Regime::series : Regime::asymptotic;
}

KernelArg::KernelArg(std::complex<double> z) : value_(z), regime_(regimeFor(std::abs(z))) {}

KernelArg KernelArg::real(double x) { return from({x, 0.0}); }

KernelArg KernelArg::imaginary(double y) { return from({0.0, y}); }

KernelArg KernelArg::from(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("KernelArg: non-finite value");
    if (z.real() != 0.0 && z.imag() != 0.0) throw DomainError("KernelArg: value off the real and imaginary axes");
    return KernelArg(z);
}

// ---------------------------------------------------------------------------
// Branches

namespace branch {

BesselPair seriesJY(int order, double xd) {
    requireOrder(order);
    requirePositiveFinite(xd, "seriesJY");
    const Quad x = xd;
    const Quad half = x / 2;
    const Quad halfPow = powQ(half, order);
    const auto sums = ascendingSums(order, x, -1);
    const Quad j = halfPow * sums.plain;
    Quad y = 2 / kPiQ * logq(half) * j - halfPow / kPiQ * sums.digamma;
    if (order > 0) y -= finiteSum(order, x * x / 4) / (kPiQ * powQ(half, order));
    return {static_cast<double>(j), static_cast<double>(y)};
}

double seriesXY1(double xd) {
    requirePositiveFinite(xd, "seriesXY1");
    const Quad x = xd;
    const Quad half = x / 2;
    const auto sums = ascendingSums(1, x, -1);
    const Quad j = half * sums.plain;
    const Quad xy = -2 / kPiQ + x * (2 / kPiQ * logq(half) * j - half / kPiQ * sums.digamma);
    return static_cast<double>(xy);
}

double seriesK(int order, double xd) {
    requireOrder(order);
    requirePositiveFinite(xd, "seriesK");
    const Quad x = xd;
    const Quad half = x / 2;
    const Quad halfPow = powQ(half, order);
    const auto sums = ascendingSums(order, x, +1);
    const Quad i = halfPow * sums.plain;
    const Quad sign = (order % 2 == 0) ? 1 : -1;
    Quad k = -sign * logq(half) * i + sign * halfPow / 2 * sums.digamma;
    if (order > 0) k += finiteSum(order, -x * x / 4) / (2 * powQ(half, order));
    return static_cast<double>(k);
}

double seriesXK1(double xd) {
    requirePositiveFinite(xd, "seriesXK1");
    const Quad x = xd;
    const Quad half = x / 2;
    const auto sums = ascendingSums(1, x, +1);
    const Quad i = half * sums.plain;
    const Quad xk = 1 + x * (logq(half) * i - half / 2 * sums.digamma);
    return static_cast<double>(xk);
}

// H^(1)_nu(x) = sqrt(2/(pi x)) e^{i(x - nu pi/2 - pi/4)} / Gamma(nu + 1/2)
//               * int_0^inf e^{-u} u^{nu-1/2} (1 + i u/(2x))^{nu-1/2} du,
// integrated in v = sqrt(u) so the integrand is smooth at the origin.
BesselPair hankelJY(int order, double x) {
    requireOrder(order);
    requirePositiveFinite(x, "hankelJY");
    const double nu = order;
    const auto integrand = [&](double v) {
        const double v2 = v * v;
        const std::complex<double> base(1.0, v2 / (2.0 * x));
        return 2.0 * std::pow(v2, nu) * std::exp(-v2) * std::pow(base, nu - 0.5);
    };
    const auto integral = quad::integrate(hankelPanels(), integrand, kIntegralOrder, quad::Execution::serial);
    const double gammaHalf = std::tgamma(nu + 0.5);
    const double phase = x - nu * kPi / 2.0 - kPi / 4.0;
    const auto h = std::sqrt(2.0 / (kPi * x)) * std::polar(1.0, phase) * integral / gammaHalf;
    return {h.real(), h.imag()};
}

// K_nu(x) = e^{-x} int_0^inf exp(-2x sinh^2(u/2)) cosh(nu u) du.
double laplaceK(int order, double x) {
    requireOrder(order);
    requirePositiveFinite(x, "laplaceK");
    const double umax = std::acosh(1.0 + 45.0 / x);
    const auto integrand = [&](double s) {
        const double u = umax * s;
        const double sh = std::sinh(0.5 * u);
        return std::exp(-2.0 * x * sh * sh) * std::cosh(order * u);
    };
    const double integral = umax * quad::integrateReal(laplacePanels(), integrand, kIntegralOrder,
                                                        quad::Execution::serial);
    return std::exp(-x) * integral;
}

}  // namespace branch

// ---------------------------------------------------------------------------
// Public evaluators

BesselPair besselJY(int order, double x) {
    requireOrder(order);
    requirePositiveFinite(x, "besselJY");
    return x <= kCrossover ? branch::seriesJY(order, x) : branch::hankelJY(order, x);
}

double besselJ(int order, double x) { return besselJY(order, x).j; }

double besselY(int order, double x) { return besselJY(order, x).y; }

double macdonaldK(int order, double x) {
    requireOrder(order);
    requirePositiveFinite(x, "macdonaldK");
    return x <= kCrossover ? branch::seriesK(order, x) : branch::laplaceK(order, x);
}

namespace {

// i^(nu+1) for nu = 0, 1, 2
std::complex<double> iPower(int order) {
    static const std::array<std::complex<double>, 3> table{{{0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}}};
    return table[static_cast<std::size_t>(order)];
}

void requireUsable(const KernelArg& z) {
    if (z.value() == std::complex<double>(0.0, 0.0)) throw PoleError("Macdonald function: pole at z = 0");
    if (z.onRealAxis() && z.value().real() < 0.0)
        throw DomainError("Macdonald function: negative real axis is the branch cut");
}

}  // namespace

std::complex<double> macdonaldK(int order, const KernelArg& z) {
    requireOrder(order);
    requireUsable(z);
    if (z.onRealAxis()) return macdonaldK(order, z.value().real());
    const double y = z.value().imag();
    const auto jy = besselJY(order, std::abs(y));
    // K(-i a) = (pi/2) i^(nu+1) (J + i Y)
    const auto kNeg = (kPi / 2.0) * iPower(order) * std::complex<double>(jy.j, jy.y);
    return y < 0.0 ? kNeg : std::conj(kNeg);
}

std::complex<double> zK1(const KernelArg& z) {
    requireUsable(z);
    if (z.onRealAxis()) {
        const double x = z.value().real();
        return x <= kCrossover ? branch::seriesXK1(x) : x * branch::laplaceK(1, x);
    }
    const double y = z.value().imag();
    const double a = std::abs(y);
    double aj = 0.0;
    double ay = 0.0;
    if (a <= kCrossover) {
        aj = a * branch::seriesJY(1, a).j;
        ay = branch::seriesXY1(a);
    } else {
        const auto jy = branch::hankelJY(1, a);
        aj = a * jy.j;
        ay = a * jy.y;
    }
    // (-i a) K1(-i a) = (pi/2) (-a Y1(a) + i a J1(a))
    const std::complex<double> neg(-kPi / 2.0 * ay, kPi / 2.0 * aj);
    return y < 0.0 ? neg : std::conj(neg);
}

namespace {

// Shared tail of the order-2 logarithmic series:
//   (y/2)^2 sum_k [psi(k+1) + psi(k+3)] (sign y^2/4)^k / (k! (k+2)!)
double order2DigammaSum(double y, double sign) {
    constexpr double kEuler = 0.57721566490153286061;
    const double q = sign * 0.25 * y * y;
    double term = 0.5;  // 1 / (0! 2!)
    double h1 = 0.0;    // H_k
    double h3 = 1.5;    // H_{k+2}
    double sum = 0.0;
    for (int k = 0; k < 60; ++k) {
        const double add = (h1 + h3 - 2.0 * kEuler) * term;
        sum += add;
        if (k > 2 && std::abs(add) < 1e-18 * std::abs(sum)) break;
        term *= q / ((k + 1.0) * (k + 3.0));
        h1 += 1.0 / (k + 1.0);
        h3 += 1.0 / (k + 3.0);
    }
    return 0.25 * y * y * sum;
}

constexpr double kPiD = 3.14159265358979323846;

}  // namespace

double besselY2Remainder(double y) {
    requirePositiveFinite(y, "besselY2Remainder");
    if (y > 2.0) return besselY(2, y) + 4.0 / (kPiD * y * y) + 1.0 / kPiD;
    return (2.0 / kPiD) * std::log(0.5 * y) * besselJ(2, y) - order2DigammaSum(y, -1.0) / kPiD;
}

double macdonaldK2Remainder(double y) {
    requirePositiveFinite(y, "macdonaldK2Remainder");
    if (y > 2.0) return macdonaldK(2, y) - 2.0 / (y * y) + 0.5;
    // I_2(y) by its series
    double term = 0.125 * y * y;
    double i2 = 0.0;
    for (int k = 0; k < 40; ++k) {
        i2 += term;
        term *= 0.25 * y * y / ((k + 1.0) * (k + 3.0));
    }
    return -std::log(0.5 * y) * i2 + 0.5 * order2DigammaSum(y, 1.0);
}

}  // namespace qcauchy::specfun
