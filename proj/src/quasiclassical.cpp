#include "qcauchy/quasiclassical.hpp"

#include <numbers>

#include "qcauchy/errors.hpp"
#include "qcauchy/relativistic.hpp"
#include "qcauchy/specfun.hpp"

namespace qcauchy {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex LightconeCoord::l() const {
    const double l2 = (t - x) * (t + x);
    return l2 >= 0.0 ? Complex{std::sqrt(l2), 0.0} : Complex{0.0, std::sqrt(-l2)};
}

Complex LightconeCoord::w() const {
    const double l2 = (t - x) * (t + x);
    return l2 >= 0.0 ? Complex{0.0, -std::sqrt(l2)} : Complex{std::sqrt(-l2), 0.0};
}

Complex bFactor(double t, double x, double m) {
    if (!(t > 0.0)) throw DomainError("t must be positive");
    if (!(m >= 0.0)) throw DomainError("mass must be nonnegative");
    const LightconeCoord c{t, x};
    if (m == 0.0 || c.onCone()) return 1.0;
    const Complex z = m * c.w();
    if (z == 0.0) return 1.0;
    return specfun::zK1(specfun::KernelArg::from(z));
}

Complex massiveKernelConj(double t, double x, double m) {
    if (std::abs(x) == t) throw PoleError("massive kernel is singular on the light cone");
    return -kI / kPi * t / ((t - x) * (t + x)) * std::conj(bFactor(t, x, m));
}

BCheck massiveViaBCheck(double t, double m, const TestFunction1D& phi, const RegularizationConfig& cfg) {
    BCheck out{};
    const auto& s = phi.support();
    out.exterior = s.lo >= t || s.hi <= -t;
    out.massive = pairCauchyMassive1D(t, m, phi, cfg).total;
    const auto weighted = phi.times([=](double x) { return std::conj(bFactor(t, x, m)); }, 1.0 / m);
    out.viaB = pairCauchy1D(t, weighted, cfg).total;
    if (out.exterior) {
        const double width = std::min(phi.scale() * cfg.panelFraction, 1.0 / m);
        const auto panels = quad::fromBreakpoints({s.lo, s.hi}, width);
        out.direct = quad::integrate(quad::bisect(panels), [&](double x) { return massiveKernelConj(t, x, m) * phi(x); },
                                     cfg.order, cfg.execution);
        out.residual = std::abs(out.direct - out.massive);
    } else {
        out.residual = std::abs(out.viaB - out.massive);
    }
    return out;
}

Complex eikonalAsymptotic(double t, double x, double m) {
    const LightconeCoord c{t, x};
    if (!c.inside()) throw DomainError("eikonal asymptotics need a point inside the light cone");
    const double l = c.l().real();
    if (m * l < 20.0 * (1.0 - 1e-12)) throw DomainError("eikonal regime requires m * l >= 20");
    const Complex z = kI * (m * l);
    return t * m / (kPi * l) * std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
}

EikonalError eikonalError(double t, double x, double m) {
    EikonalError e{};
    e.exact = massiveKernelConj(t, x, m);
    e.asymptotic = eikonalAsymptotic(t, x, m);
    e.modulusError = std::abs(std::abs(e.asymptotic) - std::abs(e.exact)) / std::abs(e.exact);
    e.complexError = std::abs(e.asymptotic - e.exact) / std::abs(e.exact);
    return e;
}

std::vector<ClassicalLimitRow> fwClassicalLimit(const Vec3& p, const std::vector<double>& masses) {
    std::vector<ClassicalLimitRow> rows;
    rows.reserve(masses.size());
    const Mat4& g0 = diracBasis().gamma[0];
    for (double m : masses) {
        rows.push_back({m, maxAbs(fwUnitary(p, m).matrix - g0)});
    }
    return rows;
}

}  // namespace qcauchy
