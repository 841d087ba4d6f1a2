#include "qcauchy/momentum.hpp"

#include <algorithm>
#include <numbers>

#include "qcauchy/errors.hpp"

namespace qcauchy {

namespace {

constexpr double kPi = std::numbers::pi;

// Fallback momentum window for compactly supported probes without a known
// transform: smooth bumps decay faster than any power, slowly.
constexpr double kBumpSpectral = 150.0;

void checkAgreement(Complex coarse, Complex fine, const QuadratureConfig& cfg) {
    const double scale = std::max(std::abs(fine), 1e-300);
    if (std::abs(fine - coarse) > cfg.tolerance * scale && std::abs(fine - coarse) > 1e-14) {
        throw ConvergenceError("oscillatory quadrature: two resolutions disagree");
    }
}

// Largest distance of the probe's support from the origin; psi oscillates at
// this rate in p.
double spatialReach(const TestFunction1D& phi) {
    const auto& s = phi.support();
    return std::max(std::abs(s.lo), std::abs(s.hi));
}

template <class F>
Complex twoResolutions(const quad::Panels& panels, F&& f, const QuadratureConfig& cfg) {
    const Complex coarse = quad::integrate(panels, f, cfg.order, cfg.execution);
    const Complex fine = quad::integrate(quad::bisect(panels), f, cfg.order, cfg.execution);
    checkAgreement(coarse, fine, cfg);
    return fine;
}

}  // namespace

Complex symbol(double m, double t, double rho) { return std::exp(kI * (t * std::sqrt(m * m + rho * rho))); }

Complex symbol(double m, double t, const Vec3& p) { return symbol(m, t, norm(p)); }

Complex ScalarSymbol::operator()(double rho) const { return symbol(m, t, rho); }

Complex ScalarSymbol::operator()(const Vec3& p) const { return symbol(m, t, p); }

Complex pairMultiplierViaParseval(const std::function<Complex(double)>& multiplier, double phaseSpeed,
                                  const TestFunction1D& phi, const QuadratureConfig& cfg) {
    double center = phi.spectralCenter();
    double half = phi.spectralHalfWidth();
    if (half == 0.0) {
        if (!phi.support().compact) throw DomainError("probe has no momentum window");
        center = 0.0;
        half = kBumpSpectral / phi.scale();
    }
    const double lo = center - half;
    const double hi = center + half;
    double width = half * cfg.panelFraction / 2.0;
    const double speed = std::abs(phaseSpeed) + spatialReach(phi);
    if (speed > 0.0) width = std::min(width, kPi / speed);
    std::vector<double> points{lo, hi};
    if (lo < 0.0 && hi > 0.0) points.push_back(0.0);  // kink of |p|
    const auto panels = quad::fromBreakpoints(points, width);
    auto f = [&](double p) { return std::conj(multiplier(p)) * phi.fourier(p); };
    return twoResolutions(panels, f, cfg) / (2.0 * kPi);
}

Complex pairViaParseval(const ScalarSymbol& sym, const TestFunction1D& phi, const QuadratureConfig& cfg) {
    if (sym.dimension != 1) throw DomainError("symbol dimension does not match the probe");
    return pairMultiplierViaParseval([&](double p) { return sym(std::abs(p)); }, sym.t, phi, cfg);
}

Complex pairViaParseval(const ScalarSymbol& sym, const TestFunction3D& phi, const QuadratureConfig& cfg) {
    if (sym.dimension != 3) throw DomainError("symbol dimension does not match the probe");
    const double extent = phi.spectralExtent();
    const double reach = norm(phi.support().center) + phi.support().radius;

    if (phi.isRadial()) {
        std::function<Complex(double)> psi;
        if (phi.hasRadialFourier()) {
            psi = [&](double rho) { return phi.radialFourier(rho); };
        } else {
            // psi(rho) = 4 pi int r^2 f(r) sin(rho r)/(rho r) dr
            psi = [&](double rho) {
                const double w = rho > 0.0 ? std::min(phi.scale() / 2.0, kPi / (2.0 * rho)) : phi.scale() / 2.0;
                const auto panels = quad::fromBreakpoints({0.0, reach}, w);
                return 4.0 * kPi * quad::integrate(panels, [&](double r) {
                    const double s = rho * r == 0.0 ? 1.0 : std::sin(rho * r) / (rho * r);
                    return r * r * phi.profile(r) * s;
                }, 16, quad::Execution::serial);
            };
        }
        const double top = extent > 0.0 ? extent : kBumpSpectral / phi.scale();
        double width = top * cfg.panelFraction / 2.0;
        const double speed = std::abs(sym.t) + reach;
        width = std::min(width, kPi / (4.0 * speed));
        const auto panels = quad::fromBreakpoints({0.0, top}, width);
        auto f = [&](double rho) { return rho * rho * std::conj(sym(rho)) * psi(rho); };
        return twoResolutions(panels, f, cfg) / (2.0 * kPi * kPi);
    }

    if (!phi.hasExactFourier() || extent == 0.0) {
        throw DomainError("non-radial 3-D Parseval pairing needs a closed-form transform");
    }
    // Spherical momentum coordinates: int rho^2 drho * 4 pi * (average over directions).
    const int order = std::max(24, static_cast<int>(std::ceil(2.5 * extent * reach)) + 8);
    auto f = [&](double rho) {
        const auto shell = TestFunction3D::custom([&](const Vec3& p) { return phi.fourier(p); },
                                                  Ball{{0, 0, 0}, extent, false}, 1.0);
        return 4.0 * kPi * rho * rho * std::conj(sym(rho)) * sphericalAverage(shell, rho, order);
    };
    double width = extent * cfg.panelFraction / 2.0;
    width = std::min(width, kPi / (4.0 * (std::abs(sym.t) + reach)));
    const auto panels = quad::fromBreakpoints({0.0, extent}, width);
    return twoResolutions(panels, f, cfg) / (8.0 * kPi * kPi * kPi);
}

}  // namespace qcauchy
