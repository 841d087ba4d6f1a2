#include "qcauchy/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qcauchy/errors.hpp"
#include "qcauchy/quadrature.hpp"
#include "qcauchy/quasiclassical.hpp"

namespace qcauchy {

namespace {

constexpr double kNoiseFloor = 1e-11;
constexpr int kTailOctaves = 14;
constexpr double kChebyshevPerScale = 4.0;

double probeScale(double scale, const RegularizationConfig& cfg) { return scale * cfg.panelFraction; }

// conj of the regular kernel away from the light cone
Complex regularKernel(double t, double x, double m) {
    return m > 0.0 ? massiveKernelConj(t, x, m) : -kI / std::numbers::pi * t / ((t - x) * (t + x));
}

PairingResult pairAt(double t, double m, const TestFunction1D& phi, const RegularizationConfig& cfg) {
    return m > 0.0 ? pairCauchyMassive1D(t, m, phi, cfg) : pairCauchy1D(t, phi, cfg);
}

// Barycentric interpolation on the Chebyshev points of [-half, half].
class Chebyshev {
public:
    Chebyshev() = default;
    Chebyshev(double half, int degree, const std::function<Complex(double)>& f) {
        nodes_.resize(static_cast<std::size_t>(degree) + 1);
        values_.resize(nodes_.size());
        const auto n = static_cast<std::ptrdiff_t>(nodes_.size());
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            nodes_[static_cast<std::size_t>(j)] = half * std::cos(std::numbers::pi * static_cast<double>(j) / degree);
        }
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            values_[static_cast<std::size_t>(j)] = f(nodes_[static_cast<std::size_t>(j)]);
        }
    }

    Complex operator()(double x) const {
        Complex num{};
        double den = 0.0;
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            const double d = x - nodes_[j];
            if (d == 0.0) return values_[j];
            double w = (j % 2 == 0 ? 1.0 : -1.0) / d;
            if (j == 0 || j + 1 == nodes_.size()) w *= 0.5;
            num += w * values_[j];
            den += w;
        }
        return num / den;
    }

private:
    std::vector<double> nodes_;
    std::vector<Complex> values_;
};

int chebyshevDegree(double half, double scale) {
    return std::clamp(static_cast<int>(std::ceil(kChebyshevPerScale * half / scale)), 32, 512);
}

}  // namespace

Partition Partition::fromBreakpoints(std::vector<double> breakpoints) {
    if (breakpoints.size() < 2) throw DomainError("partition needs at least one step");
    if (breakpoints.front() != 0.0) throw DomainError("partition must start at 0");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > breakpoints[i - 1]) || !std::isfinite(breakpoints[i])) {
            throw DomainError("partition breakpoints must be strictly increasing");
        }
    }
    Partition p;
    p.breakpoints_ = std::move(breakpoints);
    return p;
}

Partition Partition::fromIncrements(const std::vector<double>& increments) {
    std::vector<double> b{0.0};
    for (double d : increments) b.push_back(b.back() + d);
    return fromBreakpoints(std::move(b));
}

Partition Partition::uniform(double t, int n) {
    if (n < 1) throw DomainError("partition needs at least one step");
    std::vector<double> b(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) b[static_cast<std::size_t>(i)] = t * i / n;
    b.back() = t;
    return fromBreakpoints(std::move(b));
}

std::vector<double> Partition::increments() const {
    std::vector<double> d;
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) d.push_back(breakpoints_[i] - breakpoints_[i - 1]);
    return d;
}

double semigroupSymbolCheck(double m, const Partition& part, double p) {
    Complex prod{1.0, 0.0};
    for (double dt : part.increments()) prod *= symbol(m, dt, p);
    return std::abs(prod - symbol(m, part.total(), p));
}

double semigroupSymbolCheck(double m, const Partition& part, const Vec3& p) {
    return semigroupSymbolCheck(m, part, norm(p));
}

CoordinateSemigroup semigroupCoordinateCheck(double m, const Partition& part, const TestFunction1D& phi,
                                             const RegularizationConfig& cfg) {
    if (part.size() != 2) throw DomainError("coordinate semigroup check needs n = 2");
    if (m < 0.0) throw DomainError("mass must be nonnegative");
    const auto dt = part.increments();
    const double t1 = dt[0];
    const double t2 = dt[1];

    // Inner functional applied to phi(u + .)
    auto inner = [&](double u) { return pairAt(t2, m, phi.shifted(u), cfg); };

    CoordinateSemigroup out{};
    for (double s1 : {t1, -t1}) {
        for (double s2 : {t2, -t2}) out.deltaDelta += 0.25 * phi(s1 + s2);
    }
    out.deltaRegular = 0.5 * (inner(t1).regular_part + inner(-t1).regular_part);
    out.regularDelta = pairAt(t1, m, TestFunction1D::custom(
                                             [&](double u) { return 0.5 * (phi(u + t2) + phi(u - t2)); },
                                             {phi.support().lo - t2, phi.support().hi + t2, phi.support().compact},
                                             phi.scale()),
                              cfg)
                           .regular_part;

    // G(u) = regular part of the inner functional. Near the support it is a
    // full pairing; further out the inner kernel is smooth and G is a plain
    // integral, which keeps the outer tail cheap.
    const Support1D s = phi.support();
    const double reach = std::max(std::abs(s.lo), std::abs(s.hi));
    const double near = reach + t1 + t2 + 4.0 * phi.scale();
    // Massive inner pairings are costly; G is then sampled once on Chebyshev
    // points and interpolated.
    std::function<Complex(double)> gValue = [&](double u) { return inner(u).regular_part; };
    Chebyshev cheb;
    if (m > 0.0) {
        cheb = Chebyshev(near, chebyshevDegree(near, phi.scale()), gValue);
        gValue = [&](double u) { return cheb(u); };
    }
    auto gNear = TestFunction1D::custom([&](double u) { return std::abs(u) > near ? Complex{} : gValue(u); },
                                        {-near, near, false}, phi.scale());
    RegularizationConfig outer = cfg;
    outer.cutoff = 0.0;
    out.regularRegular = pairAt(t1, m, gNear, outer).regular_part;

    const auto support = quad::fromBreakpoints({s.lo, s.hi}, probeScale(phi.scale(), cfg));
    auto gFar = [&](double u) {
        return quad::integrate(support, [&](double x) { return regularKernel(t2, x - u, m) * phi(x); }, cfg.order,
                               quad::Execution::serial);
    };
    quad::Panels tail;
    for (int k = 0; k < kTailOctaves; ++k) {
        const double a = near * std::ldexp(1.0, k);
        tail.push_back({a, 2.0 * a});
        tail.push_back({-2.0 * a, -a});
    }
    out.regularRegular += quad::integrate(tail, [&](double u) { return regularKernel(t1, u, m) * gFar(u); },
                                          cfg.order, cfg.execution);

    out.convolution = out.deltaDelta + out.deltaRegular + out.regularDelta + out.regularRegular;
    out.direct = pairAt(part.total(), m, phi, cfg).total;
    out.residual = std::abs(out.convolution - out.direct);
    return out;
}

EvolutionCheck evolutionEquationCheck(double t, const TestFunction1D& phi, double h, const RegularizationConfig& cfg) {
    if (!(t > 0.0)) throw DomainError("t must be positive");
    if (!(h > 0.0) || !(h < t)) throw DomainError("step must lie in (0, t)");

    // Finite-part multiplier: conj(multiplier) = -i|p| exp(-it|p|).
    QuadratureConfig qc;
    qc.order = cfg.order;
    qc.execution = cfg.execution;
    const Complex rhs = pairMultiplierViaParseval(
        [t](double p) { return kI * std::abs(p) * std::exp(kI * t * std::abs(p)); }, t, phi, qc);

    auto derivative = [&](double step) {
        return (pairCauchy1D(t + step, phi, cfg).total - pairCauchy1D(t - step, phi, cfg).total) / (2.0 * step);
    };

    EvolutionCheck out{};
    out.finiteDifference = derivative(h);
    out.momentumSide = rhs;
    out.residual = std::abs(out.finiteDifference - rhs);
    out.residualHalf = std::abs(derivative(0.5 * h) - rhs);
    if (out.residual <= kNoiseFloor) {
        out.ratio = 0.0;
        return out;
    }
    out.ratio = out.residualHalf > 0.0 ? out.residual / out.residualHalf : 0.0;
    if (!(out.ratio >= 2.0)) throw StepError("finite-difference residual does not decay like h^2");
    return out;
}

}  // namespace qcauchy
