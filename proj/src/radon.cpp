#include "qcauchy/radon.hpp"

#include <algorithm>
#include <numbers>
#include <random>

#include "qcauchy/errors.hpp"

namespace qcauchy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSphereOrder = 128;

double radonQUnchecked(const CylinderSpec& spec, const Eigen::VectorXd& xi) {
    double q = 0.0;
    for (int j = 0; j < spec.n(); ++j) q += std::abs(spec.alpha.row(j).dot(xi)) * spec.delta_t[static_cast<std::size_t>(j)];
    return q;
}

Eigen::VectorXd circlePoint(double theta) {
    Eigen::VectorXd xi(2);
    xi << std::cos(theta), std::sin(theta);
    return xi;
}

// Panels over [0, 2 pi] split where some (alpha_j, xi) changes sign.
quad::Panels circlePanels(const CylinderSpec& spec) {
    std::vector<double> points{0.0, 2.0 * kPi};
    for (int j = 0; j < spec.n(); ++j) {
        const double a1 = spec.alpha(j, 0);
        const double a2 = spec.alpha(j, 1);
        if (a1 == 0.0 && a2 == 0.0) continue;
        double th = std::atan2(a1, -a2);  // direction orthogonal to alpha_j
        for (int s = 0; s < 2; ++s) {
            double v = std::fmod(th + s * kPi, 2.0 * kPi);
            if (v < 0.0) v += 2.0 * kPi;
            points.push_back(v);
        }
    }
    return quad::fromBreakpoints(points, kPi / 16.0);
}

template <class F>
Complex circleMean(const CylinderSpec& spec, F&& f) {
    return quad::integrate(circlePanels(spec), [&](double th) { return Complex(f(circlePoint(th))); }, 16,
                           quad::Execution::serial) / (2.0 * kPi);
}

template <class F>
Complex sphereMean(F&& f) {
    const auto& rule = quad::gaussLegendre(kSphereOrder / 2 + 1);
    const int nphi = kSphereOrder + 1;
    Complex sum{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double c = rule.nodes[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        Complex ring{};
        for (int j = 0; j < nphi; ++j) {
            const double az = 2.0 * kPi * j / nphi;
            Eigen::VectorXd xi(3);
            xi << s * std::cos(az), s * std::sin(az), c;
            ring += f(xi);
        }
        sum += 0.5 * rule.weights[i] * ring / static_cast<double>(nphi);
    }
    return sum;
}

template <class F>
Complex directionMean(const CylinderSpec& spec, F&& f) {
    switch (spec.k()) {
        case 1: {
            Eigen::VectorXd plus(1), minus(1);
            plus << 1.0;
            minus << -1.0;
            return 0.5 * (Complex(f(plus)) + Complex(f(minus)));
        }
        case 2: return circleMean(spec, f);
        case 3: return sphereMean(f);
        default: throw DomainError("direction averages need k <= 3");
    }
}

// int_{theta0}^{pi/2} cos^m(theta) d theta by the reduction formula.
double cosPowerTail(int m, double s) {
    const double c = std::sqrt(std::max(0.0, 1.0 - s * s));
    const double theta0 = std::asin(s);
    double even = kPi / 2.0 - theta0;  // m = 0
    double odd = 1.0 - s;              // m = 1
    if (m == 0) return even;
    if (m == 1) return odd;
    double prev = m % 2 == 0 ? even : odd;
    for (int k = m % 2 == 0 ? 2 : 3; k <= m; k += 2) {
        prev = (k - 1.0) / k * prev - std::pow(c, k - 1) * s / k;
    }
    return prev;
}

int cosPower(const CapWeight& w) { return w.variant == CapVariant::cosn ? w.n : w.n - 2; }

}  // namespace

double radonQ(const CylinderSpec& spec, const Eigen::VectorXd& xi) {
    if (xi.size() != spec.k()) throw DomainError("direction dimension does not match the base");
    if (std::abs(xi.norm() - 1.0) > 1e-12) throw DomainError("direction must be a unit vector");
    return radonQUnchecked(spec, xi);
}

Complex halfSpaceMeasure(const HalfSpaceQuery& q) {
    if (!(q.R > 0.0)) throw DomainError("R must be positive");
    const double Q = radonQ(q.spec, q.xi);
    if (!(q.R > Q)) throw DomainError("half-space inside the spike region (R <= Q)");
    const double P = Q / q.R;
    return Complex(0.0, -std::log((P + 1.0) / (1.0 - P)) / (2.0 * kPi));
}

double maxRadonQ(const CylinderSpec& spec) {
    double best = 0.0;
    if (spec.k() == 1) return radonQUnchecked(spec, Eigen::VectorXd::Ones(1));
    if (spec.k() == 2) {
        constexpr int kSamples = 4096;
        double arg = 0.0;
        for (int i = 0; i < kSamples; ++i) {
            const double th = 2.0 * kPi * i / kSamples;
            const double q = radonQUnchecked(spec, circlePoint(th));
            if (q > best) {
                best = q;
                arg = th;
            }
        }
        double lo = arg - 2.0 * kPi / kSamples;
        double hi = arg + 2.0 * kPi / kSamples;
        for (int it = 0; it < 100; ++it) {  // ternary search, Q is unimodal near its maximum
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (radonQUnchecked(spec, circlePoint(m1)) < radonQUnchecked(spec, circlePoint(m2))) lo = m1;
            else hi = m2;
        }
        return std::max(best, radonQUnchecked(spec, circlePoint(0.5 * (lo + hi))));
    }
    if (spec.k() == 3) {
        // Q is convex on R^3; its maximum on the sphere is attained at a vertex-like
        // direction. Dense sampling plus the Cauchy-Schwarz cap keeps this safe.
        constexpr int kT = 256;
        for (int i = 0; i <= kT; ++i) {
            const double th = kPi * i / kT;
            for (int j = 0; j < 2 * kT; ++j) {
                const double ph = kPi * j / kT;
                Eigen::VectorXd xi(3);
                xi << std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th);
                best = std::max(best, radonQUnchecked(spec, xi));
            }
        }
        return std::min(best * (1.0 + 1e-4), constraintNorm(spec));
    }
    throw DomainError("maxRadonQ needs k <= 3");
}

Complex ballComplementMeasure(const CylinderSpec& spec, double rho) {
    if (!(rho > 0.0)) throw DomainError("radius must be positive");
    auto qOf = [&](const Eigen::VectorXd& xi) {
        const double q = radonQUnchecked(spec, xi);
        if (!(q < rho)) throw DomainError("ball radius inside the spike region (rho <= Q)");
        return q;
    };
    switch (spec.k()) {
        case 1: {
            const double T = effectiveTime(spec);
            if (!(rho > T)) throw DomainError("ball radius inside the spike region (rho <= T)");
            return Complex(0.0, -std::log((rho + T) / (rho - T)) / kPi);
        }
        case 2: {
            // 1 - M = -(i / 2 pi) int Q / sqrt(rho^2 - Q^2) d theta
            const Complex mean = circleMean(spec, [&](const Eigen::VectorXd& xi) {
                const double q = qOf(xi);
                return q / std::sqrt((rho - q) * (rho + q));
            });
            return -kI * mean.real();
        }
        case 3: {
            // 1 - M = -(i / pi) mean[ ln((rho+Q)/(rho-Q)) + 2 rho Q / (rho^2 - Q^2) ]
            const Complex mean = sphereMean([&](const Eigen::VectorXd& xi) {
                const double q = qOf(xi);
                return std::log((rho + q) / (rho - q)) + 2.0 * rho * q / ((rho - q) * (rho + q));
            });
            return -kI * mean.real() / kPi;
        }
        default: throw DomainError("ball measures need k <= 3");
    }
}

double CapWeight::exponent() const {
    return variant == CapVariant::cosn ? 0.5 * (n - 1) : 0.5 * (n - 3);
}

double CapWeight::normalizer() const {
    if (n < 1) throw DomainError("cap dimension must be positive");
    if (variant == CapVariant::geometric && n == 1) return 0.5;
    return 0.5 / cosPowerTail(cosPower(*this), 0.0);
}

double capAverage(const CapWeight& w, double R, double rho) {
    if (!(rho > 0.0) || !(R >= 0.0)) throw DomainError("cap average needs R >= 0 and rho > 0");
    if (w.n < 1) throw DomainError("cap dimension must be positive");
    const double s = R / rho;
    if (s > 1.0) return 0.0;
    // S^0 = {+-1}: discrete average
    if (w.variant == CapVariant::geometric && w.n == 1) return 0.5;
    return w.normalizer() * cosPowerTail(cosPower(w), s);
}

MonteCarloFraction capFractionMonteCarlo(int n, double s, std::int64_t samples, std::uint64_t seed) {
    if (n < 1 || samples < 1) throw DomainError("Monte-Carlo cap needs n >= 1 and samples >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_int_distribution<int> coin(0, 1);
    std::int64_t hits = 0;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < samples; ++i) {
        double first;
        if (n == 1) {
            first = coin(rng) ? 1.0 : -1.0;
        } else {
            double r2 = 0.0;
            for (auto& v : x) {
                v = normal(rng);
                r2 += v * v;
            }
            first = x[0] / std::sqrt(r2);
        }
        hits += first >= s;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

IdentityCheck sphereAverageIdentity(const CylinderSpec& spec, double R, const CapWeight& w) {
    if (spec.k() != 2 && spec.k() != 3) throw DomainError("sphere-average identity needs k = 2 or 3");
    if (w.n != spec.k()) throw DomainError("cap weight dimension must equal the base dimension");
    if (!(R > maxRadonQ(spec))) throw DomainError("R must exceed every Radon time Q");

    IdentityCheck out{};
    out.lhs = directionMean(spec, [&](const Eigen::VectorXd& xi) {
        const double P = radonQUnchecked(spec, xi) / R;
        return Complex(0.0, -std::log((P + 1.0) / (1.0 - P)) / (2.0 * kPi));
    });

    // int_0^{pi/2} (1 - M(R / sin theta)) N cos^m(theta) d theta
    const int m = cosPower(w);
    const double norm = w.normalizer();
    auto integrand = [&](double th) -> Complex {
        const double s = std::sin(th);
        if (s == 0.0) return Complex{};
        return ballComplementMeasure(spec, R / s) * norm * std::pow(std::cos(th), m);
    };
    out.rhs = quad::integrate(quad::uniform(0.0, kPi / 2.0, 8), integrand, 16, quad::Execution::serial);
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

GaussianLimit gaussianLimit(int n, double rRatio, CapVariant variant) {
    if (n < 10) throw DomainError("Gaussian limit needs n >= 10");
    if (!(rRatio > 0.0 && rRatio < 1.0)) throw DomainError("R/rho must lie in (0, 1)");
    GaussianLimit g{};
    g.exact = capAverage({n, variant}, rRatio, 1.0);
    g.gaussian = 0.5 * std::erfc(rRatio * std::sqrt(static_cast<double>(n)) / std::sqrt(2.0));
    g.relativeGap = std::abs(g.exact - g.gaussian) / g.exact;
    return g;
}

}  // namespace qcauchy
