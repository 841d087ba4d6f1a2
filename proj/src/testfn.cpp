#include "qcauchy/testfn.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "qcauchy/errors.hpp"
#include "qcauchy/quasiclassical.hpp"
#include "qcauchy/specfun.hpp"

namespace qcauchy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
// exp(-x^2/2) < 1e-18 beyond this many widths.
constexpr double kGaussExtent = 9.2;
// exp(-x^2/2) < 1e-14 beyond this many widths (momentum cutoff).
constexpr double kGaussSpectral = 8.03;

// Splits [a, b] into pieces no wider than maxWidth, then grades the piece
// touching the singular end.
quad::Panels gradedToward(double a, double b, bool towardA, double maxWidth, int levels) {
    quad::Panels out;
    if (!(b > a)) return out;
    const int count = std::max(1, static_cast<int>(std::ceil((b - a) / maxWidth)));
    const quad::Panels pieces = quad::uniform(a, b, count);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const bool singular = towardA ? i == 0 : i + 1 == pieces.size();
        if (singular) {
            quad::append(out, quad::graded(pieces[i].a, pieces[i].b, towardA, levels));
        } else {
            out.push_back(pieces[i]);
        }
    }
    return out;
}

quad::Panels refine(quad::Panels panels, int times) {
    for (int i = 0; i < times; ++i) panels = quad::bisect(panels);
    return panels;
}

// Integrates f over successively bisected panels; value from the finest
// level, error = difference to the previous level.
template <class F>
quad::Estimate integrateLevels(const quad::Panels& panels, F&& f, const RegularizationConfig& cfg) {
    Complex previous{};
    Complex current{};
    for (int level = 0; level < cfg.refinement_levels; ++level) {
        previous = current;
        current = quad::integrate(refine(panels, level), f, cfg.order, cfg.execution);
    }
    return {current, std::abs(current - previous)};
}

double probeScale(double scale, const RegularizationConfig& cfg) {
    return std::isfinite(scale) ? scale * cfg.panelFraction : 1.0;
}

Support1D clippedSupport(const TestFunction1D& phi, const RegularizationConfig& cfg) {
    Support1D s = phi.support();
    if (cfg.cutoff > 0.0) {
        if (s.compact && (s.lo < -cfg.cutoff || s.hi > cfg.cutoff)) {
            throw DomainError("cutoff A must exceed the probe support");
        }
        s.lo = std::max(s.lo, -cfg.cutoff);
        s.hi = std::min(s.hi, cfg.cutoff);
    }
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi)) {
        throw DomainError("probe without finite support needs an explicit cutoff A");
    }
    return s;
}

void checkTime(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be positive and finite");
}

// Folded principal value F(a) = PV int phi(x) / (x - a) dx
//                             = int_0^U [phi(a+u) - phi(a-u)] / u du.
quad::Estimate foldedPV(double a, const TestFunction1D& phi, const Support1D& s, const RegularizationConfig& cfg) {
    auto odd = [&](double u) { return (phi(a + u) - phi(a - u)) / u; };

    // Excision diagnostic: the discarded piece int_0^eps must vanish with eps.
    const auto& eps = cfg.pv_epsilon_sequence;
    double first = 0.0;
    double last = 0.0;
    for (std::size_t k = 0; k < eps.size(); ++k) {
        const double d = std::abs(quad::integrate(quad::Panels{{0.0, eps[k]}}, odd, cfg.order,
                                                  quad::Execution::serial));
        if (k == 0) first = d;
        if (k > 0 && d > last * (1.0 + 1e-9) + 1e-300) {
            throw ConvergenceError("principal value: excised contribution does not shrink with epsilon");
        }
        last = d;
    }
    if (first > 1e-300 && last > 0.5 * first) {
        throw ConvergenceError("principal value: excised contribution does not shrink with epsilon");
    }

    const double umax = std::max({s.hi - a, a - s.lo, 0.0});
    if (umax == 0.0) return {Complex{}, 0.0};
    std::vector<double> points{0.0, umax};
    for (double edge : {s.hi - a, a - s.lo}) {
        if (edge > 0.0 && edge < umax) points.push_back(edge);
    }
    const auto panels = quad::fromBreakpoints(points, probeScale(phi.scale(), cfg));
    return integrateLevels(panels, odd, cfg);
}

}  // namespace

std::string toString(ProbeKind kind) {
    switch (kind) {
        case ProbeKind::gaussian_packet: return "gaussian_packet";
        case ProbeKind::standard_bump: return "standard_bump";
        case ProbeKind::product: return "product";
        case ProbeKind::custom: return "custom";
    }
    return "custom";
}

// ---------------------------------------------------------------- 1-D probes

TestFunction1D TestFunction1D::gaussianPacket(double center, double width, double momentum) {
    if (!(width > 0.0)) throw DomainError("gaussian width must be positive");
    TestFunction1D g;
    g.kind_ = ProbeKind::gaussian_packet;
    g.f_ = [=](double x) {
        const double u = (x - center) / width;
        return std::exp(-0.5 * u * u) * std::exp(kI * (momentum * x));
    };
    g.fourier_ = [=](double p) {
        const double q = p + momentum;
        return width * std::sqrt(2.0 * kPi) * std::exp(kI * (q * center)) * std::exp(-0.5 * width * width * q * q);
    };
    g.support_ = {center - kGaussExtent * width, center + kGaussExtent * width, false};
    g.scale_ = width / (1.0 + std::abs(momentum) * width);
    g.spectralCenter_ = -momentum;
    g.spectralHalfWidth_ = kGaussSpectral / width;
    return g;
}

TestFunction1D TestFunction1D::standardBump(double center, double halfWidth) {
    if (!(halfWidth > 0.0)) throw DomainError("bump half-width must be positive");
    TestFunction1D b;
    b.kind_ = ProbeKind::standard_bump;
    b.f_ = [=](double x) {
        const double u = (x - center) / halfWidth;
        if (std::abs(u) >= 1.0) return Complex{};
        return Complex{std::exp(-1.0 / (1.0 - u * u))};
    };
    b.support_ = {center - halfWidth, center + halfWidth, true};
    b.scale_ = halfWidth / 4.0;
    return b;
}

TestFunction1D TestFunction1D::oddGaussian(double width) {
    if (!(width > 0.0)) throw DomainError("gaussian width must be positive");
    TestFunction1D g;
    g.kind_ = ProbeKind::custom;
    g.f_ = [=](double x) {
        const double u = x / width;
        return Complex{x * std::exp(-0.5 * u * u)};
    };
    g.fourier_ = [=](double p) {
        return kI * (width * width * width * p * std::sqrt(2.0 * kPi) * std::exp(-0.5 * width * width * p * p));
    };
    g.support_ = {-(kGaussExtent + 1.0) * width, (kGaussExtent + 1.0) * width, false};
    g.scale_ = width;
    g.spectralHalfWidth_ = (kGaussSpectral + 1.0) / width;
    return g;
}

TestFunction1D TestFunction1D::constant(Complex value) {
    TestFunction1D c;
    c.kind_ = ProbeKind::custom;
    c.f_ = [=](double) { return value; };
    c.support_ = {-kInf, kInf, false};
    c.scale_ = kInf;
    return c;
}

TestFunction1D TestFunction1D::custom(Fn f, Support1D support, double scale, Fn fourier, double spectralCenter,
                                      double spectralHalfWidth) {
    if (!(scale > 0.0)) throw DomainError("probe scale must be positive");
    TestFunction1D c;
    c.kind_ = ProbeKind::custom;
    c.f_ = std::move(f);
    c.fourier_ = std::move(fourier);
    c.support_ = support;
    c.scale_ = scale;
    c.spectralCenter_ = spectralCenter;
    c.spectralHalfWidth_ = spectralHalfWidth;
    return c;
}

Complex TestFunction1D::fourier(double p) const {
    if (fourier_) return fourier_(p);
    if (!std::isfinite(support_.lo) || !std::isfinite(support_.hi)) {
        throw DomainError("numeric Fourier transform needs finite support");
    }
    double width = scale_ / 2.0;
    if (p != 0.0) width = std::min(width, 2.0 * kPi / std::abs(p));
    const auto panels = quad::fromBreakpoints({support_.lo, support_.hi}, width);
    return quad::integrate(panels, [&](double x) { return f_(x) * std::exp(kI * (p * x)); }, 16,
                           quad::Execution::serial);
}

TestFunction1D TestFunction1D::operator+(const TestFunction1D& other) const {
    TestFunction1D s;
    s.kind_ = ProbeKind::custom;
    s.f_ = [a = f_, b = other.f_](double x) { return a(x) + b(x); };
    if (fourier_ && other.fourier_) {
        s.fourier_ = [a = fourier_, b = other.fourier_](double p) { return a(p) + b(p); };
    }
    s.support_ = {std::min(support_.lo, other.support_.lo), std::max(support_.hi, other.support_.hi),
                  support_.compact && other.support_.compact};
    s.scale_ = std::min(scale_, other.scale_);
    if (spectralHalfWidth_ > 0.0 && other.spectralHalfWidth_ > 0.0) {
        const double lo = std::min(spectralCenter_ - spectralHalfWidth_, other.spectralCenter_ - other.spectralHalfWidth_);
        const double hi = std::max(spectralCenter_ + spectralHalfWidth_, other.spectralCenter_ + other.spectralHalfWidth_);
        s.spectralCenter_ = 0.5 * (lo + hi);
        s.spectralHalfWidth_ = 0.5 * (hi - lo);
    }
    return s;
}

TestFunction1D TestFunction1D::scaled(Complex a) const {
    TestFunction1D s = *this;
    s.f_ = [f = f_, a](double x) { return a * f(x); };
    if (fourier_) s.fourier_ = [g = fourier_, a](double p) { return a * g(p); };
    return s;
}

TestFunction1D TestFunction1D::times(Fn g, double gScale) const {
    TestFunction1D s;
    s.kind_ = ProbeKind::product;
    s.f_ = [f = f_, g = std::move(g)](double x) { return f(x) * g(x); };
    s.support_ = support_;
    s.scale_ = std::min(scale_, gScale);
    return s;
}

TestFunction1D TestFunction1D::conjugated() const {
    TestFunction1D s = *this;
    s.f_ = [f = f_](double x) { return std::conj(f(x)); };
    if (fourier_) s.fourier_ = [g = fourier_](double p) { return std::conj(g(-p)); };
    s.spectralCenter_ = -spectralCenter_;
    return s;
}

TestFunction1D TestFunction1D::reflected() const {
    TestFunction1D s = *this;
    s.f_ = [f = f_](double x) { return f(-x); };
    if (fourier_) s.fourier_ = [g = fourier_](double p) { return g(-p); };
    s.support_ = {-support_.hi, -support_.lo, support_.compact};
    s.spectralCenter_ = -spectralCenter_;
    return s;
}

TestFunction1D TestFunction1D::shifted(double shift) const {
    TestFunction1D s = *this;
    s.f_ = [f = f_, shift](double x) { return f(x + shift); };
    if (fourier_) s.fourier_ = [g = fourier_, shift](double p) { return std::exp(-kI * (p * shift)) * g(p); };
    s.support_ = {support_.lo - shift, support_.hi - shift, support_.compact};
    return s;
}

// ---------------------------------------------------------------- 3-D probes

TestFunction3D TestFunction3D::gaussianPacket(const Vec3& center, double width, const Vec3& momentum) {
    if (!(width > 0.0)) throw DomainError("gaussian width must be positive");
    TestFunction3D g;
    g.kind_ = ProbeKind::gaussian_packet;
    g.f_ = [=](const Vec3& x) {
        const Vec3 d{x[0] - center[0], x[1] - center[1], x[2] - center[2]};
        return std::exp(-0.5 * dot(d, d) / (width * width)) * std::exp(kI * dot(momentum, x));
    };
    g.fourier_ = [=](const Vec3& p) {
        const Vec3 q{p[0] + momentum[0], p[1] + momentum[1], p[2] + momentum[2]};
        const double a = width * std::sqrt(2.0 * kPi);
        return a * a * a * std::exp(kI * dot(q, center)) * std::exp(-0.5 * width * width * dot(q, q));
    };
    const bool centered = norm(center) == 0.0 && norm(momentum) == 0.0;
    if (centered) {
        g.profile_ = [=](double r) { return Complex{std::exp(-0.5 * r * r / (width * width))}; };
        g.radialFourier_ = [=](double rho) {
            const double a = width * std::sqrt(2.0 * kPi);
            return Complex{a * a * a * std::exp(-0.5 * width * width * rho * rho)};
        };
    }
    g.spectralExtent_ = norm(momentum) + kGaussSpectral / width;
    g.support_ = {center, (kGaussExtent + 0.5) * width, false};
    g.scale_ = width / (1.0 + norm(momentum) * width);
    return g;
}

TestFunction3D TestFunction3D::standardBump(const Vec3& center, double halfWidth) {
    if (!(halfWidth > 0.0)) throw DomainError("bump half-width must be positive");
    TestFunction3D b;
    b.kind_ = ProbeKind::standard_bump;
    auto bump = [=](double r) {
        const double u = r / halfWidth;
        if (u >= 1.0) return Complex{};
        return Complex{std::exp(-1.0 / (1.0 - u * u))};
    };
    b.f_ = [=](const Vec3& x) {
        const Vec3 d{x[0] - center[0], x[1] - center[1], x[2] - center[2]};
        return bump(norm(d));
    };
    if (norm(center) == 0.0) b.profile_ = bump;
    b.support_ = {center, halfWidth, true};
    b.scale_ = halfWidth / 4.0;
    return b;
}

TestFunction3D TestFunction3D::radialShell(double rIn, double rOut) {
    if (!(rOut > rIn) || rIn < 0.0) throw DomainError("shell needs 0 <= rIn < rOut");
    const double mid = 0.5 * (rIn + rOut);
    const double half = 0.5 * (rOut - rIn);
    auto profile = [=](double r) {
        const double u = (r - mid) / half;
        if (std::abs(u) >= 1.0) return Complex{};
        return Complex{std::exp(-1.0 / (1.0 - u * u))};
    };
    TestFunction3D s = radial(profile, rOut, half / 4.0);
    s.kind_ = ProbeKind::standard_bump;
    s.support_.compact = true;
    return s;
}

TestFunction3D TestFunction3D::radial(RadialFn profile, double extent, double scale, RadialFn fourier,
                                      double spectralExtent) {
    if (!(extent > 0.0) || !(scale > 0.0)) throw DomainError("radial probe needs positive extent and scale");
    TestFunction3D r;
    r.kind_ = ProbeKind::custom;
    r.f_ = [profile](const Vec3& x) { return profile(norm(x)); };
    r.profile_ = std::move(profile);
    r.radialFourier_ = std::move(fourier);
    r.spectralExtent_ = spectralExtent;
    r.support_ = {{0, 0, 0}, extent, false};
    r.scale_ = scale;
    return r;
}

TestFunction3D TestFunction3D::product(const TestFunction1D& fx, const TestFunction1D& fy, const TestFunction1D& fz) {
    TestFunction3D p;
    p.kind_ = ProbeKind::product;
    p.f_ = [=](const Vec3& x) { return fx(x[0]) * fy(x[1]) * fz(x[2]); };
    if (fx.hasExactFourier() && fy.hasExactFourier() && fz.hasExactFourier()) {
        p.fourier_ = [=](const Vec3& q) { return fx.fourier(q[0]) * fy.fourier(q[1]) * fz.fourier(q[2]); };
    }
    Vec3 center{};
    double r2 = 0.0;
    int i = 0;
    for (const auto* f : {&fx, &fy, &fz}) {
        const auto& s = f->support();
        center[static_cast<std::size_t>(i++)] = 0.5 * (s.lo + s.hi);
        r2 += 0.25 * (s.hi - s.lo) * (s.hi - s.lo);
    }
    p.support_ = {center, std::sqrt(r2), fx.support().compact && fy.support().compact && fz.support().compact};
    p.scale_ = std::min({fx.scale(), fy.scale(), fz.scale()});
    return p;
}

TestFunction3D TestFunction3D::custom(Fn f, Ball support, double scale) {
    if (!(scale > 0.0)) throw DomainError("probe scale must be positive");
    TestFunction3D c;
    c.kind_ = ProbeKind::custom;
    c.f_ = std::move(f);
    c.support_ = support;
    c.scale_ = scale;
    return c;
}

TestFunction3D TestFunction3D::times(Fn g) const {
    TestFunction3D s;
    s.kind_ = ProbeKind::product;
    s.f_ = [f = f_, g = std::move(g)](const Vec3& x) { return f(x) * g(x); };
    s.support_ = support_;
    s.scale_ = scale_;
    return s;
}

// ---------------------------------------------------------------- config

void RegularizationConfig::validate() const {
    const auto& eps = pv_epsilon_sequence;
    if (eps.empty() || eps.back() >= 1e-6) throw DomainError("epsilon sequence must decrease below 1e-6");
    for (std::size_t k = 0; k < eps.size(); ++k) {
        if (!(eps[k] > 0.0)) throw DomainError("epsilon sequence must be positive");
        if (k > 0 && !(eps[k] < eps[k - 1])) throw DomainError("epsilon sequence must be strictly decreasing");
    }
    if (cutoff < 0.0) throw DomainError("cutoff A must be positive (or 0 for automatic)");
    if (refinement_levels < 2) throw DomainError("at least two refinement levels are required");
    if (order < 2) throw DomainError("quadrature order must be at least 2");
    if (!(panelFraction > 0.0)) throw DomainError("panel fraction must be positive");
    if (sphereOrder < 6) throw DomainError("sphere order must be at least 6");
}

// ---------------------------------------------------------------- 1-D pairings

quad::Estimate pvEvenPole(double t, const TestFunction1D& phi, const RegularizationConfig& cfg) {
    checkTime(t);
    cfg.validate();
    const Support1D s = clippedSupport(phi, cfg);
    // t/(t^2 - x^2) = (1/2)[1/(t - x) + 1/(t + x)]
    const auto right = foldedPV(t, phi, s, cfg);   // PV int phi/(x - t)
    const auto left = foldedPV(-t, phi, s, cfg);   // PV int phi/(x + t)
    return {0.5 * (left.value - right.value), 0.5 * (left.error + right.error)};
}

PairingResult pairCauchy1D(double t, const TestFunction1D& phi, const RegularizationConfig& cfg) {
    const auto pv = pvEvenPole(t, phi, cfg);
    PairingResult r;
    r.delta_part = 0.5 * (phi(t) + phi(-t));
    r.regular_part = -kI / kPi * pv.value;
    r.total = r.delta_part + r.regular_part;
    r.quadrature_error_estimate = pv.error / kPi;
    return r;
}

PairingResult pairCauchyMassive1D(double t, double m, const TestFunction1D& phi, const RegularizationConfig& cfg) {
    checkTime(t);
    if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mass must be positive");
    const auto pv = pvEvenPole(t, phi, cfg);
    const Support1D s = clippedSupport(phi, cfg);

    // conj(C^m) - conj(C) = -(i/pi) t/(t^2 - x^2) (conj(B) - 1): log-singular at |x| = t.
    auto remainder = [&](double x) {
        if (std::abs(x) == t) return Complex{};
        const Complex b = bFactor(t, x, m);
        return -kI / kPi * t / ((t - x) * (t + x)) * (std::conj(b) - 1.0) * phi(x);
    };

    const double width = std::min(probeScale(phi.scale(), cfg), 1.0 / m);
    std::vector<double> points{s.lo, s.hi};
    for (double c : {-t, 0.0, t}) {
        if (c > s.lo && c < s.hi) points.push_back(c);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    quad::Panels panels;
    constexpr int kLevels = 40;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double a = points[i];
        const double b = points[i + 1];
        const bool singA = std::abs(a) == t;
        const bool singB = std::abs(b) == t;
        if (singA && singB) {
            const double mid = 0.5 * (a + b);
            quad::append(panels, gradedToward(a, mid, true, width, kLevels));
            quad::append(panels, gradedToward(mid, b, false, width, kLevels));
        } else if (singA || singB) {
            quad::append(panels, gradedToward(a, b, singA, width, kLevels));
        } else {
            quad::append(panels, quad::fromBreakpoints({a, b}, width));
        }
    }
    const auto rest = integrateLevels(panels, remainder, cfg);

    PairingResult r;
    r.delta_part = 0.5 * (phi(t) + phi(-t));
    r.regular_part = -kI / kPi * pv.value + rest.value;
    r.total = r.delta_part + r.regular_part;
    r.quadrature_error_estimate = pv.error / kPi + rest.error;
    return r;
}

// ---------------------------------------------------------------- 3-D pairing

SphereAverage sphericalAverageWithEstimate(const TestFunction3D& phi, double radius, int order) {
    return {sphericalAverage(phi, radius, order),
            std::abs(sphericalAverage(phi, radius, order) - sphericalAverage(phi, radius, order + 2))};
}

Complex sphericalAverage(const TestFunction3D& phi, double radius, int order) {
    if (order < 6) throw DomainError("sphere quadrature order must be at least 6");
    if (!(radius >= 0.0)) throw DomainError("radius must be nonnegative");
    // Gauss-Legendre in cos(theta) times the trapezoid rule in the azimuth:
    // exact on spherical harmonics of degree <= order.
    const auto& rule = quad::gaussLegendre(order / 2 + 1);
    const int nphi = order + 1;
    Complex sum{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double c = rule.nodes[i];
        const double sn = std::sqrt(std::max(0.0, 1.0 - c * c));
        Complex ring{};
        for (int j = 0; j < nphi; ++j) {
            const double az = 2.0 * kPi * j / nphi;
            ring += phi({radius * sn * std::cos(az), radius * sn * std::sin(az), radius * c});
        }
        sum += 0.5 * rule.weights[i] * ring / static_cast<double>(nphi);
    }
    return sum;
}

PairingResult pairCauchy3D(double t, double m, const TestFunction3D& phi, const RegularizationConfig& cfg) {
    checkTime(t);
    if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("mass must be nonnegative");
    cfg.validate();

    const int order = cfg.sphereOrder;
    auto average = [&](double r) -> Complex {
        if (phi.isRadial()) return phi.profile(r);
        return sphericalAverage(phi, r, order);
    };
    if (!phi.isRadial()) {
        const auto est = sphericalAverageWithEstimate(phi, t, order);
        if (est.estimate > 1e-8 * std::abs(est.value) + 1e-12) {
            throw ConvergenceError("sphere quadrature orders disagree; raise sphereOrder");
        }
    }

    const Ball& ball = phi.support();
    const double rmax = norm(ball.center) + ball.radius;
    const double rmin = std::max(0.0, norm(ball.center) - ball.radius);
    double width = probeScale(phi.scale(), cfg);
    if (m > 0.0) width = std::min(width, 1.0 / m);

    // Sphere term d/dr (r Phi) at r = t, plus the mass jump term.
    const Complex phiT = average(t);
    const double h = std::min(2e-3 * phi.scale(), 0.25 * t);
    const Complex dphi =
        (-average(t + 2 * h) + 8.0 * average(t + h) - 8.0 * average(t - h) + average(t - 2 * h)) / (12.0 * h);

    // Imaginary part of the regular kernel, split as
    //   -t / (pi^2 (t^2 - r^2)^2)          double pole (the whole kernel at m = 0)
    //   -t m^2 / (4 pi^2 (t^2 - r^2))      simple pole
    //   remainder                          logarithmic at r = t
    // Each piece is integrated against 4 pi r^2 Phi(r).
    auto measure = [&](double r) { return 4.0 * kPi * r * r * average(r); };

    // Hadamard finite part of the double pole over [0, 2t], with
    // g(r) = (r - t)^2 * kernel * measure = -4 t r^2 Phi / (pi (t + r)^2):
    //   int_0^t [g(t+u) + g(t-u) - 2 g(t)] / u^2 du - 2 g(t) / t
    const Complex g0 = -t * phiT / kPi;
    auto g = [&](double r) -> Complex { return -t * measure(r) / (kPi * kPi * (t + r) * (t + r)); };
    auto folded2 = [&](double u) { return (g(t + u) + g(t - u) - 2.0 * g0) / (u * u); };
    // Principal value of the simple pole: q(r) / (r - t), q = t m^2 measure / (4 pi^2 (t + r)).
    auto q = [&](double r) -> Complex { return t * m * m * measure(r) / (4.0 * kPi * kPi * (t + r)); };
    auto folded1 = [&](double u) { return (q(t + u) - q(t - u)) / u; };
    auto poles = [&](double r) -> Complex {
        const double d = (t - r) * (t + r);
        return (-t / (kPi * kPi * d * d) - t * m * m / (4.0 * kPi * kPi * d)) * measure(r);
    };

    quad::Estimate window{Complex{}, 0.0};
    if (rmin < 2.0 * t) {
        const auto panels = quad::fromBreakpoints({0.0, t}, width);
        if (m > 0.0) {
            window = integrateLevels(panels, [&](double u) { return folded2(u) + folded1(u); }, cfg);
        } else {
            window = integrateLevels(panels, folded2, cfg);
        }
        window.value -= 2.0 * g0 / t;
    }
    quad::Estimate outer{Complex{}, 0.0};
    if (rmax > 2.0 * t) {
        outer = integrateLevels(quad::fromBreakpoints({std::max(2.0 * t, rmin), rmax}, width), poles, cfg);
    }
    quad::Estimate remainder{Complex{}, 0.0};
    if (m > 0.0) {
        auto rest = [&](double r) -> Complex {
            if (r == t) return Complex{};
            if (r < t) {
                const double l2 = (t - r) * (t + r);
                return t * m * m * specfun::besselY2Remainder(m * std::sqrt(l2)) / (4.0 * kPi * l2) * measure(r);
            }
            const double k2 = (r - t) * (r + t);
            return -t * m * m * specfun::macdonaldK2Remainder(m * std::sqrt(k2)) / (2.0 * kPi * kPi * k2) *
                   measure(r);
        };
        quad::Panels panels;
        if (rmin < t) quad::append(panels, gradedToward(rmin, std::min(t, rmax), false, width, 40));
        if (rmax > t) quad::append(panels, gradedToward(std::max(t, rmin), rmax, true, width, 40));
        remainder = integrateLevels(panels, rest, cfg);
    }

    // Real part of the massive kernel lives inside the cone and is regular.
    quad::Estimate inner{Complex{}, 0.0};
    if (m > 0.0 && rmin < t) {
        auto reIntegrand = [&](double r) -> Complex {
            const double l2 = (t - r) * (t + r);
            const double l = std::sqrt(l2);
            const double j2 = l > 0.0 ? specfun::besselJ(2, m * l) / l2 : m * m / 8.0;
            return t * m * m * j2 * r * r * average(r);
        };
        inner = integrateLevels(quad::fromBreakpoints({rmin, std::min(t, rmax)}, width), reIntegrand, cfg);
    }

    PairingResult res;
    res.delta_part = phiT + t * dphi - 0.5 * m * m * t * t * phiT;
    res.regular_part = inner.value - kI * (window.value + outer.value + remainder.value);
    res.total = res.delta_part + res.regular_part;
    res.quadrature_error_estimate = window.error + outer.error + remainder.error + inner.error;
    return res;
}

}  // namespace qcauchy
