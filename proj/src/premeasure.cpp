#include "qcauchy/premeasure.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "qcauchy/errors.hpp"

namespace qcauchy {

namespace {

constexpr double kPi = std::numbers::pi;
// exp(-x^2/2) < 1e-17 beyond this many inverse widths in momentum.
constexpr double kMollifierCut = 8.85;
constexpr double kBoundaryTol = 1e-12;

bool isFullLine(const Interval& iv) { return iv.lo == -std::numeric_limits<double>::infinity() &&
                                              iv.hi == std::numeric_limits<double>::infinity(); }

// Re and Im of the interval transform int_a^b e^{iqx} dx, written through the
// midpoint c and half-width w to stay accurate at small q.
struct IntervalTransform {
    double c;
    double w;
    double re(double q) const { return q == 0.0 ? 2.0 * w : 2.0 * std::cos(q * c) * std::sin(q * w) / q; }
    double im(double q) const { return q == 0.0 ? 0.0 : 2.0 * std::sin(q * c) * std::sin(q * w) / q; }
};

IntervalTransform transformOf(const Interval& iv) { return {0.5 * (iv.lo + iv.hi), 0.5 * (iv.hi - iv.lo)}; }

// Distance of the interval's edges to the spikes +-Q, floored so that a
// boundary hit still yields a usable width.
double edgeDistance(const Interval& iv, double q) {
    double d = std::numeric_limits<double>::infinity();
    for (double e : {iv.lo, iv.hi}) d = std::min({d, std::abs(e - q), std::abs(e + q)});
    return std::max(d, 0.01 * (iv.hi - iv.lo));
}

// (1/pi) int_0^inf e^{iQp} Re(chi^(p)) e^{-h^2 p^2 / 2} dp
Complex mollified1D(double q, const Interval& iv, double h, const QuadratureConfig& cfg) {
    const auto tr = transformOf(iv);
    const double top = kMollifierCut / h;
    const double rate = q + std::abs(tr.c) + tr.w;
    const double width = std::min(kPi / (4.0 * rate), top / 8.0);
    const auto panels = quad::fromBreakpoints({0.0, top}, width);
    auto f = [&](double p) { return std::exp(kI * (q * p)) * tr.re(p) * std::exp(-0.5 * h * h * p * p); };
    return quad::integrate(panels, f, cfg.order, cfg.execution) / kPi;
}

// Richardson extrapolation in h^2 over widths h, h/2, h/4, ...
MeasureEstimate richardson(const std::function<Complex(double)>& at, double h, int levels) {
    if (levels < 2) throw DomainError("Richardson extrapolation needs at least two widths");
    std::vector<Complex> row;
    for (int i = 0; i < levels; ++i) row.push_back(at(h / std::pow(2.0, i)));
    std::vector<Complex> previous;
    double factor = 4.0;
    while (row.size() > 1) {
        previous = row;
        std::vector<Complex> next;
        for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back((factor * row[i + 1] - row[i]) / (factor - 1.0));
        row = next;
        factor *= 4.0;
    }
    const double error = std::abs(row[0] - previous.back());
    return {row[0], error};
}

double axisTime(const CylinderSpec& spec, int k) {
    double q = 0.0;
    for (int j = 0; j < spec.n(); ++j) q += std::abs(spec.alpha(j, k)) * spec.delta_t[static_cast<std::size_t>(j)];
    return q;
}

MeasureEstimate separableBox(const CylinderSpec& spec, const std::vector<Interval>& box, const BoxConfig& cfg) {
    Complex value = 1.0;
    std::vector<MeasureEstimate> factors;
    for (int k = 0; k < spec.k(); ++k) {
        const Interval& iv = box[static_cast<std::size_t>(k)];
        if (isFullLine(iv)) {
            factors.push_back({1.0, 0.0});
            continue;
        }
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) throw DomainError("box must be bounded");
        const double q = axisTime(spec, k);
        const double h = cfg.widths.empty() ? cfg.mollifierFraction * edgeDistance(iv, q)
                                            : cfg.widths[static_cast<std::size_t>(k)];
        factors.push_back(richardson([&](double w) { return mollified1D(q, iv, w, cfg.quadrature); }, h,
                                     cfg.richardsonLevels));
    }
    double error = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        value *= factors[i].value;
        double others = 1.0;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (j != i) others *= std::abs(factors[j].value) + factors[j].error;
        }
        error += factors[i].error * others;
    }
    return {value, error};
}

// (1/(2 pi^2)) int_0^inf dp2 int_R dp1 S(p) Re(chi1^ chi2^) G_h(p)
Complex mollified2D(const CylinderSpec& spec, const std::vector<Interval>& box, double h1, double h2,
                    const QuadratureConfig& cfg) {
    const auto t1 = transformOf(box[0]);
    const auto t2 = transformOf(box[1]);
    const double top1 = kMollifierCut / h1;
    const double top2 = kMollifierCut / h2;
    const double rate1 = axisTime(spec, 0) + std::abs(t1.c) + t1.w;
    const double rate2 = axisTime(spec, 1) + std::abs(t2.c) + t2.w;
    const double width1 = std::min(kPi / (4.0 * rate1), top1 / 8.0);
    const double width2 = std::min(kPi / (4.0 * rate2), top2 / 8.0);

    auto inner = [&](double p2) -> Complex {
        std::vector<double> points{-top1, top1, 0.0};
        for (int j = 0; j < spec.n(); ++j) {
            if (spec.alpha(j, 0) != 0.0) {
                const double kink = -spec.alpha(j, 1) * p2 / spec.alpha(j, 0);
                if (std::abs(kink) < top1) points.push_back(kink);
            }
        }
        const double r2 = t2.re(p2);
        const double i2 = t2.im(p2);
        const double g2 = std::exp(-0.5 * h2 * h2 * p2 * p2);
        auto f = [&](double p1) {
            Eigen::Vector2d p(p1, p2);
            const double reChi = t1.re(p1) * r2 - t1.im(p1) * i2;
            return symbolND(spec, p) * reChi * std::exp(-0.5 * h1 * h1 * p1 * p1) * g2;
        };
        return quad::integrate(quad::fromBreakpoints(points, width1), f, cfg.order, quad::Execution::serial);
    };
    const auto panels = quad::fromBreakpoints({0.0, top2}, width2);
    return quad::integrate(panels, inner, cfg.order, cfg.execution) / (2.0 * kPi * kPi);
}

MeasureEstimate nonSeparableBox(const CylinderSpec& spec, const std::vector<Interval>& box, const BoxConfig& cfg) {
    if (spec.k() != 2) throw DomainError("non-separable box measures are supported for k = 2 only");
    for (const auto& iv : box) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) throw DomainError("box must be bounded");
    }
    double h1;
    double h2;
    if (cfg.widths.size() >= 2) {
        h1 = cfg.widths[0];
        h2 = cfg.widths[1];
    } else {
        h1 = cfg.mollifierFraction * edgeDistance(box[0], axisTime(spec, 0));
        h2 = cfg.mollifierFraction * edgeDistance(box[1], axisTime(spec, 1));
    }
    const double ratio = h2 / h1;
    return richardson([&](double w) { return mollified2D(spec, box, w, w * ratio, cfg.quadrature); }, h1,
                      cfg.richardsonLevels);
}

}  // namespace

// ---------------------------------------------------------------- spec

CylinderSpec CylinderSpec::make(std::vector<double> deltaT, Eigen::MatrixXd alpha, double bound) {
    if (deltaT.empty()) throw DomainError("at least one time step is required");
    if (alpha.rows() != static_cast<Eigen::Index>(deltaT.size())) throw DomainError("alpha must have n rows");
    if (alpha.cols() < 1 || alpha.cols() > alpha.rows()) throw DomainError("alpha must have 1 <= k <= n columns");
    for (double dt : deltaT) {
        if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("time steps must be positive");
    }
    if (!alpha.allFinite()) throw DomainError("alpha must be finite");
    if (alpha.rows() == alpha.cols() && std::abs(alpha.determinant()) <= 1e-12) {
        throw DomainError("square alpha must be nonsingular");
    }
    CylinderSpec s{std::move(deltaT), std::move(alpha), bound};
    if (!(constraintNorm(s) < bound)) throw DomainError("constraint norm exceeds the bound N");
    return s;
}

double CylinderSpec::totalTime() const {
    double t = 0.0;
    for (double dt : delta_t) t += dt;
    return t;
}

bool CylinderSpec::separable() const {
    for (Eigen::Index j = 0; j < alpha.rows(); ++j) {
        int nonzero = 0;
        for (Eigen::Index k = 0; k < alpha.cols(); ++k) nonzero += alpha(j, k) != 0.0;
        if (nonzero > 1) return false;
    }
    return true;
}

double constraintNorm(const CylinderSpec& spec) {
    double s = 0.0;
    for (int j = 0; j < spec.n(); ++j) s += spec.alpha.row(j).norm() * spec.delta_t[static_cast<std::size_t>(j)];
    return s;
}

double effectiveTime(const CylinderSpec& spec) {
    if (spec.k() != 1) throw DomainError("effective time needs a 1-D base");
    return axisTime(spec, 0);
}

Complex symbolND(const CylinderSpec& spec, const Eigen::VectorXd& p) {
    if (p.size() != spec.k()) throw DomainError("momentum dimension does not match the base");
    double phase = 0.0;
    for (int j = 0; j < spec.n(); ++j) {
        phase += std::abs(spec.alpha.row(j).dot(p)) * spec.delta_t[static_cast<std::size_t>(j)];
    }
    return std::exp(kI * phase);
}

// ---------------------------------------------------------------- 1-D closed form

IntervalMeasure intervalMeasureT(double T, double a, double b) {
    if (!(a < b)) throw DomainError("interval needs a < b");
    if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("effective time must be nonnegative");
    IntervalMeasure out{Complex{}, false};
    const double tol = kBoundaryTol * std::max(1.0, T);

    double spikes = 0.0;
    auto spike = [&](double x0, double mass) {
        if (std::abs(x0 - a) <= tol || std::abs(x0 - b) <= tol) {
            spikes += 0.5 * mass;
            out.boundaryWarning = true;
        } else if (a < x0 && x0 < b) {
            spikes += mass;
        }
    };
    if (T == 0.0) {
        spike(0.0, 1.0);
        out.value = spikes;
        return out;
    }
    spike(T, 0.5);
    spike(-T, 0.5);

    // ln|(T + x)/(T - x)|, zero at infinity; a log factor vanishing at an
    // endpoint is dropped (finite part) and flagged.
    auto lambda = [&](double x) {
        if (!std::isfinite(x)) return 0.0;
        const double plus = std::abs(T + x);
        const double minus = std::abs(T - x);
        double v = 0.0;
        if (plus > tol) v += std::log(plus);
        if (minus > tol) v -= std::log(minus);
        return v;
    };
    out.value = Complex(spikes, (lambda(b) - lambda(a)) / (2.0 * kPi));
    return out;
}

IntervalMeasure intervalMeasure1D(const CylinderSpec& spec, double a, double b) {
    return intervalMeasureT(effectiveTime(spec), a, b);
}

// ---------------------------------------------------------------- boxes

MeasureEstimate boxMeasureND(const CylinderSpec& spec, const std::vector<Interval>& box, const BoxConfig& cfg) {
    if (spec.k() > 3) throw DomainError("box measures are limited to k <= 3");
    if (box.size() != static_cast<std::size_t>(spec.k())) throw DomainError("box dimension does not match the base");
    for (const auto& iv : box) {
        if (!(iv.lo < iv.hi)) throw DomainError("box intervals need lo < hi");
    }
    if (!(cfg.mollifierFraction > 0.0)) throw DomainError("mollifier fraction must be positive");
    return spec.separable() ? separableBox(spec, box, cfg) : nonSeparableBox(spec, box, cfg);
}

MeasureEstimate stripMeasureCoordinate(const CylinderSpec& spec, const Interval& first, const RegularizationConfig& cfg) {
    if (spec.n() != 2 || spec.k() != 2) throw DomainError("strip coordinate route needs a square k = 2 basis");
    if (!(first.lo < first.hi) || !std::isfinite(first.lo) || !std::isfinite(first.hi)) {
        throw DomainError("strip interval must be bounded with lo < hi");
    }
    const double s1 = spec.delta_t[0];
    const double s2 = spec.delta_t[1];
    const double c1 = spec.alpha(0, 0);  // a_1 = c1 b_1 + c2 b_2
    const double c2 = spec.alpha(1, 0);
    if (c2 == 0.0) return {intervalMeasureT(s1, std::min(first.lo / c1, first.hi / c1),
                                            std::max(first.lo / c1, first.hi / c1)).value, 0.0};
    // Slice of b_2 at fixed b_1 and its closed-form measure.
    auto slice = [&](double b1) -> Complex {
        const double u = (first.lo - c1 * b1) / c2;
        const double v = (first.hi - c1 * b1) / c2;
        return intervalMeasureT(s2, std::min(u, v), std::max(u, v)).value;
    };
    if (c1 == 0.0) return {slice(0.0), 0.0};

    // Points where a slice edge crosses +-s2: jumps and log singularities in b_1.
    std::vector<double> singular;
    for (double edge : {first.lo, first.hi}) {
        for (double sg : {-1.0, 1.0}) singular.push_back((edge - c2 * sg * s2) / c1);
    }
    const double scale = std::max({s1, s2, std::abs(first.lo / c1), std::abs(first.hi / c1)});
    for (double c : singular) {
        if (std::abs(std::abs(c) - s1) < 1e-9 * scale) throw DomainError("strip edge meets a spike; degenerate configuration");
    }
    std::vector<double> points = singular;
    points.push_back(-s1);
    points.push_back(s1);
    std::sort(points.begin(), points.end());
    double gap = s1;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) gap = std::min(gap, points[i + 1] - points[i]);
    const double delta = 0.5 * gap;  // PV window half-width around +-s1
    const double far = 1e4 * scale;

    // (i/pi) s1 / (s1^2 - b^2) slice(b) away from the poles.
    auto kernel = [&](double b) { return kI / kPi * s1 / ((s1 - b) * (s1 + b)) * slice(b); };

    std::vector<double> edges{-far, far};
    for (double c : singular) edges.push_back(c);
    for (double pole : {-s1, s1}) {
        edges.push_back(pole - delta);
        edges.push_back(pole + delta);
    }
    std::sort(edges.begin(), edges.end());
    auto isSingular = [&](double x) {
        return std::any_of(singular.begin(), singular.end(), [&](double c) { return c == x; });
    };
    auto inWindow = [&](double a, double b) {
        const double mid = 0.5 * (a + b);
        return std::abs(mid - s1) < delta || std::abs(mid + s1) < delta;
    };
    const double width = 0.25 * std::min(s1, gap);
    quad::Panels panels;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double a = edges[i];
        const double b = edges[i + 1];
        if (!(b > a) || inWindow(a, b)) continue;
        const bool sa = isSingular(a);
        const bool sb = isSingular(b);
        if (a == -far) {
            quad::append(panels, quad::graded(a, b, false, 60));
        } else if (b == far) {
            quad::append(panels, quad::graded(a, b, true, 60));
        } else if (sa && sb) {
            const double mid = 0.5 * (a + b);
            quad::append(panels, quad::graded(a, mid, true, 50));
            quad::append(panels, quad::graded(mid, b, false, 50));
        } else if (sa || sb) {
            quad::append(panels, quad::graded(a, b, sa, 50));
        } else {
            quad::append(panels, quad::fromBreakpoints({a, b}, width));
        }
    }
    const auto outside = quad::integrateWithEstimate(panels, kernel, cfg.order, cfg.execution);

    // Windows: (i/pi)(1/2)[slice/(s1 - b) + slice/(s1 + b)], the singular half folded.
    Complex windows{};
    double windowError = 0.0;
    const auto wpanels = quad::fromBreakpoints({0.0, delta}, width);
    for (double pole : {s1, -s1}) {
        auto folded = [&](double u) { return (slice(pole + u) - slice(pole - u)) / u; };
        // the non-singular half: slice/(s1 + b) near s1, slice/(s1 - b) near -s1
        auto regular = [&](double b) { return 0.5 * kI / kPi * slice(b) / (s1 + pole / s1 * b); };
        const auto pv = quad::integrateWithEstimate(wpanels, folded, cfg.order, cfg.execution);
        const auto reg = quad::integrateWithEstimate(quad::fromBreakpoints({pole - delta, pole + delta}, width), regular,
                                                     cfg.order, cfg.execution);
        // pole = s1: PV int slice/(s1 - b) = -int_0 [slice(s1+u) - slice(s1-u)]/u du
        // pole = -s1: PV int slice/(s1 + b) = +int_0 [slice(-s1+u) - slice(-s1-u)]/u du
        const double sign = pole > 0.0 ? -1.0 : 1.0;
        windows += 0.5 * kI / kPi * sign * pv.value + reg.value;
        windowError += (pv.error + reg.error) / (2.0 * kPi);
    }
    const Complex spikes = 0.5 * (slice(s1) + slice(-s1));
    return {spikes + outside.value + windows, outside.error + windowError};
}

CylinderSpec projectLast(const CylinderSpec& spec) {
    if (spec.k() < 2) return spec;
    CylinderSpec p = spec;
    p.alpha = spec.alpha.leftCols(spec.k() - 1);
    return p;
}

CompatibilityReport marginalCompatibility(const CylinderSpec& spec, const BoxConfig& cfg) {
    CompatibilityReport rep{0.0, {}, {}, {}};
    const CylinderSpec proj = projectLast(spec);
    const double q = axisTime(spec, 0);
    const double unit = q > 0.0 ? q : 1.0;
    rep.boxes = {{-0.5 * unit, 0.5 * unit}, {-2.0 * unit, 2.0 * unit}, {0.3 * unit, 0.8 * unit},
                 {1.3 * unit, 3.0 * unit}, {-4.0 * unit, -1.5 * unit}};
    constexpr double kInf = std::numeric_limits<double>::infinity();
    for (const auto& iv : rep.boxes) {
        Complex full;
        Complex projected;
        if (spec.k() == 1) {
            full = projected = intervalMeasure1D(spec, iv.lo, iv.hi).value;
        } else if (spec.k() == 2) {
            projected = boxMeasureND(proj, {iv}, cfg).value;
            if (spec.separable()) {
                full = boxMeasureND(spec, {iv, {-kInf, kInf}}, cfg).value;
            } else {
                full = stripMeasureCoordinate(spec, iv).value;
            }
        } else {
            if (!spec.separable()) throw DomainError("compatibility for non-separable k = 3 bases is not supported");
            const Interval second{-unit, unit};
            projected = boxMeasureND(proj, {iv, second}, cfg).value;
            full = boxMeasureND(spec, {iv, second, {-kInf, kInf}}, cfg).value;
        }
        rep.full.push_back(full);
        rep.projected.push_back(projected);
        rep.residual = std::max(rep.residual, std::abs(full - projected));
    }
    return rep;
}

// ---------------------------------------------------------------- weak continuity

ContinuityTable weakContinuity(const std::vector<CylinderSpec>& sequence, const CylinderSpec& limit,
                               const TestFunction1D& f, const RegularizationConfig& cfg) {
    // int f C_{iT} = conj(<conj C_{iT}, conj f>)
    const TestFunction1D fc = f.conjugated();
    auto value = [&](const CylinderSpec& s) { return std::conj(pairCauchy1D(effectiveTime(s), fc, cfg).total); };

    ContinuityTable table{value(limit), {}, true, false};
    constexpr double kFloor = 1e-14;
    int rises = 0;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const Complex v = value(sequence[i]);
        const double r = std::abs(v - table.limit);
        if (!table.rows.empty()) {
            const double prev = table.rows.back().residual;
            const bool rise = r > kFloor && r >= prev;
            if (r > prev + kFloor) table.monotone = false;
            rises = rise ? rises + 1 : 0;
            if (rises >= 3) table.violation = true;
        }
        table.rows.push_back({static_cast<int>(i), effectiveTime(sequence[i]), v, r});
    }
    return table;
}

CylinderSpec stepApproximation(const std::function<double(double)>& alpha, double t, int pieces, double bound) {
    if (pieces < 1 || !(t > 0.0)) throw DomainError("step approximation needs pieces >= 1 and t > 0");
    std::vector<double> dt(static_cast<std::size_t>(pieces), t / pieces);
    Eigen::MatrixXd a(pieces, 1);
    for (int j = 0; j < pieces; ++j) a(j, 0) = alpha(t * j / pieces);
    return CylinderSpec::make(std::move(dt), std::move(a), bound);
}

}  // namespace qcauchy
