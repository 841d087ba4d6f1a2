#include "qcauchy/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qcauchy/errors.hpp"
#include "qcauchy/momentum.hpp"
#include "qcauchy/quasiclassical.hpp"
#include "qcauchy/radon.hpp"
#include "qcauchy/relativistic.hpp"
#include "qcauchy/semigroup.hpp"
#include "qcauchy/testfn.hpp"

namespace qcauchy {

namespace {

constexpr double kPi = std::numbers::pi;

double tol(const RunOptions& o, double fallback) { return o.tolerance.value_or(fallback); }

Json vecJson(const Vec3& p) { return Json::array({p[0], p[1], p[2]}); }

// Cell midpoints of a grid^3 lattice on [-pmax, pmax]^3; odd grids contain p = 0.
std::vector<Vec3> momentumGrid(int grid, double pmax) {
    if (grid < 1 || !(pmax > 0.0)) throw DomainError("momentum grid needs grid >= 1 and pmax > 0");
    std::vector<Vec3> out;
    auto coord = [&](int i) { return pmax * (2.0 * (i + 0.5) / grid - 1.0); };
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            for (int k = 0; k < grid; ++k) out.push_back({coord(i), coord(j), coord(k)});
    return out;
}

TestFunction1D probe1D(const std::string& kind, double width) {
    if (kind == "gaussian") return TestFunction1D::gaussianPacket(0.2, width, 0.7);
    if (kind == "bump") return TestFunction1D::standardBump(0.1, 2.0 * width);
    if (kind == "odd") return TestFunction1D::oddGaussian(width);
    throw DomainError("unknown probe '" + kind + "' (gaussian, bump, odd)");
}

Json doublesJson(const std::vector<double>& v) { return Json(v); }

}  // namespace

CylinderSpec namedSpec(const std::string& name) {
    if (name == "unit1") return CylinderSpec::make({1.0}, Eigen::MatrixXd::Ones(1, 1));
    if (name == "diag2") return CylinderSpec::make({0.5, 0.5}, Eigen::MatrixXd::Identity(2, 2));
    if (name == "rot2") {
        const double c = std::cos(0.3);
        const double s = std::sin(0.3);
        Eigen::MatrixXd a(2, 2);
        a << c, s, -s, c;
        return CylinderSpec::make({0.5, 0.5}, a);
    }
    if (name == "diag3") return CylinderSpec::make({0.3, 0.3, 0.4}, Eigen::MatrixXd::Identity(3, 3));
    throw DomainError("unknown spec '" + name + "' (unit1, diag2, rot2, diag3)");
}

std::vector<std::string> specNames() { return {"unit1", "diag2", "rot2", "diag3"}; }

// ---------------------------------------------------------------- pairings

ExperimentReport runPair(const PairParams& p, const RunOptions& o) {
    ExperimentReport r("pair", {{"t", p.t}, {"m", p.m}, {"probe", p.probe}, {"widths", doublesJson(p.widths)}},
                       o.seed);
    for (double w : p.widths) {
        const auto phi = probe1D(p.probe, w);
        const auto coord = p.m > 0.0 ? pairCauchyMassive1D(p.t, p.m, phi) : pairCauchy1D(p.t, phi);
        const Complex mom = pairViaParseval({p.m, p.t, 1}, phi);
        const double res = std::abs(coord.total - mom) / std::max(std::abs(mom), 1e-300);
        r.addRow({{"width", w}},
                 {{"coordinate", toJson(coord.total)},
                  {"parseval", toJson(mom)},
                  {"delta_part", toJson(coord.delta_part)},
                  {"quadrature_error_estimate", coord.quadrature_error_estimate}},
                 res, tol(o, 1e-6));
    }
    return r;
}

ExperimentReport runPair3D(const Pair3DParams& p, const RunOptions& o) {
    ExperimentReport r("pair3d", {{"t", p.t}, {"m", p.m}, {"widths", doublesJson(p.widths)}}, o.seed);
    for (double w : p.widths) {
        const auto phi = TestFunction3D::gaussianPacket({0.0, 0.0, 0.0}, w);
        const auto coord = pairCauchy3D(p.t, p.m, phi);
        const Complex mom = pairViaParseval({p.m, p.t, 3}, phi);
        const double res = std::abs(coord.total - mom) / std::max(std::abs(mom), 1e-300);
        r.addRow({{"width", w}},
                 {{"coordinate", toJson(coord.total)},
                  {"parseval", toJson(mom)},
                  {"delta_part", toJson(coord.delta_part)},
                  {"quadrature_error_estimate", coord.quadrature_error_estimate}},
                 res, tol(o, 1e-4));
    }
    return r;
}

// ---------------------------------------------------------------- semigroup

ExperimentReport runSemigroup(const SemigroupParams& p, const RunOptions& o) {
    ExperimentReport r("semigroup",
                       {{"m", p.m}, {"dt1", p.dt1}, {"dt2", p.dt2}, {"width", p.width}, {"cases", p.cases}}, o.seed);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> steps(1, 64);
    std::uniform_real_distribution<double> inc(0.01, 1.0);
    std::uniform_real_distribution<double> mass(0.0, 3.0);
    std::uniform_real_distribution<double> mom(-20.0, 20.0);
    double worst = 0.0;
    double reversal = 0.0;
    for (int c = 0; c < p.cases; ++c) {
        std::vector<double> d(static_cast<std::size_t>(steps(rng)));
        for (auto& v : d) v = inc(rng);
        const auto part = Partition::fromIncrements(d);
        const double m = mass(rng);
        const double q = mom(rng);
        worst = std::max(worst, semigroupSymbolCheck(m, part, q));
        reversal = std::max(reversal, std::abs(std::conj(symbol(m, part.total(), q)) - symbol(m, -part.total(), q)));
    }
    r.addRow({{"check", "symbol"}}, {{"max_residual", worst}}, worst, tol(o, 1e-12));
    r.addRow({{"check", "time_reversal"}}, {{"max_residual", reversal}}, reversal, tol(o, 0.0));

    const auto phi = TestFunction1D::gaussianPacket(0.2, p.width, 0.7);
    const auto c = semigroupCoordinateCheck(p.m, Partition::fromIncrements({p.dt1, p.dt2}), phi);
    r.addRow({{"check", "coordinate"}},
             {{"convolution", toJson(c.convolution)},
              {"direct", toJson(c.direct)},
              {"delta_delta", toJson(c.deltaDelta)},
              {"delta_regular", toJson(c.deltaRegular)},
              {"regular_delta", toJson(c.regularDelta)},
              {"regular_regular", toJson(c.regularRegular)}},
             c.residual, tol(o, 1e-4));
    return r;
}

ExperimentReport runEvolution(const EvolutionParams& p, const RunOptions& o) {
    ExperimentReport r("evolution", {{"t", p.t}, {"h", p.h}, {"width", p.width}}, o.seed);
    const auto phi = TestFunction1D::gaussianPacket(0.2, p.width, 0.7);
    const auto e = evolutionEquationCheck(p.t, phi, p.h);
    r.addRow({{"h", p.h}}, {{"finite_difference", toJson(e.finiteDifference)}, {"momentum_side", toJson(e.momentumSide)}},
             e.residual, tol(o, 1e-4));
    r.addRow({{"h", 0.5 * p.h}}, {{"momentum_side", toJson(e.momentumSide)}}, e.residualHalf, tol(o, 1e-4));
    r.addRow({{"check", "order"}}, {{"ratio", e.ratio}}, std::abs(e.ratio - 4.0), tol(o, 0.5));
    return r;
}

// ---------------------------------------------------------------- pre-measures

ExperimentReport runPremeasure(const PremeasureParams& p, const RunOptions& o) {
    const CylinderSpec spec = namedSpec(p.spec);
    ExperimentReport r("premeasure", {{"spec", p.spec}, {"cases", p.cases}}, o.seed);

    // Total mass over a wide cube; the tails beyond it are O(T / cube).
    constexpr double kCube = 1e4;
    BoxConfig wide;
    wide.mollifierFraction = 0.2;
    const std::vector<Interval> full(static_cast<std::size_t>(spec.k()), Interval{-kCube, kCube});
    const auto total = boxMeasureND(spec, full, wide);
    r.addRow({{"check", "normalization"}}, {{"measure", toJson(total.value)}, {"error", total.error}},
             std::abs(total.value - 1.0), tol(o, 1e-3));

    if (spec.k() == 1) {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<int> steps(1, 4);
        std::uniform_real_distribution<double> dt(0.1, 1.0);
        std::uniform_real_distribution<double> coef(0.2, 2.0);
        std::uniform_real_distribution<double> edge(-3.0, 3.0);
        std::bernoulli_distribution sign;
        for (int c = 0; c < p.cases; ++c) {
            const int n = steps(rng);
            std::vector<double> d(static_cast<std::size_t>(n));
            Eigen::MatrixXd a(n, 1);
            for (int j = 0; j < n; ++j) {
                d[static_cast<std::size_t>(j)] = dt(rng);
                a(j, 0) = (sign(rng) ? 1.0 : -1.0) * coef(rng);
            }
            const auto s = CylinderSpec::make(d, a);
            const double T = effectiveTime(s);
            double lo = edge(rng);
            double hi = edge(rng);
            // keep both edges clear of the singular points +-T
            while (std::min({std::abs(lo - T), std::abs(lo + T), std::abs(hi - T), std::abs(hi + T),
                             std::abs(hi - lo)}) < 0.05) {
                lo = edge(rng);
                hi = edge(rng);
            }
            if (lo > hi) std::swap(lo, hi);
            const auto num = boxMeasureND(s, {{lo, hi}});
            const auto exact = intervalMeasure1D(s, lo, hi);
            r.addRow({{"check", "closed_form"}, {"case", c}, {"T", T}, {"a", lo}, {"b", hi}},
                     {{"numeric", toJson(num.value)}, {"closed_form", toJson(exact.value)}},
                     std::abs(num.value - exact.value), tol(o, 1e-6));
        }
    }

    if (spec.separable()) {
        // box measure against the product of 1-D closed forms along each axis
        std::vector<Interval> box;
        Complex product{1.0, 0.0};
        for (int k = 0; k < spec.k(); ++k) {
            double Tk = 0.0;
            for (int j = 0; j < spec.n(); ++j) Tk += std::abs(spec.alpha(j, k)) * spec.delta_t[static_cast<std::size_t>(j)];
            const Interval iv{-0.4 * Tk + 0.1 * k, 1.7 * Tk};
            box.push_back(iv);
            product *= intervalMeasureT(Tk, iv.lo, iv.hi).value;
        }
        const auto num = boxMeasureND(spec, box);
        r.addRow({{"check", "factorization"}}, {{"numeric", toJson(num.value)}, {"product", toJson(product)}},
                 std::abs(num.value - product), tol(o, 1e-6));
    }

    if (spec.k() >= 2) {
        const auto c = marginalCompatibility(spec);
        Json boxes = Json::array();
        for (std::size_t i = 0; i < c.boxes.size(); ++i) {
            boxes.push_back({{"lo", c.boxes[i].lo},
                             {"hi", c.boxes[i].hi},
                             {"full", toJson(c.full[i])},
                             {"projected", toJson(c.projected[i])}});
        }
        r.addRow({{"check", "marginal_compatibility"}}, {{"boxes", boxes}}, c.residual, tol(o, 1e-6));
    }
    return r;
}

// ---------------------------------------------------------------- Radon view

namespace {

std::vector<Eigen::VectorXd> sampleDirections(int k) {
    std::vector<Eigen::VectorXd> out;
    if (k == 1) {
        out.push_back(Eigen::VectorXd::Ones(1));
        out.push_back(-Eigen::VectorXd::Ones(1));
        return out;
    }
    if (k == 2) {
        for (double th : {0.0, 0.7, 2.1, 4.0}) {
            Eigen::VectorXd v(2);
            v << std::cos(th), std::sin(th);
            out.push_back(v);
        }
        return out;
    }
    for (const auto& [th, ph] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {0.9, 0.4}, {2.0, 2.5}, {1.3, 5.0}}) {
        Eigen::VectorXd v(3);
        v << std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th);
        out.push_back(v);
    }
    return out;
}

}  // namespace

ExperimentReport runBall(const BallParams& p, const RunOptions& o) {
    const CylinderSpec spec = namedSpec(p.spec);
    ExperimentReport r("ball", {{"spec", p.spec}, {"ratios", doublesJson(p.ratios)}}, o.seed);
    if (p.ratios.empty()) throw DomainError("ball sweep needs at least one ratio");
    const double qmax = maxRadonQ(spec);
    const Eigen::VectorXd xi = sampleDirections(spec.k()).front();
    const double qxi = radonQ(spec, xi);

    std::vector<double> halfIm;
    std::vector<double> ballIm;
    for (double ratio : p.ratios) {
        const Complex half = halfSpaceMeasure({spec, xi, ratio * qxi});
        const Complex ball = ballComplementMeasure(spec, ratio * qmax);
        halfIm.push_back(half.imag());
        ballIm.push_back(ball.imag());
        r.addRow({{"ratio", ratio}, {"R_half_space", ratio * qxi}, {"rho_ball", ratio * qmax}},
                 {{"half_space", toJson(half)}, {"ball_complement", toJson(ball)}},
                 std::max(std::abs(half.real()), std::abs(ball.real())), tol(o, 1e-10));
    }
    auto summarize = [&](const std::string& what, const std::vector<double>& im) {
        int positive = 0;
        int rises = 0;
        for (std::size_t i = 0; i < im.size(); ++i) {
            positive += !(im[i] < 0.0);
            if (i > 0) rises += !(std::abs(im[i]) < std::abs(im[i - 1]));
        }
        r.addRow({{"check", what + "_sign"}}, {{"non_negative_count", positive}}, positive, tol(o, 0.0));
        r.addRow({{"check", what + "_monotone"}}, {{"non_decreasing_steps", rises}}, rises, tol(o, 0.0));
        const double decay = std::abs(im.back()) / std::abs(im.front());
        r.addRow({{"check", what + "_decay"}}, {{"final_over_initial", decay}}, decay, tol(o, 0.2));
    };
    summarize("half_space", halfIm);
    summarize("ball_complement", ballIm);
    return r;
}

ExperimentReport runRadon(const RadonParams& p, const RunOptions& o) {
    const CylinderSpec spec = namedSpec(p.spec);
    ExperimentReport r("radon", {{"spec", p.spec}, {"ratio", p.ratio}}, o.seed);
    const double qmax = maxRadonQ(spec);
    const double R = p.ratio * qmax;

    for (const auto& xi : sampleDirections(spec.k())) {
        const double q = radonQ(spec, xi);
        const Complex half = halfSpaceMeasure({spec, xi, R});
        const Complex tail = intervalMeasureT(q, R, std::numeric_limits<double>::infinity()).value;
        r.addRow({{"check", "interval_tail"}, {"xi", Json(std::vector<double>(xi.data(), xi.data() + xi.size()))}, {"R", R}},
                 {{"Q", q}, {"half_space", toJson(half)}, {"interval_tail", toJson(tail)}}, std::abs(half - tail),
                 tol(o, 1e-12));
    }

    const Eigen::VectorXd xi = sampleDirections(spec.k()).front();
    const double q = radonQ(spec, xi);
    const Complex atHalf = halfSpaceMeasure({spec, xi, 2.0 * q});
    const Complex expected(0.0, -std::log(3.0) / (2.0 * kPi));
    r.addRow({{"check", "P_one_half"}}, {{"value", toJson(atHalf)}, {"expected", toJson(expected)}},
             std::abs(atHalf - expected), tol(o, 1e-15));

    if (spec.k() >= 2) {
        const auto geo = sphereAverageIdentity(spec, R, {spec.k(), CapVariant::geometric});
        const auto pap = sphereAverageIdentity(spec, R, {spec.k(), CapVariant::cosn});
        r.addRow({{"check", "sphere_average_identity"}, {"R", R}},
                 {{"lhs", toJson(geo.lhs)},
                  {"rhs_geometric", toJson(geo.rhs)},
                  {"rhs_cosn", toJson(pap.rhs)},
                  {"cosn_discrepancy", pap.residual}},
                 geo.residual, tol(o, 1e-8));
    }
    return r;
}

ExperimentReport runCap(const CapParams& p, const RunOptions& o) {
    ExperimentReport r("cap", {{"dims", Json(p.dims)}, {"ratio", p.ratio}, {"samples", p.samples}}, o.seed);
    for (int n : p.dims) {
        const double geo = capAverage({n, CapVariant::geometric}, p.ratio, 1.0);
        const double pap = capAverage({n, CapVariant::cosn}, p.ratio, 1.0);
        const auto mc = capFractionMonteCarlo(n, p.ratio, p.samples, o.seed + static_cast<std::uint64_t>(n));
        const double z = std::abs(geo - mc.fraction) / std::max(mc.sigma, 1e-300);
        r.addRow({{"n", n}},
                 {{"geometric", geo},
                  {"cosn", pap},
                  {"monte_carlo", mc.fraction},
                  {"sigma", mc.sigma},
                  {"cosn_discrepancy", std::abs(pap - geo)}},
                 z, tol(o, 3.0));
    }
    return r;
}

ExperimentReport runGaussianLimit(const GaussianLimitParams& p, const RunOptions& o) {
    ExperimentReport r("gaussian-limit", {{"dims", Json(p.dims)}, {"ratio", p.ratio}, {"variant", p.variant}},
                       o.seed);
    if (p.variant != "geometric" && p.variant != "cosn") throw DomainError("variant must be geometric or cosn");
    const CapVariant v = p.variant == "cosn" ? CapVariant::cosn : CapVariant::geometric;
    std::vector<double> gaps;
    for (int n : p.dims) {
        const auto g = gaussianLimit(n, p.ratio, v);
        gaps.push_back(g.relativeGap);
        r.addRow({{"n", n}}, {{"exact", g.exact}, {"gaussian", g.gaussian}}, g.relativeGap, tol(o, 0.02));
    }
    if (gaps.size() >= 2) {
        const double shrink = gaps.back() / gaps.front();
        r.addRow({{"check", "shrinking"}}, {{"last_over_first", shrink}}, shrink, tol(o, 1.0));
    }
    return r;
}

// ---------------------------------------------------------------- relativistic

ExperimentReport runFw(const FwParams& p, const RunOptions& o) {
    ExperimentReport r("fw", {{"grid", p.grid}, {"pmax", p.pmax}, {"masses", doublesJson(p.masses)}, {"t", p.t}},
                       o.seed);
    const auto& g = diracBasis().gamma;
    double clifford = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const double eta = mu != nu ? 0.0 : mu == 0 ? 2.0 : -2.0;
            const Mat4 anti = g[static_cast<std::size_t>(mu)] * g[static_cast<std::size_t>(nu)] +
                              g[static_cast<std::size_t>(nu)] * g[static_cast<std::size_t>(mu)];
            clifford = std::max(clifford, maxAbs(anti - eta * Mat4::Identity()));
        }
    }
    r.addRow({{"check", "clifford"}}, {{"max_residual", clifford}}, clifford, tol(o, 0.0));

    const auto grid = momentumGrid(p.grid, p.pmax);
    const Mat4 id = Mat4::Identity();
    for (double m : p.masses) {
        double unitary = 0.0, hermitian = 0.0, involutive = 0.0, diag = 0.0, route = 0.0;
        for (const auto& q : grid) {
            const auto fw = fwUnitary(q, m);
            const Mat4& T = fw.matrix;
            unitary = std::max(unitary, maxAbs(T.adjoint() * T - id));
            hermitian = std::max(hermitian, maxAbs(T - T.adjoint()));
            involutive = std::max(involutive, maxAbs(T * T - id));
            diag = std::max(diag, maxAbs(T * diracHamiltonian(q, m) * T - fw.energy * g[0]));
            route = std::max(route, maxAbs(diracSymbol(q, m, p.t) - diracSymbolExp(q, m, p.t)));
        }
        r.addRow({{"check", "unitary"}, {"m", m}}, {{"max_residual", unitary}}, unitary, tol(o, 1e-12));
        r.addRow({{"check", "hermitian"}, {"m", m}}, {{"max_residual", hermitian}}, hermitian, tol(o, 1e-12));
        r.addRow({{"check", "involutive"}, {"m", m}}, {{"max_residual", involutive}}, involutive, tol(o, 1e-12));
        r.addRow({{"check", "diagonalization"}, {"m", m}}, {{"max_residual", diag}}, diag, tol(o, 1e-12));
        r.addRow({{"check", "fw_vs_exponential"}, {"m", m}}, {{"max_residual", route}}, route, tol(o, 1e-11));
    }
    return r;
}

namespace {

Mat3 photonEvolutionDefect(const Vec3& p, double t, double h) {
    return kI * (photonSymbol(p, t + h) - photonSymbol(p, t - h)) / (2.0 * h) - spinDot(p) * photonSymbol(p, t);
}

}  // namespace

ExperimentReport runMaxwell(const MaxwellParams& p, const RunOptions& o) {
    ExperimentReport r("maxwell", {{"grid", p.grid}, {"pmax", p.pmax}, {"t", p.t}, {"h", p.h}}, o.seed);
    const auto s = photonSpinMatrices().s;
    double comm = 0.0;
    for (int j = 0; j < 3; ++j) {
        const int k = (j + 1) % 3;
        const int l = (j + 2) % 3;
        const Mat3 c = s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k)] -
                       s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(j)];
        comm = std::max(comm, maxAbs(c - kI * s[static_cast<std::size_t>(l)]));
    }
    r.addRow({{"check", "spin_commutators"}}, {{"max_residual", comm}}, comm, tol(o, 0.0));

    double spectrum = 0.0, unitary = 0.0, symbolUnitary = 0.0;
    const Mat3 id = Mat3::Identity();
    for (const auto& q : momentumGrid(p.grid, p.pmax)) {
        const Mat3 M = photonSymbol(q, p.t);
        symbolUnitary = std::max(symbolUnitary, maxAbs(M.adjoint() * M - id));
        const double rho = norm(q);
        if (rho == 0.0) continue;  // no helicity frame; the symbol is the identity there
        const Mat3 Q = helicityDiagonalizer(q).q;
        Mat3 expected = Mat3::Zero();
        expected(0, 0) = rho;
        expected(1, 1) = -rho;
        spectrum = std::max(spectrum, maxAbs(Q * spinDot(q) * Q.adjoint() - expected));
        unitary = std::max(unitary, maxAbs(Q * Q.adjoint() - id));
    }
    r.addRow({{"check", "spectrum"}}, {{"max_residual", spectrum}}, spectrum, tol(o, 1e-12));
    r.addRow({{"check", "diagonalizer_unitary"}}, {{"max_residual", unitary}}, unitary, tol(o, 1e-13));
    r.addRow({{"check", "symbol_unitary"}}, {{"max_residual", symbolUnitary}}, symbolUnitary, tol(o, 1e-12));

    const Vec3 q{0.3, -0.5, 0.8};
    const double e1 = maxAbs(photonEvolutionDefect(q, p.t, p.h));
    const double e2 = maxAbs(photonEvolutionDefect(q, p.t, 0.5 * p.h));
    const double ratio = e1 / e2;
    r.addRow({{"check", "evolution_order"}, {"p", vecJson(q)}},
             {{"residual_h", e1}, {"residual_half_h", e2}, {"ratio", ratio}}, std::abs(ratio - 4.0), tol(o, 0.5));
    return r;
}

ExperimentReport runPauliJordan(const PauliJordanParams& p, const RunOptions& o) {
    ExperimentReport r("pauli-jordan",
                       {{"grid", p.grid}, {"pmax", p.pmax}, {"m", p.m}, {"t", p.t}, {"j1_mass", p.j1Mass}}, o.seed);
    double kg = 0.0, route = 0.0, alternative = 0.0;
    for (const auto& q : momentumGrid(p.grid, p.pmax)) {
        const double e = std::sqrt(p.m * p.m + dot(q, q));
        kg = std::max(kg, kleinGordonResidual(e, p.t));
        const auto c = pauliJordanSymbolCheck(q, p.m, p.t);
        route = std::max(route, c.residual);
        alternative = std::max(alternative, c.alternativeResidual);
    }
    r.addRow({{"check", "klein_gordon"}}, {{"max_residual", kg}}, kg, tol(o, 1e-12));
    r.addRow({{"check", "dirac_from_kg"}}, {{"max_residual", route}, {"alternative_sign_residual", alternative}},
             route, tol(o, 1e-10));

    const auto j1 = j1ConventionCheck(p.t, 1.3, p.j1Mass);
    r.addRow({{"check", "j1_argument"}, {"rho", 1.3}, {"mass", p.j1Mass}},
             {{"selected", j1.selected},
              {"mass_argument_residual", j1.massArgumentResidual},
              {"bare_argument_residual", j1.bareArgumentResidual}},
             std::min(j1.massArgumentResidual, j1.bareArgumentResidual), tol(o, 1e-4));
    const int unique = j1.selected == "m*l" || j1.selected == "l" ? 0 : 1;
    r.addRow({{"check", "j1_unique"}}, {{"selected", j1.selected}}, unique, tol(o, 0.0));
    return r;
}

// ---------------------------------------------------------------- quasi-classics

ExperimentReport runBFactor(const BFactorParams& p, const RunOptions& o) {
    ExperimentReport r("bfactor", {{"t", p.t}, {"m", p.m}}, o.seed);
    struct Probe {
        std::string name;
        TestFunction1D phi;
    };
    const std::vector<Probe> probes{
        {"interior_bump", TestFunction1D::standardBump(0.1 * p.t, 0.6 * p.t)},
        {"interior_gaussian", TestFunction1D::gaussianPacket(0.0, 0.08 * p.t, 0.0)},
        {"exterior_bump", TestFunction1D::standardBump(2.0 * p.t, 0.5 * p.t)},
    };
    for (const auto& pr : probes) {
        const auto c = massiveViaBCheck(p.t, p.m, pr.phi);
        r.addRow({{"probe", pr.name}},
                 {{"via_b", toJson(c.viaB)}, {"massive", toJson(c.massive)}, {"direct", toJson(c.direct)},
                  {"exterior", c.exterior}},
                 c.residual, tol(o, 1e-5));
    }
    return r;
}

ExperimentReport runEikonal(const EikonalParams& p, const RunOptions& o) {
    ExperimentReport r("eikonal", {{"t", p.t}, {"m", p.m}, {"eikonals", doublesJson(p.eikonals)}}, o.seed);
    for (double s : p.eikonals) {
        const double l = s / p.m;
        if (!(l < p.t)) throw DomainError("eikonal m*l needs l < t");
        const double x = std::sqrt(p.t * p.t - l * l);
        const auto e = eikonalError(p.t, x, p.m);
        // the same point at twice the mass: the O(1/z) complex error halves
        const auto e2 = eikonalError(p.t, std::sqrt(p.t * p.t - 0.25 * l * l), 2.0 * p.m);
        r.addRow({{"m_l", s}, {"x", x}},
                 {{"exact", toJson(e.exact)},
                  {"asymptotic", toJson(e.asymptotic)},
                  {"complex_error", e.complexError},
                  {"complex_error_ratio_2m", e.complexError / e2.complexError}},
                 e.modulusError, tol(o, s >= 50.0 ? 3e-3 : 1e-2));
    }
    return r;
}

ExperimentReport runClassicalLimit(const ClassicalLimitParams& p, const RunOptions& o) {
    ExperimentReport r("classical-limit", {{"rho", p.rho}, {"masses", doublesJson(p.masses)}}, o.seed);
    const Vec3 q{p.rho / 3.0, 2.0 * p.rho / 3.0, 2.0 * p.rho / 3.0};
    const auto rows = fwClassicalLimit(q, p.masses);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Json out{{"deviation", rows[i].deviation}};
        if (i == 0) {
            r.addRow({{"m", rows[i].m}}, out, 0.0, tol(o, 0.0));
            continue;
        }
        // deviation ~ rho/m: ratio per step should track the mass ratio
        const double ratio = rows[i - 1].deviation / rows[i].deviation;
        const double massRatio = rows[i].m / rows[i - 1].m;
        out["ratio"] = ratio;
        out["mass_ratio"] = massRatio;
        r.addRow({{"m", rows[i].m}}, out, std::abs(ratio / massRatio - 1.0) * 10.0, tol(o, 1.0));
    }
    return r;
}

}  // namespace qcauchy
