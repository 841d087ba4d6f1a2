// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance <path-to-qcauchy-cli>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "qcauchy/errors.hpp"
#include "qcauchy/momentum.hpp"
#include "qcauchy/premeasure.hpp"
#include "qcauchy/quasiclassical.hpp"
#include "qcauchy/radon.hpp"
#include "qcauchy/relativistic.hpp"
#include "qcauchy/semigroup.hpp"
#include "qcauchy/specfun.hpp"
#include "qcauchy/testfn.hpp"

using namespace qcauchy;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::vector<Vec3> grid125(double pmax) {
    std::vector<Vec3> out;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) out.push_back({pmax * (i - 2) / 2.0, pmax * (j - 2) / 2.0, pmax * (k - 2) / 2.0});
    return out;
}

// 1
Outcome parseval() {
    double w1 = 0.0, w3 = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        for (double m : {0.0, 1.0}) {
            for (double w : {0.5, 1.0, 2.0}) {
                const auto phi = TestFunction1D::gaussianPacket(0.2, w, 0.7);
                const auto c = m > 0.0 ? pairCauchyMassive1D(t, m, phi) : pairCauchy1D(t, phi);
                const Complex p = pairViaParseval({m, t, 1}, phi);
                w1 = std::max(w1, std::abs(c.total - p) / std::abs(p));
                const auto phi3 = TestFunction3D::gaussianPacket({0, 0, 0}, w);
                const auto c3 = pairCauchy3D(t, m, phi3);
                const Complex p3 = pairViaParseval({m, t, 3}, phi3);
                w3 = std::max(w3, std::abs(c3.total - p3) / std::abs(p3));
            }
        }
    }
    return {w1 <= 1e-5 && w3 <= 1e-3, fmt("d=1 worst %.2e (<= 1e-5)", w1) + fmt(", d=3 worst %.2e (<= 1e-3)", w3)};
}

// 2
Outcome semigroup() {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> steps(1, 64);
    std::uniform_real_distribution<double> inc(0.001, 1.0), mass(0.0, 3.0), mom(-20.0, 20.0);
    double sym = 0.0;
    for (int c = 0; c < 1000; ++c) {
        std::vector<double> d(static_cast<std::size_t>(steps(rng)));
        for (auto& v : d) v = inc(rng);
        sym = std::max(sym, semigroupSymbolCheck(mass(rng), Partition::fromIncrements(d), mom(rng)));
    }
    double coord = 0.0;
    for (double w : {0.5, 1.0}) {
        const auto phi = TestFunction1D::gaussianPacket(0.2, w, 0.7);
        coord = std::max(coord, semigroupCoordinateCheck(0.0, Partition::fromIncrements({0.5, 0.5}), phi).residual);
    }
    return {sym <= 1e-12 && coord <= 1e-4,
            fmt("symbol worst %.2e (<= 1e-12)", sym) + fmt(", n=2 convolution worst %.2e (<= 1e-4)", coord)};
}

// 3
Outcome premeasureClosedForm() {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> steps(1, 4);
    std::uniform_real_distribution<double> dt(0.1, 1.0), coef(0.2, 2.0), edge(-3.0, 3.0);
    std::bernoulli_distribution sign;
    double closed = 0.0;
    for (int c = 0; c < 20;) {
        const int n = steps(rng);
        std::vector<double> d(static_cast<std::size_t>(n));
        Eigen::MatrixXd a(n, 1);
        for (int j = 0; j < n; ++j) {
            d[static_cast<std::size_t>(j)] = dt(rng);
            a(j, 0) = (sign(rng) ? 1.0 : -1.0) * coef(rng);
        }
        const auto s = CylinderSpec::make(d, a);
        const double T = effectiveTime(s);
        double lo = edge(rng), hi = edge(rng);
        if (lo > hi) std::swap(lo, hi);
        if (std::min({std::abs(lo - T), std::abs(lo + T), std::abs(hi - T), std::abs(hi + T), hi - lo}) < 0.05) continue;
        closed = std::max(closed, std::abs(boxMeasureND(s, {{lo, hi}}).value - intervalMeasure1D(s, lo, hi).value));
        ++c;
    }
    BoxConfig wide;
    wide.mollifierFraction = 0.2;
    Eigen::MatrixXd rot(2, 2);
    rot << std::cos(0.3), std::sin(0.3), -std::sin(0.3), std::cos(0.3);
    const auto diag = CylinderSpec::make({0.5, 0.5}, Eigen::MatrixXd::Identity(2, 2));
    double norm1 = 0.0;
    for (const auto& s : {diag, CylinderSpec::make({0.5, 0.5}, rot)}) {
        norm1 = std::max(norm1, std::abs(boxMeasureND(s, {{-1e4, 1e4}, {-1e4, 1e4}}, wide).value - 1.0));
    }
    const auto d2 = CylinderSpec::make({0.3, 0.7}, Eigen::MatrixXd::Identity(2, 2));
    const Complex prod = intervalMeasureT(0.3, -0.1, 0.5).value * intervalMeasureT(0.7, 0.2, 1.4).value;
    const double fact = std::abs(boxMeasureND(d2, {{-0.1, 0.5}, {0.2, 1.4}}).value - prod);
    return {closed <= 1e-6 && norm1 <= 1e-3 && fact <= 1e-6,
            fmt("closed form worst %.2e (<= 1e-6)", closed) + fmt(", |M-1| %.2e (<= 1e-3)", norm1) +
                fmt(", factorization %.2e (<= 1e-6)", fact)};
}

// 4
Outcome signAndDecay() {
    bool ok = true;
    double worstRe = 0.0, worstDecay = 0.0;
    const auto one = CylinderSpec::make({0.4, 0.6}, Eigen::MatrixXd::Ones(2, 1));
    const auto two = CylinderSpec::make({0.5, 0.5}, Eigen::MatrixXd::Identity(2, 2));
    for (const auto& s : {one, two}) {
        Eigen::VectorXd xi = Eigen::VectorXd::Zero(s.k());
        xi(0) = 1.0;
        const double q = radonQ(s, xi);
        const double qmax = maxRadonQ(s);
        std::vector<Complex> half, ball;
        for (double r : {2.0, 4.0, 8.0, 16.0}) {
            half.push_back(halfSpaceMeasure({s, xi, r * q}));
            ball.push_back(ballComplementMeasure(s, r * qmax));
        }
        for (const auto* seq : {&half, &ball}) {
            for (std::size_t i = 0; i < seq->size(); ++i) {
                worstRe = std::max(worstRe, std::abs((*seq)[i].real()));
                ok = ok && (*seq)[i].imag() < 0.0;
                if (i > 0) ok = ok && std::abs((*seq)[i].imag()) < std::abs((*seq)[i - 1].imag());
            }
            const double decay = std::abs(seq->back().imag()) / std::abs(seq->front().imag());
            worstDecay = std::max(worstDecay, decay);
        }
    }
    ok = ok && worstRe <= 1e-10 && worstDecay <= 0.2;
    return {ok, fmt("max |Re| %.2e (<= 1e-10)", worstRe) + ", Im < 0 and strictly decaying" +
                    fmt(", final/initial %.3f (<= 0.2)", worstDecay)};
}

// 5
Outcome radonConsistency() {
    const auto s = CylinderSpec::make({0.4, 0.6}, Eigen::MatrixXd::Ones(2, 1));
    double worst = 0.0;
    for (double xi : {1.0, -1.0}) {
        for (double R : {1.1, 2.0, 7.5, 100.0}) {
            const Complex h = halfSpaceMeasure({s, Eigen::VectorXd::Constant(1, xi), R});
            worst = std::max(worst, std::abs(h - intervalMeasureT(1.0, R, kInf).value));
        }
    }
    const Complex half = halfSpaceMeasure({s, Eigen::VectorXd::Constant(1, 1.0), 2.0});
    const double p = std::abs(half - Complex(0.0, -std::log(3.0) / (2.0 * kPi)));
    return {worst <= 1e-12 && p <= 1e-16,
            fmt("k=1 tail worst %.2e (<= 1e-12)", worst) + fmt(", P=1/2 deviation %.1e", p)};
}

// 6
Outcome capArbitration() {
    bool ok = true;
    std::string detail;
    for (int n : {2, 3}) {
        const auto mc = capFractionMonteCarlo(n, 0.5, 1000000, 600 + static_cast<std::uint64_t>(n));
        const double geo = capAverage({n, CapVariant::geometric}, 0.5, 1.0);
        const double z = std::abs(geo - mc.fraction) / mc.sigma;
        ok = ok && z <= 3.0;
        detail += fmt("n=%.0f: ", n) + fmt("%.2f sigma; ", z);
    }
    const double cosn = capAverage({3, CapVariant::cosn}, 0.5, 1.0);
    const double geo3 = capAverage({3, CapVariant::geometric}, 0.5, 1.0);
    detail += fmt("cos^n variant n=3 %.5f", cosn) + fmt(" vs %.5f; ", geo3);
    const auto g100 = gaussianLimit(100, 0.1);
    const auto g400 = gaussianLimit(400, 0.1);
    ok = ok && cosn != geo3 && g100.relativeGap <= 0.02 && g400.relativeGap < g100.relativeGap;
    detail += fmt("Gaussian gap %.4f", g100.relativeGap) + fmt(" -> %.4f", g400.relativeGap);
    return {ok, detail};
}

// 7
Outcome diracAlgebra() {
    const auto& g = diracBasis().gamma;
    double cliff = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const double eta = mu != nu ? 0.0 : (mu == 0 ? 2.0 : -2.0);
            cliff = std::max(cliff, maxAbs(g[mu] * g[nu] + g[nu] * g[mu] - eta * Mat4::Identity()));
        }
    double props = 0.0, diag = 0.0, route = 0.0;
    for (double m : {0.5, 1.0, 2.0}) {
        for (const auto& p : grid125(2.0)) {
            const auto fw = fwUnitary(p, m);
            const Mat4& T = fw.matrix;
            props = std::max({props, maxAbs(T.adjoint() * T - Mat4::Identity()), maxAbs(T - T.adjoint()),
                              maxAbs(T * T - Mat4::Identity())});
            diag = std::max(diag, maxAbs(T * diracHamiltonian(p, m) * T - fw.energy * g[0]));
            route = std::max(route, maxAbs(diracSymbol(p, m, 1.0) - diracSymbolExp(p, m, 1.0)));
        }
    }
    return {cliff == 0.0 && props <= 1e-12 && diag <= 1e-12 && route <= 1e-11,
            fmt("Clifford %.0e, ", cliff) + fmt("T^m properties %.2e, ", props) + fmt("diagonalization %.2e, ", diag) +
                fmt("FW vs exp %.2e", route)};
}

// 8
Outcome photon() {
    const auto s = photonSpinMatrices().s;
    double comm = 0.0;
    for (int j = 0; j < 3; ++j) {
        const int k = (j + 1) % 3, l = (j + 2) % 3;
        comm = std::max(comm, maxAbs(s[j] * s[k] - s[k] * s[j] - Complex(0.0, 1.0) * s[l]));
    }
    double spec = 0.0, unit = 0.0;
    for (const auto& p : grid125(2.0)) {
        const double rho = norm(p);
        if (rho == 0.0) continue;
        const Mat3 q = helicityDiagonalizer(p).q;
        Mat3 e = Mat3::Zero();
        e(0, 0) = rho;
        e(1, 1) = -rho;
        spec = std::max(spec, maxAbs(q * spinDot(p) * q.adjoint() - e));
        unit = std::max(unit, maxAbs(q * q.adjoint() - Mat3::Identity()));
    }
    const Vec3 p{0.3, -0.5, 0.8};
    auto defect = [&](double h) {
        return maxAbs(Complex(0.0, 1.0) * (photonSymbol(p, 1.0 + h) - photonSymbol(p, 1.0 - h)) / (2.0 * h) -
                      spinDot(p) * photonSymbol(p, 1.0));
    };
    const double ratio = defect(1e-2) / defect(5e-3);
    return {comm == 0.0 && spec <= 1e-12 && unit <= 1e-13 && std::abs(ratio - 4.0) <= 0.5,
            fmt("commutators %.0e, ", comm) + fmt("spectrum %.2e, ", spec) + fmt("unitarity %.2e, ", unit) +
                fmt("evolution ratio %.3f", ratio)};
}

// 9
Outcome pauliJordan() {
    double kg = 0.0, route = 0.0;
    for (const auto& p : grid125(2.0)) {
        kg = std::max(kg, kleinGordonResidual(std::sqrt(1.0 + dot(p, p)), 1.0));
        route = std::max(route, pauliJordanSymbolCheck(p, 1.0, 1.0).residual);
    }
    const auto j1 = j1ConventionCheck(1.0, 1.3, 2.0);
    const bool one = j1.selected == "m*l" || j1.selected == "l";
    return {kg <= 1e-12 && route <= 1e-10 && one,
            fmt("KG %.2e, ", kg) + fmt("Dirac-from-KG %.2e, ", route) + "J1 selects '" + j1.selected + "'" +
                fmt(" (mass-argument residual %.1e", j1.massArgumentResidual) +
                fmt(", bare %.1e)", j1.bareArgumentResidual)};
}

// 10
Outcome quasiclassics() {
    double b = 0.0;
    b = std::max(b, massiveViaBCheck(1.0, 1.0, TestFunction1D::standardBump(0.1, 0.6)).residual);
    b = std::max(b, massiveViaBCheck(1.0, 1.0, TestFunction1D::gaussianPacket(0.0, 0.08, 0.0)).residual);
    auto err = [](double ml) {
        const double m = 100.0, l = ml / m;
        return eikonalError(1.0, std::sqrt(1.0 - l * l), m).modulusError;
    };
    const double e20 = err(20.0), e50 = err(50.0);
    const auto rows = fwClassicalLimit({0.3, 0.4, 0.5}, {10.0, 100.0, 1000.0, 10000.0});
    double worstRatio = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        worstRatio = std::max(worstRatio, std::abs(rows[i - 1].deviation / rows[i].deviation - 10.0));
    }
    return {b <= 1e-5 && e20 <= 1e-2 && e50 <= 3e-3 && worstRatio <= 1.0,
            fmt("B-factor %.2e, ", b) + fmt("K1 modulus error %.1e @20, ", e20) + fmt("%.1e @50, ", e50) +
                fmt("decade ratio within 10 +- %.3f", worstRatio)};
}

// 11
Outcome specialFunctions() {
    using namespace specfun;
    double overlap = 0.0;
    for (int n = 0; n <= 2; ++n) {
        for (double x = 0.5 * kCrossover; x <= 2.0 * kCrossover; x += 0.25) {
            const auto s = branch::seriesJY(n, x);
            const auto h = branch::hankelJY(n, x);
            overlap = std::max({overlap, std::abs(s.j - h.j), std::abs(s.y - h.y),
                                std::abs(branch::seriesK(n, x) - branch::laplaceK(n, x)) / branch::laplaceK(n, x)});
        }
    }
    const double small = std::max({std::abs(zK1(KernelArg::real(1e-4)) - 1.0),
                                   std::abs(zK1(KernelArg::imaginary(1e-4)) - 1.0),
                                   std::abs(zK1(KernelArg::imaginary(-1e-4)) - 1.0)});
    return {overlap <= 1e-9 && small <= 1e-6, fmt("overlap %.2e (<= 1e-9), ", overlap) + fmt("|zK1 - 1| %.2e", small)};
}

// 12
int runCli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome cliContract(const std::string& cli) {
    if (cli.empty()) return {false, "no CLI path given"};
    const auto base = std::filesystem::temp_directory_path() / ("qcauchy_acceptance_" + std::to_string(::getpid()));
    std::filesystem::remove_all(base);
    bool identical = true;
    const std::vector<std::string> runs{"pair --t 1 --m 0 --probe gaussian", "--seed 9 cap --samples 100000",
                                        "ball --spec diag2 --R-sweep 2,4,8,16", "fw --grid 5 --m 1"};
    int exits = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto a = base / ("a" + std::to_string(i));
        const auto b = base / ("b" + std::to_string(i));
        exits += runCli(cli, "--format both --out " + a.string() + " " + runs[i]);
        exits += runCli(cli, "--format both --out " + b.string() + " " + runs[i]);
        if (!std::filesystem::is_directory(a) || !std::filesystem::is_directory(b)) {
            identical = false;
            continue;
        }
        for (const auto& e : std::filesystem::directory_iterator(a)) {
            identical = identical && slurp(e.path()) == slurp(b / e.path().filename());
        }
    }
    const int failing = runCli(cli, "--tol 1e-300 --out " + (base / "f").string() + " pair");
    const int usage = runCli(cli, "pair --no-such-flag");
    std::filesystem::remove_all(base);
    return {identical && exits == 0 && failing == 1 && usage == 2,
            std::string("byte-identical reports ") + (identical ? "yes" : "no") +
                ", injected tolerance exit " + std::to_string(failing) + " (want 1), usage exit " +
                std::to_string(usage) + " (want 2)"};
}

}  // namespace

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Parseval cross-route", parseval},
        {"Semigroup", semigroup},
        {"Pre-measure closed form", premeasureClosedForm},
        {"Sign and decay", signAndDecay},
        {"Radon consistency", radonConsistency},
        {"Cap-weight arbitration", capArbitration},
        {"Dirac algebra", diracAlgebra},
        {"Photon", photon},
        {"Pauli-Jordan", pauliJordan},
        {"B-factor and quasi-classics", quasiclassics},
        {"Special functions", specialFunctions},
        {"CLI", [&] { return cliContract(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
