#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qcauchy/errors.hpp"
#include "qcauchy/experiments.hpp"

using namespace qcauchy;

namespace {

struct Global {
    std::string out;
    double tol = 0.0;
    std::uint64_t seed = RunOptions{}.seed;
    std::string format = "json";
};

bool writeFile(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    return static_cast<bool>(f);
}

int emit(const ExperimentReport& report, const Global& g) {
    const bool json = g.format == "json" || g.format == "both";
    const bool csv = g.format == "csv" || g.format == "both";
    if (g.out.empty()) {
        if (json) std::cout << report.dumpJson();
        if (csv) std::cout << report.dumpCsv();
    } else {
        std::filesystem::create_directories(g.out);
        const auto base = std::filesystem::path(g.out) / report.name();
        if ((json && !writeFile(base.string() + ".json", report.dumpJson())) ||
            (csv && !writeFile(base.string() + ".csv", report.dumpCsv()))) {
            std::cerr << "error: cannot write report under " << g.out << "\n";
            return 1;
        }
    }
    const auto failing = report.failingRows();
    for (auto i : failing) {
        const auto& row = report.rows()[i];
        std::cerr << "FAIL " << report.name() << " row " << i << " inputs=" << row.inputs.dump()
                  << " residual=" << Json(row.residual).dump() << " tolerance=" << Json(row.tolerance).dump() << "\n";
    }
    return failing.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical experiments for Cauchy-type functionals and their pre-measures"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--out", g.out, "Directory for report files (stdout when omitted)");
    auto* tolOpt = app.add_option("--tol", g.tol, "Override every row tolerance");
    app.add_option("--seed", g.seed, "Seed for Monte-Carlo and random sweeps");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv", "both"}));

    std::function<ExperimentReport(const RunOptions&)> job;

    PairParams pair;
    auto* s = app.add_subcommand("pair", "1-D pairing: coordinate route against Parseval");
    s->add_option("--t", pair.t);
    s->add_option("--m", pair.m);
    s->add_option("--probe", pair.probe)->check(CLI::IsMember({"gaussian", "bump", "odd"}));
    s->add_option("--widths", pair.widths)->delimiter(',');
    s->callback([&] { job = [&](const RunOptions& o) { return runPair(pair, o); }; });

    Pair3DParams pair3d;
    s = app.add_subcommand("pair3d", "3-D pairing: coordinate route against Parseval");
    s->add_option("--t", pair3d.t);
    s->add_option("--m", pair3d.m);
    s->add_option("--widths", pair3d.widths)->delimiter(',');
    s->callback([&] { job = [&](const RunOptions& o) { return runPair3D(pair3d, o); }; });

    SemigroupParams semi;
    s = app.add_subcommand("semigroup", "Chapman-Kolmogorov law in momentum and coordinate space");
    s->add_option("--m", semi.m);
    s->add_option("--dt1", semi.dt1);
    s->add_option("--dt2", semi.dt2);
    s->add_option("--width", semi.width);
    s->add_option("--cases", semi.cases);
    s->callback([&] { job = [&](const RunOptions& o) { return runSemigroup(semi, o); }; });

    EvolutionParams evo;
    s = app.add_subcommand("evolution", "Nonlocal evolution equation by finite differences in t");
    s->add_option("--t", evo.t);
    s->set_help_flag("--help", "Print this help message and exit");
    s->add_option("--h", evo.h, "Finite-difference step");
    s->add_option("--width", evo.width);
    s->callback([&] { job = [&](const RunOptions& o) { return runEvolution(evo, o); }; });

    PremeasureParams pre;
    s = app.add_subcommand("premeasure", "Box measures, normalization and marginal compatibility");
    s->add_option("--spec", pre.spec)->check(CLI::IsMember(specNames()));
    s->add_option("--cases", pre.cases);
    s->callback([&] { job = [&](const RunOptions& o) { return runPremeasure(pre, o); }; });

    BallParams ball;
    s = app.add_subcommand("ball", "Half-space and ball-complement measures against R/Q");
    s->add_option("--spec", ball.spec)->check(CLI::IsMember(specNames()));
    s->add_option("--R-sweep", ball.ratios, "R/Q ratios")->delimiter(',');
    s->callback([&] { job = [&](const RunOptions& o) { return runBall(ball, o); }; });

    RadonParams radon;
    s = app.add_subcommand("radon", "Radon projection: interval tails and the sphere-average identity");
    s->add_option("--spec", radon.spec)->check(CLI::IsMember(specNames()));
    s->add_option("--ratio", radon.ratio, "R / max Q");
    s->callback([&] { job = [&](const RunOptions& o) { return runRadon(radon, o); }; });

    CapParams cap;
    s = app.add_subcommand("cap", "Spherical-cap weights against Monte-Carlo");
    s->add_option("--n", cap.dims)->delimiter(',');
    s->add_option("--ratio", cap.ratio, "R / rho");
    s->add_option("--samples", cap.samples);
    s->callback([&] { job = [&](const RunOptions& o) { return runCap(cap, o); }; });

    GaussianLimitParams gl;
    s = app.add_subcommand("gaussian-limit", "Large-n cap average against the Gaussian tail");
    s->add_option("--n", gl.dims)->delimiter(',');
    s->add_option("--ratio", gl.ratio, "R / rho");
    s->add_option("--variant", gl.variant)->check(CLI::IsMember({"geometric", "cosn"}));
    s->callback([&] { job = [&](const RunOptions& o) { return runGaussianLimit(gl, o); }; });

    FwParams fw;
    s = app.add_subcommand("fw", "Foldy-Wouthuysen unitary and Dirac propagator symbol");
    s->add_option("--grid", fw.grid);
    s->add_option("--pmax", fw.pmax);
    s->add_option("--m", fw.masses)->delimiter(',');
    s->add_option("--t", fw.t);
    s->callback([&] { job = [&](const RunOptions& o) { return runFw(fw, o); }; });

    MaxwellParams mx;
    s = app.add_subcommand("maxwell", "Photon spin matrices, helicity frame and evolution");
    s->add_option("--grid", mx.grid);
    s->add_option("--pmax", mx.pmax);
    s->add_option("--t", mx.t);
    s->set_help_flag("--help", "Print this help message and exit");
    s->add_option("--h", mx.h, "Finite-difference step");
    s->callback([&] { job = [&](const RunOptions& o) { return runMaxwell(mx, o); }; });

    PauliJordanParams pj;
    s = app.add_subcommand("pauli-jordan", "Klein-Gordon route to the Dirac symbol");
    s->add_option("--grid", pj.grid);
    s->add_option("--pmax", pj.pmax);
    s->add_option("--m", pj.m);
    s->add_option("--t", pj.t);
    s->add_option("--j1-mass", pj.j1Mass);
    s->callback([&] { job = [&](const RunOptions& o) { return runPauliJordan(pj, o); }; });

    BFactorParams bf;
    s = app.add_subcommand("bfactor", "Massive pairing through the smooth B factor");
    s->add_option("--t", bf.t);
    s->add_option("--m", bf.m);
    s->callback([&] { job = [&](const RunOptions& o) { return runBFactor(bf, o); }; });

    EikonalParams ek;
    s = app.add_subcommand("eikonal", "K1 asymptotics of the massive kernel inside the cone");
    s->add_option("--t", ek.t);
    s->add_option("--m", ek.m);
    s->add_option("--ml", ek.eikonals)->delimiter(',');
    s->callback([&] { job = [&](const RunOptions& o) { return runEikonal(ek, o); }; });

    ClassicalLimitParams cl;
    s = app.add_subcommand("classical-limit", "Foldy-Wouthuysen unitary as the mass grows");
    s->add_option("--rho", cl.rho);
    s->add_option("--masses", cl.masses)->delimiter(',');
    s->callback([&] { job = [&](const RunOptions& o) { return runClassicalLimit(cl, o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunOptions opts;
    opts.seed = g.seed;
    if (tolOpt->count() > 0) opts.tolerance = g.tol;
    try {
        return emit(job(opts), g);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    }
}
