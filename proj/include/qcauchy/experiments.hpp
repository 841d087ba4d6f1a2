#pragma once

// One experiment per CLI subcommand. Each returns a report whose rows carry
// residuals and tolerances; the pass flags decide the exit code.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcauchy/premeasure.hpp"
#include "qcauchy/report.hpp"

namespace qcauchy {

struct RunOptions {
    std::optional<double> tolerance;  // replaces every row tolerance when set
    std::uint64_t seed = 20240601;
};

// Named cylinder bases: unit1, diag2, rot2, diag3.
CylinderSpec namedSpec(const std::string& name);
std::vector<std::string> specNames();

struct PairParams {
    double t = 1.0;
    double m = 0.0;
    std::string probe = "gaussian";  // gaussian | bump | odd
    std::vector<double> widths{0.5, 1.0, 2.0};
};

struct Pair3DParams {
    double t = 1.0;
    double m = 0.0;
    std::vector<double> widths{0.5, 1.0, 2.0};
};

struct SemigroupParams {
    double m = 0.0;
    double dt1 = 0.5;
    double dt2 = 0.5;
    double width = 0.5;
    int cases = 1000;
};

struct EvolutionParams {
    double t = 1.0;
    double h = 1e-2;
    double width = 0.5;
};

struct PremeasureParams {
    std::string spec = "unit1";
    int cases = 20;  // random 1-D-base specs for the closed-form check
};

struct BallParams {
    std::string spec = "diag2";
    std::vector<double> ratios{2.0, 4.0, 8.0, 16.0};
};

struct RadonParams {
    std::string spec = "diag2";
    double ratio = 2.0;
};

struct CapParams {
    std::vector<int> dims{2, 3};
    double ratio = 0.5;
    std::int64_t samples = 1000000;
};

struct GaussianLimitParams {
    std::vector<int> dims{100, 400};
    double ratio = 0.1;
    std::string variant = "geometric";  // geometric | cosn
};

struct FwParams {
    int grid = 5;
    double pmax = 2.0;
    std::vector<double> masses{1.0};
    double t = 1.0;
};

struct MaxwellParams {
    int grid = 5;
    double pmax = 2.0;
    double t = 1.0;
    double h = 1e-2;
};

struct PauliJordanParams {
    int grid = 5;
    double pmax = 2.0;
    double m = 1.0;
    double t = 1.0;
    double j1Mass = 2.0;  // J1 argument test needs m != 1
};

struct BFactorParams {
    double t = 1.0;
    double m = 1.0;
};

struct EikonalParams {
    double t = 1.0;
    double m = 100.0;
    std::vector<double> eikonals{20.0, 50.0};
};

struct ClassicalLimitParams {
    double rho = 1.0;
    std::vector<double> masses{10.0, 100.0, 1000.0, 10000.0};
};

ExperimentReport runPair(const PairParams& p, const RunOptions& o = {});
ExperimentReport runPair3D(const Pair3DParams& p, const RunOptions& o = {});
ExperimentReport runSemigroup(const SemigroupParams& p, const RunOptions& o = {});
ExperimentReport runEvolution(const EvolutionParams& p, const RunOptions& o = {});
ExperimentReport runPremeasure(const PremeasureParams& p, const RunOptions& o = {});
ExperimentReport runBall(const BallParams& p, const RunOptions& o = {});
ExperimentReport runRadon(const RadonParams& p, const RunOptions& o = {});
ExperimentReport runCap(const CapParams& p, const RunOptions& o = {});
ExperimentReport runGaussianLimit(const GaussianLimitParams& p, const RunOptions& o = {});
ExperimentReport runFw(const FwParams& p, const RunOptions& o = {});
ExperimentReport runMaxwell(const MaxwellParams& p, const RunOptions& o = {});
ExperimentReport runPauliJordan(const PauliJordanParams& p, const RunOptions& o = {});
ExperimentReport runBFactor(const BFactorParams& p, const RunOptions& o = {});
ExperimentReport runEikonal(const EikonalParams& p, const RunOptions& o = {});
ExperimentReport runClassicalLimit(const ClassicalLimitParams& p, const RunOptions& o = {});

}  // namespace qcauchy
