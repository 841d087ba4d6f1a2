#pragma once

// Radon-transform view of the pre-measures: along a unit direction xi the
// density projects to the 1-D functional C_{iQ}, Q = sum_j |(xi, alpha_j)| dt_j.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qcauchy/premeasure.hpp"

namespace qcauchy {

double radonQ(const CylinderSpec& spec, const Eigen::VectorXd& xi);

struct HalfSpaceQuery {
    CylinderSpec spec;
    Eigen::VectorXd xi;
    double R;
};

// -(i/2 pi) ln((P + 1)/(1 - P)), P = Q/R < 1
Complex halfSpaceMeasure(const HalfSpaceQuery& q);

// Measure of {|a| >= rho} for k = 1, 2, 3 through the exact radial transform
// of the symbol; requires rho > max_xi Q(xi).
Complex ballComplementMeasure(const CylinderSpec& spec, double rho);

// Largest Q over the unit sphere (sampled and locally refined).
double maxRadonQ(const CylinderSpec& spec);

// Cap weight: cos^n (cosn) or cos^(n-2) (geometric, the true surface measure).
enum class CapVariant { cosn, geometric };

struct CapWeight {
    int n;
    CapVariant variant;

    double exponent() const;    // (n-1)/2 or (n-3)/2
    double normalizer() const;  // N_n with weight 1/2 at R = 0
};

// N_n int_{R/rho}^1 (1 - y^2)^e dy; 0 for R > rho.
double capAverage(const CapWeight& w, double R, double rho);

struct MonteCarloFraction {
    double fraction;
    double sigma;
};

// Fraction of uniform points on S^{n-1} with x_1 >= s.
MonteCarloFraction capFractionMonteCarlo(int n, double s, std::int64_t samples, std::uint64_t seed);

struct IdentityCheck {
    Complex lhs;  // average over xi of the half-space measure
    Complex rhs;  // int (1 - M(rho)) d w(R/rho)
    double residual;
};

IdentityCheck sphereAverageIdentity(const CylinderSpec& spec, double R, const CapWeight& w);

struct GaussianLimit {
    double exact;
    double gaussian;
    double relativeGap;
};

GaussianLimit gaussianLimit(int n, double rRatio, CapVariant variant = CapVariant::geometric);

}  // namespace qcauchy
