#pragma once

// Finite-dimensional cylindrical pre-measures generated by the Cauchy
// functional: constraints sum_j alpha_jk Delta x_j = a_k over time
// steps Delta t_j, with momentum symbol exp(i sum_j |(alpha_j, p)| Delta t_j).

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qcauchy/testfn.hpp"
#include "qcauchy/types.hpp"

namespace qcauchy {

struct CylinderSpec {
    std::vector<double> delta_t;  // n positive time steps
    Eigen::MatrixXd alpha;        // n x k
    double bound = 1e6;           // N: constraintNorm must stay below it

    // Validates every invariant; throws DomainError.
    static CylinderSpec make(std::vector<double> deltaT, Eigen::MatrixXd alpha, double bound = 1e6);

    int n() const { return static_cast<int>(delta_t.size()); }
    int k() const { return static_cast<int>(alpha.cols()); }
    double totalTime() const;
    // alpha has exactly one nonzero entry per row.
    bool separable() const;
};

// sum_j |alpha_j| Delta t_j
double constraintNorm(const CylinderSpec& spec);

double effectiveTime(const CylinderSpec& spec);

Complex symbolND(const CylinderSpec& spec, const Eigen::VectorXd& p);

struct Interval {
    double lo;
    double hi;
};

struct IntervalMeasure {
    Complex value;
    bool boundaryWarning;  // an endpoint within 1e-12 of +-T
};

// Closed form for C_{iT} on (a, b); a, b may be infinite.
IntervalMeasure intervalMeasureT(double T, double a, double b);
IntervalMeasure intervalMeasure1D(const CylinderSpec& spec, double a, double b);

struct MeasureEstimate {
    Complex value;
    double error;
};

struct BoxConfig {
    QuadratureConfig quadrature{};
    // Mollifier width as a fraction of the distance from the box edges to the
    // singular points of the marginal density; explicit widths override.
    double mollifierFraction = 0.05;
    std::vector<double> widths{};
    int richardsonLevels = 3;  // widths h, h/2, h/4, ...
};

// Mollified-indicator pairing in momentum space, Richardson-extrapolated in
// the mollifier width. Separable bases factor into 1-D computations; the
// non-separable case is supported for k = 2. Full-line intervals are allowed
// on separable axes (factor exactly 1).
MeasureEstimate boxMeasureND(const CylinderSpec& spec, const std::vector<Interval>& box, const BoxConfig& cfg = {});

// Coordinate route for a square k = 2 basis over the strip box x R: the
// measure is the product functional on b = alpha^{-T} a, sliced along b_2
// (closed form) and integrated over b_1 with principal values at +-Delta t_1.
MeasureEstimate stripMeasureCoordinate(const CylinderSpec& spec, const Interval& first,
                                       const RegularizationConfig& cfg = {});

// Drops the last base coordinate.
CylinderSpec projectLast(const CylinderSpec& spec);

struct CompatibilityReport {
    double residual;  // max over the test boxes
    std::vector<Interval> boxes;
    std::vector<Complex> full;       // measure of box x R
    std::vector<Complex> projected;  // measure of box under the projected spec
};

CompatibilityReport marginalCompatibility(const CylinderSpec& spec, const BoxConfig& cfg = {});

struct ContinuityRow {
    int index;
    double effectiveTime;
    Complex value;
    double residual;
};

struct ContinuityTable {
    Complex limit;
    std::vector<ContinuityRow> rows;
    bool monotone;   // residuals never increase (above the 1e-14 floor)
    bool violation;  // three consecutive non-decreases
};

// Values int f dC_k for a sequence of 1-D-base specs against the limit spec.
ContinuityTable weakContinuity(const std::vector<CylinderSpec>& sequence, const CylinderSpec& limit,
                               const TestFunction1D& f, const RegularizationConfig& cfg = {});

// Piecewise-constant left-endpoint approximation of alpha(tau) on [0, t] with
// `pieces` equal steps, as a 1-D-base spec.
CylinderSpec stepApproximation(const std::function<double(double)>& alpha, double t, int pieces,
                               double bound = 1e6);

}  // namespace qcauchy
