#pragma once

// Chapman-Kolmogorov law of the Cauchy functionals, in momentum space and as a
// coordinate-space convolution, and the nonlocal evolution equation.

#include <cstdint>
#include <vector>

#include "qcauchy/momentum.hpp"
#include "qcauchy/testfn.hpp"

namespace qcauchy {

class Partition {
public:
    // 0 = t_0 < t_1 < ... < t_n = t
    static Partition fromBreakpoints(std::vector<double> breakpoints);
    static Partition fromIncrements(const std::vector<double>& increments);
    static Partition uniform(double t, int n);

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    std::vector<double> increments() const;
    int size() const { return static_cast<int>(breakpoints_.size()) - 1; }
    double total() const { return breakpoints_.back(); }

private:
    std::vector<double> breakpoints_;
};

// |prod_j symbol(m, dt_j, p) - symbol(m, t, p)|
double semigroupSymbolCheck(double m, const Partition& part, double p);
double semigroupSymbolCheck(double m, const Partition& part, const Vec3& p);

struct CoordinateSemigroup {
    Complex deltaDelta;
    Complex deltaRegular;   // delta in the first time step, regular part in the second
    Complex regularDelta;
    Complex regularRegular;
    Complex convolution;    // sum of the four cross terms
    Complex direct;         // single pairing at the total time
    double residual;
};

// <C_{i dt1} * C_{i dt2}, phi> against <C_{it}, phi> for n = 2; m = 0 uses the
// massless pairing, m > 0 the massive one.
CoordinateSemigroup semigroupCoordinateCheck(double m, const Partition& part, const TestFunction1D& phi,
                                             const RegularizationConfig& cfg = {});

struct EvolutionCheck {
    Complex finiteDifference;   // central difference of the pairing at step h
    Complex momentumSide;       // pairing of i|p| exp(it|p|) against psi
    double residual;            // at step h
    double residualHalf;        // at step h/2
    double ratio;               // residual / residualHalf
};

// i d/dt <C_it, phi> versus the finite-part convolution -(i/pi) x^-2 * C_it,
// massless, d = 1. Throws StepError when halving h fails to reduce the
// residual by at least 2 (no O(h^2) regime).
EvolutionCheck evolutionEquationCheck(double t, const TestFunction1D& phi, double h = 1e-2,
                                      const RegularizationConfig& cfg = {});

}  // namespace qcauchy
