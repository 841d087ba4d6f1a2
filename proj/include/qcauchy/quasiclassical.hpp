#pragma once

// The smooth factor B linking the massive kernel to the massless pole, the
// large-mass (eikonal) asymptotics of the massive kernel, and the m -> infinity
// collapse of the Foldy-Wouthuysen unitary.

#include <vector>

#include "qcauchy/testfn.hpp"
#include "qcauchy/types.hpp"

namespace qcauchy {

// Light-cone coordinate. The kernel argument is w = sqrt(x^2 - t^2 - i0):
// w = -i l inside the cone (l = sqrt(t^2 - x^2) >= 0) and w = kappa > 0 outside.
struct LightconeCoord {
    double t;
    double x;

    bool inside() const { return std::abs(x) < t; }
    bool onCone() const { return std::abs(x) == t; }
    // l_t^2 = t^2 - x^2 as a complex number with l = sqrt(l_t^2) on the
    // principal branch (>= 0 inside, positive imaginary outside).
    Complex l() const;
    Complex w() const;
};

// B(t, x) = m w K1(m w); continuous, equal to 1 on the light cone.
Complex bFactor(double t, double x, double m);

// The regular part of the massive kernel against which probes are paired,
// conj(C^m(x)) for x off the light cone.
Complex massiveKernelConj(double t, double x, double m);

struct BCheck {
    Complex viaB;      // massless pairing of conj(B) * phi
    Complex massive;   // pairCauchyMassive1D
    Complex direct;    // plain quadrature, exterior-support probes only
    bool exterior;
    double residual;   // |viaB - massive|, or |direct - massive| when exterior
};

BCheck massiveViaBCheck(double t, double m, const TestFunction1D& phi, const RegularizationConfig& cfg = {});

// Leading K1 asymptotics of massiveKernelConj inside the cone; requires
// m l >= 20.
Complex eikonalAsymptotic(double t, double x, double m);

struct EikonalError {
    Complex exact;
    Complex asymptotic;
    double modulusError;  // ||asym| - |exact|| / |exact|
    double complexError;  // |asym - exact| / |exact|
};
EikonalError eikonalError(double t, double x, double m);

struct ClassicalLimitRow {
    double m;
    double deviation;  // max-norm of T^m(p) - gamma^0
};
std::vector<ClassicalLimitRow> fwClassicalLimit(const Vec3& p, const std::vector<double>& masses);

}  // namespace qcauchy
