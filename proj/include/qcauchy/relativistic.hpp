#pragma once

// Matrix-valued momentum symbols: Dirac gamma algebra in the Dirac
// representation, the Foldy-Wouthuysen unitary, photon spin-1 matrices and the
// helicity diagonalizer.
//
// Conventions: H(p) = gamma^0 (gamma, p) + gamma^0 m and the propagator symbol
// exp(i t H(p)) = T exp(i t gamma^0 E) T.

#include <array>
#include <string>

#include <Eigen/Dense>

#include "qcauchy/types.hpp"

namespace qcauchy {

using Mat4 = Eigen::Matrix4cd;
using Mat3 = Eigen::Matrix3cd;

template <class Derived>
double maxAbs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

struct DiracBasis {
    std::array<Mat4, 4> gamma;  // gamma^0 .. gamma^3
};

const DiracBasis& diracBasis();

// (gamma, p) = sum_i gamma^i p_i
Mat4 gammaDot(const Vec3& p);

Mat4 diracHamiltonian(const Vec3& p, double m);

struct FWUnitary {
    Vec3 p;
    double m;
    double energy;
    Mat4 matrix;
};

FWUnitary fwUnitary(const Vec3& p, double m);

// T exp(i t gamma^0 E) T
Mat4 diracSymbol(const Vec3& p, double m, double t);
// exp(i t H(p)) by direct matrix exponential.
Mat4 diracSymbolExp(const Vec3& p, double m, double t);

// gamma^0 (gamma^0 d/dt + i sigma (gamma, p) + i m) G(t), G = sin(tE)/E.
Mat4 pauliJordanRoute(const Vec3& p, double m, double t, int sigma);

struct PauliJordanCheck {
    double residual;             // selected convention sigma = +1
    double alternativeResidual;  // sigma = -1
    int sigma;
};
PauliJordanCheck pauliJordanSymbolCheck(const Vec3& p, double m, double t);

// Residual of (d^2/dt^2 + E^2) G = 0, G(0) = 0, G'(0) = 1 for G = sin(tE)/E,
// using the analytic derivatives.
double kleinGordonResidual(double energy, double t);

// Mass correction of the momentum-space Pauli-Jordan function,
// sin(tE)/E - sin(t rho)/rho, against the radial transform of the
// -(m/4 pi) theta(t - r) J1(arg)/l kernel, arg = m l or l.
struct J1Convention {
    double massArgumentResidual;
    double bareArgumentResidual;
    std::string selected;  // "m*l", "l", or "none"/"both"
};
J1Convention j1ConventionCheck(double t, double rho, double m, double tolerance = 1e-4);

struct PhotonSpin {
    std::array<Mat3, 3> s;
};

// (s^j)_{kl} = -i epsilon_{jkl}
PhotonSpin photonSpinMatrices();
Mat3 spinDot(const Vec3& p);  // (S, p)

struct HelicityFrame {
    Vec3 p;
    Mat3 q;  // rows: helicity +, helicity -, longitudinal
    std::string convention;
};

HelicityFrame helicityDiagonalizer(const Vec3& p);

// Q^+ diag(e^{-it rho}, e^{it rho}, 1) Q = exp(-i t (S, p)).
Mat3 photonSymbol(const Vec3& p, double t);

}  // namespace qcauchy
