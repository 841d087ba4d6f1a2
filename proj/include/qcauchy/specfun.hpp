#pragma once

// Bessel J, Y and Macdonald K of integer order 0..2 on the positive real axis,
// and K on the imaginary axis through the Hankel connection
//   K_nu(-i y) = (pi/2) i^(nu+1) H^(1)_nu(y),   K_nu(i y) = conj(K_nu(-i y)),  y > 0.
//
// Two branches per function, split at |z| = kCrossover:
//   series      power series summed in __float128,
//   asymptotic  exact Hankel (J, Y) or Laplace (K) integral representation
//               whose large-|z| expansion is the classical asymptotic series.
// Both branches are accurate across the overlap window [kCrossover/2, 2 kCrossover].

#include <complex>

namespace qcauchy::specfun {

inline constexpr double kCrossover = 12.0;

enum class Regime { series, asymptotic, crossover };

// A point on the positive/negative real axis or on the imaginary axis.
class KernelArg {
public:
    static KernelArg real(double x);
    static KernelArg imaginary(double y);
    // Throws DomainError unless z lies on one of the two axes.
    static KernelArg from(std::complex<double> z);

    std::complex<double> value() const { return value_; }
    Regime regime() const { return regime_; }
    double modulus() const { return std::abs(value_); }
    bool onRealAxis() const { return value_.imag() == 0.0; }

private:
    explicit KernelArg(std::complex<double> z);
    std::complex<double> value_;
    Regime regime_;
};

Regime regimeFor(double modulus);

struct BesselPair {
    double j;
    double y;
};

// x > 0, finite. Order 0, 1 or 2.
double besselJ(int order, double x);
double besselY(int order, double x);
BesselPair besselJY(int order, double x);

inline double besselJ0(double x) { return besselJ(0, x); }
inline double besselJ1(double x) { return besselJ(1, x); }
inline double besselY0(double x) { return besselY(0, x); }
inline double besselY1(double x) { return besselY(1, x); }

// Real positive argument.
double macdonaldK(int order, double x);

// z on the real or imaginary axis, z != 0 (PoleError), real part >= 0 on the
// real axis (DomainError otherwise).
std::complex<double> macdonaldK(int order, const KernelArg& z);

inline std::complex<double> macdonaldK1(const KernelArg& z) { return macdonaldK(1, z); }

// Order-2 functions with their pole terms removed, accurate as y -> 0:
//   Y2(y) + 4/(pi y^2) + 1/pi   and   K2(y) - 2/y^2 + 1/2.
double besselY2Remainder(double y);
double macdonaldK2Remainder(double y);

// z * K1(z) with the small-|z| cancellation handled inside the series branch.
std::complex<double> zK1(const KernelArg& z);

// Direct branch access, exposed for the overlap-window checks.
namespace branch {
BesselPair seriesJY(int order, double x);
BesselPair hankelJY(int order, double x);
double seriesK(int order, double x);
double laplaceK(int order, double x);
// x K1(x) from the series (no 1/x cancellation).
double seriesXK1(double x);
// x Y1(x) from the series.
double seriesXY1(double x);
}  // namespace branch

}  // namespace qcauchy::specfun
