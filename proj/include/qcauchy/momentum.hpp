#pragma once

// Momentum-space symbols of the scalar functionals and Parseval-route pairings:
//   <C, phi> = (2 pi)^-d int conj(symbol(p)) psi(p) d^d p.

#include <functional>

#include "qcauchy/testfn.hpp"
#include "qcauchy/types.hpp"

namespace qcauchy {

// exp(i t sqrt(m^2 + rho^2)); negative t gives the conjugate functional.
struct ScalarSymbol {
    double m = 0.0;
    double t = 1.0;
    int dimension = 1;

    Complex operator()(double rho) const;
    Complex operator()(const Vec3& p) const;
};

Complex symbol(double m, double t, double rho);
Complex symbol(double m, double t, const Vec3& p);

Complex pairViaParseval(const ScalarSymbol& sym, const TestFunction1D& phi, const QuadratureConfig& cfg = {});
Complex pairViaParseval(const ScalarSymbol& sym, const TestFunction3D& phi, const QuadratureConfig& cfg = {});

// (1/2 pi) int conj(multiplier(p)) psi(p) dp for an arbitrary even-in-|p|
// multiplier oscillating no faster than exp(i phaseSpeed |p|).
Complex pairMultiplierViaParseval(const std::function<Complex(double)>& multiplier, double phaseSpeed,
                                  const TestFunction1D& phi, const QuadratureConfig& cfg = {});

}  // namespace qcauchy
