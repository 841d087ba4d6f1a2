#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "qcauchy/quadrature.hpp"

namespace qcauchy {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline constexpr Complex kI{0.0, 1.0};

inline double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Panel quadrature settings shared by the momentum-space routes.
struct QuadratureConfig {
    int order = 16;                 // Gauss-Legendre points per panel
    double panelFraction = 0.25;    // panel width relative to the local oscillation/decay scale
    double tolerance = 1e-9;        // accepted two-resolution discrepancy (relative)
    quad::Execution execution = quad::Execution::parallel;
};

}  // namespace qcauchy
