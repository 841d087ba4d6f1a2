#pragma once

// Probe functions and the coordinate-space pairings of the scalar Cauchy
// kernels. Fourier convention: psi(p) = int phi(x) e^{ipx} dx.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcauchy/types.hpp"

namespace qcauchy {

enum class ProbeKind { gaussian_packet, standard_bump, product, custom };

std::string toString(ProbeKind kind);

// Region outside of which a probe is zero (compact) or below 1e-18 of its
// peak (rapid decay).
struct Support1D {
    double lo;
    double hi;
    bool compact;
};

class TestFunction1D {
public:
    using Fn = std::function<Complex(double)>;

    // exp(-(x-c)^2 / (2 w^2)) * exp(i k x)
    static TestFunction1D gaussianPacket(double center, double width, double momentum = 0.0);
    // exp(-1 / (1 - ((x-c)/h)^2)) on |x-c| < h
    static TestFunction1D standardBump(double center, double halfWidth);
    // x * exp(-x^2 / (2 w^2)), an odd probe with closed-form transform
    static TestFunction1D oddGaussian(double width);
    static TestFunction1D constant(Complex value);
    // `scale` is the shortest length on which f varies; `fourier` may be empty.
    static TestFunction1D custom(Fn f, Support1D support, double scale, Fn fourier = {},
                                 double spectralCenter = 0.0, double spectralHalfWidth = 0.0);

    Complex operator()(double x) const { return f_(x); }
    Complex fourier(double p) const;
    bool hasExactFourier() const { return static_cast<bool>(fourier_); }

    ProbeKind kind() const { return kind_; }
    const Support1D& support() const { return support_; }
    double scale() const { return scale_; }
    // Momentum window [center - halfWidth, center + halfWidth] outside which
    // |psi| < 1e-14 max|psi|; zero halfWidth when unknown.
    double spectralCenter() const { return spectralCenter_; }
    double spectralHalfWidth() const { return spectralHalfWidth_; }

    TestFunction1D operator+(const TestFunction1D& other) const;
    TestFunction1D scaled(Complex a) const;
    TestFunction1D times(Fn g, double gScale) const;  // pointwise product with a smooth g
    TestFunction1D conjugated() const;
    TestFunction1D reflected() const;                 // x -> -x
    TestFunction1D shifted(double s) const;           // x -> x + s

private:
    TestFunction1D() = default;
    ProbeKind kind_ = ProbeKind::custom;
    Fn f_;
    Fn fourier_;
    Support1D support_{0.0, 0.0, true};
    double scale_ = 1.0;
    double spectralCenter_ = 0.0;
    double spectralHalfWidth_ = 0.0;
};

struct Ball {
    Vec3 center;
    double radius;
    bool compact;
};

class TestFunction3D {
public:
    using Fn = std::function<Complex(const Vec3&)>;
    using RadialFn = std::function<Complex(double)>;

    static TestFunction3D gaussianPacket(const Vec3& center, double width, const Vec3& momentum = {0, 0, 0});
    static TestFunction3D standardBump(const Vec3& center, double halfWidth);
    // Radial probe supported in rIn < r < rOut (bump profile in r).
    static TestFunction3D radialShell(double rIn, double rOut);
    // Radial probe from a profile; `fourier` is the radial transform psi(rho).
    static TestFunction3D radial(RadialFn profile, double extent, double scale, RadialFn fourier = {},
                                 double spectralExtent = 0.0);
    static TestFunction3D product(const TestFunction1D& fx, const TestFunction1D& fy, const TestFunction1D& fz);
    static TestFunction3D custom(Fn f, Ball support, double scale);

    Complex operator()(const Vec3& x) const { return f_(x); }
    ProbeKind kind() const { return kind_; }
    const Ball& support() const { return support_; }
    double scale() const { return scale_; }

    // Spherically symmetric about the origin.
    bool isRadial() const { return static_cast<bool>(profile_); }
    Complex profile(double r) const { return profile_(r); }
    bool hasRadialFourier() const { return static_cast<bool>(radialFourier_); }
    Complex radialFourier(double rho) const { return radialFourier_(rho); }
    double spectralExtent() const { return spectralExtent_; }

    bool hasExactFourier() const { return static_cast<bool>(fourier_); }
    Complex fourier(const Vec3& p) const { return fourier_(p); }

    TestFunction3D times(Fn g) const;

private:
    TestFunction3D() = default;
    ProbeKind kind_ = ProbeKind::custom;
    Fn f_;
    RadialFn profile_;
    RadialFn radialFourier_;
    std::function<Complex(const Vec3&)> fourier_;
    Ball support_{{0, 0, 0}, 0.0, true};
    double scale_ = 1.0;
    double spectralExtent_ = 0.0;
};

struct PairingResult {
    Complex delta_part;
    Complex regular_part;
    Complex total;
    double quadrature_error_estimate;
};

struct RegularizationConfig {
    // Excision radii for the principal-value diagnostic.
    std::vector<double> pv_epsilon_sequence{1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
    double cutoff = 0.0;          // 0: derived from the probe support
    int refinement_levels = 2;
    int order = 16;
    double panelFraction = 0.5;   // panel width in units of the probe scale
    int sphereOrder = 24;
    quad::Execution execution = quad::Execution::parallel;

    void validate() const;
};

PairingResult pairCauchy1D(double t, const TestFunction1D& phi, const RegularizationConfig& cfg = {});
PairingResult pairCauchyMassive1D(double t, double m, const TestFunction1D& phi,
                                  const RegularizationConfig& cfg = {});
PairingResult pairCauchy3D(double t, double m, const TestFunction3D& phi, const RegularizationConfig& cfg = {});

Complex sphericalAverage(const TestFunction3D& phi, double radius, int order);

struct SphereAverage {
    Complex value;
    double estimate;  // |avg(order) - avg(order + 2)|
};
SphereAverage sphericalAverageWithEstimate(const TestFunction3D& phi, double radius, int order);

// Principal value of int t / (t^2 - x^2) phi(x) dx, shared with the massive
// and semigroup routes.
quad::Estimate pvEvenPole(double t, const TestFunction1D& phi, const RegularizationConfig& cfg);

}  // namespace qcauchy
