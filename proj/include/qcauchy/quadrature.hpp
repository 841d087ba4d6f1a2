#pragma once

// Composite Gauss-Legendre quadrature over explicit panel lists.
//
// The panel sum is the hot loop of every pairing in the library. It comes in
// two executions that must agree bit for bit: `serial` is the reference, and
// `parallel` farms panels out to OpenMP threads, storing per-panel partial
// sums and reducing them afterwards in panel order.

#include <complex>
#include <cstddef>
#include <type_traits>
#include <vector>

namespace qcauchy::quad {

// Nodes and weights on [-1, 1].
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Cached; the returned reference stays valid for the program lifetime.
const Rule& gaussLegendre(int order);

struct Panel {
    double a;
    double b;
};
using Panels = std::vector<Panel>;

Panels uniform(double a, double b, int count);

// Sorted, deduplicated breakpoints; every gap is split into pieces no wider
// than maxWidth.
Panels fromBreakpoints(std::vector<double> points, double maxWidth);

// Geometric grading toward `a` (towardA) or `b`: panel edges at
// a + (b-a) * ratio^k for k = 0..levels, the last panel touching the endpoint.
Panels graded(double a, double b, bool towardA, int levels, double ratio = 0.5);

void append(Panels& into, const Panels& more);

enum class Execution { serial, parallel };

namespace detail {

template <class T, class F>
T panelSum(const Panel& panel, const Rule& rule, F& f) {
    const double half = 0.5 * (panel.b - panel.a);
    const double mid = 0.5 * (panel.b + panel.a);
    T sum{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * static_cast<T>(f(mid + half * rule.nodes[i]));
    }
    return sum * half;
}

template <class T>
T reduceInOrder(const std::vector<T>& parts) {
    T total{};
    for (const T& v : parts) total += v;
    return total;
}

}  // namespace detail

template <class T, class F>
std::vector<T> panelValues(const Panels& panels, F&& f, int order, Execution ex) {
    const Rule& rule = gaussLegendre(order);
    std::vector<T> parts(panels.size());
    const auto n = static_cast<std::ptrdiff_t>(panels.size());
    if (ex == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            parts[static_cast<std::size_t>(i)] = detail::panelSum<T>(panels[static_cast<std::size_t>(i)], rule, f);
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            parts[static_cast<std::size_t>(i)] = detail::panelSum<T>(panels[static_cast<std::size_t>(i)], rule, f);
        }
    }
    return parts;
}

template <class F>
std::complex<double> integrate(const Panels& panels, F&& f, int order = 16,
                               Execution ex = Execution::parallel) {
    return detail::reduceInOrder(panelValues<std::complex<double>>(panels, f, order, ex));
}

template <class F>
double integrateReal(const Panels& panels, F&& f, int order = 16, Execution ex = Execution::parallel) {
    return detail::reduceInOrder(panelValues<double>(panels, f, order, ex));
}

// Two-level estimate: the same panels at `order` and at `order` with every
// panel bisected. Returns the refined value and |refined - coarse|.
struct Estimate {
    std::complex<double> value;
    double error;
};

Panels bisect(const Panels& panels);

template <class F>
Estimate integrateWithEstimate(const Panels& panels, F&& f, int order = 16,
                               Execution ex = Execution::parallel) {
    const auto coarse = integrate(panels, f, order, ex);
    const auto fine = integrate(bisect(panels), f, order, ex);
    return {fine, std::abs(fine - coarse)};
}

}  // namespace qcauchy::quad
