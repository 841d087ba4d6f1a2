#include "qcauchy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qcauchy::quad {

namespace {

Rule buildGaussLegendre(int order) {
    Rule rule;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            if (order == 1) p0 = 1.0;
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= order; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = order * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(order - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    return rule;
}

}  // namespace

const Rule& gaussLegendre(int order) {
    if (order < 1 || order > 512) throw std::invalid_argument("gaussLegendre: order out of range");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<Rule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot = std::make_unique<Rule>(buildGaussLegendre(order));
    return *slot;
}

Panels uniform(double a, double b, int count) {
    Panels panels;
    panels.reserve(static_cast<std::size_t>(count));
    const double h = (b - a) / count;
    for (int i = 0; i < count; ++i) {
        const double lo = a + i * h;
        const double hi = (i + 1 == count) ? b : a + (i + 1) * h;
        panels.push_back({lo, hi});
    }
    return panels;
}

Panels fromBreakpoints(std::vector<double> points, double maxWidth) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Panels panels;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double a = points[i];
        const double b = points[i + 1];
        if (!(b > a)) continue;
        const int count = std::max(1, static_cast<int>(std::ceil((b - a) / maxWidth)));
        append(panels, uniform(a, b, count));
    }
    return panels;
}

Panels graded(double a, double b, bool towardA, int levels, double ratio) {
    std::vector<double> offsets;
    double s = 1.0;
    for (int k = 0; k <= levels; ++k) {
        offsets.push_back(s);
        s *= ratio;
    }
    offsets.push_back(0.0);
    Panels panels;
    const double len = b - a;
    if (towardA) {
        for (std::size_t k = offsets.size() - 1; k > 0; --k) {
            panels.push_back({a + len * offsets[k], a + len * offsets[k - 1]});
        }
    } else {
        for (std::size_t k = 0; k + 1 < offsets.size(); ++k) {
            panels.push_back({b - len * offsets[k], b - len * offsets[k + 1]});
        }
    }
    return panels;
}

void append(Panels& into, const Panels& more) { into.insert(into.end(), more.begin(), more.end()); }

Panels bisect(const Panels& panels) {
    Panels out;
    out.reserve(2 * panels.size());
    for (const auto& p : panels) {
        const double mid = 0.5 * (p.a + p.b);
        out.push_back({p.a, mid});
        out.push_back({mid, p.b});
    }
    return out;
}

}  // namespace qcauchy::quad
