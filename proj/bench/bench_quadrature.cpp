#include <chrono>
#include <cstdio>

#include <omp.h>

#include "qcauchy/quadrature.hpp"
#include "qcauchy/testfn.hpp"

using namespace qcauchy;

namespace {

template <class F>
double seconds(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    const auto panels = quad::uniform(-20.0, 20.0, 20000);
    auto f = [](double x) { return std::exp(Complex(-0.5 * x * x, 3.0 * x)); };
    Complex serial{}, parallel{};
    const double ts = seconds([&] { serial = quad::integrate(panels, f, 16, quad::Execution::serial); }, 5);
    const double tp = seconds([&] { parallel = quad::integrate(panels, f, 16, quad::Execution::parallel); }, 5);
    std::printf("panel sum      serial %8.3f ms  parallel %8.3f ms  speedup %.2f  identical %s\n", ts * 1e3,
                tp * 1e3, ts / tp, serial == parallel ? "yes" : "no");

    const auto phi = TestFunction1D::gaussianPacket(0.2, 0.5, 0.7);
    RegularizationConfig rs, rp;
    rs.execution = quad::Execution::serial;
    rp.execution = quad::Execution::parallel;
    PairingResult a{}, b{};
    const double ps = seconds([&] { a = pairCauchyMassive1D(1.0, 1.0, phi, rs); }, 3);
    const double pp = seconds([&] { b = pairCauchyMassive1D(1.0, 1.0, phi, rp); }, 3);
    std::printf("massive 1-D    serial %8.3f ms  parallel %8.3f ms  speedup %.2f  identical %s\n", ps * 1e3,
                pp * 1e3, ps / pp, a.total == b.total ? "yes" : "no");

    const auto phi3 = TestFunction3D::gaussianPacket({0.0, 0.0, 0.0}, 0.7);
    PairingResult c{}, d{};
    const double qs = seconds([&] { c = pairCauchy3D(1.0, 1.0, phi3, rs); }, 2);
    const double qp = seconds([&] { d = pairCauchy3D(1.0, 1.0, phi3, rp); }, 2);
    std::printf("massive 3-D    serial %8.3f ms  parallel %8.3f ms  speedup %.2f  identical %s\n", qs * 1e3,
                qp * 1e3, qs / qp, c.total == d.total ? "yes" : "no");
    return 0;
}
