// Benchmark of the explicit update kernel: serial reference vs the OpenMP
// version, plus a bitwise cross-check of their outputs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "gband/band.hpp"
#include "gband/solver.hpp"

int main(int argc, char** argv) {
    CLI::App app{"explicit-step kernel benchmark"};
    int nodes = 200000;
    int steps = 2000;
    app.add_option("--nodes", nodes, "lattice nodes")->capture_default_str();
    app.add_option("--steps", steps, "time steps")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    const gband::VolatilityBand band(0.5, 1.0);
    const double c = 1.0;  // dt/dx^2 at the CFL limit

    std::vector<double> u(nodes), v(nodes);
    for (int i = 0; i < nodes; ++i)
        u[i] = std::exp(-std::pow((i - nodes / 2) * 1e-3, 2.0));
    std::vector<double> u0 = u;

    auto run = [&](bool parallel) {
        u = u0;
        const auto start = std::chrono::steady_clock::now();
        for (int k = 0; k < steps; ++k) {
            if (parallel)
                gband::gheat_step_parallel(u, v, c, band);
            else
                gband::gheat_step_serial(u, v, c, band);
            u.swap(v);
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        return secs;
    };

    const double t_serial = run(false);
    std::vector<double> serial_result = u;
    const double t_parallel = run(true);

    bool identical = true;
    for (int i = 0; i < nodes; ++i)
        if (serial_result[i] != u[i]) identical = false;

    const double updates = static_cast<double>(nodes) * steps;
    std::printf("nodes=%d steps=%d\n", nodes, steps);
    std::printf("serial   %8.3f s  %7.1f Mupdates/s\n", t_serial,
                updates / t_serial / 1e6);
    std::printf("parallel %8.3f s  %7.1f Mupdates/s  speedup %.2fx\n",
                t_parallel, updates / t_parallel / 1e6, t_serial / t_parallel);
    std::printf("bitwise identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
