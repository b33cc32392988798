// Compares the serial reference scan against the OpenMP scan on identical
// inputs and verifies that both produce the same family sets.
#include <chrono>
#include <cstdio>
#include <string>

#include "qent/grover.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double run(qent::grover::Exec exec, const std::vector<int>& sizes, int kmax, qent::grover::ScanResult& out) {
    const auto t0 = Clock::now();
    out = qent::grover::scan_families(sizes, kmax, {}, exec);
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes = {2, 3};
    int kmax = 25;
    if (argc > 1) {
        sizes.clear();
        for (const char* p = argv[1]; *p;) {
            sizes.push_back(std::atoi(p));
            while (*p && *p != ',') ++p;
            if (*p == ',') ++p;
        }
    }
    if (argc > 2) kmax = std::atoi(argv[2]);

    qent::grover::ScanResult serial, parallel;
    const double ts = run(qent::grover::Exec::Serial, sizes, kmax, serial);
    const double tp = run(qent::grover::Exec::Parallel, sizes, kmax, parallel);

    bool equal = true;
    for (const auto& [size, scan] : serial) {
        equal = equal && parallel.at(size).all_iterations == scan.all_iterations &&
                parallel.at(size).first_iteration == scan.first_iteration;
    }

    std::printf("serial:   %.3f s\n", ts);
    std::printf("parallel: %.3f s\n", tp);
    std::printf("speedup:  %.2fx\n", ts / tp);
    std::printf("results:  %s\n", equal ? "identical" : "DIFFER");
    return equal ? 0 : 1;
}
