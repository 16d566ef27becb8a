// Timing comparison of the serial reference modular kernel against the
// blocked OpenMP variant, with a bit-identity check on every run.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "morlicz/kernels.hpp"
#include "morlicz/rng.hpp"

using namespace morlicz;

int main(int argc, char** argv) {
    std::size_t dim = argc > 1 ? static_cast<std::size_t>(std::atol(argv[1])) : 200000;
    int reps = argc > 2 ? std::atoi(argv[2]) : 20;

    MusielakFamily fam = MusielakFamily::constant(OrliczFunction::power(2.5));
    auto fns = fam.materialize(dim);
    Rng rng(42);
    std::vector<double> x(dim);
    for (auto& v : x) v = rng.uniform(-1.0, 1.0);

    auto time_it = [&](bool use_omp, double& result) {
        auto t0 = std::chrono::steady_clock::now();
        double acc = 0.0;
        for (int r = 0; r < reps; ++r)
            acc = use_omp ? kernels::modular_omp(fns, x, 0.5) : kernels::modular_serial(fns, x, 0.5);
        result = acc;
        auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
    };

    double serial_val = 0.0, omp_val = 0.0;
    double serial_ms = time_it(false, serial_val);
    double omp_ms = time_it(true, omp_val);

    std::printf("dim=%zu reps=%d\n", dim, reps);
    std::printf("serial: %.3f ms/call  value=%.17g\n", serial_ms, serial_val);
    std::printf("openmp: %.3f ms/call  value=%.17g\n", omp_ms, omp_val);
    std::printf("speedup: %.2fx\n", serial_ms / omp_ms);
    if (serial_val != omp_val) {
        std::printf("MISMATCH: kernels disagree bit-for-bit\n");
        return 1;
    }
    std::printf("bit-identical: yes\n");
    return 0;
}
