// Times the OpenMP production kernels against the serial reference
// implementations on random dense matrices over small prime fields.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "koszulkit/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace koszulkit;
using clock_type = std::chrono::steady_clock;

namespace {

FpMatrix random_matrix(Fp f, size_t rows, size_t cols, std::mt19937& rng) {
    FpMatrix m(f, rows, cols);
    std::uniform_int_distribution<uint32_t> dist(0, f.modulus() - 1);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            m(r, c) = dist(rng);
    return m;
}

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    size_t n = argc > 1 ? std::stoul(argv[1]) : 512;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled at build time\n");
#endif
    std::printf("%-6s %-6s %-10s %-12s %-12s %-8s\n", "l", "n", "kernel", "parallel ms",
                "serial ms", "speedup");
    std::mt19937 rng(2024);
    for (uint32_t l : {2u, 3u, 5u}) {
        Fp f(l);
        FpMatrix a = random_matrix(f, n, n, rng);
        FpMatrix b = random_matrix(f, n, n, rng);

        FpMatrix r1 = a, r2 = a;
        auto t0 = clock_type::now();
        rref(r1);
        double par = ms_since(t0);
        t0 = clock_type::now();
        rref_serial(r2);
        double ser = ms_since(t0);
        if (!(r1 == r2)) {
            std::fprintf(stderr, "kernel mismatch: rref vs rref_serial\n");
            return 1;
        }
        std::printf("%-6u %-6zu %-10s %-12.2f %-12.2f %-8.2f\n", l, n, "rref", par, ser,
                    ser / par);

        t0 = clock_type::now();
        FpMatrix m1 = matmul(a, b);
        par = ms_since(t0);
        t0 = clock_type::now();
        FpMatrix m2 = matmul_serial(a, b);
        ser = ms_since(t0);
        if (!(m1 == m2)) {
            std::fprintf(stderr, "kernel mismatch: matmul vs matmul_serial\n");
            return 1;
        }
        std::printf("%-6u %-6zu %-10s %-12.2f %-12.2f %-8.2f\n", l, n, "matmul", par, ser,
                    ser / par);
    }
    return 0;
}
