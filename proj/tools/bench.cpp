// Compares the serial reference sweeps against the OpenMP kernels and prints
// wall time plus speedup per sweep. Results are cross-checked on every run.
//
//   jugs-bench [max_a] [repetitions]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jugs/verify.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(int repetitions, F&& body) {
    double best = 1e300;
    for (int r = 0; r < repetitions; ++r) {
        const auto t0 = clock_type::now();
        body();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
    const int max_a = argc > 1 ? std::atoi(argv[1]) : 18;
    const int repetitions = argc > 2 ? std::atoi(argv[2]) : 3;
    if (max_a < 3 || repetitions < 1) {
        std::fprintf(stderr, "usage: jugs-bench [max_a >= 3] [repetitions >= 1]\n");
        return 2;
    }

#ifdef _OPENMP
    std::printf("sweeps up to a = %d, best of %d runs, %d OpenMP threads\n\n", max_a, repetitions,
                omp_get_max_threads());
#else
    std::printf("sweeps up to a = %d, best of %d runs, OpenMP disabled\n\n", max_a, repetitions);
#endif

    std::size_t serial_count = 0;
    std::size_t parallel_count = 0;

    {
        std::size_t failures = 0;
        const double serial =
            time_ms(repetitions, [&] { failures = jugs::sweep_equivalence_serial(max_a).size(); });
        std::size_t failures_parallel = 0;
        const double parallel =
            time_ms(repetitions, [&] { failures_parallel = jugs::sweep_equivalence(max_a).size(); });
        if (failures != failures_parallel) {
            std::fprintf(stderr, "equivalence sweep results differ between kernels\n");
            return 1;
        }
        report("equivalence sweep", serial, parallel);
    }

    {
        std::size_t mism = 0;
        const double serial = time_ms(repetitions, [&] {
            mism = jugs::sweep_solver_agreement_serial(max_a, &serial_count).size();
        });
        std::size_t mism_parallel = 0;
        const double parallel = time_ms(repetitions, [&] {
            mism_parallel = jugs::sweep_solver_agreement(max_a, &parallel_count).size();
        });
        if (mism != mism_parallel || serial_count != parallel_count) {
            std::fprintf(stderr, "agreement sweep results differ between kernels\n");
            return 1;
        }
        report("solver agreement", serial, parallel);
        std::printf("\n%zu start states, %zu quadruples\n", serial_count,
                    jugs::admissible_quadruples(max_a).size());
    }

    return 0;
}
