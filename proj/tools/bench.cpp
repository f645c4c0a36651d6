#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclodet/field.hpp"
#include "cyclodet/matrix.hpp"
#include "cyclodet/theorems.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = clock_type::now();
        fn();
        auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::uint64_t> qs{121, 243, 343};
    int reps = 3;

    CLI::App app{"serial reference vs parallel kernel timings"};
    app.add_option("--q", qs, "field orders to benchmark");
    app.add_option("--reps", reps, "repetitions per measurement (best is kept)");
    CLI11_PARSE(app, argc, argv);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads: %d (set OMP_NUM_THREADS to change)\n", threads);
    std::printf("%8s %16s %14s %14s %8s\n", "q", "kernel", "serial ms", "parallel ms", "speedup");

    for (std::uint64_t q : qs) {
        const cyclodet::Field F = cyclodet::field_of_order(q);

        const double build_serial = time_ms(reps, [&] { (void)cyclodet::reference::build_S(F); });
        const double build_par = time_ms(reps, [&] { (void)cyclodet::build_S(F); });
        std::printf("%8llu %16s %14.2f %14.2f %7.2fx\n", static_cast<unsigned long long>(q), "build_S",
                    build_serial, build_par, build_serial / build_par);

        const cyclodet::FqMatrix S = cyclodet::build_S(F);
        const double det_serial = time_ms(reps, [&] { (void)cyclodet::reference::determinant(S); });
        const double det_par = time_ms(reps, [&] { (void)cyclodet::determinant(S); });
        std::printf("%8llu %16s %14.2f %14.2f %7.2fx\n", static_cast<unsigned long long>(q), "determinant",
                    det_serial, det_par, det_serial / det_par);

        if (cyclodet::determinant(S) == cyclodet::reference::determinant(S) &&
            cyclodet::build_S(F) == cyclodet::reference::build_S(F)) {
            continue;
        }
        std::printf("MISMATCH between serial and parallel results at q = %llu\n",
                    static_cast<unsigned long long>(q));
        return 1;
    }
    return 0;
}
