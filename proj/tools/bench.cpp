// Compares the serial reference sweeps against the OpenMP kernels on a fixed
// workload: the equivalence-fuzz sweep and the exhaustive labeled-tree check.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "indtree/oracle.hpp"
#include "indtree/reduction.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t exhaustive_sweep(int n, bool parallel) {
    std::uint64_t count = indtree::labeled_tree_count(n);
    std::uint64_t mismatches = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : mismatches) if (parallel)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        indtree::Graph g = indtree::labeled_tree_by_index(n, static_cast<std::uint64_t>(i));
        int claimed = indtree::classify(g).value;
        indtree::BigInt brute = indtree::enumerate_ind_sets(g).eval(-1);
        if (brute != claimed)
            ++mismatches;
    }
    return mismatches;
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t fuzz_count = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 4000;
    int fuzz_max_n = argc > 2 ? std::atoi(argv[2]) : 40;
    int exhaustive_n = argc > 3 ? std::atoi(argv[3]) : 8;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    indtree::FuzzOptions opts;
    opts.count = fuzz_count;
    opts.max_n = fuzz_max_n;
    opts.seed = 42;

    std::printf("fuzz sweep: count=%llu max_n=%d\n", (unsigned long long)fuzz_count, fuzz_max_n);
    opts.parallel = false;
    auto t0 = Clock::now();
    indtree::FuzzReport serial = indtree::fuzz_equivalence(opts);
    double t_serial = seconds_since(t0);

    opts.parallel = true;
    t0 = Clock::now();
    indtree::FuzzReport parallel = indtree::fuzz_equivalence(opts);
    double t_parallel = seconds_since(t0);

    bool same = serial.checked == parallel.checked && serial.failed == parallel.failed &&
                serial.shape_counts == parallel.shape_counts;
    std::printf("  serial   %8.3f s (pass %llu/%llu)\n", t_serial,
                (unsigned long long)(serial.checked - serial.failed),
                (unsigned long long)serial.checked);
    std::printf("  openmp   %8.3f s (pass %llu/%llu)\n", t_parallel,
                (unsigned long long)(parallel.checked - parallel.failed),
                (unsigned long long)parallel.checked);
    std::printf("  speedup  %8.2fx, reports %s\n", t_serial / t_parallel,
                same ? "identical" : "DIFFER");

    std::printf("exhaustive sweep: all labeled trees on n=%d\n", exhaustive_n);
    t0 = Clock::now();
    std::uint64_t m1 = exhaustive_sweep(exhaustive_n, false);
    double e_serial = seconds_since(t0);
    t0 = Clock::now();
    std::uint64_t m2 = exhaustive_sweep(exhaustive_n, true);
    double e_parallel = seconds_since(t0);
    std::printf("  serial   %8.3f s (%llu mismatches)\n", e_serial, (unsigned long long)m1);
    std::printf("  openmp   %8.3f s (%llu mismatches)\n", e_parallel, (unsigned long long)m2);
    std::printf("  speedup  %8.2fx\n", e_serial / e_parallel);

    return (serial.ok() && parallel.ok() && same && m1 == 0 && m2 == 0) ? 0 : 1;
}
