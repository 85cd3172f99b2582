// Compares the OpenMP kernels against their serial reference implementations
// on synthetic inputs: eccentricity sweeps (the exact-diameter oracle), APSP,
// and the OV brute-force search.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "diam/gen.hpp"
#include "diam/graph.hpp"
#include "diam/ov.hpp"

using namespace diam;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
    return ms / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-32s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::stoi(argv[1]) : 800;
    int reps = argc > 2 ? std::stoi(argv[2]) : 3;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-32s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    Graph unweighted = gen::random_strongly_connected_digraph(n, 4 * n, 1, 1, 1);
    report("eccentricities (unweighted)",
           time_ms([&] { all_eccentricities_serial(unweighted, Direction::Out); }, reps),
           time_ms([&] { all_eccentricities(unweighted, Direction::Out); }, reps));

    Graph weighted = gen::random_connected_undirected(n, 4 * n, 1, 10, 2);
    report("eccentricities (weighted)",
           time_ms([&] { all_eccentricities_serial(weighted, Direction::Out); }, reps),
           time_ms([&] { all_eccentricities(weighted, Direction::Out); }, reps));

    Graph mid = gen::random_connected_undirected(n / 2, 2 * n, 1, 10, 3);
    report("apsp",
           time_ms(
               [&] {
                   for (Vertex v = 0; v < mid.vertex_count(); ++v)
                       sssp(mid, v, Direction::Out);
               },
               reps),
           time_ms([&] { apsp(mid); }, reps));

    ov::OvInstance inst = ov::gen_random(40, 16, 0.85, 4);
    report("ov brute force (k=3)",
           time_ms([&] { ov::brute_force_serial(inst, 3); }, reps),
           time_ms([&] { ov::brute_force(inst, 3); }, reps));

    // Sanity: both paths must agree.
    auto a = all_eccentricities_serial(unweighted, Direction::Out);
    auto b = all_eccentricities(unweighted, Direction::Out);
    if (a != b) {
        std::fprintf(stderr, "kernel mismatch between serial and parallel eccentricities\n");
        return 1;
    }
    if (ov::brute_force_serial(inst, 3) != ov::brute_force(inst, 3)) {
        std::fprintf(stderr, "kernel mismatch between serial and parallel brute force\n");
        return 1;
    }
    return 0;
}
