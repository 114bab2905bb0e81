// Timing comparison of the OpenMP kernels against their serial references.
// Not part of ctest; run manually: build/bench/wsat_bench [reps]

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "wsat/constructions.hpp"
#include "wsat/invariants.hpp"
#include "wsat/percolation.hpp"
#include "wsat/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(int reps, Fn&& fn) {
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

wsat::LabeledGraph random_graph(std::mt19937_64& rng, int n, double p) {
    wsat::LabeledGraph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("openmp: on, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp: off\n");
#endif

    std::mt19937_64 rng(42);
    wsat::LabeledGraph big = random_graph(rng, 20, 0.5);
    while (wsat::min_degree(big) < 1) big = random_graph(rng, 20, 0.5);
    wsat::PatternGraph fbig(big);

    std::printf("%-34s %10s %10s\n", "kernel", "serial ms", "parallel ms");

    {
        wsat::EdgeDeficiencyVector a, b;
        double ts = time_ms(reps, [&] { a = wsat::edge_deficiency_serial(fbig); });
        double tp = time_ms(reps, [&] { b = wsat::edge_deficiency_parallel(fbig); });
        std::printf("%-34s %10.2f %10.2f  (equal: %s)\n", "edge_deficiency v=20", ts, tp,
                    a.e == b.e ? "yes" : "NO");
    }
    {
        wsat::PatternGraph k9(wsat::pattern_k9_minus_matching().graph);
        auto host = wsat::saturator_sparse_growth(k9, {0, 2, 4, 6}, 2).graph;
        std::vector<std::pair<int, int>> a, b;
        double ts = time_ms(reps, [&] { a = wsat::addable_edges_serial(k9, host); });
        double tp = time_ms(reps, [&] { b = wsat::addable_edges(k9, host); });
        std::printf("%-34s %10.2f %10.2f  (equal: %s)\n", "addable_edges k9mm gadget n=17", ts, tp,
                    a == b ? "yes" : "NO");
    }
    {
        wsat::PatternGraph f914(random_graph(rng, 14, 0.6));
        int a = 0, b = 0;
        double ts = time_ms(reps, [&] { a = wsat::beta_serial(f914); });
        double tp = time_ms(reps, [&] { b = wsat::beta_parallel(f914); });
        std::printf("%-34s %10.2f %10.2f  (equal: %s)\n", "beta v=14", ts, tp,
                    a == b ? "yes" : "NO");
    }
    {
        wsat::PatternGraph k4(wsat::LabeledGraph::clique(4));
        wsat::SolveOptions one, two;
        one.use_constructions = false;
        two.use_constructions = false;
        two.workers = 2;
        long long va = 0, vb = 0;
        double ts = time_ms(1, [&] { va = wsat::wsat_exact(k4, 7, one).value; });
        double tp = time_ms(1, [&] { vb = wsat::wsat_exact(k4, 7, two).value; });
        std::printf("%-34s %10.2f %10.2f  (equal: %s)\n", "solver K4 n=7 (1 vs 2 workers)", ts, tp,
                    va == vb ? "yes" : "NO");
    }
    return 0;
}
