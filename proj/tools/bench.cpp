// Benchmarks the OpenMP batch kernels against their serial references and
// verifies that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>

#include "kegraph/batch.hpp"
#include "kegraph/matching.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_seconds(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool match) {
    std::printf("%-34s %10.3fs %10.3fs %7.2fx  %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, match ? "results match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel variants run serially\n");
#endif
    std::printf("%-34s %11s %11s %8s\n", "benchmark", "serial", "parallel", "speedup");

    {
        kegraph::Graph g = kegraph::make_gnp(2000, 0.003, 1);
        kegraph::VertexSet serial_out, parallel_out;
        double ts = time_seconds([&] { serial_out = kegraph::mu_critical_vertices(g); });
        double tp = time_seconds([&] { parallel_out = kegraph::mu_critical_vertices_parallel(g); });
        report("mu-critical scan (n=2000)", ts, tp, serial_out == parallel_out);
    }

    {
        auto check = [](const kegraph::Graph& g) { return kegraph::agreement_failure(g); };
        kegraph::SuiteOutcome serial_out, parallel_out;
        double ts = time_seconds([&] { serial_out = kegraph::run_exhaustive_suite(5, check); });
        double tp =
            time_seconds([&] { parallel_out = kegraph::run_exhaustive_suite_parallel(5, check); });
        report("exhaustive agreement (n<=5)", ts, tp,
               serial_out.checked == parallel_out.checked &&
                   serial_out.failures == parallel_out.failures);
    }

    {
        const double densities[] = {0.1, 0.3, 0.5, 0.8};
        std::vector<kegraph::Graph> corpus = kegraph::random_corpus(200, 6, 10, densities, 7);
        auto check = [](const kegraph::Graph& g) { return kegraph::structure_failure(g); };
        kegraph::SuiteOutcome serial_out, parallel_out;
        double ts = time_seconds([&] { serial_out = kegraph::run_corpus_suite(corpus, check); });
        double tp =
            time_seconds([&] { parallel_out = kegraph::run_corpus_suite_parallel(corpus, check); });
        report("random structure corpus (200)", ts, tp,
               serial_out.checked == parallel_out.checked &&
                   serial_out.failures == parallel_out.failures);
    }
    return 0;
}
