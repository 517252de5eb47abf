// Benchmark: serial reference vs OpenMP-parallel axiom suite.
//
// Usage: bench_axioms [n_max] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "chisq/axioms.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace chisq;

namespace {

double time_suite(const MeasureSpec& m, const SuiteConfig& config, bool parallel,
                  int repeats, std::vector<CheckReport>& out) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    out = run_axiom_suite(m, config, parallel);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed < best) best = elapsed;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n_max = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  SuiteConfig config;
  config.n_values.clear();
  for (std::size_t n = 2; n <= n_max; ++n) config.n_values.push_back(n);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel path runs serially\n");
#endif
  std::printf("suite: n up to %zu, %d repeats, best time reported\n\n", n_max,
              repeats);

  const std::vector<MeasureSpec> measures = {
      MeasureSpec::chi2_0_measure(), MeasureSpec::chi2_1_measure(),
      MeasureSpec::abs_counter(), MeasureSpec::sq_counter()};

  bool all_match = true;
  for (const auto& m : measures) {
    std::vector<CheckReport> serial, parallel;
    double ts = time_suite(m, config, false, repeats, serial);
    double tp = time_suite(m, config, true, repeats, parallel);
    bool match = serial == parallel;
    all_match = all_match && match;
    std::printf("%-12s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  results %s\n",
                m.name().c_str(), ts, tp, ts / tp, match ? "match" : "DIFFER");
  }
  return all_match ? 0 : 1;
}
