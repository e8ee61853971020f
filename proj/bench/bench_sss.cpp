// Serial vs OpenMP timings for the two parallel kernels.
//   bench_sss [repeats] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dualbraid/periodic.hpp"
#include "dualbraid/sss.hpp"

using namespace dualbraid;

namespace {

double best_of(int repeats, const std::function<std::size_t()>& f, std::size_t& size) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    size = f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

void row(const std::string& name, int repeats, const std::function<std::size_t()>& serial,
         const std::function<std::size_t()>& parallel) {
  std::size_t a = 0, b = 0;
  const double ts = best_of(repeats, serial, a);
  const double tp = best_of(repeats, parallel, b);
  std::printf("%-28s %10zu %12.4f %12.4f %8.2fx%s\n", name.c_str(), a, ts, tp, ts / tp,
              a == b ? "" : "  SIZE MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  if (argc > 2) omp_set_num_threads(std::atoi(argv[2]));
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("threads: %d, best of %d\n", threads, repeats);
  std::printf("%-28s %10s %12s %12s %9s\n", "kernel", "size", "serial [s]", "openmp [s]", "speedup");

  for (auto [n, d] : {std::pair{13, 3}, std::pair{13, 4}, std::pair{13, 6}, std::pair{17, 4}}) {
    row("enumerate_sss(" + std::to_string(n) + "," + std::to_string(d) + ")", repeats,
        [n = n, d = d] { return enumerate_sss_serial(n, d).elements.size(); },
        [n = n, d = d] { return enumerate_sss(n, d).elements.size(); });
  }
  for (auto [n, d] : {std::pair{7, 3}, std::pair{9, 2}, std::pair{9, 4}}) {
    const NormalForm x = epsilon_power(n, d);
    row("sss_brute_force(e^" + std::to_string(d) + ", B" + std::to_string(n) + ")", repeats,
        [x] { return sss_brute_force_serial(x).size(); }, [x] { return sss_brute_force(x).size(); });
  }
}
