// timing comparison of the OpenMP kernels against the serial reference

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "holosig/kernels.hpp"
#include "holosig/path.hpp"
#include "holosig/signature.hpp"

using namespace holosig;
using Clock = std::chrono::steady_clock;

namespace {

TensorSeries random_series(std::mt19937& rng, int n, int m) {
  TensorSeries s(n, m);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int p = 0; p <= m; ++p)
    for (double& c : s.level(p)) c = u(rng);
  return s;
}

template <typename F>
double time_best_of(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    body();
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

void bench_kernel(const char* name, int n, int m, int reps, bool shuffle_kernel) {
  std::mt19937 rng(42);
  const auto a = random_series(rng, n, m);
  const auto b = random_series(rng, n, m);
  auto out_serial = TensorSeries::like(a);
  auto out_parallel = TensorSeries::like(a);

  const double ts = time_best_of(reps, [&] {
    if (shuffle_kernel)
      kernels::serial::shuffle_into(out_serial, a, b);
    else
      kernels::serial::product_into(out_serial, a, b);
  });
  const double tp = time_best_of(reps, [&] {
    if (shuffle_kernel)
      kernels::shuffle_into(out_parallel, a, b);
    else
      kernels::product_into(out_parallel, a, b);
  });
  const bool same = out_serial == out_parallel;
  std::printf("%-22s n=%d m=%d  serial %8.3f ms  parallel %8.3f ms  x%.2f  %s\n",
              name, n, m, ts * 1e3, tp * 1e3, ts / tp,
              same ? "bitwise equal" : "MISMATCH");
}

void bench_path_signature(int n, int segments, int m, int reps) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PlPath path;
  path.dimension = n;
  std::vector<double> at(static_cast<std::size_t>(n), 0.0);
  path.points.push_back(at);
  for (int s = 0; s < segments; ++s) {
    for (auto& c : at) c += u(rng);
    path.points.push_back(at);
  }

  // serial fold with the reference kernel
  TensorSeries serial_sig = TensorSeries::unit(n, m);
  const double ts = time_best_of(reps, [&] {
    TensorSeries acc = TensorSeries::unit(n, m);
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
      const auto seg = segment_signature(path.segment_displacement(i), m);
      kernels::serial::concat_into(acc, seg);
    }
    serial_sig = acc;
  });
  TensorSeries parallel_sig = TensorSeries::unit(n, m);
  const double tp =
      time_best_of(reps, [&] { parallel_sig = path_signature(path, m); });
  std::printf("path signature         n=%d m=%d segs=%d  serial %8.3f ms  "
              "parallel %8.3f ms  x%.2f  %s\n",
              n, m, segments, ts * 1e3, tp * 1e3, ts / tp,
              serial_sig == parallel_sig ? "bitwise equal" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled, parallel kernels run serially\n");
#endif
  if (quick) {
    bench_kernel("tensor product", 3, 6, 3, false);
    bench_kernel("shuffle product", 2, 8, 3, true);
    bench_path_signature(3, 64, 6, 3);
    return 0;
  }
  bench_kernel("tensor product", 3, 8, 5, false);
  bench_kernel("tensor product", 4, 8, 5, false);
  bench_kernel("tensor product", 5, 8, 3, false);
  bench_kernel("shuffle product", 2, 10, 5, true);
  bench_kernel("shuffle product", 3, 8, 5, true);
  bench_path_signature(4, 128, 7, 3);
  bench_path_signature(4, 64, 8, 3);
  bench_path_signature(5, 32, 8, 3);
  return 0;
}
