// Benchmarks the parallel sweep against the serial reference and the two
// counting kernels against each other, checking agreement as it goes.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "fermat/counting.hpp"
#include "fermat/curves.hpp"
#include "fermat/sweep.hpp"

namespace {

using namespace fermat;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t max_mn = 40;
  unsigned jobs = 0;  // hardware default
  if (argc > 1) max_mn = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) jobs = static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10));

  std::vector<CurveSpec> items;
  for (std::uint64_t p : {3ull, 5ull, 7ull})
    for (std::uint64_t m = 2; m <= max_mn; ++m)
      for (std::uint64_t n = 2; n <= max_mn; ++n) {
        CurveSpec spec;
        spec.p = p;
        spec.shape = FermatParams{m, n};
        items.push_back(spec);
      }
  std::cout << "sweep grid: " << items.size() << " curves, jobs="
            << effective_jobs(jobs) << "\n";

  auto t0 = std::chrono::steady_clock::now();
  auto serial = run_sweep_serial(items);
  double ts = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  auto parallel = run_sweep(items, jobs);
  double tp = seconds_since(t0);

  if (serial.size() != parallel.size()) {
    std::cerr << "FAIL: result counts differ\n";
    return 1;
  }
  for (std::size_t i = 0; i < serial.size(); ++i) {
    bool ok_s = serial[i].report.has_value();
    bool ok_p = parallel[i].report.has_value();
    if (ok_s != ok_p || (ok_s && serial[i].report->gamma != parallel[i].report->gamma)) {
      std::cerr << "FAIL: serial and parallel sweeps disagree at index " << i << "\n";
      return 1;
    }
  }
  std::cout << "sweep serial:   " << ts << " s\n";
  std::cout << "sweep parallel: " << tp << " s  (speedup " << ts / tp << "x)\n";

  // Counting kernels head to head on a diagonal curve m = n = p^h - 1, where
  // alpha = 1 keeps the digit DP valid no matter how large the curve gets.
  const std::uint64_t p = 5;
  const std::uint64_t h = std::clamp<std::uint64_t>(2 + max_mn / 15, 2, 6);
  std::uint64_t side = 1;
  for (std::uint64_t i = 0; i < h; ++i) side *= p;
  const std::uint64_t m = side - 1, n = side - 1;
  FermatContext ctx = make_context(p, m, n);
  t0 = std::chrono::steady_clock::now();
  auto naive = count_dominated_pairs_naive(ctx);
  double tn = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto dp = count_dominated_pairs_dp(ctx);
  double td = seconds_since(t0);
  if (naive.value != dp.value) {
    std::cerr << "FAIL: counting kernels disagree on (" << p << "," << m << "," << n
              << ")\n";
    return 1;
  }
  std::cout << "count (p=" << p << ", m=" << m << ", n=" << n << "): naive " << tn
            << " s, digit DP " << td << " s\n";
  std::cout << "all agreement checks passed\n";
  return 0;
}
