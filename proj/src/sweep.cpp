#include "fermat/sweep.hpp"

#include <stdexcept>

#include "fermat/families.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fermat {

unsigned effective_jobs(unsigned jobs) {
#ifdef _OPENMP
  if (jobs == 0) return static_cast<unsigned>(omp_get_max_threads());
  return jobs;
#else
  (void)jobs;
  return 1;
#endif
}

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
  const int threads = static_cast<int>(effective_jobs(jobs));
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)jobs;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

namespace {

SweepRecord compute_one(const CurveSpec& spec) {
  SweepRecord rec;
  rec.spec = spec;
  try {
    rec.report = prank_curve(spec);
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const std::vector<CurveSpec>& items, unsigned jobs) {
  std::vector<SweepRecord> out(items.size());
  parallel_for(items.size(), jobs, [&](std::size_t i) { out[i] = compute_one(items[i]); });
  return out;
}

std::vector<SweepRecord> run_sweep_serial(const std::vector<CurveSpec>& items) {
  std::vector<SweepRecord> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(compute_one(item));
  return out;
}

}  // namespace fermat
