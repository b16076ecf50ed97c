#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fermat/curves.hpp"
#include "fermat/report.hpp"

namespace fermat {

// Number of workers parallel_for uses for a given jobs request (jobs == 0
// means the hardware default; 1 without OpenMP).
unsigned effective_jobs(unsigned jobs);

// Runs fn(i) for i in [0, count) on `jobs` workers (OpenMP when available,
// serial otherwise).  fn must not throw and must be safe to run
// concurrently on distinct i.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn);

struct SweepRecord {
  CurveSpec spec;
  std::optional<PRankReport> report;  // empty when the curve was rejected
  std::string error;                  // the rejection text
};

// One record per input curve, in input order regardless of jobs.
std::vector<SweepRecord> run_sweep(const std::vector<CurveSpec>& items, unsigned jobs);

// Serial reference implementation; run_sweep must match it exactly.
std::vector<SweepRecord> run_sweep_serial(const std::vector<CurveSpec>& items);

}  // namespace fermat
