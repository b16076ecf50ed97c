#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cstdint>
#include <variant>
#include <vector>

#include "fermat/sweep.hpp"

using namespace fermat;

namespace {

std::vector<CurveSpec> mixed_grid() {
  std::vector<CurveSpec> items;
  for (std::uint64_t p : {3ull, 4ull, 5ull})  // 4 is deliberately invalid
    for (std::uint64_t m = 2; m <= 8; ++m)
      for (std::uint64_t n = 2; n <= 8; ++n) {
        CurveSpec spec;
        spec.p = p;
        spec.shape = FermatParams{m, n};
        items.push_back(spec);
      }
  CurveSpec tw;
  tw.p = 5;
  tw.shape = TwistedHyperellipticParams{6};
  items.push_back(tw);
  CurveSpec tower;
  tower.p = 3;
  tower.shape = BksParams{2};
  items.push_back(tower);
  return items;
}

}  // namespace

TEST_CASE("worker count resolution") {
  CHECK(effective_jobs(1) == 1);
  CHECK(effective_jobs(7) == 7);
  CHECK(effective_jobs(0) >= 1);
}

TEST_CASE("parallel_for covers every index exactly once") {
  const std::size_t count = 1000;
  std::vector<std::atomic<int>> seen(count);
  parallel_for(count, 4, [&](std::size_t i) { seen[i].fetch_add(1); });
  for (std::size_t i = 0; i < count; ++i) CHECK(seen[i].load() == 1);
}

TEST_CASE("serial and parallel sweeps agree and preserve order") {
  auto items = mixed_grid();
  auto serial = run_sweep_serial(items);
  auto parallel = run_sweep(items, 3);
  REQUIRE(serial.size() == items.size());
  REQUIRE(parallel.size() == items.size());

  for (std::size_t i = 0; i < items.size(); ++i) {
    CHECK(serial[i].spec.p == items[i].p);
    CHECK(serial[i].spec.shape.index() == items[i].shape.index());
    CHECK(parallel[i].spec.p == items[i].p);
    CHECK(serial[i].report.has_value() == parallel[i].report.has_value());
    if (serial[i].report) {
      CHECK(serial[i].report->gamma == parallel[i].report->gamma);
      CHECK(serial[i].error.empty());
    } else {
      CHECK(!serial[i].error.empty());
      CHECK(serial[i].error == parallel[i].error);
    }
  }

  // p = 4 rows all failed; valid Fermat rows all carry a genus
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].p == 4) {
      CHECK_FALSE(serial[i].report.has_value());
    } else if (std::holds_alternative<FermatParams>(items[i].shape)) {
      const auto& f = std::get<FermatParams>(items[i].shape);
      if (f.m % items[i].p != 0 && f.n % items[i].p != 0) {
        REQUIRE(serial[i].report.has_value());
        CHECK(serial[i].report->genus.has_value());
      } else {
        CHECK_FALSE(serial[i].report.has_value());
      }
    }
  }
}

TEST_CASE("sweep handles every curve kind") {
  auto items = mixed_grid();
  auto records = run_sweep_serial(items);
  const auto& twisted = records[records.size() - 2];
  REQUIRE(twisted.report.has_value());
  CHECK(twisted.report->gamma == 3);  // y^2 = x(x^6+1) over F_5
  const auto& tower = records.back();
  REQUIRE(tower.report.has_value());
  CHECK(tower.report->gamma == (Nat(4) - 1) * 9 - 1);  // level-2 closed form at p = 3
}
