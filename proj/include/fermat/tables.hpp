#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermat/nat.hpp"

namespace fermat {

// Reproducible p-rank tables.  Each table instantiates one catalog of closed
// formulas at a prime p; every instantiated row carries the closed value, the
// value recounted by an independent path (when within range), and a flag:
// "ok", "MISMATCH", "-" (counter out of range), or "n/a (<reason>)" for rows
// whose applicability predicate fails at this p.
//
//   1  Fermat curves y^m = x^n + 1: the nine closed-form families
//   2  zero p-rank families
//   3  hyperelliptic y^2 = x^n + 1: the five power-shape families, r ranging
//   4  correction term delta_n for y^2 = x^n + 1, cases (i)-(v)
//   5  correction term for y^2 = x(x^n + 1), cases (i)-(iv)
struct TableOptions {
  std::uint64_t p = 7;
  unsigned long h_max = 2;           // power-exponent range (tables 1, 4, 5)
  unsigned long r_lo = 1;            // table 3 parameter range
  unsigned long r_hi = 2;
  std::string alpha_cases = "all";   // tables 4/5 case filter: "all" or e.g. "i,iii"
  Nat max_counter_genus = 4000;      // largest genus the cross-check attempts
};

struct TableRow {
  std::vector<std::string> cells;
};

struct TableDoc {
  int number = 0;
  std::uint64_t p = 0;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

TableDoc make_table(int number, const TableOptions& opt);

std::string render_markdown(const TableDoc& doc);
std::string render_csv(const TableDoc& doc);
std::string render_json(const TableDoc& doc);
std::string render_table(const TableDoc& doc, const std::string& format);  // md|csv|json

}  // namespace fermat
