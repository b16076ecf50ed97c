#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermat/curves.hpp"
#include "fermat/report.hpp"

namespace fermat {

struct CartierColumn {
  BasisIndex target;    // basis element the image lands on
  std::uint64_t coeff;  // its nonzero scalar in F_p
};

// One application of the Cartier operator to the basis differential
// x^(i-1) y^(-j) dx; nullopt when the image vanishes.
std::optional<CartierColumn> cartier_step(const FermatContext& ctx, BasisIndex w);

// Sparse column form: columns[k] is the image of basis[k] (at most one
// basis element with a nonzero scalar).
struct CartierMatrix {
  std::uint64_t p = 0;
  std::vector<BasisIndex> basis;
  std::vector<std::optional<CartierColumn>> columns;
};

CartierMatrix cartier_matrix(const FermatContext& ctx);

// Dense square matrix over F_p, row-major.
struct FpMatrix {
  std::uint64_t p = 0;
  std::size_t dim = 0;
  std::vector<std::uint64_t> a;

  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

FpMatrix fp_identity(std::uint64_t p, std::size_t dim);
FpMatrix to_dense(const CartierMatrix& m);
FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y);
FpMatrix fp_pow(FpMatrix x, std::uint64_t e);
std::size_t fp_rank(FpMatrix m);

// p-rank as the rank of the genus-th power of the Cartier matrix (the
// stable rank).  Independent of the counting routines.
PRankReport prank_oracle(const FermatContext& ctx, std::size_t genus_cap = 512);

// The h-th power of the Cartier matrix must be diagonal with the entry for
// basis element (i, j) equal to C(j*beta, i*alpha) mod p; throws otherwise.
void check_h_step_diagonal(const FermatContext& ctx, std::size_t genus_cap = 512);

}  // namespace fermat
