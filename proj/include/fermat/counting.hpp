#pragma once

#include <cstdint>
#include <vector>

#include "fermat/curves.hpp"
#include "fermat/nat.hpp"
#include "fermat/report.hpp"

namespace fermat {

struct CountResult {
  Nat value;
  Method method = Method::naive;
};

// Number of pairs (i, j), 0 <= j <= m, with i*alpha digitwise dominated by
// j*beta in base p (equivalently C(j*beta, i*alpha) != 0 mod p).  The p-rank
// of the curve is this count minus (m + n + d).
CountResult count_dominated_pairs_naive(const FermatContext& ctx);
CountResult count_dominated_pairs_dp(const FermatContext& ctx);
CountResult count_dominated_pairs(const FermatContext& ctx);  // dp if feasible, else naive

// Number of multiples of alpha digitwise dominated by J (including 0).
// Digit DP over J from the most significant digit down, state = value mod
// alpha; transition state' = (state * p + digit) mod alpha.
Nat count_dominated_multiples(const DigitVec& J, std::uint64_t alpha);

PRankReport prank_general(const FermatContext& ctx);
PRankReport prank_with(const FermatContext& ctx, Method how);  // naive or digit_dp

// Same count restricted to the basis index set; an independent arrangement
// of the same loop.
PRankReport prank_via_basis_set(const FermatContext& ctx);

// p-rank of y^2 = x^n + 1 (p odd) through the dominated-digit set
// S = { i in [0, n/2] : C((q-1)/2, i*alpha) != 0 mod p }:
// gamma = #S - 1 for n odd, #S - 2 for n even.
PRankReport prank_hyperelliptic(std::uint64_t p, std::uint64_t n);

// Number of h-digit base-p values with every digit <= (p-1)/2 that are
// divisible by alpha.  Requires p odd and alpha | p^h - 1.
Nat count_halfdigit_multiples(std::uint64_t p, unsigned long h, std::uint64_t alpha);

// Number of solutions of sum_i coeffs[i] * x_i == b (mod alpha) with all
// x_i in [0, t*alpha + s].  Each coefficient must be a unit mod alpha.
Nat count_congruence_box(std::uint64_t alpha, std::uint64_t t, std::uint64_t s,
                         const std::vector<std::uint64_t>& coeffs, std::uint64_t b);

// The residual count over [0, s]^h used by count_congruence_box: closed
// special cases when they apply, otherwise direct enumeration (capped).
Nat congruence_box_residual(std::uint64_t alpha, std::uint64_t s,
                            const std::vector<std::uint64_t>& coeffs, std::uint64_t b);

// Closed-form route to the hyperelliptic p-rank: gamma derived from the
// correction term delta_n = (s+1)^h - alpha*(delta - 1 or 2), where delta
// counts the residual congruence box.
struct HyperellipticFormula {
  Nat gamma;
  Nat correction;  // delta_n
  unsigned long h = 0;
  Nat alpha;
};

HyperellipticFormula prank_hyperelliptic_formula(std::uint64_t p, std::uint64_t n);
HyperellipticFormula prank_hyperelliptic_formula_with_h(std::uint64_t p, std::uint64_t n,
                                                        unsigned long h);

// The correction term alone, at an explicit extension degree h.
Nat hyperelliptic_correction(std::uint64_t p, std::uint64_t n, unsigned long h);

}  // namespace fermat
