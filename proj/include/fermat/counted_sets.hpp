#pragma once

#include <cstdint>

#include "fermat/nat.hpp"

namespace fermat {

// Families of finite sets with closed-form cardinalities.  Each kind pairs a
// closed formula with an independent direct enumeration for cross-checking.
//
//   quadruple_min_sum  (a,b,c,d) in [1,p]^4 with c,d <= min(a,b) and
//                      a + b <= c + d + p - 1; parameter b below is the
//                      prime p.  Count: p(p+1)(p^2+p+2)/8.
//   min_box            (a,c) in [0,b-1]^m x [0,b-1]^n with every c_j <=
//                      min_r a_r.  Count: sum_i ((i+1)^m - i^m)(b-i)^n.
//   mirror_min_box     (a,c) as above but c_j <= min_r min(a_r, b-1-a_r).
//   split_min_box      (a,c,e) in [0,b-1]^(m+n+n) with c_j <= min_r a_r and
//                      e_j <= min_r (b-1-a_r).
enum class SetKind { quadruple_min_sum, min_box, mirror_min_box, split_min_box };

struct SetParams {
  SetKind which = SetKind::min_box;
  std::uint64_t b = 0;  // box edge; the prime for quadruple_min_sum
  std::uint64_t m = 0;  // unused by quadruple_min_sum
  std::uint64_t n = 0;  // unused by quadruple_min_sum
};

Nat closed_count(const SetParams& sp);

// Direct enumeration; capped, with a structured walk over the a-tuples when
// the full coordinate product is out of reach.
Nat enumerate_count(const SetParams& sp);

}  // namespace fermat
