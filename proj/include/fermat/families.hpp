#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/curves.hpp"
#include "fermat/report.hpp"

namespace fermat {

// Curve families with closed-form p-ranks.  Identifiers describe the shape
// of the exponents (m, n); "hyper" families are y^2 = x^n + 1, "twisted"
// families are y^2 = x(x^n + 1).
enum class FamilyId {
  pm1_pp1,                  // m | p-1, n | p+1
  m_phm1,                   // m | p^h-1, n = p^h-1
  p2p1_fermat,              // m = n = p^2+p+1
  p2p1_p3m1,                // m = p^2+p+1, n = p^3-1
  half_phm1_fermat,         // m = n = (p^h-1)/2, p odd
  half_phm1_full,           // m = (p^h-1)/2, n = p^h-1, p odd
  pam1_pbm1,                // m = p^a-1, n = p^b-1
  char2_coprime_orders,     // p = 2, m, n odd, coprime orders of 2
  plus1_plus1_zero,         // m | p^u+1, n | p^v+1
  pap1_pbm1_even,           // m = p^a+1, n = p^b-1, b/gcd(a,b) even
  pap1_pbm1_odd,            // m = p^a+1, n = p^b-1, b/gcd(a,b) odd
  char2_plus1_minus1_zero,  // p = 2, m | 2^u+1, n | 2^v-1, v/gcd(u,v) odd
  hyper_phm1,               // y^2 = x^n+1, n = p^r-1
  hyper_2php1,              // n = 2(p^r+1)
  hyper_2phm1,              // n = 2(p^r-1)
  hyper_p2rpr1,             // n = p^2r+p^r+1
  hyper_2p2rpr1,            // n = 2(p^2r+p^r+1)
  hyper_alternating,        // n = p^3r-p^2r+p^r-1
  hyper_correction,         // y^2 = x^n+1 with a closed correction case
  twisted_odd,              // y^2 = x(x^n+1), n odd
  twisted_even,             // y^2 = x(x^n+1), n even, closed correction case
  twisted_php1,             // y^2 = x(x^n+1), n = p^h+1
  odd_cofactor_equal,       // y^2 = x^n+1, n = 2(p^h-1)/a, odd a | p^h-1
  dgz,                      // tower curve, level h
  bks,                      // tower curve, level h, p odd
  pp1_block,                // m0(p+1), n0(p+1) with m0, n0 | p-1
};

const char* family_id_name(FamilyId id);
std::optional<FamilyId> family_id_from_string(std::string_view s);
std::vector<FamilyId> all_family_ids();

// Shape parameters; each family reads the subset it needs.
struct FamilyParams {
  std::optional<std::uint64_t> m, n;
  std::optional<unsigned long> h, r;
  std::optional<std::uint64_t> a, b, u, v;
};

PRankReport closed_form(std::uint64_t p, FamilyId id, const FamilyParams& params);

struct FamilyMatch {
  FamilyId id;
  FamilyParams params;
  PRankReport report;
};

// All catalog families whose shape the exponent pair (m, n) fits, in either
// orientation; each match carries the closed-form p-rank.
std::vector<FamilyMatch> match_families(std::uint64_t p, std::uint64_t m, std::uint64_t n);

// Same for the twisted curve y^2 = x(x^n + 1).
std::vector<FamilyMatch> match_twisted_families(std::uint64_t p, std::uint64_t n);

// p-rank of y^2 = x(x^n + 1): difference of the two hyperelliptic counters.
PRankReport prank_twisted(std::uint64_t p, std::uint64_t n);

// Same value through the closed correction terms (no counters).
PRankReport prank_twisted_formula(std::uint64_t p, std::uint64_t n);

PRankReport prank_dgz(std::uint64_t p, unsigned long h);
PRankReport prank_bks(std::uint64_t p, unsigned long h);

// Dispatch on the curve shape: counting for Fermat curves, the counter
// bridge for twisted curves, closed forms for the tower curves.
PRankReport prank_curve(const CurveSpec& spec);

struct IdentityCheck {
  std::string name;
  Nat lhs;
  Nat rhs;
};

// Decomposition identities linking y^2 = x^(2^j u)+1 and y^2 = x(x^(2^j u)+1)
// for odd u: towers' p-ranks computed by counters on one side and closed
// correction terms on the other.
std::vector<IdentityCheck> kani_rosen_identities(std::uint64_t p, std::uint64_t u,
                                                 unsigned long k);

}  // namespace fermat
