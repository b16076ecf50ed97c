#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "fermat/arith.hpp"
#include "fermat/nat.hpp"

namespace fermat {

// y^m = x^n + 1
struct FermatParams {
  std::uint64_t m = 0, n = 0;
};

// y^2 = x (x^n + 1)
struct TwistedHyperellipticParams {
  std::uint64_t n = 0;
};

// The two function-field towers handled by dedicated closed forms; only
// (p, h) is carried, their genus is not modeled here.
struct DgzParams {
  std::uint64_t h = 0;
};
struct BksParams {
  std::uint64_t h = 0;
};

struct CurveSpec {
  std::uint64_t p = 0;
  std::variant<FermatParams, TwistedHyperellipticParams, DgzParams, BksParams> shape;
};

// Throws std::invalid_argument when the parameters are outside the domain
// (p not prime, characteristic dividing an exponent, h = 0, ...).
void validate(const CurveSpec& spec);

// Index (i, j) of the basis differential x^{i-1} y^{-j} dx.
struct BasisIndex {
  std::uint64_t i = 0, j = 0;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

// Working state for y^m = x^n + 1 over F_p: the smallest field F_q with
// q = p^h and m, n both dividing q - 1, plus the two cofactors.
struct FermatContext {
  std::uint64_t p = 0, m = 0, n = 0, d = 0;  // d = gcd(m, n)
  unsigned long h = 0;
  Nat q, alpha, beta;  // alpha = (q-1)/n, beta = (q-1)/m
  Nat genus;
};

FermatContext make_context(std::uint64_t p, std::uint64_t m, std::uint64_t n);

// Same, with an explicit extension degree h (any h with m and n dividing
// p^h - 1 is valid; the p-rank does not depend on the choice).
FermatContext make_context_with_h(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                                  unsigned long h);

// Basis indices {(i, j) : m <= i*m < j*n <= n*(m-1)}, ordered by (j, i).
// The list has exactly `genus` entries.
std::vector<BasisIndex> basis(const FermatContext& ctx);

struct SupersingularVerdict {
  bool supersingular = false;
  std::optional<unsigned long> witness;  // smallest h' with p^h' = -1 mod lcm(m, n)
};

// Exact test: the curve is supersingular iff some power p^h' is -1 modulo
// lcm(m, n).  Undefined (throws) for genus 0.
SupersingularVerdict is_supersingular(const FermatContext& ctx);

// Shortcut rules for exponent shapes p^a+1 / p^a-1: returns the verdict when
// a rule applies, nullopt otherwise (including genus 0).
std::optional<bool> supersingular_special(const FermatContext& ctx);

}  // namespace fermat
