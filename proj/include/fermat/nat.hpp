#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fermat {

// Unbounded integer.  Everything that can outgrow a machine word (q = p^h,
// cofactors, counts, p-ranks) goes through Nat; no silent wraparound anywhere.
using Nat = mpz_class;

inline Nat nat_pow(const Nat& base, unsigned long exp) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Nat nat_pow(std::uint64_t base, unsigned long exp) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// Division that must be exact; a remainder means a formula was transcribed
// wrong, hence logic_error rather than rounding.
inline Nat div_exact(const Nat& num, const Nat& den, const char* what) {
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error(std::string("non-exact division in ") + what);
  Nat q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline bool fits_u64(const Nat& v) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Nat& v, const char* what) {
  if (!fits_u64(v))
    throw std::length_error(std::string(what) + " does not fit in 64 bits");
  return mpz_get_ui(v.get_mpz_t());
}

}  // namespace fermat
