#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermat/nat.hpp"

namespace fermat {

// Deterministic primality test for 64-bit inputs (trial division for small
// factors, then Miller-Rabin with a witness set that is exact below 2^64).
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Little-endian fixed-width base-p digit vector: digits[r] is the coefficient
// of p^r.
struct DigitVec {
  std::vector<std::uint64_t> digits;
  std::uint64_t base = 0;

  std::size_t size() const { return digits.size(); }
  Nat value() const;
};

// Digits of x in base p, exactly h of them.  Requires 0 <= x < p^h.
DigitVec base_p_digits(const Nat& x, std::uint64_t p, std::size_t h);

// True iff C(b, a) != 0 mod p, decided by digitwise domination (Lucas).
bool lucas_nonzero(const Nat& a, const Nat& b, std::uint64_t p);

// C(b, a) mod p via the digitwise product of single-digit binomials.
std::uint64_t binom_mod_p(const Nat& b, const Nat& a, std::uint64_t p);

// C(n, k) mod p for single digits 0 <= n, k < p.
std::uint64_t binom_digit_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

// Multiplicative order of p modulo n; requires gcd(p, n) = 1.  Order modulo
// 1 is taken to be 1.
std::uint64_t mult_order(std::uint64_t p, std::uint64_t n);

// 2-adic valuation; nullopt encodes +infinity (n = 0).
std::optional<unsigned long> two_adic_valuation(std::uint64_t n);

namespace detail {
// Same as base_p_digits but without parameter validation; for inner loops.
DigitVec digits_of(const Nat& x, std::uint64_t p, std::size_t h);
}  // namespace detail

}  // namespace fermat
