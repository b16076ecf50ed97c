#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "fermat/arith.hpp"
#include "fermat/nat.hpp"

using namespace fermat;

namespace {

// Independent binomial mod p through GMP's exact C(n, k).
std::uint64_t ref_binom(unsigned long n, unsigned long k, std::uint64_t p) {
  Nat b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return mpz_fdiv_ui(b.get_mpz_t(), p);
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(13));
  CHECK(is_prime(7919));
  CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));  // Carmichael
  CHECK_FALSE(is_prime(7917));
}

TEST_CASE("modular arithmetic") {
  const std::uint64_t m = 0xffffffffffffffc5ull;  // largest 64-bit prime
  CHECK(mul_mod(m - 1, m - 1, m) == 1);
  CHECK(pow_mod(2, m - 1, m) == 1);  // Fermat little theorem
  for (std::uint64_t a = 1; a < 13; ++a) CHECK(mul_mod(a, inv_mod(a, 13), 13) == 1);
  CHECK(mul_mod(inv_mod(m - 2, m), m - 2, m) == 1);
}

TEST_CASE("base-p digits") {
  DigitVec z = base_p_digits(0, 5, 3);
  CHECK(z.digits == std::vector<std::uint64_t>{0, 0, 0});
  CHECK(base_p_digits(10, 5, 2).digits == std::vector<std::uint64_t>{0, 2});
  CHECK(base_p_digits(4, 3, 2).digits == std::vector<std::uint64_t>{1, 1});
  for (std::uint64_t p : {2ull, 3ull, 7ull})
    for (unsigned long x = 0; x < 200; ++x) {
      DigitVec dv = base_p_digits(x, p, 9);
      CHECK(dv.value() == x);
      for (std::uint64_t dig : dv.digits) CHECK(dig < p);
    }
  CHECK_THROWS_AS(base_p_digits(9, 3, 2), std::out_of_range);  // 9 >= 3^2
}

TEST_CASE("single-digit binomials match GMP") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
    for (std::uint64_t n = 0; n < p; ++n)
      for (std::uint64_t k = 0; k < p; ++k)
        CHECK(binom_digit_mod_p(n, k, p) == ref_binom(n, k, p));
}

TEST_CASE("binomials mod p match GMP") {
  CHECK(binom_mod_p(4, 2, 5) == 1);
  CHECK(binom_mod_p(10, 2, 5) == 0);
  CHECK(binom_mod_p(7, 3, 2) == 1);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull})
    for (unsigned long n = 0; n <= 40; ++n)
      for (unsigned long k = 0; k <= n + 2; ++k)
        CHECK(binom_mod_p(n, k, p) == ref_binom(n, k, p));
}

TEST_CASE("digit domination decides nonvanishing") {
  CHECK(lucas_nonzero(2, 4, 5));
  CHECK_FALSE(lucas_nonzero(2, 10, 5));
  CHECK_FALSE(lucas_nonzero(3, 6, 5));
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
    for (unsigned long b = 0; b <= 60; ++b)
      for (unsigned long a = 0; a <= b; ++a)
        CHECK(lucas_nonzero(a, b, p) == (ref_binom(b, a, p) != 0));
}

TEST_CASE("multiplicative order") {
  CHECK(mult_order(5, 4) == 1);
  CHECK(mult_order(3, 8) == 2);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(7, 1) == 1);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull})
    for (std::uint64_t n = 1; n <= 50; ++n) {
      if (n % p == 0) continue;
      std::uint64_t h = mult_order(p, n);
      CHECK(pow_mod(p % n == 0 ? 0 : p % n, h, n) == 1 % n);
      for (std::uint64_t e = 1; e < h; ++e) CHECK(pow_mod(p % n, e, n) != 1 % n);
    }
  CHECK_THROWS_AS(mult_order(3, 6), std::invalid_argument);
}

TEST_CASE("2-adic valuation") {
  CHECK(two_adic_valuation(1) == 0ul);
  CHECK(two_adic_valuation(12) == 2ul);
  CHECK(two_adic_valuation(8) == 3ul);
  CHECK_FALSE(two_adic_valuation(0).has_value());
}

TEST_CASE("exact naturals helpers") {
  CHECK(nat_pow(Nat(3), 5) == 243);
  CHECK(nat_pow(std::uint64_t{2}, 20) == 1048576);
  CHECK(div_exact(Nat(84), 7, "test") == 12);
  CHECK_THROWS_AS(div_exact(Nat(85), 7, "test"), std::logic_error);
  CHECK(fits_u64(Nat("18446744073709551615")));
  CHECK_FALSE(fits_u64(Nat("18446744073709551616")));
  CHECK(to_u64(Nat(42), "test") == 42);
}
