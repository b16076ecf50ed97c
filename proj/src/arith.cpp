#include "fermat/arith.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace fermat {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);  // p prime
}

namespace {

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  std::uint64_t d = 17;
  while (d < (1ull << 20) && d * d <= n) {
    if (n % d == 0) return false;
    d += 2;
  }
  if (d * d > n) return true;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (a % n == 0) continue;
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

Nat DigitVec::value() const {
  Nat v = 0;
  for (std::size_t r = digits.size(); r-- > 0;) {
    v *= base;
    v += digits[r];
  }
  return v;
}

namespace detail {

DigitVec digits_of(const Nat& x, std::uint64_t p, std::size_t h) {
  DigitVec out;
  out.base = p;
  out.digits.assign(h, 0);
  Nat rest = x;
  for (std::size_t r = 0; r < h && rest != 0; ++r) {
    out.digits[r] = mpz_tdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
  }
  return out;
}

}  // namespace detail

DigitVec base_p_digits(const Nat& x, std::uint64_t p, std::size_t h) {
  if (!is_prime(p)) throw std::invalid_argument("base_p_digits: p is not prime");
  if (x < 0) throw std::out_of_range("base_p_digits: negative value");
  if (x >= nat_pow(p, h)) throw std::out_of_range("base_p_digits: value needs more than h digits");
  return detail::digits_of(x, p, h);
}

bool lucas_nonzero(const Nat& a, const Nat& b, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("lucas_nonzero: bad modulus");
  if (a < 0 || b < 0) throw std::out_of_range("lucas_nonzero: negative input");
  if (a > b) return false;
  Nat aa = a, bb = b;
  while (aa != 0) {
    std::uint64_t ad = mpz_tdiv_q_ui(aa.get_mpz_t(), aa.get_mpz_t(), p);
    std::uint64_t bd = mpz_tdiv_q_ui(bb.get_mpz_t(), bb.get_mpz_t(), p);
    if (ad > bd) return false;
  }
  return true;
}

std::uint64_t binom_digit_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (n >= p || k >= p) throw std::invalid_argument("binom_digit_mod_p: digit out of range");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = mul_mod(r, (n - k + i) % p, p);
    r = mul_mod(r, inv_mod(i, p), p);
  }
  return r;
}

std::uint64_t binom_mod_p(const Nat& b, const Nat& a, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("binom_mod_p: bad modulus");
  if (a < 0 || b < 0) throw std::out_of_range("binom_mod_p: negative input");
  if (a > b) return 0;
  Nat aa = a, bb = b;
  std::uint64_t r = 1;
  while (aa != 0) {
    std::uint64_t ad = mpz_tdiv_q_ui(aa.get_mpz_t(), aa.get_mpz_t(), p);
    std::uint64_t bd = mpz_tdiv_q_ui(bb.get_mpz_t(), bb.get_mpz_t(), p);
    if (ad > bd) return 0;
    r = mul_mod(r, binom_digit_mod_p(bd, ad, p), p);
  }
  return r;
}

std::uint64_t mult_order(std::uint64_t p, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mult_order: modulus must be positive");
  if (n == 1) return 1;
  std::uint64_t pw = p % n;
  if (std::gcd(pw, n) != 1) throw std::invalid_argument("mult_order: arguments are not coprime");
  std::uint64_t h = 1;
  while (pw != 1) {
    pw = mul_mod(pw, p % n, n);
    ++h;
    if (h > n) throw std::logic_error("mult_order: failed to terminate");
  }
  return h;
}

std::optional<unsigned long> two_adic_valuation(std::uint64_t n) {
  if (n == 0) return std::nullopt;
  return static_cast<unsigned long>(std::countr_zero(n));
}

}  // namespace fermat
