#include "fermat/counting.hpp"

#include <numeric>
#include <stdexcept>

namespace fermat {

namespace {

constexpr std::uint64_t kDpAlphaCap = 1'000'000;       // DP state count
constexpr std::uint64_t kResidualEnumCap = 10'000'000; // (s+1)^h

// a += b on fixed-width little-endian digit vectors (same base, no overflow
// past the top digit by construction of the callers).
void add_digits(DigitVec& a, const DigitVec& b) {
  std::uint64_t carry = 0;
  for (std::size_t r = 0; r < a.digits.size(); ++r) {
    std::uint64_t s = a.digits[r] + b.digits[r] + carry;
    carry = s >= a.base ? 1 : 0;
    a.digits[r] = carry ? s - a.base : s;
  }
  if (carry) throw std::logic_error("digit addition overflowed fixed width");
}

bool dominated(const DigitVec& a, const DigitVec& b) {
  for (std::size_t r = 0; r < a.digits.size(); ++r)
    if (a.digits[r] > b.digits[r]) return false;
  return true;
}

PRankReport report_from_count(const FermatContext& ctx, CountResult c) {
  Nat gamma = c.value - ctx.m - ctx.n - ctx.d;
  if (gamma < 0 || gamma > ctx.genus)
    throw std::logic_error("p-rank fell outside [0, genus]");
  PRankReport rep;
  rep.gamma = gamma;
  rep.genus = ctx.genus;
  rep.method = c.method;
  if (ctx.genus == 0) rep.notes = "rational curve";
  return rep;
}

}  // namespace

CountResult count_dominated_pairs_naive(const FermatContext& ctx) {
  const std::size_t h = ctx.h;
  DigitVec alpha_d = detail::digits_of(ctx.alpha, ctx.p, h);
  DigitVec beta_d = detail::digits_of(ctx.beta, ctx.p, h);
  DigitVec jb = detail::digits_of(0, ctx.p, h);
  Nat jb_val = 0;
  std::uint64_t count = 0;
  for (std::uint64_t j = 0; j <= ctx.m; ++j) {
    if (j > 0) {
      add_digits(jb, beta_d);
      jb_val += ctx.beta;
    }
    DigitVec ia = detail::digits_of(0, ctx.p, h);
    Nat ia_val = 0;
    for (std::uint64_t i = 0;; ++i) {
      if (i > 0) {
        ia_val += ctx.alpha;
        if (ia_val > jb_val) break;  // before the add: i*alpha may not fit h digits
        add_digits(ia, alpha_d);
      }
      if (dominated(ia, jb)) ++count;
    }
  }
  return {Nat(count), Method::naive};
}

Nat count_dominated_multiples(const DigitVec& J, std::uint64_t alpha) {
  if (alpha == 0) throw std::invalid_argument("alpha must be positive");
  if (alpha > kDpAlphaCap) throw std::length_error("alpha too large for digit dp");
  const std::uint64_t p_mod = J.base % alpha;
  std::vector<Nat> cnt(alpha), next(alpha);
  cnt[0] = 1;
  for (std::size_t r = J.digits.size(); r-- > 0;) {
    const std::uint64_t D = J.digits[r];
    for (auto& v : next) v = 0;
    if (D + 1 >= alpha) {
      // every digit residue class occurs; bucket them
      for (std::uint64_t rho = 0; rho < alpha; ++rho) {
        if (rho > D) break;
        Nat mult((D - rho) / alpha + 1);
        for (std::uint64_t st = 0; st < alpha; ++st) {
          if (cnt[st] == 0) continue;
          next[(st * p_mod + rho) % alpha] += cnt[st] * mult;
        }
      }
    } else {
      for (std::uint64_t c = 0; c <= D; ++c)
        for (std::uint64_t st = 0; st < alpha; ++st) {
          if (cnt[st] == 0) continue;
          next[(st * p_mod + c) % alpha] += cnt[st];
        }
    }
    cnt.swap(next);
  }
  return cnt[0];
}

CountResult count_dominated_pairs_dp(const FermatContext& ctx) {
  if (!fits_u64(ctx.alpha) || to_u64(ctx.alpha, "alpha") > kDpAlphaCap)
    throw std::length_error("alpha too large for digit dp");
  const std::uint64_t alpha = to_u64(ctx.alpha, "alpha");
  const std::size_t h = ctx.h;
  DigitVec beta_d = detail::digits_of(ctx.beta, ctx.p, h);
  DigitVec jb = detail::digits_of(0, ctx.p, h);
  Nat total = 0;
  for (std::uint64_t j = 0; j <= ctx.m; ++j) {
    if (j > 0) add_digits(jb, beta_d);
    total += count_dominated_multiples(jb, alpha);
  }
  return {total, Method::digit_dp};
}

CountResult count_dominated_pairs(const FermatContext& ctx) {
  if (fits_u64(ctx.alpha) && to_u64(ctx.alpha, "alpha") <= kDpAlphaCap) {
    // The DP walks (m+1) multiples of beta through h digits with a state
    // vector of size alpha; the naive scan visits ~m*n/2 pairs at O(h) each.
    // Pick whichever is cheaper: bignum state updates cost a few word ops.
    const double alpha = static_cast<double>(to_u64(ctx.alpha, "alpha"));
    const double width = std::min<double>(static_cast<double>(ctx.p), alpha);
    const double dp_cost = (static_cast<double>(ctx.m) + 1) * ctx.h * width * alpha;
    const double naive_cost = (static_cast<double>(ctx.m) * ctx.n / 2 + ctx.m + ctx.n) * ctx.h;
    if (4 * dp_cost <= naive_cost) return count_dominated_pairs_dp(ctx);
  }
  return count_dominated_pairs_naive(ctx);
}

PRankReport prank_general(const FermatContext& ctx) {
  return report_from_count(ctx, count_dominated_pairs(ctx));
}

PRankReport prank_with(const FermatContext& ctx, Method how) {
  switch (how) {
    case Method::naive: return report_from_count(ctx, count_dominated_pairs_naive(ctx));
    case Method::digit_dp: return report_from_count(ctx, count_dominated_pairs_dp(ctx));
    default: throw std::invalid_argument("prank_with handles naive and digit_dp only");
  }
}

PRankReport prank_via_basis_set(const FermatContext& ctx) {
  const std::size_t h = ctx.h;
  DigitVec alpha_d = detail::digits_of(ctx.alpha, ctx.p, h);
  DigitVec beta_d = detail::digits_of(ctx.beta, ctx.p, h);
  DigitVec jb = detail::digits_of(0, ctx.p, h);
  std::uint64_t count = 0;
  for (std::uint64_t j = 1; j + 1 <= ctx.m; ++j) {
    add_digits(jb, beta_d);
    unsigned __int128 jn = static_cast<unsigned __int128>(j) * ctx.n;
    DigitVec ia = detail::digits_of(ctx.alpha, ctx.p, h);
    for (std::uint64_t i = 1; static_cast<unsigned __int128>(i) * ctx.m < jn; ++i) {
      if (i > 1) add_digits(ia, alpha_d);
      if (dominated(ia, jb)) ++count;
    }
  }
  PRankReport rep;
  rep.gamma = Nat(count);
  rep.genus = ctx.genus;
  rep.method = Method::naive;
  if (ctx.genus == 0) rep.notes = "rational curve";
  if (rep.gamma > ctx.genus) throw std::logic_error("p-rank fell outside [0, genus]");
  return rep;
}

PRankReport prank_hyperelliptic(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (n == 0 || n % p == 0) throw std::invalid_argument("characteristic divides an exponent");
  std::uint64_t d2 = std::gcd<std::uint64_t>(2, n);
  Nat genus = div_exact(Nat(n) - d2, 2, "hyperelliptic genus");
  if (n <= 2) {
    PRankReport rep;
    rep.gamma = 0;
    rep.genus = genus;
    rep.method = Method::naive;
    rep.notes = "rational curve";
    return rep;
  }
  const unsigned long h = mult_order(p, n);
  const Nat q = nat_pow(p, h);
  const Nat alpha = div_exact(q - 1, n, "alpha");
  DigitVec alpha_d = detail::digits_of(alpha, p, h);
  DigitVec ia = detail::digits_of(0, p, h);
  const std::uint64_t half = (p - 1) / 2;
  std::uint64_t s_size = 0;
  for (std::uint64_t i = 0; i <= n / 2; ++i) {
    if (i > 0) add_digits(ia, alpha_d);
    bool ok = true;
    for (std::uint64_t dig : ia.digits)
      if (dig > half) { ok = false; break; }
    if (ok) ++s_size;
  }
  PRankReport rep;
  rep.gamma = Nat(s_size) - (n % 2 == 1 ? 1 : 2);
  rep.genus = genus;
  rep.method = Method::naive;
  if (rep.gamma < 0 || rep.gamma > genus)
    throw std::logic_error("p-rank fell outside [0, genus]");
  return rep;
}

Nat count_halfdigit_multiples(std::uint64_t p, unsigned long h, std::uint64_t alpha) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (h == 0) throw std::invalid_argument("h must be positive");
  if (alpha == 0 || (nat_pow(p, h) - 1) % alpha != 0)
    throw std::invalid_argument("alpha must divide p^h - 1");
  DigitVec box;
  box.base = p;
  box.digits.assign(h, (p - 1) / 2);
  return count_dominated_multiples(box, alpha);
}

namespace {

void validate_box_args(std::uint64_t alpha, std::uint64_t s,
                       const std::vector<std::uint64_t>& coeffs, std::uint64_t b) {
  if (alpha == 0) throw std::invalid_argument("alpha must be positive");
  if (s >= alpha) throw std::invalid_argument("s must lie in [0, alpha)");
  if (b >= alpha) throw std::invalid_argument("b must lie in [0, alpha)");
  if (coeffs.empty()) throw std::invalid_argument("at least one coefficient required");
  for (std::uint64_t c : coeffs)
    if (std::gcd(c % alpha, alpha) != 1)
      throw std::invalid_argument("coefficients must be units mod alpha");
}

Nat enumerate_residual(std::uint64_t alpha, std::uint64_t s,
                       const std::vector<std::uint64_t>& coeffs, std::uint64_t b) {
  const std::size_t h = coeffs.size();
  {  // cap check: (s+1)^h
    unsigned __int128 size = 1;
    for (std::size_t i = 0; i < h; ++i) {
      size *= (s + 1);
      if (size > kResidualEnumCap) throw std::length_error("delta too large, use DP");
    }
  }
  std::vector<std::uint64_t> c(h);
  for (std::size_t i = 0; i < h; ++i) c[i] = coeffs[i] % alpha;
  std::vector<std::uint64_t> x(h, 0);
  std::vector<std::uint64_t> ps(h + 1, 0);  // ps[k] = sum_{i<k} c_i x_i mod alpha
  std::uint64_t hits = 0;
  for (;;) {
    if (ps[h] == b) ++hits;
    std::size_t k = h;
    while (k > 0 && x[k - 1] == s) --k;
    if (k == 0) break;
    --k;
    ++x[k];
    for (std::size_t j = k + 1; j < h; ++j) x[j] = 0;
    for (std::size_t j = k; j < h; ++j)
      ps[j + 1] = (ps[j] + mul_mod(c[j], x[j] % alpha, alpha)) % alpha;
  }
  return Nat(hits);
}

}  // namespace

Nat congruence_box_residual(std::uint64_t alpha, std::uint64_t s,
                            const std::vector<std::uint64_t>& coeffs, std::uint64_t b) {
  validate_box_args(alpha, s, coeffs, b);
  const unsigned long h = static_cast<unsigned long>(coeffs.size());
  if (s == 0) return b == 0 ? 1 : 0;
  if (s == alpha - 1) return nat_pow(Nat(alpha), h - 1);
  if (s == alpha - 2) {
    Nat sign = (h % 2 == 0) ? 1 : -1;
    Nat base = div_exact(nat_pow(Nat(alpha) - 1, h) - sign, alpha, "residual box");
    std::uint64_t csum = 0;
    for (std::uint64_t c : coeffs) csum = (csum + c % alpha) % alpha;
    if (csum == (alpha - b) % alpha) base += sign;
    if (base < 0) throw std::logic_error("negative residual count");
    return base;
  }
  if (alpha % 2 == 0 && s == alpha / 2 && b == 0 && h % 2 == 1) {
    Nat num = 2 * (nat_pow(Nat(alpha) / 2 + 1, h) - 1) + alpha;
    return div_exact(num, 2 * Nat(alpha), "residual box");
  }
  return enumerate_residual(alpha, s, coeffs, b);
}

Nat count_congruence_box(std::uint64_t alpha, std::uint64_t t, std::uint64_t s,
                         const std::vector<std::uint64_t>& coeffs, std::uint64_t b) {
  validate_box_args(alpha, s, coeffs, b);
  const unsigned long h = static_cast<unsigned long>(coeffs.size());
  Nat delta = congruence_box_residual(alpha, s, coeffs, b);
  Nat top = Nat(t) * alpha + s + 1;  // box edge length
  Nat bulk = div_exact(nat_pow(top, h) - nat_pow(Nat(s) + 1, h), alpha, "congruence box");
  return bulk + delta;
}

namespace {

// Residual enumeration when alpha does not fit in a machine word: the closed
// cases need alpha <= p+3 anyway, so only the direct walk remains.
Nat enumerate_residual_nat(const Nat& alpha, std::uint64_t s, std::uint64_t p,
                           unsigned long h) {
  {
    unsigned __int128 size = 1;
    for (unsigned long i = 0; i < h; ++i) {
      size *= (s + 1);
      if (size > kResidualEnumCap) throw std::length_error("delta too large, use DP");
    }
  }
  std::vector<Nat> c(h);
  Nat pw = 1;
  for (unsigned long i = 0; i < h; ++i) {
    c[i] = pw % alpha;
    pw *= p;
  }
  std::vector<std::uint64_t> x(h, 0);
  std::vector<Nat> ps(h + 1, 0);
  std::uint64_t hits = 0;
  for (;;) {
    if (ps[h] == 0) ++hits;
    std::size_t k = h;
    while (k > 0 && x[k - 1] == s) --k;
    if (k == 0) break;
    --k;
    ++x[k];
    for (std::size_t j = k + 1; j < h; ++j) x[j] = 0;
    for (std::size_t j = k; j < h; ++j) {
      ps[j + 1] = ps[j] + c[j] * x[j];
      ps[j + 1] %= alpha;
    }
  }
  return Nat(hits);
}

}  // namespace

Nat hyperelliptic_correction(std::uint64_t p, std::uint64_t n, unsigned long h) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (n == 0 || n % p == 0) throw std::invalid_argument("characteristic divides an exponent");
  if (h == 0) throw std::invalid_argument("h must be positive");
  const Nat q = nat_pow(p, h);
  if ((q - 1) % n != 0) throw std::invalid_argument("n must divide p^h - 1");
  const Nat alpha = div_exact(q - 1, n, "alpha");
  const std::uint64_t half = (p - 1) / 2;
  const Nat s_nat = Nat(half) % alpha;
  const std::uint64_t s = to_u64(s_nat, "s");
  Nat delta;
  if (fits_u64(alpha)) {
    const std::uint64_t au = to_u64(alpha, "alpha");
    std::vector<std::uint64_t> coeffs(h);
    std::uint64_t pw = 1 % au;
    for (unsigned long i = 0; i < h; ++i) {
      coeffs[i] = pw;
      pw = mul_mod(pw, p % au, au);
    }
    delta = congruence_box_residual(au, s, coeffs, 0);
  } else {
    delta = enumerate_residual_nat(alpha, s, p, h);
  }
  Nat correction = nat_pow(Nat(s) + 1, h) - alpha * (delta - (n % 2 == 1 ? 1 : 2));
  return correction;
}

HyperellipticFormula prank_hyperelliptic_formula_with_h(std::uint64_t p, std::uint64_t n,
                                                        unsigned long h) {
  HyperellipticFormula out;
  out.h = h;
  out.correction = hyperelliptic_correction(p, n, h);
  const Nat q = nat_pow(p, h);
  out.alpha = div_exact(q - 1, n, "alpha");
  Nat box = nat_pow(Nat((p + 1) / 2), h);
  if (out.correction > box) throw std::logic_error("correction exceeds the digit box");
  out.gamma = div_exact(n * (box - out.correction), q - 1, "hyperelliptic formula");
  std::uint64_t d2 = std::gcd<std::uint64_t>(2, n);
  if (out.gamma < 0 || 2 * out.gamma > Nat(n) - d2)
    throw std::logic_error("p-rank fell outside [0, genus]");
  return out;
}

HyperellipticFormula prank_hyperelliptic_formula(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (n == 0 || n % p == 0) throw std::invalid_argument("characteristic divides an exponent");
  return prank_hyperelliptic_formula_with_h(p, n, mult_order(p, n));
}

}  // namespace fermat
