#include "fermat/curves.hpp"

#include <numeric>
#include <stdexcept>

namespace fermat {

namespace {

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 l = static_cast<unsigned __int128>(a / std::gcd(a, b)) * b;
  if (l > ~0ull) throw std::length_error("lcm overflows 64 bits");
  return static_cast<std::uint64_t>(l);
}

void validate_fermat(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (m < 2 || n < 2) throw std::invalid_argument("exponents must be at least 2");
  if (m % p == 0 || n % p == 0)
    throw std::invalid_argument("characteristic divides an exponent");
}

Nat genus_of(std::uint64_t m, std::uint64_t n) {
  std::uint64_t d = std::gcd(m, n);
  Nat g = (Nat(m) - 1) * (Nat(n) - 1) + 1 - d;
  return div_exact(g, 2, "genus");
}

}  // namespace

void validate(const CurveSpec& spec) {
  if (!is_prime(spec.p)) throw std::invalid_argument("p is not prime");
  if (const auto* f = std::get_if<FermatParams>(&spec.shape)) {
    validate_fermat(spec.p, f->m, f->n);
  } else if (const auto* t = std::get_if<TwistedHyperellipticParams>(&spec.shape)) {
    if (spec.p == 2) throw std::invalid_argument("twisted hyperelliptic curves need p odd");
    if (t->n == 0 || t->n % spec.p == 0)
      throw std::invalid_argument("characteristic divides an exponent");
  } else if (const auto* g = std::get_if<DgzParams>(&spec.shape)) {
    if (g->h == 0) throw std::invalid_argument("h must be positive");
  } else if (const auto* b = std::get_if<BksParams>(&spec.shape)) {
    if (b->h == 0) throw std::invalid_argument("h must be positive");
    if (spec.p == 2) throw std::invalid_argument("this tower needs p odd");
  }
}

FermatContext make_context(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
  validate_fermat(p, m, n);
  std::uint64_t hm = mult_order(p, m);
  std::uint64_t hn = mult_order(p, n);
  return make_context_with_h(p, m, n, lcm_checked(hm, hn));
}

FermatContext make_context_with_h(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                                  unsigned long h) {
  validate_fermat(p, m, n);
  if (h == 0) throw std::invalid_argument("h must be positive");
  FermatContext ctx;
  ctx.p = p;
  ctx.m = m;
  ctx.n = n;
  ctx.d = std::gcd(m, n);
  ctx.h = h;
  ctx.q = nat_pow(p, h);
  Nat qm1 = ctx.q - 1;
  if (qm1 % m != 0 || qm1 % n != 0)
    throw std::invalid_argument("m and n must divide p^h - 1");
  ctx.alpha = div_exact(qm1, n, "alpha");
  ctx.beta = div_exact(qm1, m, "beta");
  ctx.genus = genus_of(m, n);
  return ctx;
}

std::vector<BasisIndex> basis(const FermatContext& ctx) {
  if (ctx.genus > 10'000'000) throw std::length_error("basis too large to enumerate");
  std::vector<BasisIndex> out;
  out.reserve(mpz_get_ui(ctx.genus.get_mpz_t()));
  for (std::uint64_t j = 1; j + 1 <= ctx.m; ++j) {
    // i ranges over m <= i*m < j*n
    unsigned __int128 jn = static_cast<unsigned __int128>(j) * ctx.n;
    for (std::uint64_t i = 1; static_cast<unsigned __int128>(i) * ctx.m < jn; ++i)
      out.push_back({i, j});
  }
  if (Nat(static_cast<unsigned long>(out.size())) != ctx.genus)
    throw std::logic_error("basis size does not match genus");
  return out;
}

SupersingularVerdict is_supersingular(const FermatContext& ctx) {
  if (ctx.genus == 0)
    throw std::invalid_argument("supersingularity is undefined for a rational curve");
  std::uint64_t L = lcm_checked(ctx.m, ctx.n);
  std::uint64_t H = mult_order(ctx.p, L);
  std::uint64_t pw = ctx.p % L;
  for (std::uint64_t e = 1; e <= H; ++e) {
    if (pw == L - 1) return {true, e};
    pw = mul_mod(pw, ctx.p % L, L);
  }
  return {false, std::nullopt};
}

namespace {

// Finds a >= 1 with p^a + off == target (off is +1 or -1); 0 if none.
std::uint64_t pow_shape(std::uint64_t p, std::int64_t off, std::uint64_t target) {
  unsigned __int128 pw = p;
  for (std::uint64_t a = 1;; ++a) {
    unsigned __int128 val = off > 0 ? pw + 1 : pw - 1;
    if (val == target) return a;
    if (val > target) return 0;
    pw *= p;
  }
}

}  // namespace

std::optional<bool> supersingular_special(const FermatContext& ctx) {
  if (ctx.genus == 0) return std::nullopt;
  // y^{p^a+1} = x^{p^b+1} + 1: supersingular iff v_2(a) == v_2(b).
  std::uint64_t a_plus = pow_shape(ctx.p, +1, ctx.m);
  std::uint64_t b_plus = pow_shape(ctx.p, +1, ctx.n);
  if (a_plus && b_plus)
    return two_adic_valuation(a_plus) == two_adic_valuation(b_plus);
  // y^{p^a +- 1} = x^{p^b - 1} + 1: never supersingular except y^{3^a+1} = x^2 + 1.
  std::uint64_t a_minus = pow_shape(ctx.p, -1, ctx.m);
  std::uint64_t b_minus = pow_shape(ctx.p, -1, ctx.n);
  if ((a_plus || a_minus) && b_minus)
    return ctx.p == 3 && a_plus != 0 && ctx.n == 2;
  return std::nullopt;
}

}  // namespace fermat
