#include "fermat/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "fermat/arith.hpp"

namespace fermat {

std::optional<CartierColumn> cartier_step(const FermatContext& ctx, BasisIndex w) {
  const std::uint64_t p = ctx.p;
  const std::uint64_t m_inv = inv_mod(ctx.m % p, p);
  const std::uint64_t n_inv = inv_mod(ctx.n % p, p);
  // smallest w >= 0 with j + m*w divisible by p
  const std::uint64_t steps = mul_mod(p - w.j % p, m_inv, p) % p;
  const std::uint64_t r0 = mul_mod(p - w.i % p, n_inv, p) % p;
  if (r0 > steps) return std::nullopt;
  const std::uint64_t coeff = binom_digit_mod_p(steps, r0, p);
  if (coeff == 0) return std::nullopt;  // impossible for steps < p; kept as a guard
  unsigned __int128 jt = w.j + static_cast<unsigned __int128>(ctx.m) * steps;
  unsigned __int128 it = w.i + static_cast<unsigned __int128>(ctx.n) * r0;
  if (jt % p != 0 || it % p != 0)
    throw std::logic_error("cartier step produced a non-integral index");
  CartierColumn col;
  col.target.j = static_cast<std::uint64_t>(jt / p);
  col.target.i = static_cast<std::uint64_t>(it / p);
  col.coeff = coeff;
  return col;
}

namespace {

// position of w in the basis ordering (by j, then i), or npos
std::size_t locate(const std::vector<BasisIndex>& basis, BasisIndex w) {
  auto less = [](const BasisIndex& a, const BasisIndex& b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  };
  auto it = std::lower_bound(basis.begin(), basis.end(), w, less);
  if (it == basis.end() || !(*it == w)) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

CartierMatrix cartier_matrix(const FermatContext& ctx) {
  CartierMatrix out;
  out.p = ctx.p;
  out.basis = basis(ctx);
  out.columns.reserve(out.basis.size());
  for (const BasisIndex& w : out.basis) {
    auto col = cartier_step(ctx, w);
    if (col && locate(out.basis, col->target) == static_cast<std::size_t>(-1))
      throw std::logic_error("cartier image left the basis");
    out.columns.push_back(col);
  }
  return out;
}

FpMatrix fp_identity(std::uint64_t p, std::size_t dim) {
  FpMatrix m;
  m.p = p;
  m.dim = dim;
  m.a.assign(dim * dim, 0);
  for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = 1 % p;
  return m;
}

FpMatrix to_dense(const CartierMatrix& m) {
  FpMatrix out;
  out.p = m.p;
  out.dim = m.basis.size();
  out.a.assign(out.dim * out.dim, 0);
  for (std::size_t col = 0; col < m.columns.size(); ++col) {
    if (!m.columns[col]) continue;
    std::size_t row = locate(m.basis, m.columns[col]->target);
    out.at(row, col) = m.columns[col]->coeff % m.p;
  }
  return out;
}

FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y) {
  if (x.p != y.p || x.dim != y.dim) throw std::invalid_argument("matrix shape mismatch");
  const std::size_t n = x.dim;
  const std::uint64_t p = x.p;
  FpMatrix out;
  out.p = p;
  out.dim = n;
  out.a.assign(n * n, 0);
  const bool narrow = p < (std::uint64_t{1} << 31);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (narrow) {
        unsigned __int128 acc = 0;
        for (std::size_t k = 0; k < n; ++k)
          acc += static_cast<unsigned __int128>(x.at(r, k)) * y.at(k, c);
        out.at(r, c) = static_cast<std::uint64_t>(acc % p);
      } else {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < n; ++k)
          acc = (acc + mul_mod(x.at(r, k), y.at(k, c), p)) % p;
        out.at(r, c) = acc;
      }
    }
  return out;
}

FpMatrix fp_pow(FpMatrix x, std::uint64_t e) {
  FpMatrix result = fp_identity(x.p, x.dim);
  while (e > 0) {
    if (e & 1) result = fp_mul(result, x);
    e >>= 1;
    if (e > 0) x = fp_mul(x, x);
  }
  return result;
}

std::size_t fp_rank(FpMatrix m) {
  const std::size_t n = m.dim;
  const std::uint64_t p = m.p;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    for (std::size_t c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const std::uint64_t inv = inv_mod(m.at(rank, col), p);
    for (std::size_t r = pivot + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      const std::uint64_t f = mul_mod(m.at(r, col), inv, p);
      for (std::size_t c = col; c < n; ++c) {
        std::uint64_t sub = mul_mod(f, m.at(rank, c), p);
        m.at(r, c) = (m.at(r, c) + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

FpMatrix dense_cartier_checked(const FermatContext& ctx, std::size_t genus_cap) {
  if (!fits_u64(ctx.genus) || to_u64(ctx.genus, "genus") > genus_cap)
    throw std::length_error("genus exceeds the oracle cap");
  return to_dense(cartier_matrix(ctx));
}

}  // namespace

PRankReport prank_oracle(const FermatContext& ctx, std::size_t genus_cap) {
  FpMatrix a = dense_cartier_checked(ctx, genus_cap);
  const std::uint64_t g = to_u64(ctx.genus, "genus");
  std::size_t rank = g == 0 ? 0 : fp_rank(fp_pow(a, g));
  PRankReport rep;
  rep.gamma = Nat(static_cast<unsigned long>(rank));
  rep.genus = ctx.genus;
  rep.method = Method::oracle;
  if (ctx.genus == 0) rep.notes = "rational curve";
  return rep;
}

void check_h_step_diagonal(const FermatContext& ctx, std::size_t genus_cap) {
  FpMatrix a = dense_cartier_checked(ctx, genus_cap);
  const std::vector<BasisIndex> bs = basis(ctx);
  FpMatrix ah = fp_pow(a, ctx.h);
  for (std::size_t r = 0; r < ah.dim; ++r)
    for (std::size_t c = 0; c < ah.dim; ++c) {
      std::uint64_t want = 0;
      if (r == c)
        want = binom_mod_p(Nat(bs[c].j) * ctx.beta, Nat(bs[c].i) * ctx.alpha, ctx.p);
      if (ah.at(r, c) != want)
        throw std::logic_error("h-step power of the Cartier matrix is not the expected diagonal");
    }
}

}  // namespace fermat
