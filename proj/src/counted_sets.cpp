#include "fermat/counted_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fermat/arith.hpp"

namespace fermat {

namespace {

constexpr unsigned __int128 kEnumCap = 100'000'000;

void validate(const SetParams& sp) {
  if (sp.which == SetKind::quadruple_min_sum) {
    if (!is_prime(sp.b)) throw std::invalid_argument("quadruple_min_sum needs a prime");
    return;
  }
  if (sp.b == 0) throw std::invalid_argument("box edge must be positive");
  if (sp.which == SetKind::mirror_min_box && sp.b < 2)
    throw std::invalid_argument("box edge must be at least 2");
  if (sp.m == 0 || sp.n == 0) throw std::invalid_argument("exponents must be positive");
}

bool fits_cap(std::uint64_t edge, std::uint64_t coords) {
  unsigned __int128 size = 1;
  for (std::uint64_t i = 0; i < coords; ++i) {
    size *= edge;
    if (size > kEnumCap) return false;
  }
  return true;
}

// full odometer over [0, edge-1]^k counting tuples accepted by pred
template <class Pred>
std::uint64_t walk(std::size_t k, std::uint64_t edge, Pred&& pred) {
  std::vector<std::uint64_t> x(k, 0);
  std::uint64_t hits = 0;
  for (;;) {
    if (pred(x)) ++hits;
    std::size_t i = k;
    while (i > 0 && x[i - 1] == edge - 1) --i;
    if (i == 0) break;
    ++x[i - 1];
    for (std::size_t j = i; j < k; ++j) x[j] = 0;
  }
  return hits;
}

std::uint64_t min_of(const std::vector<std::uint64_t>& x, std::size_t from, std::size_t to) {
  std::uint64_t v = x[from];
  for (std::size_t r = from + 1; r < to; ++r) v = std::min(v, x[r]);
  return v;
}

std::uint64_t max_of(const std::vector<std::uint64_t>& x, std::size_t from, std::size_t to) {
  std::uint64_t v = x[from];
  for (std::size_t r = from + 1; r < to; ++r) v = std::max(v, x[r]);
  return v;
}

std::uint64_t mirror_bound(const std::vector<std::uint64_t>& x, std::uint64_t edge,
                           std::size_t m) {
  std::uint64_t v = edge;  // larger than any coordinate
  for (std::size_t r = 0; r < m; ++r) v = std::min(v, std::min(x[r], edge - 1 - x[r]));
  return v;
}

Nat enumerate_quadruples(std::uint64_t p) {
  if (!fits_cap(p, 4)) throw std::length_error("enumeration too large");
  std::uint64_t hits = 0;
  for (std::uint64_t a = 1; a <= p; ++a)
    for (std::uint64_t b = 1; b <= p; ++b) {
      const std::uint64_t w = std::min(a, b);
      for (std::uint64_t c = 1; c <= w; ++c)
        for (std::uint64_t d = 1; d <= w; ++d)
          if (a + b <= c + d + p - 1) ++hits;
    }
  return Nat(hits);
}

// sum over a-tuples of (bound+1)^n (and for split also (co-bound+1)^n),
// used when the full coordinate product exceeds the cap
Nat structured_box_count(const SetParams& sp) {
  if (!fits_cap(sp.b, sp.m)) throw std::length_error("enumeration too large");
  const std::uint64_t edge = sp.b;
  std::vector<std::uint64_t> a(sp.m, 0);
  Nat total = 0;
  for (;;) {
    std::uint64_t lo = min_of(a, 0, sp.m);
    switch (sp.which) {
      case SetKind::min_box:
        total += nat_pow(Nat(lo + 1), sp.n);
        break;
      case SetKind::mirror_min_box:
        total += nat_pow(Nat(mirror_bound(a, edge, sp.m) + 1), sp.n);
        break;
      case SetKind::split_min_box: {
        std::uint64_t hi = max_of(a, 0, sp.m);
        total += nat_pow(Nat(lo + 1), sp.n) * nat_pow(Nat(edge - hi), sp.n);
        break;
      }
      default:
        throw std::logic_error("unexpected set kind");
    }
    std::size_t i = a.size();
    while (i > 0 && a[i - 1] == edge - 1) --i;
    if (i == 0) break;
    ++a[i - 1];
    for (std::size_t j = i; j < a.size(); ++j) a[j] = 0;
  }
  return total;
}

}  // namespace

Nat closed_count(const SetParams& sp) {
  validate(sp);
  const Nat b(sp.b);
  switch (sp.which) {
    case SetKind::quadruple_min_sum:
      return div_exact(b * (b + 1) * (b * b + b + 2), 8, "quadruple_min_sum");
    case SetKind::min_box: {
      Nat total = 0;
      for (std::uint64_t i = 0; i < sp.b; ++i)
        total += (nat_pow(Nat(i + 1), sp.m) - nat_pow(Nat(i), sp.m)) *
                 nat_pow(Nat(sp.b - i), sp.n);
      return total;
    }
    case SetKind::mirror_min_box: {
      if (sp.b % 2 == 1) {
        Nat total = nat_pow(b + 1, sp.n);
        for (std::uint64_t i = 1; 2 * i <= sp.b - 1; ++i)
          total += (nat_pow(Nat(2 * i + 1), sp.m) - nat_pow(Nat(2 * i - 1), sp.m)) *
                   nat_pow(Nat(sp.b - 2 * i + 1), sp.n);
        return div_exact(total, nat_pow(Nat(2), sp.n), "mirror_min_box");
      }
      Nat total = 0;
      for (std::uint64_t i = 1; 2 * i <= sp.b; ++i)
        total += (nat_pow(Nat(i), sp.m) - nat_pow(Nat(i - 1), sp.m)) *
                 nat_pow(Nat(sp.b - 2 * i + 2), sp.n);
      total *= nat_pow(Nat(2), sp.m);
      return div_exact(total, nat_pow(Nat(2), sp.n), "mirror_min_box");
    }
    case SetKind::split_min_box: {
      Nat total = 0;
      for (std::uint64_t i = 0; i < sp.b; ++i)
        total += nat_pow(Nat(sp.b - i) * (i + 1), sp.n);
      for (std::uint64_t j = 1; j < sp.b; ++j) {
        Nat coef = nat_pow(Nat(j + 1), sp.m) - 2 * nat_pow(Nat(j), sp.m) +
                   nat_pow(Nat(j - 1), sp.m);
        for (std::uint64_t i = j; i < sp.b; ++i)
          total += coef * nat_pow(Nat(sp.b - i) * (i - j + 1), sp.n);
      }
      return total;
    }
  }
  throw std::logic_error("unexpected set kind");
}

Nat enumerate_count(const SetParams& sp) {
  validate(sp);
  const std::uint64_t edge = sp.b;
  switch (sp.which) {
    case SetKind::quadruple_min_sum:
      return enumerate_quadruples(sp.b);
    case SetKind::min_box: {
      if (!fits_cap(edge, sp.m + sp.n)) return structured_box_count(sp);
      auto hits = walk(sp.m + sp.n, edge, [&](const std::vector<std::uint64_t>& x) {
        std::uint64_t lo = min_of(x, 0, sp.m);
        for (std::size_t j = sp.m; j < sp.m + sp.n; ++j)
          if (x[j] > lo) return false;
        return true;
      });
      return Nat(hits);
    }
    case SetKind::mirror_min_box: {
      if (!fits_cap(edge, sp.m + sp.n)) return structured_box_count(sp);
      auto hits = walk(sp.m + sp.n, edge, [&](const std::vector<std::uint64_t>& x) {
        std::uint64_t lo = mirror_bound(x, edge, sp.m);
        for (std::size_t j = sp.m; j < sp.m + sp.n; ++j)
          if (x[j] > lo) return false;
        return true;
      });
      return Nat(hits);
    }
    case SetKind::split_min_box: {
      if (!fits_cap(edge, sp.m + 2 * sp.n)) return structured_box_count(sp);
      auto hits = walk(sp.m + 2 * sp.n, edge, [&](const std::vector<std::uint64_t>& x) {
        std::uint64_t lo = min_of(x, 0, sp.m);
        std::uint64_t hi = max_of(x, 0, sp.m);
        for (std::size_t j = sp.m; j < sp.m + sp.n; ++j)
          if (x[j] > lo) return false;
        for (std::size_t j = sp.m + sp.n; j < sp.m + 2 * sp.n; ++j)
          if (x[j] > edge - 1 - hi) return false;
        return true;
      });
      return Nat(hits);
    }
  }
  throw std::logic_error("unexpected set kind");
}

}  // namespace fermat
