#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "fermat/counting.hpp"
#include "fermat/curves.hpp"
#include "fermat/oracle.hpp"

using namespace fermat;

namespace {

std::uint64_t ref_binom(unsigned long n, unsigned long k, std::uint64_t p) {
  Nat b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return mpz_fdiv_ui(b.get_mpz_t(), p);
}

}  // namespace

TEST_CASE("cartier step on frozen examples") {
  FermatContext c28 = make_context(3, 2, 8);
  auto col = cartier_step(c28, {1, 1});
  REQUIRE(col.has_value());
  CHECK(col->target == BasisIndex{3, 1});
  CHECK(col->coeff == 1);
  CHECK_FALSE(cartier_step(c28, {2, 1}).has_value());
  col = cartier_step(c28, {3, 1});
  REQUIRE(col.has_value());
  CHECK(col->target == BasisIndex{1, 1});
  CHECK(col->coeff == 1);

  FermatContext c723 = make_context(7, 2, 3);
  col = cartier_step(c723, {1, 1});
  REQUIRE(col.has_value());
  CHECK(col->target == BasisIndex{1, 1});
  CHECK(col->coeff == 3);

  FermatContext c544 = make_context(5, 4, 4);
  col = cartier_step(c544, {1, 2});
  REQUIRE(col.has_value());
  CHECK(col->target == BasisIndex{1, 2});
  CHECK(col->coeff == 2);
  col = cartier_step(c544, {2, 3});
  REQUIRE(col.has_value());
  CHECK(col->target == BasisIndex{2, 3});
  CHECK(col->coeff == 3);

  CHECK_FALSE(cartier_step(make_context(2, 3, 3), {1, 2}).has_value());
}

TEST_CASE("cartier step against a from-scratch derivation") {
  // Recompute each column directly from the definition: pick the smallest
  // w >= 0 with p | j + m*w, expand (x^n + 1)^w, and keep the single term
  // whose x-exponent is -1 mod p.  Coefficients come from GMP binomials.
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull})
    for (std::uint64_t m = 2; m <= 10; ++m)
      for (std::uint64_t n = 2; n <= 10; ++n) {
        if (m % p == 0 || n % p == 0) continue;
        FermatContext ctx = make_context(p, m, n);
        for (const BasisIndex& w : basis(ctx)) {
          std::uint64_t steps = 0;
          while ((w.j + m * steps) % p != 0) ++steps;
          std::uint64_t r0 = 0;
          while ((w.i + n * r0) % p != 0) ++r0;
          auto col = cartier_step(ctx, w);
          if (r0 > steps) {
            CHECK_FALSE(col.has_value());
            continue;
          }
          REQUIRE(col.has_value());
          CHECK(col->coeff == ref_binom(steps, r0, p));
          CHECK(col->target.i == (w.i + n * r0) / p);
          CHECK(col->target.j == (w.j + m * steps) / p);

          // Taking the representative w + p instead multiplies the image by
          // (x^n + 1); both binomials of the longer expansion must reproduce
          // the same scalar.
          CHECK(ref_binom(steps + p, r0, p) == col->coeff);
          CHECK(ref_binom(steps + p, r0 + p, p) == col->coeff);
        }
      }
}

TEST_CASE("cartier matrix is at most single-entry per column") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
    for (std::uint64_t m = 2; m <= 9; ++m)
      for (std::uint64_t n = 2; n <= 9; ++n) {
        if (m % p == 0 || n % p == 0) continue;
        CartierMatrix cm = cartier_matrix(make_context(p, m, n));
        FpMatrix dense = to_dense(cm);
        for (std::size_t c = 0; c < dense.dim; ++c) {
          std::size_t nonzero = 0;
          for (std::size_t r = 0; r < dense.dim; ++r)
            if (dense.at(r, c) != 0) ++nonzero;
          CHECK(nonzero == (cm.columns[c] ? 1u : 0u));
        }
      }
}

TEST_CASE("dense matrix helpers") {
  FpMatrix id = fp_identity(7, 4);
  CHECK(fp_rank(id) == 4);

  // nilpotent single Jordan block
  FpMatrix jordan;
  jordan.p = 5;
  jordan.dim = 3;
  jordan.a.assign(9, 0);
  jordan.at(0, 1) = 1;
  jordan.at(1, 2) = 1;
  CHECK(fp_rank(jordan) == 2);
  CHECK(fp_rank(fp_pow(jordan, 2)) == 1);
  CHECK(fp_rank(fp_pow(jordan, 3)) == 0);
  CHECK(fp_rank(fp_pow(jordan, 0)) == 3);

  FpMatrix a = to_dense(cartier_matrix(make_context(5, 4, 4)));
  CHECK(fp_mul(fp_identity(5, a.dim), a).a == a.a);
  CHECK(fp_pow(a, 1).a == a.a);

  // rank is invariant under transposition
  for (std::uint64_t mexp = 4; mexp <= 9; ++mexp) {
    if (mexp % 7 == 0 || (mexp + 1) % 7 == 0) continue;
    FpMatrix c = to_dense(cartier_matrix(make_context(7, mexp, mexp + 1)));
    FpMatrix t = c;
    for (std::size_t r = 0; r < c.dim; ++r)
      for (std::size_t cc = 0; cc < c.dim; ++cc) t.at(cc, r) = c.at(r, cc);
    CHECK(fp_rank(c) == fp_rank(t));
  }

  CHECK_THROWS_AS(fp_mul(fp_identity(5, 2), fp_identity(5, 3)), std::invalid_argument);
  CHECK_THROWS_AS(fp_mul(fp_identity(5, 2), fp_identity(7, 2)), std::invalid_argument);
}

TEST_CASE("frozen matrix powers for (p, m, n) = (3, 2, 8)") {
  FpMatrix a = to_dense(cartier_matrix(make_context(3, 2, 8)));
  REQUIRE(a.dim == 3);
  FpMatrix a2 = fp_pow(a, 2);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(a2.at(r, c) == (r == c && r != 1 ? 1u : 0u));
  CHECK(fp_rank(fp_pow(a, 3)) == 2);
}

TEST_CASE("stable rank equals the counted p-rank") {
  CHECK(prank_oracle(make_context(3, 2, 8)).gamma == 2);
  CHECK(prank_oracle(make_context(2, 3, 3)).gamma == 0);
  CHECK(prank_oracle(make_context(5, 4, 4)).gamma == 3);
  CHECK(prank_oracle(make_context(7, 2, 3)).gamma == 1);
  CHECK(prank_oracle(make_context(5, 4, 4)).method == Method::oracle);

  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
    for (std::uint64_t m = 2; m <= 9; ++m)
      for (std::uint64_t n = 2; n <= 9; ++n) {
        if (m % p == 0 || n % p == 0) continue;
        FermatContext ctx = make_context(p, m, n);
        CHECK(prank_oracle(ctx).gamma == prank_general(ctx).gamma);
      }
}

TEST_CASE("rank stabilizes at the genus power") {
  for (std::uint64_t p : {3ull, 5ull}) {
    FermatContext ctx = make_context(p, 7, 8);
    FpMatrix a = to_dense(cartier_matrix(ctx));
    std::uint64_t g = to_u64(ctx.genus, "genus");
    std::size_t stable = fp_rank(fp_pow(a, g));
    CHECK(fp_rank(fp_pow(a, g + 1)) == stable);
    CHECK(fp_rank(fp_pow(a, 2 * g)) == stable);
  }
}

TEST_CASE("h-step power is the expected diagonal") {
  CHECK_NOTHROW(check_h_step_diagonal(make_context(3, 2, 8)));
  CHECK_NOTHROW(check_h_step_diagonal(make_context(2, 3, 3)));
  CHECK_NOTHROW(check_h_step_diagonal(make_context(7, 6, 4)));
  CHECK_NOTHROW(check_h_step_diagonal(make_context(5, 6, 7)));
}

TEST_CASE("oracle genus cap") {
  FermatContext ctx = make_context(5, 4, 4);  // genus 3
  CHECK_THROWS_AS(prank_oracle(ctx, 2), std::length_error);
  CHECK_NOTHROW(prank_oracle(ctx, 3));
}
