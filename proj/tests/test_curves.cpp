#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "fermat/curves.hpp"

using namespace fermat;

TEST_CASE("context invariants on frozen examples") {
  FermatContext c1 = make_context(5, 4, 4);
  CHECK(c1.h == 1);
  CHECK(c1.q == 5);
  CHECK(c1.alpha == 1);
  CHECK(c1.beta == 1);
  CHECK(c1.d == 4);
  CHECK(c1.genus == 3);

  FermatContext c2 = make_context(3, 2, 8);
  CHECK(c2.h == 2);
  CHECK(c2.q == 9);
  CHECK(c2.alpha == 1);
  CHECK(c2.beta == 4);
  CHECK(c2.genus == 3);

  FermatContext c3 = make_context(2, 3, 3);
  CHECK(c3.h == 2);
  CHECK(c3.genus == 1);

  FermatContext c4 = make_context(5, 2, 4);
  CHECK(c4.alpha == 1);
  CHECK(c4.beta == 2);
  CHECK(c4.genus == 1);
}

TEST_CASE("context invariants over a grid") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
    for (std::uint64_t m = 2; m <= 14; ++m)
      for (std::uint64_t n = 2; n <= 14; ++n) {
        if (m % p == 0 || n % p == 0) continue;
        FermatContext ctx = make_context(p, m, n);
        Nat qm1 = ctx.q - 1;
        CHECK(qm1 % m == 0);
        CHECK(qm1 % n == 0);
        CHECK(ctx.alpha * n == qm1);
        CHECK(ctx.beta * m == qm1);
        CHECK(ctx.d == std::gcd(m, n));
        CHECK(2 * ctx.genus == (Nat(m) - 1) * (Nat(n) - 1) + 1 - ctx.d);
        // h is minimal: no smaller extension contains both character groups
        for (unsigned long e = 1; e < ctx.h; ++e) {
          Nat pe = nat_pow(ctx.p, e) - 1;
          CHECK((pe % m != 0 || pe % n != 0));
        }
      }
}

TEST_CASE("explicit extension degree") {
  FermatContext ctx = make_context_with_h(5, 4, 4, 2);
  CHECK(ctx.q == 25);
  CHECK(ctx.alpha == 6);
  CHECK(ctx.beta == 6);
  CHECK(ctx.genus == 3);
  CHECK_THROWS_AS(make_context_with_h(7, 4, 2, 1), std::invalid_argument);  // 4 nmid 6
  CHECK_THROWS_AS(make_context_with_h(5, 4, 4, 0), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_context(4, 3, 3), std::invalid_argument);  // p not prime
  CHECK_THROWS_AS(make_context(5, 1, 3), std::invalid_argument);  // m < 2
  CHECK_THROWS_AS(make_context(3, 6, 2), std::invalid_argument);  // p | m
  CHECK_THROWS_AS(make_context(3, 2, 9), std::invalid_argument);  // p | n

  CurveSpec twisted;
  twisted.p = 2;
  twisted.shape = TwistedHyperellipticParams{3};
  CHECK_THROWS_AS(validate(twisted), std::invalid_argument);
  twisted.p = 5;
  CHECK_NOTHROW(validate(twisted));
  twisted.shape = TwistedHyperellipticParams{10};
  CHECK_THROWS_AS(validate(twisted), std::invalid_argument);

  CurveSpec tower;
  tower.p = 3;
  tower.shape = DgzParams{0};
  CHECK_THROWS_AS(validate(tower), std::invalid_argument);
  tower.shape = BksParams{1};
  CHECK_NOTHROW(validate(tower));
  tower.p = 2;
  CHECK_THROWS_AS(validate(tower), std::invalid_argument);
}

TEST_CASE("basis enumeration") {
  FermatContext ctx = make_context(5, 4, 4);
  std::vector<BasisIndex> b = basis(ctx);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == BasisIndex{1, 2});
  CHECK(b[1] == BasisIndex{1, 3});
  CHECK(b[2] == BasisIndex{2, 3});

  for (std::uint64_t p : {5ull, 7ull})
    for (std::uint64_t m = 2; m <= 12; ++m)
      for (std::uint64_t n = 2; n <= 12; ++n) {
        if (m % p == 0 || n % p == 0) continue;
        FermatContext c = make_context(p, m, n);
        std::vector<BasisIndex> bs = basis(c);
        CHECK(Nat(static_cast<unsigned long>(bs.size())) == c.genus);
        for (std::size_t k = 0; k < bs.size(); ++k) {
          CHECK(bs[k].i >= 1);
          CHECK(bs[k].j >= 1);
          CHECK(bs[k].j <= m - 1);
          CHECK(bs[k].i * m < bs[k].j * n);
          if (k > 0)
            CHECK((bs[k - 1].j < bs[k].j ||
                   (bs[k - 1].j == bs[k].j && bs[k - 1].i < bs[k].i)));
        }
      }
}

TEST_CASE("supersingularity, exact test") {
  SupersingularVerdict v = is_supersingular(make_context(2, 3, 3));
  CHECK(v.supersingular);
  CHECK(v.witness == 1ul);

  CHECK_FALSE(is_supersingular(make_context(5, 4, 4)).supersingular);

  v = is_supersingular(make_context(3, 4, 2));
  CHECK(v.supersingular);
  CHECK(v.witness == 1ul);

  // undefined on a rational curve
  CHECK_THROWS_AS(is_supersingular(make_context(5, 2, 2)), std::invalid_argument);
}

TEST_CASE("supersingularity, shape shortcuts") {
  // both exponents of shape p^a + 1: verdict from the 2-adic valuations
  CHECK(supersingular_special(make_context(2, 3, 5)) == false);
  CHECK(supersingular_special(make_context(2, 3, 3)) == true);
  CHECK(supersingular_special(make_context(3, 4, 2)) == true);
  CHECK(supersingular_special(make_context(3, 10, 2)) == true);
  CHECK(supersingular_special(make_context(3, 4, 8)) == false);
  // mixed +-1 shapes answer too (false away from characteristic 3)
  CHECK(supersingular_special(make_context(5, 4, 4)) == false);
  // no rule for generic exponents
  CHECK_FALSE(supersingular_special(make_context(5, 3, 7)).has_value());

  // every fired shortcut agrees with the exact test
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
    for (std::uint64_t m = 2; m <= 17; ++m)
      for (std::uint64_t n = 2; n <= 17; ++n) {
        if (m % p == 0 || n % p == 0) continue;
        FermatContext ctx = make_context(p, m, n);
        if (ctx.genus == 0) continue;
        auto quick = supersingular_special(ctx);
        if (quick) CHECK(*quick == is_supersingular(ctx).supersingular);
      }
}

TEST_CASE("gcd of p^a+1 and p^b-1") {
  // The closed forms for mixed shapes lean on this classical identity:
  // with d = gcd(a, b), the gcd is p^d + 1 when b/d is even, else
  // gcd(2, p+1) = 1 or 2.
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
    for (std::uint64_t a = 1; a <= 8; ++a)
      for (std::uint64_t b = 1; b <= 8; ++b) {
        Nat x = nat_pow(p, static_cast<unsigned long>(a)) + 1;
        Nat y = nat_pow(p, static_cast<unsigned long>(b)) - 1;
        Nat g;
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        std::uint64_t d = std::gcd(a, b);
        Nat want = (b / d) % 2 == 0 ? nat_pow(p, static_cast<unsigned long>(d)) + 1
                                    : Nat(p == 2 ? 1 : 2);
        CHECK(g == want);
      }
}
