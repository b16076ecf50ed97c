#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "fermat/counted_sets.hpp"

using namespace fermat;

namespace {

SetParams make(SetKind which, std::uint64_t b, std::uint64_t m = 0, std::uint64_t n = 0) {
  SetParams sp;
  sp.which = which;
  sp.b = b;
  sp.m = m;
  sp.n = n;
  return sp;
}

}  // namespace

TEST_CASE("quadruple count with a min-sum constraint") {
  CHECK(closed_count(make(SetKind::quadruple_min_sum, 2)) == 6);
  CHECK(closed_count(make(SetKind::quadruple_min_sum, 3)) == 21);
  CHECK(closed_count(make(SetKind::quadruple_min_sum, 5)) == 120);
  CHECK(closed_count(make(SetKind::quadruple_min_sum, 7)) == 406);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    SetParams sp = make(SetKind::quadruple_min_sum, p);
    CHECK(closed_count(sp) == enumerate_count(sp));
  }
  CHECK_THROWS_AS(closed_count(make(SetKind::quadruple_min_sum, 6)), std::invalid_argument);
}

TEST_CASE("min box") {
  SetParams tiny = make(SetKind::min_box, 2, 1, 1);
  CHECK(closed_count(tiny) == 3);
  CHECK(enumerate_count(tiny) == 3);
  for (std::uint64_t b = 1; b <= 6; ++b)
    for (std::uint64_t m = 1; m <= 3; ++m)
      for (std::uint64_t n = 1; n <= 3; ++n) {
        SetParams sp = make(SetKind::min_box, b, m, n);
        CHECK(closed_count(sp) == enumerate_count(sp));
      }
}

TEST_CASE("mirror min box") {
  for (std::uint64_t b = 2; b <= 7; ++b)
    for (std::uint64_t m = 1; m <= 3; ++m)
      for (std::uint64_t n = 1; n <= 3; ++n) {
        SetParams sp = make(SetKind::mirror_min_box, b, m, n);
        CHECK(closed_count(sp) == enumerate_count(sp));
      }
  CHECK_THROWS_AS(closed_count(make(SetKind::mirror_min_box, 1, 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("split min box") {
  for (std::uint64_t b = 1; b <= 5; ++b)
    for (std::uint64_t m = 1; m <= 3; ++m)
      for (std::uint64_t n = 1; n <= 3; ++n) {
        SetParams sp = make(SetKind::split_min_box, b, m, n);
        CHECK(closed_count(sp) == enumerate_count(sp));
      }
}

TEST_CASE("structured walk kicks in past the enumeration cap") {
  // 9^(4+2*4) > 10^8 forces the a-tuple walk; the closed form must agree.
  SetParams big = make(SetKind::split_min_box, 9, 4, 4);
  CHECK(closed_count(big) == enumerate_count(big));
  // same for the plain box with a lopsided exponent pair
  SetParams lop = make(SetKind::min_box, 23, 3, 6);
  CHECK(closed_count(lop) == enumerate_count(lop));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(closed_count(make(SetKind::min_box, 0, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(closed_count(make(SetKind::min_box, 3, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_count(make(SetKind::min_box, 3, 1, 0)), std::invalid_argument);
}
