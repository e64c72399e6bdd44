#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rlz/tensor.hpp"
#include "support/fixtures.hpp"

using namespace rlz;

TEST_CASE("compose: path matrix and identity") {
  StandardMatrix e(3);
  for (int i = 0; i < 3; ++i) e.set(i, i);
  e.set(0, 1);
  e.set(1, 2);
  auto sq = compose(e, e);
  CHECK(sq.get(0, 2));

  StandardMatrix id(3);
  for (int i = 0; i < 3; ++i) id.set(i, i);
  CHECK(compose(e, id) == e);
  CHECK(compose(id, e) == e);
}

TEST_CASE("contract: single firing and the zero matrix") {
  GapMatrix y(4);
  y.set(0, 1, 1, 2);
  StandardMatrix e(4);
  e.set(1, 1);
  auto out = contract(y, e);
  CHECK(out.get(0, 2));
  CHECK(out.popcount() == 1);

  GapMatrix zero(4);
  CHECK(contract(zero, e).popcount() == 0);
}

TEST_CASE("extend: paper example and identity") {
  GapMatrix y(4);
  y.set(0, 1, 1, 2);
  StandardMatrix e(4);
  e.set(2, 3);
  auto out = extend(y, e, ExtendMode::AfterB);
  CHECK(out.get(0, 1, 1, 3));
  CHECK(out.popcount() == 1);

  StandardMatrix id(4);
  for (int i = 0; i < 4; ++i) id.set(i, i);
  for (auto mode : {ExtendMode::AfterB, ExtendMode::BeforeA, ExtendMode::IntoD, ExtendMode::IntoC})
    CHECK(extend(y, id, mode) == y);
}

TEST_CASE("substitute: paper example") {
  GapMatrix y1(5), y2(5);
  y1.set(0, 1, 2, 3);
  y2.set(1, 4, 4, 2);
  auto out = substitute(y1, y2);
  CHECK(out.get(0, 4, 4, 3));
  CHECK(out.popcount() == 1);
}

TEST_CASE("all products equal their loop references on random inputs") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    int n = 2 + static_cast<int>(seed % 4);  // 2..5
    auto y1 = fixtures::random_gap(n, 0.15, seed * 31);
    auto y2 = fixtures::random_gap(n, 0.15, seed * 31 + 1);
    auto e1 = fixtures::random_standard(n, 0.3, seed * 31 + 2);
    auto e2 = fixtures::random_standard(n, 0.3, seed * 31 + 3);

    CHECK(compose(e1, e2) == fixtures::ref_compose(e1, e2));
    CHECK(contract(y1, e1) == fixtures::ref_contract(y1, e1));
    for (auto mode :
         {ExtendMode::AfterB, ExtendMode::BeforeA, ExtendMode::IntoD, ExtendMode::IntoC})
      CHECK(extend(y1, e1, mode) == fixtures::ref_extend(y1, e1, mode));
    CHECK(substitute(y1, y2) == fixtures::ref_substitute(y1, y2));
  }
}

TEST_CASE("products are monotone in their inputs") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    int n = 4;
    auto y = fixtures::random_gap(n, 0.1, seed);
    auto e = fixtures::random_standard(n, 0.25, seed + 100);
    auto y_bigger = y;
    y_bigger.set(static_cast<int>(seed) % n, 1, 2, 3);
    auto e_bigger = e;
    e_bigger.set(static_cast<int>(seed) % n, (static_cast<int>(seed) + 1) % n);

    auto base = substitute(y, y);
    auto more = substitute(y_bigger, y_bigger);
    auto merged = base;
    merged.bits().or_with(more.bits());
    CHECK(merged == more);  // base subset of more

    auto cb = contract(y, e);
    auto cm = contract(y_bigger, e_bigger);
    auto cmerged = cb;
    cmerged.bits().or_with(cm.bits());
    CHECK(cmerged == cm);
  }
}

TEST_CASE("compose is associative on random triples") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    int n = 5;
    auto a = fixtures::random_standard(n, 0.3, seed);
    auto b = fixtures::random_standard(n, 0.3, seed + 50);
    auto c = fixtures::random_standard(n, 0.3, seed + 99);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("mirrored extends on symmetric inputs") {
  // with fully symmetric Y and E, AfterB and BeforeA outputs are mirrors:
  // out_AfterB[a,(c,d),b] == out_BeforeA[b,(d,c),a]
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    int n = 4;
    auto y = fixtures::random_gap(n, 0.12, seed * 7);
    symmetrize_gap(y);
    auto e = fixtures::random_standard(n, 0.3, seed * 7 + 1);
    e.symmetrize();
    auto ab = extend(y, e, ExtendMode::AfterB);
    auto ba = extend(y, e, ExtendMode::BeforeA);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            CHECK(ab.get(a, c, d, b) == ba.get(b, d, c, a));
  }
}

TEST_CASE("dimension mismatches throw") {
  CHECK_THROWS_AS(compose(StandardMatrix(3), StandardMatrix(4)), std::invalid_argument);
  CHECK_THROWS_AS(contract(GapMatrix(3), StandardMatrix(4)), std::invalid_argument);
  CHECK_THROWS_AS(extend(GapMatrix(3), StandardMatrix(4), ExtendMode::AfterB),
                  std::invalid_argument);
  CHECK_THROWS_AS(substitute(GapMatrix(3), GapMatrix(2)), std::invalid_argument);
}
