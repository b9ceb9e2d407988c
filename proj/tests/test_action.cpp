#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rook0/action.hpp"
#include "rook0/rcode.hpp"
#include "rook0/text_io.hpp"

using namespace rook0;

TEST_CASE("right action of generators") {
  CHECK(act_right(parse_rook("21345"), Generator::pi(2)) == parse_rook("23145"));
  CHECK(act_right(parse_rook("32145"), Generator::pi(0)) == parse_rook("02145"));
  CHECK(act_right(parse_rook("23145"), Generator::pi(1)) == parse_rook("32145"));
  CHECK(act_right(parse_rook("21"), Generator::pi(1)) == parse_rook("21"));  // descent: fixed
  CHECK(act_right(parse_rook("21"), Generator::s(1)) == parse_rook("12"));   // s always swaps
  CHECK_THROWS_WITH_AS(act_right(parse_rook("12"), Generator::pi(2)),
                       doctest::Contains("SizeMismatch"), RookError);
}

TEST_CASE("left action of generators") {
  CHECK(act_left(Generator::pi(0), parse_rook("0342")) == parse_rook("0342"));
  CHECK(act_left(Generator::pi(1), parse_rook("0342")) == parse_rook("0341"));
  CHECK(act_left(Generator::pi(2), parse_rook("0342")) == parse_rook("0342"));
  CHECK(act_left(Generator::pi(3), parse_rook("0342")) == parse_rook("0432"));
  CHECK(act_left(Generator::pi(0), parse_rook("132")) == parse_rook("032"));
}

TEST_CASE("left action is the transpose of the right action") {
  for (int n = 1; n <= 3; ++n)
    for (const RookVector& r : enumerate_rooks(n))
      for (int i = 0; i < n; ++i) {
        const Generator g = Generator::pi(i);
        CHECK(act_left(g, r) == transpose(act_right(transpose(r), g)));
        if (i >= 1)
          CHECK(act_left(Generator::s(i), r) == transpose(act_right(transpose(r), Generator::s(i))));
      }
}

TEST_CASE("word evaluation") {
  const GenWord w = parse_genword("p1 p2 p1 p0 p1 p3 p2 p4 p3 p2 p1 p0", 5);
  CHECK(eval_word(w) == parse_rook("02401"));
  CHECK(eval_word(GenWord(3, {})) == parse_rook("123"));
  CHECK(eval_word(parse_genword("p0 p1 p0", 2)) == parse_rook("00"));
}

TEST_CASE("mul: products in the 0-rook monoid") {
  CHECK(mul(parse_rook("023"), parse_rook("003")) == parse_rook("003"));
  for (const RookVector& r : enumerate_rooks(3)) {
    CHECK(mul(RookVector::identity(3), r) == r);
    CHECK(mul(r, RookVector::identity(3)) == r);
    CHECK(mul(r, RookVector::zero(3)) == RookVector::zero(3));
    CHECK(mul(RookVector::zero(3), r) == RookVector::zero(3));
  }
}

TEST_CASE("omega power") {
  CHECK(omega_power(parse_rook("00")) == parse_rook("00"));
  CHECK(omega_power(parse_rook("20")) == parse_rook("00"));
  for (const RookVector& r : enumerate_rooks(4)) {
    const RookVector w = omega_power(r);
    CHECK(omega_power(w) == w);
    CHECK(mul(w, w) == w);
  }
}

TEST_CASE("parabolic zeros") {
  CHECK(parabolic_zero(3, {0, 1, 2}) == RookVector::zero(3));
  CHECK(parabolic_zero(3, {}) == RookVector::identity(3));
  CHECK(parabolic_zero(3, {1}) == parse_rook("213"));
  CHECK(parabolic_zero(2, {0}) == parse_rook("02"));
  CHECK(parabolic_zero(8, {0, 1, 2, 5, 7}) == parse_rook("00046587"));
  // zero of the parabolic: fixed exactly by its own generators
  for (const RookVector& r : enumerate_rooks(3)) {
    const RookVector ps = parabolic_zero(3, {0, 2});
    CHECK(mul(ps, ps) == ps);
    CHECK(mul(mul(r, ps), ps) == mul(r, ps));
  }
}

TEST_CASE("P_j actions") {
  for (int n = 1; n <= 4; ++n)
    for (const RookVector& r : enumerate_rooks(n))
      for (int j = 0; j <= n; ++j) {
        const RookVector pj = act_right_pj(RookVector::identity(n), j);
        CHECK(mul(r, pj) == act_right_pj(r, j));
        CHECK(mul(pj, r) == act_left_pj(j, r));
      }
}

TEST_CASE("presentations hold as function identities") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(check_presentation(n, PresentationVariant::Q0).all_hold());
    CHECK(check_presentation(n, PresentationVariant::Q1).all_hold());
    CHECK(check_presentation(n, PresentationVariant::Alt).all_hold());
  }
  // named examples: RB3 on R_2, Rs1 on R_2
  const PresentationReport q0 = check_presentation(2, PresentationVariant::Q0);
  bool saw_rb3 = false;
  for (const RelationCheck& c : q0.checks)
    if (c.name == "RB3a") {
      saw_rb3 = true;
      CHECK(c.holds);
    }
  CHECK(saw_rb3);
  const PresentationReport q1 = check_presentation(2, PresentationVariant::Q1);
  bool saw_rs1 = false;
  for (const RelationCheck& c : q1.checks)
    if (c.name == "Rs1[1]") {
      saw_rs1 = true;
      CHECK(c.holds);
    }
  CHECK(saw_rs1);
}

TEST_CASE("left and right actions commute") {
  for (int n = 1; n <= 3; ++n)
    for (const RookVector& r : enumerate_rooks(n))
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(act_right(act_left(Generator::pi(i), r), Generator::pi(j)) ==
                act_left(Generator::pi(i), act_right(r, Generator::pi(j))));
}

TEST_CASE("mul is associative on R_3") {
  const auto all = enumerate_rooks(3);
  for (const RookVector& a : all)
    for (const RookVector& b : all)
      for (const RookVector& c : all)
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
}

TEST_CASE("genword text") {
  const GenWord w = parse_genword("p0 s2 p1", 3);
  CHECK(format_genword(w) == "p0 s2 p1");
  CHECK_THROWS_AS(parse_genword("p5", 3), RookError);
  CHECK_THROWS_AS(parse_genword("x1", 3), RookError);
  CHECK_THROWS_AS(parse_genword("s0", 3), RookError);
}
