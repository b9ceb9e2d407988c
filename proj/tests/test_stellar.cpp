#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "rook0/action.hpp"
#include "rook0/stellar.hpp"
#include "rook0/text_io.hpp"

using namespace rook0;

TEST_CASE("stellar projection examples") {
  CHECK(st_k(parse_rook("104625"), 1) == parse_rook("004605"));
  CHECK(st_k(parse_rook("10806270"), 1) == parse_rook("00806070"));
  CHECK(st_k(parse_rook("3057016"), 2) == parse_rook("3057006"));
  CHECK(st_k(parse_rook("3407016"), 2) == parse_rook("3407006"));
  for (const RookVector& r : enumerate_rooks(3)) {
    CHECK(st_k(r, 0) == RookVector::zero(3));
    CHECK(st_k(r, 3) == r);
    if (r.is_permutation()) CHECK(st_k(r, 1) == r);  // M(r) maximizes over nothing
  }
}

TEST_CASE("st_k is a projection with nested images") {
  for (int n = 0; n <= 4; ++n) {
    std::set<RookVector> prev;
    for (int k = 0; k <= n; ++k) {
      const auto elems = stellar_elements(n, k);
      std::set<RookVector> cur(elems.begin(), elems.end());
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
      for (const RookVector& r : enumerate_rooks(n)) CHECK(st_k(st_k(r, k), k) == st_k(r, k));
    }
  }
}

TEST_CASE("composition law St_i o St_j = St_max") {
  for (const RookVector& r : enumerate_rooks(4))
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) CHECK(st_k(st_k(r, j), i) == st_k(r, std::min(i, j)));
}

TEST_CASE("cardinalities") {
  CHECK(stellar_card(4, 1) == 65);
  CHECK(stellar_card(4, 2) == 165);
  CHECK(stellar_card(4, 3) == 205);
  CHECK(stellar_card(3, 1) == 16);
  for (int n = 0; n <= 4; ++n) CHECK(stellar_card(n, 0) == 1);
  // k = 1 counts sum_{m} n!/m!
  for (int n = 0; n <= 5; ++n) {
    long long fact = 1, expect = 0;
    std::vector<long long> facts = {1};
    for (int m = 1; m <= n; ++m) facts.push_back(fact *= m);
    for (int m = 0; m <= n; ++m) expect += facts[static_cast<size_t>(n)] / facts[static_cast<size_t>(m)];
    CHECK(stellar_card(n, 1) == expect);
  }
}

TEST_CASE("quotient product") {
  // 230 . st-image of pi_0: via the st_1(mul) oracle
  const RookVector a = parse_rook("230"), pibar0 = st_k(parse_rook("023"), 1);
  CHECK(st_k(a, 1) == a);
  CHECK(stellar_mul(1, a, pibar0) == parse_rook("030"));
  CHECK(stellar_mul(1, a, st_k(RookVector::identity(3), 1)) == a);
  CHECK_THROWS_WITH_AS(stellar_mul(1, parse_rook("103"), parse_rook("123")),
                       doctest::Contains("NotStellar"), RookError);
  for (const RookVector& r : enumerate_rooks(3))
    for (const RookVector& s : enumerate_rooks(3))
      for (int k = 1; k <= 3; ++k)
        CHECK(st_k(mul(st_k(r, k), st_k(s, k)), k) == st_k(mul(r, s), k));
}

TEST_CASE("preimages need not be intervals") {
  std::set<RookVector> pre;
  for (const RookVector& r : enumerate_rooks(3))
    if (st_k(r, 1) == parse_rook("300")) pre.insert(r);
  CHECK(pre == std::set<RookVector>{parse_rook("300"), parse_rook("301"), parse_rook("310")});
}

TEST_CASE("verify_stellar holds up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    const StellarReport rep = verify_stellar(n);
    for (const StellarCheck& c : rep.checks) {
      INFO(c.name, " witness ", c.witness);
      CHECK(c.holds);
    }
  }
  CHECK_THROWS_WITH_AS(verify_stellar(9, 6), doctest::Contains("BoundExceeded"), RookError);
}

TEST_CASE("relation ST as words on the 16 stellar elements of R_3") {
  const GenWord lhs = parse_genword("p1 p0 p1", 3), rhs = parse_genword("p1 p0", 3);
  const auto stell = stellar_elements(3, 1);
  CHECK(stell.size() == 16);
  for (const RookVector& s : stell)
    CHECK(st_k(act_right_word(s, lhs), 1) == st_k(act_right_word(s, rhs), 1));
}
