#include "rook0/action.hpp"

#include <algorithm>

#include "rook0/rcode.hpp"

namespace rook0 {

GenWord::GenWord(int size, std::vector<Generator> ls) : n(size), letters(std::move(ls)) {
  for (const Generator& g : letters) {
    if (g.index < 0 || g.index >= n) fail("OutOfRange", "generator index " + std::to_string(g.index));
    if (!g.is_pi() && g.index < 1) fail("OutOfRange", "s-generator index must be >= 1");
  }
}

RookVector act_right(const RookVector& r, Generator g) {
  const int k = g.index;
  if (k < 0 || k >= r.size()) fail("SizeMismatch", "generator index " + std::to_string(k) + " for size " + std::to_string(r.size()));
  std::vector<int> e = r.entries();
  if (g.is_pi() && k == 0) {
    e[0] = 0;
  } else if (g.is_pi()) {
    if (e[static_cast<size_t>(k - 1)] < e[static_cast<size_t>(k)])
      std::swap(e[static_cast<size_t>(k - 1)], e[static_cast<size_t>(k)]);
  } else {
    std::swap(e[static_cast<size_t>(k - 1)], e[static_cast<size_t>(k)]);
  }
  return unchecked_rook(std::move(e));
}

RookVector act_left(Generator g, const RookVector& r) {
  const int i = g.index;
  if (i < 0 || i >= r.size()) fail("SizeMismatch", "generator index " + std::to_string(i) + " for size " + std::to_string(r.size()));
  std::vector<int> e = r.entries();
  auto pos = [&](int v) { return r.position_of(v); };
  if (g.is_pi() && i == 0) {
    const int p = pos(1);
    if (p != 0) e[static_cast<size_t>(p - 1)] = 0;
  } else if (g.is_pi()) {
    const int k = pos(i), l = pos(i + 1);
    if (l == 0) {
      // fixes r
    } else if (k == 0) {
      e[static_cast<size_t>(l - 1)] = i;
    } else if (k < l) {
      e[static_cast<size_t>(k - 1)] = i + 1;
      e[static_cast<size_t>(l - 1)] = i;
    }
  } else {
    const int k = pos(i), l = pos(i + 1);
    if (k != 0 && l != 0) {
      e[static_cast<size_t>(k - 1)] = i + 1;
      e[static_cast<size_t>(l - 1)] = i;
    } else if (k != 0) {
      e[static_cast<size_t>(k - 1)] = i + 1;
    } else if (l != 0) {
      e[static_cast<size_t>(l - 1)] = i;
    }
  }
  return unchecked_rook(std::move(e));
}

RookVector act_right_word(RookVector r, const GenWord& w) {
  if (w.n != r.size()) fail("SizeMismatch", "word size " + std::to_string(w.n));
  for (Generator g : w.letters) r = act_right(r, g);
  return r;
}

RookVector eval_word(const GenWord& w) { return act_right_word(RookVector::identity(w.n), w); }

RookVector mul(const RookVector& r, const RookVector& s) {
  if (r.size() != s.size()) fail("SizeMismatch", "sizes differ");
  return act_right_word(r, canonical_word(encode(s), Alphabet::Q0));
}

RookVector omega_power(const RookVector& r) {
  RookVector x = r;
  for (int it = 0; it <= 2 * r.size(); ++it) {
    RookVector sq = mul(x, x);
    if (sq == x) return x;
    x = sq;
  }
  throw std::logic_error("omega_power did not stabilize");
}

RookVector parabolic_zero(int n, const std::set<int>& s) {
  for (int i : s)
    if (i < 0 || i >= n) fail("OutOfRange", "generator index " + std::to_string(i));
  // Extended composition of the complement; first part gives the zero block.
  std::vector<int> parts;
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    if (s.count(i)) continue;
    parts.push_back(i - prev);
    prev = i;
  }
  parts.push_back(n - prev);
  std::vector<int> e(static_cast<size_t>(n), 0);
  int pos = parts.empty() ? 0 : parts[0];  // zero block = first part
  for (size_t b = 1; b < parts.size(); ++b) {
    const int sz = parts[b];
    for (int i = 1; i <= sz; ++i) e[static_cast<size_t>(pos + i - 1)] = pos + sz + 1 - i;
    pos += sz;
  }
  return unchecked_rook(std::move(e));
}

RookVector act_right_pj(const RookVector& r, int j) {
  if (j < 0 || j > r.size()) fail("OutOfRange", "P index " + std::to_string(j));
  std::vector<int> e = r.entries();
  for (int i = 0; i < j; ++i) e[static_cast<size_t>(i)] = 0;
  return unchecked_rook(std::move(e));
}

RookVector act_left_pj(int j, const RookVector& r) {
  if (j < 0 || j > r.size()) fail("OutOfRange", "P index " + std::to_string(j));
  std::vector<int> e = r.entries();
  for (int& v : e)
    if (v != 0 && v <= j) v = 0;
  return unchecked_rook(std::move(e));
}

bool PresentationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
}

namespace {

// Relation sides are words over pi/s/P letters, applied on the right.
struct OpLetter {
  enum class Kind { Pi, S, P } kind;
  int idx;
};
using OpWord = std::vector<OpLetter>;

RookVector apply(RookVector r, const OpWord& w) {
  for (const OpLetter& l : w) {
    switch (l.kind) {
      case OpLetter::Kind::Pi: r = act_right(r, Generator::pi(l.idx)); break;
      case OpLetter::Kind::S: r = act_right(r, Generator::s(l.idx)); break;
      case OpLetter::Kind::P: r = act_right_pj(r, l.idx); break;
    }
  }
  return r;
}

OpLetter pi(int i) { return {OpLetter::Kind::Pi, i}; }
OpLetter es(int i) { return {OpLetter::Kind::S, i}; }
OpLetter P(int i) { return {OpLetter::Kind::P, i}; }

struct Checker {
  int n;
  std::vector<RookVector> all;
  std::vector<RelationCheck> out;

  void relation(const std::string& name, const OpWord& lhs, const OpWord& rhs) {
    for (const RookVector& r : all) {
      if (apply(r, lhs) != apply(r, rhs)) {
        std::string w;
        for (int v : r.entries()) w += (w.empty() ? "" : ",") + std::to_string(v);
        out.push_back({name, false, w});
        return;
      }
    }
    out.push_back({name, true, ""});
  }
};

}  // namespace

PresentationReport check_presentation(int n, PresentationVariant variant) {
  if (n < 1) fail("OutOfRange", "n must be >= 1");
  Checker ck{n, enumerate_rooks(n), {}};
  auto nm = [](const std::string& base, int i, int j = -1) {
    return j < 0 ? base + "[" + std::to_string(i) + "]"
                 : base + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  };

  switch (variant) {
    case PresentationVariant::Q0:
      for (int i = 0; i < n; ++i) ck.relation(nm("RB1", i), {pi(i), pi(i)}, {pi(i)});
      for (int i = 1; i + 1 < n; ++i)
        ck.relation(nm("RB2", i), {pi(i), pi(i + 1), pi(i)}, {pi(i + 1), pi(i), pi(i + 1)});
      if (n >= 2) {
        ck.relation("RB3a", {pi(1), pi(0), pi(1), pi(0)}, {pi(0), pi(1), pi(0)});
        ck.relation("RB3b", {pi(0), pi(1), pi(0), pi(1)}, {pi(0), pi(1), pi(0)});
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) ck.relation(nm("RB4", i, j), {pi(i), pi(j)}, {pi(j), pi(i)});
      break;

    case PresentationVariant::Q1:
      for (int i = 1; i < n; ++i) ck.relation(nm("Rs1", i), {es(i), es(i)}, {});
      for (int i = 1; i + 1 < n; ++i)
        ck.relation(nm("Rs2", i), {es(i), es(i + 1), es(i)}, {es(i + 1), es(i), es(i + 1)});
      for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) ck.relation(nm("Rs3", i, j), {es(i), es(j)}, {es(j), es(i)});
      ck.relation("Rs4.1", {P(1), P(1)}, {P(1)});
      for (int j = 2; j < n; ++j) ck.relation(nm("Rs5.1", j), {P(1), es(j)}, {es(j), P(1)});
      if (n >= 2) {
        ck.relation("Rs6.1a", {es(1), P(1), es(1), P(1)}, {P(1), es(1), P(1)});
        ck.relation("Rs6.1b", {P(1), es(1), P(1), es(1)}, {P(1), es(1), P(1)});
      }
      break;

    case PresentationVariant::Alt:
      for (int i = 1; i < n; ++i) ck.relation(nm("R1", i), {pi(i), pi(i)}, {pi(i)});
      for (int i = 1; i + 1 < n; ++i)
        ck.relation(nm("R2", i), {pi(i), pi(i + 1), pi(i)}, {pi(i + 1), pi(i), pi(i + 1)});
      for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) ck.relation(nm("R3", i, j), {pi(i), pi(j)}, {pi(j), pi(i)});
      for (int i = 1; i <= n; ++i) ck.relation(nm("R4", i), {P(i), P(i)}, {P(i)});
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) ck.relation(nm("R5", i, j), {P(i), P(j)}, {P(j), P(i)});
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ck.relation(nm("R6", i, j), {P(i), pi(j)}, {pi(j), P(i)});
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j < std::min(i, n); ++j) {
          ck.relation(nm("R7a", i, j), {P(i), pi(j)}, {pi(j), P(i)});
          ck.relation(nm("R7b", i, j), {P(i), pi(j)}, {P(i)});
        }
      for (int i = 1; i < n; ++i) ck.relation(nm("R8", i), {P(i + 1)}, {P(i), pi(i), P(i)});
      ck.relation("R4.1", {P(1), P(1)}, {P(1)});
      for (int j = 2; j < n; ++j) ck.relation(nm("R5.1", j), {P(1), pi(j)}, {pi(j), P(1)});
      if (n >= 2) {
        ck.relation("R6.1a", {pi(1), P(1), pi(1), P(1)}, {P(1), pi(1), P(1)});
        ck.relation("R6.1b", {P(1), pi(1), P(1), pi(1)}, {P(1), pi(1), P(1)});
      }
      break;
  }
  return {variant, n, std::move(ck.out)};
}

}  // namespace rook0
