#pragma once

#include <set>
#include <string>
#include <vector>

#include "rook0/rookcore.hpp"

namespace rook0 {

/// Generator letter: pi_k for k in [0, n-1], or the transposition s_k, k >= 1.
struct Generator {
  enum class Kind { Pi, S };
  Kind kind = Kind::Pi;
  int index = 0;

  static Generator pi(int k) { return {Kind::Pi, k}; }
  static Generator s(int k) {
    if (k < 1) fail("OutOfRange", "s-generator index must be >= 1");
    return {Kind::S, k};
  }
  bool is_pi() const { return kind == Kind::Pi; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Word over the generator alphabet of R_n^0 (or the q=1 alphabet).
struct GenWord {
  int n = 0;
  std::vector<Generator> letters;

  GenWord() = default;
  GenWord(int size, std::vector<Generator> ls);

  friend auto operator<=>(const GenWord&, const GenWord&) = default;
};

/// Natural right action. pi_k exchanges positions k, k+1 when r_k < r_{k+1};
/// s_k always exchanges them; pi_0 puts a 0 in the first position.
RookVector act_right(const RookVector& r, Generator g);

/// Value-side left action; equals transpose(act_right(transpose(r), g)).
RookVector act_left(Generator g, const RookVector& r);

RookVector act_right_word(RookVector r, const GenWord& w);

/// 1_n acted on the right by each letter of w.
RookVector eval_word(const GenWord& w);

/// Product in R_n^0 under the identification r <-> pi_r.
RookVector mul(const RookVector& r, const RookVector& s);

/// Idempotent power pi_r^omega, by repeated squaring.
RookVector omega_power(const RookVector& r);

/// pi_S, the zero of the parabolic submonoid <pi_i : i in S>, S subset of
/// [0, n-1]: block anti-diagonal matrix, first block zeroed when 0 in S.
RookVector parabolic_zero(int n, const std::set<int>& s);

/// P_j acting on the right zeroes the first j entries; on the left it
/// replaces the values <= j by 0.
RookVector act_right_pj(const RookVector& r, int j);
RookVector act_left_pj(int j, const RookVector& r);

enum class PresentationVariant { Q0, Q1, Alt };

struct RelationCheck {
  std::string name;
  bool holds = false;
  std::string witness;  // empty when the relation holds
};

struct PresentationReport {
  PresentationVariant variant;
  int n = 0;
  std::vector<RelationCheck> checks;
  bool all_hold() const;
};

/// Verifies the relation lists extensionally, as identities of functions on
/// R_n under the right action.  Q0 = RB1..RB4, Q1 = Rs1..Rs6.1,
/// Alt = R1..R8 together with R4.1..R6.1.
PresentationReport check_presentation(int n, PresentationVariant variant);

}  // namespace rook0
