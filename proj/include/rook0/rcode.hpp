#pragma once

#include <vector>

#include "rook0/action.hpp"
#include "rook0/rookcore.hpp"

namespace rook0 {

/// R-code: integer word c_1..c_n built so that -m(c_1..c_{j-1}) <= c_j <= j.
/// Codes of size n are in bijection with rooks of size n.
struct RCode {
  int n = 0;
  std::vector<int> letters;

  friend auto operator<=>(const RCode&, const RCode&) = default;
};

/// The m statistic: reset to -d on d <= 0, increment when 0 < d <= m+1,
/// unchanged when d > m+1.
int m_value(const std::vector<int>& word);

bool is_rcode(const std::vector<int>& word);

/// Makes an RCode after checking membership in C_n; throws NotAnRCode.
RCode rcode_from_letters(std::vector<int> letters);

/// All R-codes of size n (lexicographic in the letter sequences).
std::vector<RCode> enumerate_rcodes(int n);

/// Code of a rook: strip n at its position (record the position), else strip
/// the first 0 (record minus the number of letters before it).
RCode encode(const RookVector& r);

/// Inverse of encode: insert n at position c_n, or 0 at position -c_n + 1.
RookVector decode(const RCode& c);

enum class Alphabet { Q0, Q1 };

/// Canonical reduced word of an R-code, as the column product
/// C^0_{c_1} C^1_{c_2} ... C^{n-1}_{c_n}.
GenWord canonical_word(const RCode& c, Alphabet alphabet = Alphabet::Q0);

/// Right action of a generator on codes: decode(code_act(c, t)) = decode(c).t
/// and pi_{code_act(c, t)} is congruent to pi_c t.
RCode code_act(const RCode& c, Generator t);

/// Fold code_act over w starting from the code of the identity.
RCode normalize(const GenWord& w);

/// Length of the canonical word of r (minimal word length for pi_r).
int length(const RookVector& r);
int word_length(const RCode& c);

bool is_reduced(const GenWord& w);

/// All words obtained from w by a single braid rewrite (commutation, or a
/// braid move on indices >= 1).
std::vector<GenWord> braid_neighbors(const GenWord& w);

enum class MatsumotoMode { Fast, Certify };

/// True iff two reduced words are connected by braid moves alone.  Fast mode
/// compares normal forms (complete by the Matsumoto property); Certify runs
/// the breadth-first closure over braid rewrites.
bool matsumoto_equivalent(const GenWord& u, const GenWord& v,
                          MatsumotoMode mode = MatsumotoMode::Fast);

/// Lehmer code c_i = #{j > i : sigma_i > sigma_j} of a permutation rook.
std::vector<int> lehmer_code(const RookVector& sigma);

}  // namespace rook0
