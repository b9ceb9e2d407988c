#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rook0 {

// Error with a machine readable kind ("OutOfRange", "SizeMismatch", ...).
class RookError : public std::invalid_argument {
 public:
  RookError(std::string kind, const std::string& what)
      : std::invalid_argument(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
  throw RookError(kind, what);
}

/// A rook vector: a word r_1..r_n over {0..n} whose nonzero letters are all
/// distinct.  It is the column reading of an n x n 0/1 matrix with at most
/// one 1 per row and column: r_i is the row of the 1 in column i, or 0.
class RookVector {
 public:
  RookVector() = default;

  static RookVector validate(std::vector<int> entries);
  static RookVector identity(int n);
  static RookVector zero(int n);

  int size() const { return static_cast<int>(e_.size()); }
  int entry(int pos1) const { return e_[static_cast<size_t>(pos1 - 1)]; }  // 1-based
  const std::vector<int>& entries() const { return e_; }

  bool is_permutation() const;
  /// 1-based position of value v, or 0 when v does not appear.
  int position_of(int v) const;

  friend auto operator<=>(const RookVector&, const RookVector&) = default;

 private:
  explicit RookVector(std::vector<int> e) : e_(std::move(e)) {}
  std::vector<int> e_;
  friend RookVector unchecked_rook(std::vector<int>);
};

/// Internal fast path: caller guarantees the entries form a rook vector.
RookVector unchecked_rook(std::vector<int> e);

using ValuePair = std::pair<int, int>;  // (b, a) with b > a > 0

/// Order-theoretic coordinates of a rook: support, value inversions and,
/// for each support letter, the number of zeros to its right.
struct RookTriple {
  std::set<int> support;
  std::set<ValuePair> inversions;
  std::map<int, int> zcount;

  friend bool operator==(const RookTriple&, const RookTriple&) = default;
};

/// Decomposition of a rook seen as a partial injective function on [1, n].
struct CycleChainDecomp {
  // Each cycle starts at its minimum; cycles sorted by decreasing minimum.
  std::vector<std::vector<int>> cycles;
  // Maximal chains (c_1..c_k) with r(c_i) = c_{i+1}; sorted by increasing
  // last element.
  std::vector<std::vector<int>> chains;

  friend bool operator==(const CycleChainDecomp&, const CycleChainDecomp&) = default;
};

/// 0/1-matrix product of two rooks: componentwise (r.s)_i = r_{s_i} or 0.
RookVector matrix_product(const RookVector& r, const RookVector& s);

/// Matrix transpose on vectors: entry i of the result is the position of i
/// in r, or 0 when i does not appear.
RookVector transpose(const RookVector& r);

/// PZ(r): position of the first zero minus one, or n for a permutation.
int first_zero(const RookVector& r);

RookTriple rook_triple(const RookVector& r);

/// Unique rook of size n with the given triple; throws InvalidTriple.
RookVector rook_from_triple(const RookTriple& t, int n);

/// All rooks of size n in lexicographic order of their entry sequences.
std::vector<RookVector> enumerate_rooks(int n);

/// r(n,k) = #{r in R_n : PZ(r) = k} for k = 0..n, by the recurrence
/// r(n,k) = k r(n-1,k-1) + (n-k-1) r(n-1,k) + sum_{i>=k} r(n-1,i).
std::vector<long long> count_by_first_zero(int n);

CycleChainDecomp cycle_chain_decomposition(const RookVector& r);

/// Foata-style bijection sending rooks with k points on cycles to rooks
/// with first zero in position k, and its inverse.
RookVector foata_map(const RookVector& r);
RookVector foata_inverse(const RookVector& s);

}  // namespace rook0
