#pragma once

#include <set>
#include <string>
#include <vector>

#include "rook0/action.hpp"
#include "rook0/rookcore.hpp"

namespace rook0 {

/// r <= u in the R-order of R_n^0 (Green's right order, identity on top):
/// support containment, inversion compatibility and Z domination.
bool leq(const RookVector& r, const RookVector& u);

/// Greatest lower bound for the R-order.
RookVector meet(const RookVector& u, const RookVector& v);

/// Least upper bound for the R-order.
RookVector join(const RookVector& u, const RookVector& v);

struct LabeledEdge {
  RookVector from;
  RookVector to;
  Generator gen;
};

/// Edges r -> r.pi_i of the right Cayley graph (loops optional).
std::vector<LabeledEdge> cayley_edges(int n, bool include_loops);

/// Transitive reduction of the loop-free right Cayley digraph.
std::vector<LabeledEdge> hasse_edges(int n, int max_n = 7);

enum class GraphFlavor { RightCayley, Hasse };

std::string export_dot(int n, GraphFlavor flavor, int max_n = 7);

/// Elements with exactly one upper (meet) / lower (join) cover.
std::vector<RookVector> meet_irreducibles(int n);
std::vector<RookVector> join_irreducibles(int n);

/// Upper and lower covers in the R-order.
std::vector<RookVector> upper_covers(const RookVector& r);
std::vector<RookVector> lower_covers(const RookVector& r);

/// Weak descents: {i : r.pi_i = r}.
std::set<int> weak_descents(const RookVector& r);

struct StrictDescents {
  std::set<int> members;     // {i : exists s != r with s.pi_i = r}
  int zero_multiplicity = 0; // number of s != r with s.pi_0 = r
};
StrictDescents strict_descents(const RookVector& r);

/// Set of interleavings of two words (duplicates collapsed).
std::set<std::vector<int>> shuffle(const std::vector<int>& u, const std::vector<int>& v);

/// MCR_n: rooks on maximal chains of minimal length, i.e. the union of the
/// shuffles of 0^k with (k+1)...n.
std::vector<RookVector> mcr_set(int n, int max_n = 7);

struct ChainCounts {
  long long maximal = 0;       // number of maximal chains
  long long min_length_count = 0;  // number of those of minimal length
  int min_length = 0;          // that minimal length (number of covers)
};
ChainCounts chain_counts(int n, int max_n = 7);

using Composition = std::vector<int>;

/// Nonzero positions of an element of MCR_n; throws NotInMCR otherwise.
std::set<int> eta(const RookVector& r);

/// Subset {s_1 < ... < s_p} of [1, total-1] -> composition of total.
Composition cset(const std::set<int>& s, int total);

/// Subset of [0, n-1] -> extended composition of n (0 first part when 0 in S).
Composition subset_to_extended(const std::set<int>& s, int n);

/// Descent set of a composition (ordinary or extended).
std::set<int> des(const Composition& comp);

struct DyckPath {
  int semilength = 0;
  std::vector<int> steps;  // 1 = north-east, 0 = south-east

  bool valid() const;
  bool avoids_011() const;
  /// Height profile after each step.
  std::vector<int> heights() const;
  /// Number of full diamonds between the path and the sawtooth (10)^k.
  int diamonds() const;
  /// Containment: *this lies weakly below other.
  bool below(const DyckPath& other) const;

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
};

/// Composition of n+1 -> Dyck path 1^{n+2-m} 0^{i_1} 1 0^{i_2} ... 1 0^{i_m}.
DyckPath delta(const Composition& comp);

}  // namespace rook0
