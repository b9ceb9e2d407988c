#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rook0/order.hpp"
#include "rook0/rookcore.hpp"

namespace rook0 {

/// Subset of [0, n-1] indexing a simple (and projective) R_n^0-module.
struct DescentSet {
  int n = 0;
  uint32_t mask = 0;

  DescentSet() = default;
  DescentSet(int size, const std::set<int>& members);
  std::set<int> members() const;
  bool contains(int i) const { return (mask >> i) & 1u; }
  bool full() const { return mask + 1 == (1u << n); }

  friend bool operator==(const DescentSet&, const DescentSet&) = default;
  /// Lexicographic on the sorted member lists (canonical axis order).
  friend bool operator<(const DescentSet& a, const DescentSet& b) {
    return a.members() < b.members();
  }
};

template <class Label>
struct FormalSum {
  std::map<Label, long long> terms;

  void add(const Label& l, long long mult = 1) {
    if (mult == 0) return;
    auto [it, inserted] = terms.emplace(l, mult);
    if (!inserted && (it->second += mult) == 0) terms.erase(it);
  }
  long long total() const {
    long long t = 0;
    for (const auto& [l, m] : terms) t += m;
    return t;
  }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;
};

/// The 2^n idempotents of R_n^0 (the parabolic zeros), in the canonical
/// DescentSet order.
std::vector<RookVector> idempotents(int n);
RookVector idempotent_of(const DescentSet& s);

DescentSet d_r(const RookVector& x);
DescentSet d_l(const RookVector& x);

/// Smallest idempotent fixing x on the right (resp. left):
/// rfix(x) = idempotent_of(d_r(x)).
RookVector rfix(const RookVector& x);
RookVector lfix(const RookVector& x);

/// Semilattice product of idempotents: (ef)^omega = idempotent of S union T.
RookVector star(const RookVector& e, const RookVector& f);

struct CartanMatrix {
  std::vector<DescentSet> labels;        // canonical order, rows = lfix, cols = rfix
  std::vector<std::vector<long long>> c;
  long long at(const DescentSet& row, const DescentSet& col) const;
};

/// c_{S,T} = #{x in R_n : d_l(x) = S, d_r(x) = T}.
CartanMatrix cartan_matrix(int n, int max_n = 6);

/// {r : d_r(r) = S}, the basis of the projective module P_S.
std::vector<RookVector> descent_class(const DescentSet& s);

/// Induction product of projective H-modules: P_I * P_J = P_{I.J} + P_{I|>J}.
FormalSum<Composition> star_product_H(const Composition& i, const Composition& j);
FormalSum<Composition> star_product_H(const FormalSum<Composition>& a, const Composition& j);

/// Zero-filling of an extended composition: marks the positions of the zeros
/// of a rook whose descent set matches the shape.
struct ZeroFilling {
  Composition shape;            // extended composition
  std::set<int> zero_positions; // 1-based positions in the ribbon reading

  friend auto operator<=>(const ZeroFilling&, const ZeroFilling&) = default;
};

std::vector<ZeroFilling> zero_fillings(const Composition& ext);

/// [column of the zeros] ++ connected components left after removing them.
std::vector<Composition> split(const ZeroFilling& f);

/// Restriction of the projective R_n^0-module P_I to H_n^0, as a sum of
/// projective H-modules: sum over fillings of the star products of the split.
FormalSum<Composition> decompose_projective(const Composition& ext);

/// Res to H_n^0 of the simple S_J: drop 0 from J.
DescentSet res_simple_to_H(const DescentSet& j);

/// Ind from H_n^0 of the projective P_I (0 not in I): P_I + P_{I + {0}}.
FormalSum<DescentSet> ind_projective_from_H(const DescentSet& i);

/// Restriction of the simple S_J of R_{n+m}^0 to R_n^0 x R_m^0.
std::pair<DescentSet, DescentSet> tower_res_simple(int n, int m, const DescentSet& j);

struct Induction {
  std::vector<RookVector> basis;     // rooks spanning Q(e, f), sorted
  FormalSum<DescentSet> simples;     // Jordan-Hoelder reading via d_r
};

/// Induction of the simples S_I (x) S_J along R_n^0 x R_m^0 -> R_{n+m}^0,
/// by the five-case shuffle formula.
Induction tower_ind_simple(const DescentSet& i, const DescentSet& j);

/// Image of (a, b) under the tower embedding rho_{n,m}.
RookVector rho(const RookVector& a, const RookVector& b);

/// Brute-force basis of (e.f) R_{n+m}^0 minus the right ideal generated by
/// (R_{<e}.f) and (e.R_{<f}); the oracle for tower_ind_simple.
std::vector<RookVector> aladin_quotient(const RookVector& e, const RookVector& f);

/// Induction of projectives along the tower (three-case formula).
FormalSum<DescentSet> tower_ind_projective(const DescentSet& i, const DescentSet& j);

/// Induction of simples along R_n^0 x H_m^0 -> R_{n+m}^0 (0 not in J).
Induction ind_simple_RxH(const DescentSet& i, const DescentSet& j);

/// Same module computed by the ideal-quotient construction (test oracle).
std::vector<RookVector> aladin_quotient_RxH(const RookVector& e, const DescentSet& j);

enum class BranchSide { Left, Right };

struct BranchEdge {
  DescentSet from;  // level n
  DescentSet to;    // level n+1
  long long mult = 0;
};

/// Dual branching graph edges between levels n and n+1: multiplicities of
/// S_to in the induction of S_from along rho_{1,n} (Left) or rho_{n,1}
/// (Right), summed over the two simple modules of R_1^0.
std::vector<BranchEdge> branching_graph(int n, BranchSide side, int max_n = 6);

}  // namespace rook0
