#pragma once

#include <string>
#include <vector>

#include "rook0/rookcore.hpp"

namespace rook0 {

/// Stellar projection St_k: zero out every letter i of r such that at least
/// k letters larger than i are missing from r.  St_0 sends everything to
/// 0^n, St_n is the identity, St_1 is the classical stellar map.
RookVector st_k(const RookVector& r, int k);

/// Quotient product st_k(mul(r, s)); r and s must be fixed by st_k.
RookVector stellar_mul(int k, const RookVector& r, const RookVector& s);

/// Fixed points of st_k in R_n (lexicographic order).
std::vector<RookVector> stellar_elements(int n, int k);

/// |st_k(R_n)| by enumeration.
long long stellar_card(int n, int k);

struct StellarCheck {
  std::string name;
  bool holds = false;
  std::string witness;
};

struct StellarReport {
  int n = 0;
  std::vector<StellarCheck> checks;
  bool all_hold() const;
};

/// Checks (a) the quotient relation pi_i...pi_1 pi_0 pi_i = pi_i...pi_1 pi_0
/// on stellar elements, (b) St_i o St_j = St_min(i,j), and (c) closure of the
/// transposed stellar elements under meet and join, for every k.
StellarReport verify_stellar(int n, int max_n = 6);

}  // namespace rook0
