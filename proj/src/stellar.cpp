#include "rook0/stellar.hpp"

#include <algorithm>
#include <set>

#include "rook0/action.hpp"
#include "rook0/order.hpp"

namespace rook0 {

RookVector st_k(const RookVector& r, int k) {
  if (k < 0) fail("OutOfRange", "negative k");
  const int n = r.size();
  std::vector<char> present(static_cast<size_t>(n) + 1, 0);
  for (int v : r.entries())
    if (v != 0) present[static_cast<size_t>(v)] = 1;
  // missing_above[i] = number of letters > i missing from r
  std::vector<int> missing_above(static_cast<size_t>(n) + 2, 0);
  for (int v = n; v >= 0; --v)
    missing_above[static_cast<size_t>(v)] =
        missing_above[static_cast<size_t>(v) + 1] + (v < n && !present[static_cast<size_t>(v) + 1] ? 1 : 0);
  std::vector<int> e = r.entries();
  for (int& v : e)
    if (v != 0 && missing_above[static_cast<size_t>(v)] >= k) v = 0;
  return unchecked_rook(std::move(e));
}

RookVector stellar_mul(int k, const RookVector& r, const RookVector& s) {
  if (st_k(r, k) != r || st_k(s, k) != s) fail("NotStellar", "argument not fixed by st_k");
  return st_k(mul(r, s), k);
}

std::vector<RookVector> stellar_elements(int n, int k) {
  std::vector<RookVector> out;
  for (const RookVector& r : enumerate_rooks(n))
    if (st_k(r, k) == r) out.push_back(r);
  return out;
}

long long stellar_card(int n, int k) { return static_cast<long long>(stellar_elements(n, k).size()); }

bool StellarReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const StellarCheck& c) { return c.holds; });
}

namespace {

std::string rook_text(const RookVector& r) {
  std::string out;
  for (int v : r.entries()) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

}  // namespace

StellarReport verify_stellar(int n, int max_n) {
  if (n > max_n) fail("BoundExceeded", "n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
  StellarReport report;
  report.n = n;
  const std::vector<RookVector> all = enumerate_rooks(n);

  // (a) relation ST as a function identity on Stell_n, i < n-1
  for (int i = 0; i < n - 1; ++i) {
    std::vector<Generator> base;
    for (int j = i; j >= 0; --j) base.push_back(Generator::pi(j));
    GenWord lhs(n, [&] {
      std::vector<Generator> w = base;
      w.push_back(Generator::pi(i));
      return w;
    }());
    GenWord rhs(n, base);
    StellarCheck c{"ST[i=" + std::to_string(i) + "]", true, ""};
    for (const RookVector& s : stellar_elements(n, 1)) {
      if (st_k(act_right_word(s, lhs), 1) != st_k(act_right_word(s, rhs), 1)) {
        c.holds = false;
        c.witness = rook_text(s);
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  // (b) St_i o St_j = St_min(i,j) on all of R_n (larger k keeps more letters)
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      StellarCheck c{"compose[" + std::to_string(i) + "," + std::to_string(j) + "]", true, ""};
      for (const RookVector& r : all)
        if (st_k(st_k(r, j), i) != st_k(r, std::min(i, j))) {
          c.holds = false;
          c.witness = rook_text(r);
          break;
        }
      report.checks.push_back(std::move(c));
    }

  // (c) conjugated (transposed) stellar elements closed under meet and join
  for (int k = 0; k <= n; ++k) {
    StellarCheck c{"sublattice[k=" + std::to_string(k) + "]", true, ""};
    std::set<RookVector> conj;
    for (const RookVector& s : stellar_elements(n, k)) conj.insert(transpose(s));
    for (const RookVector& a : conj) {
      for (const RookVector& b : conj) {
        if (!conj.count(meet(a, b)) || !conj.count(join(a, b))) {
          c.holds = false;
          c.witness = rook_text(a) + " ; " + rook_text(b);
          break;
        }
      }
      if (!c.holds) break;
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace rook0
