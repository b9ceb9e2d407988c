#include "rook0/rookcore.hpp"

#include <algorithm>
#include <functional>

namespace rook0 {

RookVector unchecked_rook(std::vector<int> e) { return RookVector(std::move(e)); }

RookVector RookVector::validate(std::vector<int> entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : entries) {
    if (v < 0 || v > n) fail("OutOfRange", "entry " + std::to_string(v) + " not in [0, " + std::to_string(n) + "]");
    if (v != 0) {
      if (seen[static_cast<size_t>(v)]) fail("DuplicateNonzero", "value " + std::to_string(v) + " repeated");
      seen[static_cast<size_t>(v)] = 1;
    }
  }
  return RookVector(std::move(entries));
}

RookVector RookVector::identity(int n) {
  std::vector<int> e(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = i + 1;
  return RookVector(std::move(e));
}

RookVector RookVector::zero(int n) { return RookVector(std::vector<int>(static_cast<size_t>(n), 0)); }

bool RookVector::is_permutation() const {
  for (int v : e_)
    if (v == 0) return false;
  return true;
}

int RookVector::position_of(int v) const {
  for (int i = 0; i < size(); ++i)
    if (e_[static_cast<size_t>(i)] == v) return i + 1;
  return 0;
}

static void require_same_size(const RookVector& r, const RookVector& s) {
  if (r.size() != s.size())
    fail("SizeMismatch", "sizes " + std::to_string(r.size()) + " and " + std::to_string(s.size()));
}

RookVector matrix_product(const RookVector& r, const RookVector& s) {
  require_same_size(r, s);
  std::vector<int> out(static_cast<size_t>(r.size()));
  for (int i = 1; i <= r.size(); ++i) {
    const int si = s.entry(i);
    out[static_cast<size_t>(i - 1)] = si == 0 ? 0 : r.entry(si);
  }
  return unchecked_rook(std::move(out));
}

RookVector transpose(const RookVector& r) {
  std::vector<int> out(static_cast<size_t>(r.size()), 0);
  for (int i = 1; i <= r.size(); ++i) {
    const int v = r.entry(i);
    if (v != 0) out[static_cast<size_t>(v - 1)] = i;
  }
  return unchecked_rook(std::move(out));
}

int first_zero(const RookVector& r) {
  for (int i = 1; i <= r.size(); ++i)
    if (r.entry(i) == 0) return i - 1;
  return r.size();
}

RookTriple rook_triple(const RookVector& r) {
  RookTriple t;
  const int n = r.size();
  for (int i = 1; i <= n; ++i) {
    const int v = r.entry(i);
    if (v == 0) continue;
    t.support.insert(v);
    int zeros = 0;
    for (int j = i + 1; j <= n; ++j)
      if (r.entry(j) == 0) ++zeros;
    t.zcount[v] = zeros;
    for (int j = i + 1; j <= n; ++j) {
      const int w = r.entry(j);
      if (w != 0 && v > w) t.inversions.insert({v, w});
    }
  }
  return t;
}

namespace {

bool transitive(const std::set<ValuePair>& ps) {
  for (const auto& [c, b] : ps)
    for (const auto& [b2, a] : ps)
      if (b == b2 && !ps.count({c, a})) return false;
  return true;
}

}  // namespace

RookVector rook_from_triple(const RookTriple& t, int n) {
  const int k = static_cast<int>(t.support.size());
  for (int v : t.support)
    if (v < 1 || v > n) fail("InvalidTriple", "support value " + std::to_string(v) + " out of range");
  std::set<ValuePair> comp;
  for (const auto& [b, a] : t.inversions) {
    if (!(b > a && a > 0)) fail("InvalidTriple", "inversion pair not (b, a) with b > a > 0");
    if (!t.support.count(b) || !t.support.count(a)) fail("InvalidTriple", "inversion outside support");
  }
  for (int b : t.support)
    for (int a : t.support)
      if (b > a && !t.inversions.count({b, a})) comp.insert({b, a});
  if (!transitive(t.inversions) || !transitive(comp)) fail("InvalidTriple", "inversions not compatible with a total order");
  for (int v : t.support) {
    auto it = t.zcount.find(v);
    if (it == t.zcount.end()) fail("InvalidTriple", "missing zcount for " + std::to_string(v));
    if (it->second < 0 || it->second > n - k) fail("InvalidTriple", "zcount out of range");
  }
  for (const auto& [b, a] : t.inversions)
    if (t.zcount.at(b) < t.zcount.at(a)) fail("InvalidTriple", "zcount increases along an inversion");
  for (const auto& [b, a] : comp)
    if (t.zcount.at(b) > t.zcount.at(a)) fail("InvalidTriple", "zcount decreases along a non-inversion");

  // Unique permutation of the support with the given inversion set.
  std::vector<int> sigma(t.support.begin(), t.support.end());
  std::sort(sigma.begin(), sigma.end(), [&](int x, int y) {
    if (x == y) return false;
    return x < y ? !t.inversions.count({y, x}) : t.inversions.count({x, y}) != 0;
  });
  // Interleave zeros: letters with zcount z, then one zero, for z = n-k .. 1.
  std::vector<int> word;
  word.reserve(static_cast<size_t>(n));
  size_t pos = 0;
  for (int z = n - k; z >= 1; --z) {
    while (pos < sigma.size() && t.zcount.at(sigma[pos]) == z) word.push_back(sigma[pos++]);
    word.push_back(0);
  }
  while (pos < sigma.size()) {
    if (t.zcount.at(sigma[pos]) != 0) fail("InvalidTriple", "zcount inconsistent with ordering");
    word.push_back(sigma[pos++]);
  }
  return unchecked_rook(std::move(word));
}

namespace {

void enum_rec(int n, std::vector<int>& acc, std::vector<char>& used, std::vector<RookVector>& out) {
  if (static_cast<int>(acc.size()) == n) {
    out.push_back(unchecked_rook(acc));
    return;
  }
  for (int v = 0; v <= n; ++v) {
    if (v != 0 && used[static_cast<size_t>(v)]) continue;
    acc.push_back(v);
    if (v != 0) used[static_cast<size_t>(v)] = 1;
    enum_rec(n, acc, used, out);
    if (v != 0) used[static_cast<size_t>(v)] = 0;
    acc.pop_back();
  }
}

}  // namespace

std::vector<RookVector> enumerate_rooks(int n) {
  if (n < 0) fail("OutOfRange", "negative size");
  std::vector<RookVector> out;
  std::vector<int> acc;
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  enum_rec(n, acc, used, out);
  return out;
}

std::vector<long long> count_by_first_zero(int n) {
  if (n < 0) fail("OutOfRange", "negative size");
  std::vector<long long> row = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<long long> next(static_cast<size_t>(m) + 1, 0);
    auto prev = [&](int k) -> long long {
      return (k < 0 || k >= static_cast<int>(row.size())) ? 0 : row[static_cast<size_t>(k)];
    };
    for (int k = 0; k <= m; ++k) {
      long long tail = 0;
      for (int i = k; i <= m; ++i) tail += prev(i);
      next[static_cast<size_t>(k)] = k * prev(k - 1) + (m - k - 1) * prev(k) + tail;
    }
    row = std::move(next);
  }
  return row;
}

CycleChainDecomp cycle_chain_decomposition(const RookVector& r) {
  const int n = r.size();
  std::vector<char> has_preimage(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i)
    if (r.entry(i) != 0) has_preimage[static_cast<size_t>(r.entry(i))] = 1;

  CycleChainDecomp d;
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<size_t>(start)] || has_preimage[static_cast<size_t>(start)]) continue;
    std::vector<int> chain;
    for (int x = start; x != 0; x = r.entry(x)) {
      chain.push_back(x);
      seen[static_cast<size_t>(x)] = 1;
    }
    d.chains.push_back(std::move(chain));
  }
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[static_cast<size_t>(x)]; x = r.entry(x)) {
      cyc.push_back(x);
      seen[static_cast<size_t>(x)] = 1;
    }
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    d.cycles.push_back(std::move(cyc));
  }
  std::sort(d.cycles.begin(), d.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() > b.front(); });
  std::sort(d.chains.begin(), d.chains.end(),
            [](const auto& a, const auto& b) { return a.back() < b.back(); });
  return d;
}

RookVector foata_map(const RookVector& r) {
  const CycleChainDecomp d = cycle_chain_decomposition(r);
  std::vector<int> word;
  word.reserve(static_cast<size_t>(r.size()));
  for (const auto& cyc : d.cycles) word.insert(word.end(), cyc.begin(), cyc.end());
  for (const auto& chain : d.chains) {
    word.push_back(0);  // stands for the last chain element
    for (size_t i = chain.size() - 1; i-- > 0;) word.push_back(chain[i]);
  }
  return unchecked_rook(std::move(word));
}

RookVector foata_inverse(const RookVector& s) {
  const int n = s.size();
  std::vector<char> present(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i)
    if (s.entry(i) != 0) present[static_cast<size_t>(s.entry(i))] = 1;
  std::vector<int> missing;
  for (int v = 1; v <= n; ++v)
    if (!present[static_cast<size_t>(v)]) missing.push_back(v);

  // Cut just before the zeros; the k-th zero stands for the k-th missing value.
  std::vector<int> out(static_cast<size_t>(n), 0);
  size_t zero_idx = 0;
  int i = 1;
  std::vector<int> cycle_word;
  while (i <= n && s.entry(i) != 0) cycle_word.push_back(s.entry(i++));
  while (i <= n) {
    std::vector<int> seg = {missing[zero_idx++]};
    ++i;
    while (i <= n && s.entry(i) != 0) seg.push_back(s.entry(i++));
    // seg = chain written backward: (c_k, c_{k-1}, ..., c_1)
    for (size_t j = seg.size(); j-- > 1;) out[static_cast<size_t>(seg[j] - 1)] = seg[j - 1];
    out[static_cast<size_t>(seg[0] - 1)] = 0;
  }
  // Cut the cycle word before each lower record.
  size_t start = 0;
  for (size_t j = 1; j <= cycle_word.size(); ++j) {
    if (j == cycle_word.size() || cycle_word[j] < cycle_word[start]) {
      for (size_t k = start; k < j; ++k)
        out[static_cast<size_t>(cycle_word[k] - 1)] = cycle_word[k + 1 == j ? start : k + 1];
      start = j;
    }
  }
  return unchecked_rook(std::move(out));
}

}  // namespace rook0
