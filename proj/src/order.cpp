#include "rook0/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rook0 {

namespace {

void require_same_size(const RookVector& r, const RookVector& s) {
  if (r.size() != s.size())
    fail("SizeMismatch", "sizes " + std::to_string(r.size()) + " and " + std::to_string(s.size()));
}

// Transitive closure of a set of value pairs (b, a), b > a, values <= n.
std::set<ValuePair> transitive_closure(std::set<ValuePair> ps, int n) {
  std::vector<std::vector<char>> adj(static_cast<size_t>(n) + 1,
                                     std::vector<char>(static_cast<size_t>(n) + 1, 0));
  for (const auto& [b, a] : ps) adj[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
  for (int k = 1; k <= n; ++k)
    for (int b = 1; b <= n; ++b)
      if (adj[static_cast<size_t>(b)][static_cast<size_t>(k)])
        for (int a = 1; a <= n; ++a)
          if (adj[static_cast<size_t>(k)][static_cast<size_t>(a)])
            adj[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
  std::set<ValuePair> out;
  for (int b = 1; b <= n; ++b)
    for (int a = 1; a < b; ++a)
      if (adj[static_cast<size_t>(b)][static_cast<size_t>(a)]) out.insert({b, a});
  return out;
}

}  // namespace

bool leq(const RookVector& r, const RookVector& u) {
  require_same_size(r, u);
  const RookTriple tr = rook_triple(r), tu = rook_triple(u);
  if (!std::includes(tu.support.begin(), tu.support.end(), tr.support.begin(), tr.support.end()))
    return false;
  for (const auto& p : tu.inversions)
    if (tr.support.count(p.first) && !tr.inversions.count(p)) return false;
  for (int l : tr.support)
    if (tu.zcount.at(l) > tr.zcount.at(l)) return false;
  return true;
}

RookVector meet(const RookVector& u, const RookVector& v) {
  require_same_size(u, v);
  const int n = u.size();
  const RookTriple tu = rook_triple(u), tv = rook_triple(v);

  std::set<ValuePair> seed = tu.inversions;
  seed.insert(tv.inversions.begin(), tv.inversions.end());

  // Largest seed-compatible subset of the support intersection.
  std::set<int> s;
  std::set_intersection(tu.support.begin(), tu.support.end(), tv.support.begin(), tv.support.end(),
                        std::inserter(s, s.begin()));
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [b, a] : seed)
      if (s.count(b) && !s.count(a)) {
        s.erase(b);
        changed = true;
      }
  }

  const std::set<ValuePair> closure = transitive_closure(seed, n);
  std::set<ValuePair> inv;
  for (const auto& p : closure)
    if (s.count(p.first) && s.count(p.second)) inv.insert(p);

  auto z_or_zero = [](const RookTriple& t, int x) {
    auto it = t.zcount.find(x);
    return it == t.zcount.end() ? 0 : it->second;
  };
  std::map<int, int> z;
  for (int x : s) {
    int zx = std::max(z_or_zero(tu, x), z_or_zero(tv, x));
    for (const auto& [b, a] : inv)
      if (b == x) zx = std::max({zx, z_or_zero(tu, a), z_or_zero(tv, a)});
    z[x] = zx;
  }
  return rook_from_triple({s, inv, z}, n);
}

RookVector join(const RookVector& u, const RookVector& v) {
  require_same_size(u, v);
  const int n = u.size();
  const RookTriple tu = rook_triple(u), tv = rook_triple(v);

  // Versions of w: pairs (b, a), b in supp(w), that are not inversions of w.
  // They may not become inversions of any element above w.
  std::set<ValuePair> forbidden;
  for (const RookTriple* t : {&tu, &tv})
    for (int b : t->support)
      for (int a = 1; a < b; ++a)
        if (!t->inversions.count({b, a})) forbidden.insert({b, a});
  const std::set<ValuePair> closed = transitive_closure(forbidden, n);

  std::set<int> s = tu.support;
  s.insert(tv.support.begin(), tv.support.end());
  bool changed = true;  // smallest dual compatible superset
  while (changed) {
    changed = false;
    for (const auto& [b, a] : closed)
      if (s.count(a) && !s.count(b)) {
        s.insert(b);
        changed = true;
      }
  }

  std::set<ValuePair> inv;
  for (int b : s)
    for (int a : s)
      if (b > a && !closed.count({b, a})) inv.insert({b, a});

  // Largest Z dominated by both arguments; the zeros left over after the
  // support union cap it at n - |S|.
  const int cap = n - static_cast<int>(s.size());
  auto z_or_cap = [&](const RookTriple& t, int x) {
    auto it = t.zcount.find(x);
    return it == t.zcount.end() ? cap : std::min(cap, it->second);
  };
  std::map<int, int> z;
  for (int x : s) {
    int zx = std::min(z_or_cap(tu, x), z_or_cap(tv, x));
    for (int a = 1; a < x; ++a)
      if (!inv.count({x, a})) zx = std::min({zx, z_or_cap(tu, a), z_or_cap(tv, a)});
    z[x] = zx;
  }
  return rook_from_triple({s, inv, z}, n);
}

std::vector<LabeledEdge> cayley_edges(int n, bool include_loops) {
  std::vector<LabeledEdge> out;
  for (const RookVector& r : enumerate_rooks(n))
    for (int i = 0; i < n; ++i) {
      RookVector t = act_right(r, Generator::pi(i));
      if (t != r || include_loops) out.push_back({r, t, Generator::pi(i)});
    }
  return out;
}

namespace {

struct Graph {
  std::vector<RookVector> nodes;  // sorted
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> gen;  // generator index per edge

  int index(const RookVector& r) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), r);
    return static_cast<int>(it - nodes.begin());
  }
};

Graph loop_free_cayley(int n) {
  Graph g;
  g.nodes = enumerate_rooks(n);
  g.adj.resize(g.nodes.size());
  g.gen.resize(g.nodes.size());
  for (size_t u = 0; u < g.nodes.size(); ++u)
    for (int i = 0; i < n; ++i) {
      RookVector t = act_right(g.nodes[u], Generator::pi(i));
      if (t != g.nodes[u]) {
        g.adj[u].push_back(g.index(t));
        g.gen[u].push_back(i);
      }
    }
  return g;
}

// Descendant bitsets of the loop-free Cayley digraph (acyclic by
// J-triviality), filled in reverse topological order.
std::vector<std::vector<uint64_t>> descendants(const Graph& g) {
  const size_t n = g.nodes.size();
  const size_t words = (n + 63) / 64;
  std::vector<std::vector<uint64_t>> reach(n, std::vector<uint64_t>(words, 0));
  // topological order via DFS
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> state(n, 0);
  for (size_t s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<int, size_t>> stack = {{static_cast<int>(s), 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto& [u, k] = stack.back();
      if (k < g.adj[static_cast<size_t>(u)].size()) {
        int v = g.adj[static_cast<size_t>(u)][k++];
        if (!state[static_cast<size_t>(v)]) {
          state[static_cast<size_t>(v)] = 1;
          stack.push_back({v, 0});
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }
  for (int u : order) {  // children already finished
    auto& ru = reach[static_cast<size_t>(u)];
    for (int v : g.adj[static_cast<size_t>(u)]) {
      ru[static_cast<size_t>(v) / 64] |= 1ull << (static_cast<size_t>(v) % 64);
      const auto& rv = reach[static_cast<size_t>(v)];
      for (size_t w = 0; w < ru.size(); ++w) ru[w] |= rv[w];
    }
  }
  return reach;
}

bool bit(const std::vector<uint64_t>& bs, int i) {
  return (bs[static_cast<size_t>(i) / 64] >> (static_cast<size_t>(i) % 64)) & 1;
}

}  // namespace

std::vector<LabeledEdge> hasse_edges(int n, int max_n) {
  if (n > max_n) fail("BoundExceeded", "n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
  Graph g = loop_free_cayley(n);
  auto reach = descendants(g);
  std::vector<LabeledEdge> out;
  for (size_t u = 0; u < g.nodes.size(); ++u)
    for (size_t k = 0; k < g.adj[u].size(); ++k) {
      const int v = g.adj[u][k];
      bool redundant = false;
      for (int w : g.adj[u])
        if (w != v && bit(reach[static_cast<size_t>(w)], v)) {
          redundant = true;
          break;
        }
      if (!redundant) out.push_back({g.nodes[u], g.nodes[static_cast<size_t>(v)], Generator::pi(g.gen[u][k])});
    }
  return out;
}

namespace {

std::string rook_label(const RookVector& r);

}  // namespace

std::string export_dot(int n, GraphFlavor flavor, int max_n) {
  if (n > max_n) fail("BoundExceeded", "n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
  std::vector<LabeledEdge> edges =
      flavor == GraphFlavor::RightCayley ? cayley_edges(n, true) : hasse_edges(n, max_n);
  std::string dot = "digraph rooks {\n";
  for (const RookVector& r : enumerate_rooks(n)) dot += "  \"" + rook_label(r) + "\";\n";
  for (const LabeledEdge& e : edges)
    dot += "  \"" + rook_label(e.from) + "\" -> \"" + rook_label(e.to) + "\" [label=\"p" +
           std::to_string(e.gen.index) + "\"];\n";
  dot += "}\n";
  return dot;
}

namespace {

std::string rook_label(const RookVector& r) {
  std::string out;
  if (r.size() <= 9) {
    for (int v : r.entries()) out += static_cast<char>('0' + v);
  } else {
    for (int v : r.entries()) out += (out.empty() ? "" : ",") + std::to_string(v);
  }
  return out;
}

}  // namespace

std::vector<RookVector> upper_covers(const RookVector& r) {
  const int n = r.size();
  std::vector<RookVector> parents;
  for (int i = 1; i < n; ++i)
    if (r.entry(i) > r.entry(i + 1)) {
      std::vector<int> e = r.entries();
      std::swap(e[static_cast<size_t>(i - 1)], e[static_cast<size_t>(i)]);
      parents.push_back(unchecked_rook(std::move(e)));
    }
  if (n >= 1 && r.entry(1) == 0) {
    std::vector<char> present(static_cast<size_t>(n) + 1, 0);
    for (int v : r.entries())
      if (v != 0) present[static_cast<size_t>(v)] = 1;
    for (int v = 1; v <= n; ++v)
      if (!present[static_cast<size_t>(v)]) {
        std::vector<int> e = r.entries();
        e[0] = v;
        parents.push_back(unchecked_rook(std::move(e)));
      }
  }
  // covers = minimal parents
  std::vector<RookVector> out;
  for (const RookVector& p : parents) {
    bool minimal = true;
    for (const RookVector& q : parents)
      if (q != p && leq(q, p)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RookVector> lower_covers(const RookVector& r) {
  std::vector<RookVector> children;
  for (int i = 0; i < r.size(); ++i) {
    RookVector t = act_right(r, Generator::pi(i));
    if (t != r) children.push_back(t);
  }
  std::vector<RookVector> out;
  for (const RookVector& c : children) {
    bool maximal = true;
    for (const RookVector& d : children)
      if (d != c && leq(c, d)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RookVector> meet_irreducibles(int n) {
  std::vector<RookVector> out;
  for (const RookVector& r : enumerate_rooks(n))
    if (upper_covers(r).size() == 1) out.push_back(r);
  return out;
}

std::vector<RookVector> join_irreducibles(int n) {
  std::vector<RookVector> out;
  for (const RookVector& r : enumerate_rooks(n))
    if (lower_covers(r).size() == 1) out.push_back(r);
  return out;
}

std::set<int> weak_descents(const RookVector& r) {
  std::set<int> out;
  for (int i = 0; i < r.size(); ++i)
    if (act_right(r, Generator::pi(i)) == r) out.insert(i);
  return out;
}

StrictDescents strict_descents(const RookVector& r) {
  StrictDescents out;
  for (int i = 1; i < r.size(); ++i)
    if (r.entry(i) > r.entry(i + 1)) out.members.insert(i);
  if (r.size() >= 1 && r.entry(1) == 0) {
    int zeros = 0;
    for (int v : r.entries())
      if (v == 0) ++zeros;
    out.members.insert(0);
    out.zero_multiplicity = zeros;
  }
  return out;
}

std::set<std::vector<int>> shuffle(const std::vector<int>& u, const std::vector<int>& v) {
  if (u.empty()) return {v};
  if (v.empty()) return {u};
  std::set<std::vector<int>> out;
  std::vector<int> uu(u.begin() + 1, u.end());
  for (std::vector<int> w : shuffle(uu, v)) {
    w.insert(w.begin(), u.front());
    out.insert(std::move(w));
  }
  std::vector<int> vv(v.begin() + 1, v.end());
  for (std::vector<int> w : shuffle(u, vv)) {
    w.insert(w.begin(), v.front());
    out.insert(std::move(w));
  }
  return out;
}

std::vector<RookVector> mcr_set(int n, int max_n) {
  if (n > max_n) fail("BoundExceeded", "n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
  std::set<RookVector> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> zeros(static_cast<size_t>(k), 0);
    std::vector<int> rest;
    for (int v = k + 1; v <= n; ++v) rest.push_back(v);
    for (const std::vector<int>& w : shuffle(zeros, rest)) out.insert(unchecked_rook(w));
  }
  return {out.begin(), out.end()};
}

ChainCounts chain_counts(int n, int max_n) {
  std::vector<LabeledEdge> hasse = hasse_edges(n, max_n);
  Graph g;
  g.nodes = enumerate_rooks(n);
  g.adj.resize(g.nodes.size());
  for (const LabeledEdge& e : hasse) g.adj[static_cast<size_t>(g.index(e.from))].push_back(g.index(e.to));

  const int bottom = g.index(RookVector::zero(n));
  std::vector<long long> paths(g.nodes.size(), -1);
  std::vector<std::pair<int, long long>> best(g.nodes.size(), {-1, 0});  // (min length, count)
  // process in reverse topological order (children before parents)
  std::vector<int> order;
  {
    std::vector<char> state(g.nodes.size(), 0);
    std::vector<std::pair<int, size_t>> stack;
    for (size_t s = 0; s < g.nodes.size(); ++s) {
      if (state[s]) continue;
      stack.push_back({static_cast<int>(s), 0});
      state[s] = 1;
      while (!stack.empty()) {
        auto& [u, k] = stack.back();
        if (k < g.adj[static_cast<size_t>(u)].size()) {
          int v = g.adj[static_cast<size_t>(u)][k++];
          if (!state[static_cast<size_t>(v)]) {
            state[static_cast<size_t>(v)] = 1;
            stack.push_back({v, 0});
          }
        } else {
          order.push_back(u);
          stack.pop_back();
        }
      }
    }
  }
  for (int u : order) {
    if (u == bottom) {
      paths[static_cast<size_t>(u)] = 1;
      best[static_cast<size_t>(u)] = {0, 1};
      continue;
    }
    long long total = 0;
    int minlen = -1;
    long long mincount = 0;
    for (int v : g.adj[static_cast<size_t>(u)]) {
      if (paths[static_cast<size_t>(v)] < 0) continue;  // cannot reach bottom (impossible here)
      total += paths[static_cast<size_t>(v)];
      const auto& [len, count] = best[static_cast<size_t>(v)];
      if (minlen < 0 || len + 1 < minlen) {
        minlen = len + 1;
        mincount = count;
      } else if (len + 1 == minlen) {
        mincount += count;
      }
    }
    paths[static_cast<size_t>(u)] = total;
    best[static_cast<size_t>(u)] = {minlen, mincount};
  }
  const int top = g.index(RookVector::identity(n));
  ChainCounts out;
  out.maximal = paths[static_cast<size_t>(top)];
  out.min_length = best[static_cast<size_t>(top)].first;
  out.min_length_count = best[static_cast<size_t>(top)].second;
  return out;
}

std::set<int> eta(const RookVector& r) {
  // r must be a shuffle of 0^k with (k+1)..n
  int expect = 0, zeros = 0;
  for (int v : r.entries())
    if (v == 0) ++zeros;
  expect = zeros;
  for (int v : r.entries())
    if (v != 0 && v != ++expect) fail("NotInMCR", "rook is not on a minimal maximal chain");
  std::set<int> out;
  for (int i = 1; i <= r.size(); ++i)
    if (r.entry(i) != 0) out.insert(i);
  return out;
}

Composition cset(const std::set<int>& s, int total) {
  Composition comp;
  int prev = 0;
  for (int x : s) {
    if (x <= prev || x >= total) fail("OutOfRange", "descent " + std::to_string(x));
    comp.push_back(x - prev);
    prev = x;
  }
  comp.push_back(total - prev);
  return comp;
}

Composition subset_to_extended(const std::set<int>& s, int n) {
  std::set<int> rest;
  for (int x : s) {
    if (x < 0 || x >= n) fail("OutOfRange", "descent " + std::to_string(x));
    if (x > 0) rest.insert(x);
  }
  Composition comp = cset(rest, n);
  if (s.count(0)) comp.insert(comp.begin(), 0);
  return comp;
}

std::set<int> des(const Composition& comp) {
  std::set<int> out;
  int sum = 0;
  for (size_t i = 0; i + 1 < comp.size(); ++i) {
    sum += comp[i];
    out.insert(comp[i] == 0 && i == 0 ? 0 : sum);
  }
  if (!comp.empty() && comp.front() == 0) out.insert(0);
  return out;
}

bool DyckPath::valid() const {
  if (static_cast<int>(steps.size()) != 2 * semilength) return false;
  int h = 0;
  for (int s : steps) {
    h += s == 1 ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

bool DyckPath::avoids_011() const {
  for (size_t i = 0; i + 2 < steps.size(); ++i)
    if (steps[i] == 0 && steps[i + 1] == 1 && steps[i + 2] == 1) return false;
  return true;
}

std::vector<int> DyckPath::heights() const {
  std::vector<int> h;
  int cur = 0;
  for (int s : steps) h.push_back(cur += (s == 1 ? 1 : -1));
  return h;
}

int DyckPath::diamonds() const {
  int sum = 0;
  for (int h : heights()) sum += h;
  return (sum - semilength) / 2;
}

bool DyckPath::below(const DyckPath& other) const {
  if (semilength != other.semilength) return false;
  const std::vector<int> a = heights(), b = other.heights();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

DyckPath delta(const Composition& comp) {
  const int total = std::accumulate(comp.begin(), comp.end(), 0);
  const int m = static_cast<int>(comp.size());
  const int n = total - 1;
  DyckPath d;
  d.semilength = total;
  for (int i = 0; i < n + 2 - m; ++i) d.steps.push_back(1);
  for (int j = 0; j < m; ++j) {
    if (j > 0) d.steps.push_back(1);
    for (int i = 0; i < comp[static_cast<size_t>(j)]; ++i) d.steps.push_back(0);
  }
  return d;
}

}  // namespace rook0
