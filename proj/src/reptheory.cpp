#include "rook0/reptheory.hpp"

#include <algorithm>
#include <deque>

#include "rook0/action.hpp"

namespace rook0 {

DescentSet::DescentSet(int size, const std::set<int>& ms) : n(size) {
  if (size < 0 || size > 31) fail("OutOfRange", "descent set size");
  for (int i : ms) {
    if (i < 0 || i >= size) fail("OutOfRange", "descent " + std::to_string(i));
    mask |= 1u << i;
  }
}

std::set<int> DescentSet::members() const {
  std::set<int> out;
  for (int i = 0; i < n; ++i)
    if (contains(i)) out.insert(i);
  return out;
}

std::vector<RookVector> idempotents(int n) {
  std::vector<DescentSet> labels;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    DescentSet s;
    s.n = n;
    s.mask = m;
    labels.push_back(s);
  }
  std::sort(labels.begin(), labels.end());
  std::vector<RookVector> out;
  out.reserve(labels.size());
  for (const DescentSet& s : labels) out.push_back(idempotent_of(s));
  return out;
}

RookVector idempotent_of(const DescentSet& s) { return parabolic_zero(s.n, s.members()); }

DescentSet d_r(const RookVector& x) {
  DescentSet s;
  s.n = x.size();
  for (int i = 0; i < x.size(); ++i)
    if (act_right(x, Generator::pi(i)) == x) s.mask |= 1u << i;
  return s;
}

DescentSet d_l(const RookVector& x) {
  DescentSet s;
  s.n = x.size();
  for (int i = 0; i < x.size(); ++i)
    if (act_left(Generator::pi(i), x) == x) s.mask |= 1u << i;
  return s;
}

RookVector rfix(const RookVector& x) { return idempotent_of(d_r(x)); }
RookVector lfix(const RookVector& x) { return idempotent_of(d_l(x)); }

RookVector star(const RookVector& e, const RookVector& f) {
  if (mul(e, e) != e || mul(f, f) != f) fail("NotIdempotent", "star arguments must be idempotent");
  return omega_power(mul(e, f));
}

long long CartanMatrix::at(const DescentSet& row, const DescentSet& col) const {
  const auto r = std::lower_bound(labels.begin(), labels.end(), row) - labels.begin();
  const auto k = std::lower_bound(labels.begin(), labels.end(), col) - labels.begin();
  return c[static_cast<size_t>(r)][static_cast<size_t>(k)];
}

CartanMatrix cartan_matrix(int n, int max_n) {
  if (n > max_n) fail("BoundExceeded", "n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
  CartanMatrix cm;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    DescentSet s;
    s.n = n;
    s.mask = m;
    cm.labels.push_back(s);
  }
  std::sort(cm.labels.begin(), cm.labels.end());
  std::vector<size_t> by_mask(1u << n);
  for (size_t i = 0; i < cm.labels.size(); ++i) by_mask[cm.labels[i].mask] = i;
  cm.c.assign(cm.labels.size(), std::vector<long long>(cm.labels.size(), 0));
  for (const RookVector& x : enumerate_rooks(n))
    ++cm.c[by_mask[d_l(x).mask]][by_mask[d_r(x).mask]];
  return cm;
}

std::vector<RookVector> descent_class(const DescentSet& s) {
  std::vector<RookVector> out;
  for (const RookVector& r : enumerate_rooks(s.n))
    if (d_r(r) == s) out.push_back(r);
  return out;
}

FormalSum<Composition> star_product_H(const Composition& i, const Composition& j) {
  FormalSum<Composition> out;
  if (i.empty()) {
    out.add(j);
    return out;
  }
  if (j.empty()) {
    out.add(i);
    return out;
  }
  Composition concat = i;
  concat.insert(concat.end(), j.begin(), j.end());
  out.add(concat);
  Composition near = i;
  near.back() += j.front();
  near.insert(near.end(), j.begin() + 1, j.end());
  out.add(near);
  return out;
}

FormalSum<Composition> star_product_H(const FormalSum<Composition>& a, const Composition& j) {
  FormalSum<Composition> out;
  for (const auto& [label, mult] : a.terms)
    for (const auto& [l2, m2] : star_product_H(label, j).terms) out.add(l2, mult * m2);
  return out;
}

namespace {

// Vertical runs of the ribbon of an extended composition: maximal position
// intervals [c, d] with c, ..., d-1 all descents.
std::vector<std::pair<int, int>> vertical_runs(const std::set<int>& descents, int n) {
  std::vector<std::pair<int, int>> runs;
  int c = 1;
  for (int i = 1; i <= n; ++i) {
    if (i == n || !descents.count(i)) {
      runs.push_back({c, i});
      c = i + 1;
    }
  }
  return runs;
}

}  // namespace

std::vector<ZeroFilling> zero_fillings(const Composition& ext) {
  int n = 0;
  for (int p : ext) n += p;
  const std::set<int> descents = des(ext);
  const bool zero_in = !ext.empty() && ext.front() == 0;

  std::vector<std::vector<std::set<int>>> options;  // per run
  for (const auto& [c, d] : vertical_runs(descents, n)) {
    std::vector<std::set<int>> opts;
    if (c == 1 && zero_in) {
      std::set<int> all;
      for (int p = c; p <= d; ++p) all.insert(p);
      opts.push_back(std::move(all));  // forced
    } else {
      opts.push_back({});
      for (int t = c + 1; t <= d; ++t) {
        std::set<int> suffix;
        for (int p = t; p <= d; ++p) suffix.insert(p);
        opts.push_back(std::move(suffix));
      }
    }
    options.push_back(std::move(opts));
  }

  std::vector<ZeroFilling> out;
  std::vector<size_t> pick(options.size(), 0);
  while (true) {
    ZeroFilling f;
    f.shape = ext;
    for (size_t r = 0; r < options.size(); ++r)
      f.zero_positions.insert(options[r][pick[r]].begin(), options[r][pick[r]].end());
    out.push_back(std::move(f));
    size_t r = 0;
    while (r < options.size() && ++pick[r] == options[r].size()) pick[r++] = 0;
    if (r == options.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> split(const ZeroFilling& f) {
  int n = 0;
  for (int p : f.shape) n += p;
  const std::set<int> descents = des(f.shape);
  std::vector<Composition> out;
  if (!f.zero_positions.empty())
    out.push_back(Composition(f.zero_positions.size(), 1));  // the zero column
  int start = 0;  // current component start (0 = none)
  Composition comp;
  int part = 0;
  for (int p = 1; p <= n + 1; ++p) {
    const bool zero = p > n || f.zero_positions.count(p);
    if (zero) {
      if (start != 0) {
        comp.push_back(part);
        out.push_back(comp);
        comp.clear();
        start = 0;
      }
      continue;
    }
    if (start == 0) {
      start = p;
      part = 1;
    } else if (descents.count(p - 1)) {
      comp.push_back(part);
      part = 1;
    } else {
      ++part;
    }
  }
  return out;
}

FormalSum<Composition> decompose_projective(const Composition& ext) {
  FormalSum<Composition> out;
  for (const ZeroFilling& f : zero_fillings(ext)) {
    std::vector<Composition> parts = split(f);
    FormalSum<Composition> prod;
    prod.add(parts.empty() ? Composition{} : parts.front());
    for (size_t i = 1; i < parts.size(); ++i) prod = star_product_H(prod, parts[i]);
    for (const auto& [label, mult] : prod.terms) out.add(label, mult);
  }
  return out;
}

DescentSet res_simple_to_H(const DescentSet& j) {
  DescentSet out = j;
  out.mask &= ~1u;
  return out;
}

FormalSum<DescentSet> ind_projective_from_H(const DescentSet& i) {
  if (i.contains(0)) fail("OutOfRange", "H-module label may not contain 0");
  FormalSum<DescentSet> out;
  out.add(i);
  DescentSet with0 = i;
  with0.mask |= 1u;
  out.add(with0);
  return out;
}

std::pair<DescentSet, DescentSet> tower_res_simple(int n, int m, const DescentSet& j) {
  if (j.n != n + m) fail("SizeMismatch", "descent set size must be n + m");
  const uint32_t low = j.mask & ((1u << n) - 1);
  DescentSet first{n, {}}, second{m, {}};
  bool low_full = true;
  for (int i = 0; i <= n; ++i)
    if (!j.contains(i)) {
      low_full = false;
      break;
    }
  if (!low_full) {
    first.mask = low;
    for (int i = n + 1; i < n + m; ++i)
      if (j.contains(i)) second.mask |= 1u << (i - n);
  } else {
    first.mask = (1u << n) - 1;
    second.mask = 1u;
    for (int i = n + 1; i < n + m; ++i)
      if (j.contains(i)) second.mask |= 1u << (i - n);
  }
  return {first, second};
}

namespace {

std::vector<int> shifted(const std::vector<int>& w, int n) {
  std::vector<int> out = w;
  for (int& v : out)
    if (v != 0) v += n;
  return out;
}

std::set<std::vector<int>> shuffle_many(const std::vector<std::vector<int>>& words) {
  std::set<std::vector<int>> acc = {{}};
  for (const auto& w : words) {
    std::set<std::vector<int>> next;
    for (const auto& a : acc)
      for (auto& s : shuffle(a, w)) next.insert(s);
    acc = std::move(next);
  }
  return acc;
}

Induction induction_from_basis(std::set<RookVector> basis) {
  Induction out;
  out.basis.assign(basis.begin(), basis.end());
  for (const RookVector& b : out.basis) out.simples.add(d_r(b));
  return out;
}

}  // namespace

RookVector rho(const RookVector& a, const RookVector& b) {
  const int n = a.size();
  std::vector<int> word;
  const bool b_has_zero = !b.is_permutation();
  if (b_has_zero)
    word.assign(static_cast<size_t>(n), 0);
  else
    word = a.entries();
  for (int v : b.entries()) word.push_back(v == 0 ? 0 : v + n);
  return unchecked_rook(std::move(word));
}

Induction tower_ind_simple(const DescentSet& i, const DescentSet& j) {
  const int n = i.n, m = j.n;
  const RookVector e = idempotent_of(i), f = idempotent_of(j);
  const std::vector<int>& fw = f.entries();

  if (j.contains(0) && !i.full()) return {};
  if (j.contains(0)) return induction_from_basis({rho(e, f)});

  const std::vector<int> fshift = shifted(fw, n);
  std::set<RookVector> basis;
  if (i.full()) {
    for (auto& w : shuffle(std::vector<int>(static_cast<size_t>(n), 0), fshift))
      basis.insert(unchecked_rook(w));
    return induction_from_basis(std::move(basis));
  }
  const int ell = m == 0 ? 0 : fw.front();
  for (int k = 0; k <= ell; ++k) {
    const std::vector<int> tail(fshift.begin() + k, fshift.end());
    if (i.contains(0)) {
      std::vector<int> head(static_cast<size_t>(k), 0);
      head.insert(head.end(), e.entries().begin(), e.entries().end());
      for (auto& w : shuffle(head, tail)) basis.insert(unchecked_rook(w));
    } else {
      for (auto& w : shuffle_many({std::vector<int>(static_cast<size_t>(k), 0), e.entries(), tail}))
        basis.insert(unchecked_rook(w));
    }
  }
  return induction_from_basis(std::move(basis));
}

namespace {

std::set<RookVector> right_ideal(const std::vector<RookVector>& seeds, int n) {
  std::set<RookVector> seen(seeds.begin(), seeds.end());
  std::deque<RookVector> frontier(seeds.begin(), seeds.end());
  while (!frontier.empty()) {
    RookVector x = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 0; i < n; ++i) {
      RookVector y = act_right(x, Generator::pi(i));
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return seen;
}

std::vector<RookVector> ideal_quotient(const RookVector& ef, const std::vector<RookVector>& low_seeds) {
  const int nm = ef.size();
  const std::set<RookVector> ideal = right_ideal({ef}, nm);
  const std::set<RookVector> killed = right_ideal(low_seeds, nm);
  std::vector<RookVector> out;
  for (const RookVector& x : ideal)
    if (!killed.count(x)) out.push_back(x);
  return out;
}

}  // namespace

std::vector<RookVector> aladin_quotient(const RookVector& e, const RookVector& f) {
  if (mul(e, e) != e || mul(f, f) != f) fail("NotIdempotent", "aladin arguments must be idempotent");
  std::vector<RookVector> low;
  for (const RookVector& a : enumerate_rooks(e.size()))
    if (a != e && leq(a, e)) low.push_back(rho(a, f));
  for (const RookVector& b : enumerate_rooks(f.size()))
    if (b != f && leq(b, f)) low.push_back(rho(e, b));
  return ideal_quotient(rho(e, f), low);
}

FormalSum<DescentSet> tower_ind_projective(const DescentSet& i, const DescentSet& j) {
  const int n = i.n, m = j.n;
  FormalSum<DescentSet> out;
  auto build = [&](bool with_n, bool drop0) {
    DescentSet k{n + m, {}};
    k.mask = i.mask;
    if (with_n) k.mask |= 1u << n;
    uint32_t jm = j.mask;
    if (drop0) jm &= ~1u;
    k.mask |= jm << n;
    return k;
  };
  if (!j.contains(0)) {
    out.add(build(false, false));
    out.add(build(true, false));
  } else if (i.full()) {
    DescentSet k = build(true, true);
    k.mask |= (1u << (n + 1)) - 1;
    out.add(k);
  }
  return out;
}

Induction ind_simple_RxH(const DescentSet& i, const DescentSet& j) {
  if (j.contains(0)) fail("OutOfRange", "H-module label may not contain 0");
  const int n = i.n;
  const RookVector e = idempotent_of(i), f = idempotent_of(j);
  const std::vector<int> fshift = shifted(f.entries(), n);
  const int ell = j.n == 0 ? 0 : f.entries().front();
  std::set<RookVector> basis;
  for (int k = 0; k <= ell; ++k) {
    const std::vector<int> tail(fshift.begin() + k, fshift.end());
    if (i.contains(0)) {
      std::vector<int> head(static_cast<size_t>(k), 0);
      head.insert(head.end(), e.entries().begin(), e.entries().end());
      for (auto& w : shuffle(head, tail)) basis.insert(unchecked_rook(w));
    } else {
      for (auto& w : shuffle_many({std::vector<int>(static_cast<size_t>(k), 0), e.entries(), tail}))
        basis.insert(unchecked_rook(w));
    }
  }
  return induction_from_basis(std::move(basis));
}

std::vector<RookVector> aladin_quotient_RxH(const RookVector& e, const DescentSet& j) {
  const RookVector f = idempotent_of(j);
  std::vector<RookVector> low;
  for (const RookVector& a : enumerate_rooks(e.size()))
    if (a != e && leq(a, e)) low.push_back(rho(a, f));
  for (const RookVector& b : enumerate_rooks(f.size()))
    if (b.is_permutation() && b != f && leq(b, f)) low.push_back(rho(e, b));
  return ideal_quotient(rho(e, f), low);
}

std::vector<BranchEdge> branching_graph(int n, BranchSide side, int max_n) {
  if (n > max_n) fail("BoundExceeded", "n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
  std::vector<DescentSet> level;
  for (uint32_t msk = 0; msk < (1u << n); ++msk) {
    DescentSet s;
    s.n = n;
    s.mask = msk;
    level.push_back(s);
  }
  std::sort(level.begin(), level.end());
  std::vector<BranchEdge> out;
  for (const DescentSet& i : level) {
    FormalSum<DescentSet> sum;
    for (uint32_t xm = 0; xm <= 1; ++xm) {
      DescentSet x;
      x.n = 1;
      x.mask = xm;
      const Induction ind =
          side == BranchSide::Left ? tower_ind_simple(x, i) : tower_ind_simple(i, x);
      for (const auto& [l, m] : ind.simples.terms) sum.add(l, m);
    }
    for (const auto& [l, m] : sum.terms) out.push_back({i, l, m});
  }
  return out;
}

}  // namespace rook0
