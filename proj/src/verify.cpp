#include "rook0/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "rook0/action.hpp"
#include "rook0/order.hpp"
#include "rook0/rcode.hpp"
#include "rook0/reptheory.hpp"
#include "rook0/rookcore.hpp"
#include "rook0/stellar.hpp"
#include "rook0/text_io.hpp"

namespace rook0 {

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerifyReport::merge(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

void check(VerifyReport& rep, const std::string& name, bool pass, const std::string& detail = "") {
  rep.checks.push_back({name, pass, pass ? "" : detail});
}

// Reachability order of the loop-free right Cayley digraph, as bitsets
// desc[i] = {j : node j reachable from node i}, including i itself.
struct ReachOrder {
  std::vector<RookVector> nodes;
  std::vector<std::vector<uint64_t>> desc;

  explicit ReachOrder(int n) {
    nodes = enumerate_rooks(n);
    const size_t words = (nodes.size() + 63) / 64;
    desc.assign(nodes.size(), std::vector<uint64_t>(words, 0));
    for (size_t i = 0; i < nodes.size(); ++i) {
      std::deque<size_t> frontier = {i};
      set(desc[i], i);
      while (!frontier.empty()) {
        size_t u = frontier.front();
        frontier.pop_front();
        for (int g = 0; g < n; ++g) {
          RookVector t = act_right(nodes[u], Generator::pi(g));
          size_t v = index(t);
          if (!get(desc[i], v)) {
            set(desc[i], v);
            frontier.push_back(v);
          }
        }
      }
    }
  }
  size_t index(const RookVector& r) const {
    return static_cast<size_t>(std::lower_bound(nodes.begin(), nodes.end(), r) - nodes.begin());
  }
  static void set(std::vector<uint64_t>& b, size_t i) { b[i / 64] |= 1ull << (i % 64); }
  static bool get(const std::vector<uint64_t>& b, size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
  bool reachable(size_t from, size_t to) const { return get(desc[from], to); }
};

std::string wit(const RookVector& r) { return format_rook(r); }
std::string wit2(const RookVector& a, const RookVector& b) { return wit(a) + " ; " + wit(b); }

}  // namespace

VerifyReport verify_rookcore(const VerifyOptions& opts) {
  VerifyReport rep;
  const int lin = opts.max_n_linear, exh = opts.max_n_exhaustive;

  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= std::min(5, lin) && ok; ++n)
      for (const RookVector& r : enumerate_rooks(n))
        if (rook_from_triple(rook_triple(r), n) != r) {
          ok = false;
          w = wit(r);
          break;
        }
    check(rep, "rookcore/triple-roundtrip", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= exh && ok; ++n) {
      const auto all = enumerate_rooks(n);
      for (const RookVector& r : all) {
        for (const RookVector& s : all)
          if (transpose(matrix_product(r, s)) != matrix_product(transpose(s), transpose(r))) {
            ok = false;
            w = wit2(r, s);
            break;
          }
        if (!ok) break;
      }
    }
    check(rep, "rookcore/transpose-antihomomorphism", ok, w);
  }
  {
    bool ok = true;
    for (int n = 0; n <= std::min(7, lin + 1) && ok; ++n) {
      long long sum = 0;
      for (long long v : count_by_first_zero(n)) sum += v;
      ok = sum == static_cast<long long>(enumerate_rooks(n).size());
    }
    check(rep, "rookcore/first-zero-row-sums", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n <= std::min(6, lin) && ok; ++n) {
      std::vector<long long> direct(static_cast<size_t>(n) + 1, 0);
      for (const RookVector& r : enumerate_rooks(n)) ++direct[static_cast<size_t>(first_zero(r))];
      ok = direct == count_by_first_zero(n);
    }
    check(rep, "rookcore/first-zero-recurrence", ok);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= std::min(5, lin) && ok; ++n) {
      std::map<int, std::set<RookVector>> images;
      for (const RookVector& r : enumerate_rooks(n)) {
        const RookVector s = foata_map(r);
        if (foata_inverse(s) != r) {
          ok = false;
          w = wit(r);
          break;
        }
        int cyc = 0;
        for (const auto& c : cycle_chain_decomposition(r).cycles) cyc += static_cast<int>(c.size());
        if (first_zero(s) != cyc) {
          ok = false;
          w = wit(r);
          break;
        }
        images[cyc].insert(s);
      }
      if (ok) {
        const std::vector<long long> counts = count_by_first_zero(n);
        for (const auto& [k, img] : images)
          if (static_cast<long long>(img.size()) != counts[static_cast<size_t>(k)]) {
            ok = false;
            w = "k=" + std::to_string(k);
          }
      }
    }
    check(rep, "rookcore/foata-bijection", ok, w);
  }
  return rep;
}

VerifyReport verify_action(const VerifyOptions& opts) {
  VerifyReport rep;
  const int lin = opts.max_n_linear, exh = opts.max_n_exhaustive;

  {
    bool ok = true;
    std::string w;
    for (int n = 1; n <= exh && ok; ++n)
      for (const RookVector& r : enumerate_rooks(n)) {
        for (int i = 0; i < n && ok; ++i)
          for (int j = 0; j < n; ++j) {
            const Generator g = Generator::pi(i), h = Generator::pi(j);
            if (act_right(act_left(g, r), h) != act_left(g, act_right(r, h))) {
              ok = false;
              w = wit(r);
              break;
            }
          }
        if (!ok) break;
      }
    check(rep, "action/left-right-commute", ok, w);
  }
  {
    bool ok = true;
    for (int n = 0; n <= exh && ok; ++n) {
      std::set<RookVector> images;
      for (const RookVector& r : enumerate_rooks(n))
        images.insert(eval_word(canonical_word(encode(r))));
      ok = images.size() == enumerate_rooks(n).size();
    }
    check(rep, "action/regular-natural-bijection", ok);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n <= 3 && ok; ++n) {
      const auto all = enumerate_rooks(n);
      for (const auto& a : all)
        for (const auto& b : all) {
          for (const auto& c : all)
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
              ok = false;
              w = wit2(a, b) + " ; " + wit(c);
              break;
            }
          if (!ok) break;
        }
    }
    std::mt19937 rng(20240815);
    for (int n = 4; n <= std::min(5, lin) && ok; ++n) {
      const auto all = enumerate_rooks(n);
      std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
      for (int t = 0; t < 2000; ++t) {
        const auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          ok = false;
          w = wit2(a, b) + " ; " + wit(c);
          break;
        }
      }
    }
    check(rep, "action/mul-associative", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n <= exh && ok; ++n)
      for (const RookVector& r : enumerate_rooks(n)) {
        for (int j = 0; j <= n; ++j) {
          RookVector right = r;
          for (const Generator g : canonical_word(encode(act_right_pj(RookVector::identity(n), j))).letters)
            right = act_right(right, g);
          if (right != act_right_pj(r, j)) {
            ok = false;
            w = wit(r);
            break;
          }
          RookVector left = r;
          const GenWord pj = canonical_word(encode(act_right_pj(RookVector::identity(n), j)));
          for (size_t k = pj.letters.size(); k-- > 0;) left = act_left(pj.letters[k], left);
          if (left != act_left_pj(j, r)) {
            ok = false;
            w = wit(r);
            break;
          }
        }
        if (!ok) break;
      }
    check(rep, "action/pj-zeroing", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n <= exh && ok; ++n)
      for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1) s.insert(i);
        const RookVector ps = parabolic_zero(n, s);
        if (mul(mul(ps, ps), ps) != mul(ps, ps)) {
          ok = false;
          w = wit(ps);
        }
        for (int i = 0; i < n; ++i) {
          const bool fixes = act_right(ps, Generator::pi(i)) == ps && act_left(Generator::pi(i), ps) == ps;
          if (fixes != (s.count(i) != 0)) {
            ok = false;
            w = wit(ps) + " i=" + std::to_string(i);
            break;
          }
        }
        if (!ok) break;
      }
    check(rep, "action/parabolic-zero-descents", ok, w);
  }
  for (int n = 1; n <= std::min(4, lin); ++n) {
    for (auto variant : {PresentationVariant::Q0, PresentationVariant::Q1, PresentationVariant::Alt}) {
      const PresentationReport pr = check_presentation(n, variant);
      std::string w;
      for (const RelationCheck& c : pr.checks)
        if (!c.holds) w += c.name + " ";
      const char* vn = variant == PresentationVariant::Q0   ? "q0"
                       : variant == PresentationVariant::Q1 ? "q1"
                                                            : "alt";
      check(rep, "action/presentation-" + std::string(vn) + "-n" + std::to_string(n), pr.all_hold(), w);
    }
  }
  return rep;
}

namespace {

// All reduced words grouped by evaluation, by depth-first search over the
// length-graded Cayley graph.
std::map<RookVector, std::vector<GenWord>> reduced_words(int n, Alphabet alphabet) {
  std::map<RookVector, int> len;
  for (const RookVector& r : enumerate_rooks(n)) len[r] = length(r);
  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(alphabet == Alphabet::Q1 && i >= 1 ? Generator::s(i) : Generator::pi(i));

  std::map<RookVector, std::vector<GenWord>> out;
  std::vector<Generator> word;
  std::vector<std::pair<RookVector, size_t>> stack = {{RookVector::identity(n), 0}};
  while (!stack.empty()) {
    auto& [r, next] = stack.back();
    if (next == 0) out[r].push_back(GenWord(n, word));
    if (next < gens.size()) {
      const Generator g = gens[next++];
      RookVector t = act_right(r, g);
      if (len[t] == static_cast<int>(word.size()) + 1) {
        word.push_back(g);
        stack.push_back({t, 0});
      }
    } else {
      stack.pop_back();
      if (!word.empty()) word.pop_back();
    }
  }
  return out;
}

std::string word_key(const GenWord& w) {
  std::string k;
  for (Generator g : w.letters) k.push_back(static_cast<char>((g.is_pi() ? 'a' : 'A') + g.index));
  return k;
}

}  // namespace

VerifyReport verify_rcode(const VerifyOptions& opts) {
  VerifyReport rep;
  const int lin = opts.max_n_linear, exh = opts.max_n_exhaustive;

  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= std::min(6, lin) && ok; ++n) {
      const auto rooks = enumerate_rooks(n);
      const auto codes = enumerate_rcodes(n);
      if (codes.size() != rooks.size()) {
        ok = false;
        w = "|C_n| != |R_n| at n=" + std::to_string(n);
        break;
      }
      for (const RookVector& r : rooks)
        if (decode(encode(r)) != r) {
          ok = false;
          w = wit(r);
          break;
        }
      for (const RCode& c : codes)
        if (encode(decode(c)) != c) {
          ok = false;
          w = format_rcode(c);
          break;
        }
    }
    check(rep, "rcode/code-bijection", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= std::min(5, lin) && ok; ++n) {
      for (const RookVector& r : enumerate_rooks(n))
        if (m_value(encode(r).letters) != first_zero(r)) {
          ok = false;
          w = wit(r);
          break;
        }
      for (const RCode& c : enumerate_rcodes(n))
        if (first_zero(decode(c)) != m_value(c.letters)) {
          ok = false;
          w = format_rcode(c);
          break;
        }
    }
    check(rep, "rcode/m-equals-first-zero", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= std::min(5, lin) && ok; ++n)
      for (const RookVector& r : enumerate_rooks(n)) {
        if (eval_word(canonical_word(encode(r))) != r ||
            eval_word(canonical_word(encode(r), Alphabet::Q1)) != r) {
          ok = false;
          w = wit(r);
          break;
        }
      }
    check(rep, "rcode/canonical-word-evaluates", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n <= exh && ok; ++n)
      for (const RCode& c : enumerate_rcodes(n)) {
        for (int i = 0; i < n; ++i) {
          const RCode d = code_act(c, Generator::pi(i));
          if (!is_rcode(d.letters) || word_length(d) > word_length(c) + 1 ||
              decode(d) != act_right(decode(c), Generator::pi(i))) {
            ok = false;
            w = format_rcode(c) + " . p" + std::to_string(i);
            break;
          }
        }
        for (int i = 1; i < n; ++i) {
          const RCode d = code_act(c, Generator::s(i));
          if (!is_rcode(d.letters) || decode(d) != act_right(decode(c), Generator::s(i))) {
            ok = false;
            w = format_rcode(c) + " . s" + std::to_string(i);
            break;
          }
        }
        if (!ok) break;
      }
    check(rep, "rcode/code-action-commutes", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n <= exh && ok; ++n)
      for (const auto& [r, words] : reduced_words(n, Alphabet::Q1))
        for (const GenWord& u : words) {
          std::set<RookVector> prefix_evals;
          RookVector x = RookVector::identity(n);
          prefix_evals.insert(x);
          for (Generator g : u.letters) prefix_evals.insert(x = act_right(x, g));
          if (prefix_evals.size() != u.letters.size() + 1 || x != r) {
            ok = false;
            w = format_genword(u);
            break;
          }
        }
    check(rep, "rcode/reduced-prefixes-distinct", ok, w);
  }
  return rep;
}

VerifyReport verify_matsumoto(const VerifyOptions& opts) {
  VerifyReport rep;
  const int exh = opts.max_n_exhaustive;
  bool connected = true, cross = true, q0q1 = true;
  std::string w_conn, w_cross, w_q0q1;
  for (int n = 1; n <= exh; ++n) {
    auto q0 = reduced_words(n, Alphabet::Q0);
    auto q1 = reduced_words(n, Alphabet::Q1);
    for (const auto& [r, words] : q0) {
      // braid closure from the canonical word covers every reduced word
      std::set<std::string> all;
      for (const GenWord& u : words) all.insert(word_key(u));
      std::set<std::string> seen;
      std::deque<GenWord> frontier = {canonical_word(encode(r))};
      seen.insert(word_key(frontier.front()));
      while (!frontier.empty()) {
        GenWord u = std::move(frontier.front());
        frontier.pop_front();
        for (GenWord& v : braid_neighbors(u))
          if (seen.insert(word_key(v)).second) frontier.push_back(std::move(v));
      }
      if (seen != all && connected) {
        connected = false;
        w_conn = "n=" + std::to_string(n) + " r=" + wit(r);
      }
      // the q0 <-> q1 letterwise correspondence preserves reducedness
      std::set<std::string> mapped;
      for (const GenWord& u : words) {
        GenWord v = u;
        for (Generator& g : v.letters)
          if (g.index >= 1) g = Generator::s(g.index);
        if (!is_reduced(v) || eval_word(v) != r) {
          q0q1 = false;
          w_q0q1 = format_genword(u);
        }
        mapped.insert(word_key(v));
      }
      std::set<std::string> q1keys;
      for (const GenWord& u : q1[r]) q1keys.insert(word_key(u));
      if (mapped != q1keys && q0q1) {
        q0q1 = false;
        w_q0q1 = "n=" + std::to_string(n) + " r=" + wit(r);
      }
    }
    // words of distinct elements are never equivalent (sampled)
    std::mt19937 rng(7);
    std::vector<const RookVector*> keys;
    for (const auto& [r, words] : q0) keys.push_back(&r);
    std::uniform_int_distribution<size_t> pick(0, keys.size() - 1);
    for (int t = 0; t < 200; ++t) {
      const RookVector *a = keys[pick(rng)], *b = keys[pick(rng)];
      if (*a == *b) continue;
      const GenWord &u = q0[*a].front(), &v = q0[*b].front();
      if (matsumoto_equivalent(u, v) || matsumoto_equivalent(u, v, MatsumotoMode::Certify)) {
        cross = false;
        w_cross = wit2(*a, *b);
      }
    }
  }
  check(rep, "matsumoto/braid-connected-classes", connected, w_conn);
  check(rep, "matsumoto/distinct-elements-not-equivalent", cross, w_cross);
  check(rep, "matsumoto/q0-q1-correspondence", q0q1, w_q0q1);
  return rep;
}

VerifyReport verify_order(const VerifyOptions& opts) {
  VerifyReport rep;
  const int exh = opts.max_n_exhaustive;

  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= exh && ok; ++n) {
      const ReachOrder ro(n);
      for (size_t i = 0; i < ro.nodes.size() && ok; ++i)
        for (size_t j = 0; j < ro.nodes.size(); ++j)
          if (leq(ro.nodes[j], ro.nodes[i]) != ro.reachable(i, j)) {
            ok = false;
            w = wit2(ro.nodes[i], ro.nodes[j]);
            break;
          }
    }
    check(rep, "order/leq-matches-reachability", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n <= exh && ok; ++n) {
      // loop-free Cayley digraph is acyclic (J-triviality)
      const auto all = enumerate_rooks(n);
      std::map<RookVector, int> indeg;
      std::map<RookVector, std::vector<RookVector>> adj;
      for (const RookVector& r : all)
        for (int i = 0; i < n; ++i) {
          RookVector t = act_right(r, Generator::pi(i));
          if (t != r) {
            adj[r].push_back(t);
            ++indeg[t];
          }
        }
      std::deque<RookVector> q;
      for (const RookVector& r : all)
        if (!indeg.count(r)) q.push_back(r);
      size_t seen = 0;
      while (!q.empty()) {
        RookVector r = q.front();
        q.pop_front();
        ++seen;
        for (const RookVector& t : adj[r])
          if (--indeg[t] == 0) q.push_back(t);
      }
      if (seen != all.size()) {
        ok = false;
        w = "cycle at n=" + std::to_string(n);
      }
    }
    check(rep, "order/cayley-acyclic", ok, w);
  }
  {
    bool ok_meet = true, ok_join = true;
    std::string wm, wj;
    for (int n = 0; n <= exh && (ok_meet || ok_join); ++n) {
      const ReachOrder ro(n);
      const size_t words = ro.desc[0].size();
      // above[i] = set of j with i reachable from j
      std::vector<std::vector<uint64_t>> above(ro.nodes.size(), std::vector<uint64_t>(words, 0));
      for (size_t i = 0; i < ro.nodes.size(); ++i)
        for (size_t j = 0; j < ro.nodes.size(); ++j)
          if (ro.reachable(j, i)) ReachOrder::set(above[i], j);
      for (size_t i = 0; i < ro.nodes.size(); ++i)
        for (size_t j = i; j < ro.nodes.size(); ++j) {
          const RookVector m = meet(ro.nodes[i], ro.nodes[j]);
          const size_t mi = ro.index(m);
          std::vector<uint64_t> common(words);
          for (size_t k = 0; k < words; ++k) common[k] = ro.desc[i][k] & ro.desc[j][k];
          bool good = ReachOrder::get(common, mi);
          for (size_t k = 0; k < words && good; ++k)
            if ((common[k] & ~ro.desc[mi][k]) != 0) good = false;
          if (!good && ok_meet) {
            ok_meet = false;
            wm = wit2(ro.nodes[i], ro.nodes[j]);
          }
          const RookVector jn = join(ro.nodes[i], ro.nodes[j]);
          const size_t ji = ro.index(jn);
          for (size_t k = 0; k < words; ++k) common[k] = above[i][k] & above[j][k];
          good = ReachOrder::get(common, ji);
          for (size_t k = 0; k < words && good; ++k)
            if ((common[k] & ~above[ji][k]) != 0) good = false;
          if (!good && ok_join) {
            ok_join = false;
            wj = wit2(ro.nodes[i], ro.nodes[j]);
          }
        }
    }
    check(rep, "order/meet-is-glb", ok_meet, wm);
    check(rep, "order/join-is-lub", ok_join, wj);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= 3 && ok; ++n) {
      const auto all = enumerate_rooks(n);
      for (const auto& a : all) {
        for (const auto& b : all) {
          if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a) || meet(a, a) != a ||
              join(a, a) != a || meet(a, join(a, b)) != a || join(a, meet(a, b)) != a) {
            ok = false;
            w = wit2(a, b);
            break;
          }
          for (const auto& c : all)
            if (meet(meet(a, b), c) != meet(a, meet(b, c)) ||
                join(join(a, b), c) != join(a, join(b, c))) {
              ok = false;
              w = wit2(a, b) + " ; " + wit(c);
              break;
            }
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    check(rep, "order/lattice-axioms", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= std::min(5, opts.max_n_linear) && ok; ++n)
      for (const RookVector& r : enumerate_rooks(n)) {
        const std::set<int> weak = weak_descents(r);
        const StrictDescents strict = strict_descents(r);
        if (!std::includes(weak.begin(), weak.end(), strict.members.begin(), strict.members.end())) {
          ok = false;
          w = wit(r);
          break;
        }
      }
    check(rep, "order/strict-descents-subset-weak", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n <= std::min(5, opts.max_n_linear) && ok; ++n) {
      const std::vector<RookVector> mcr = mcr_set(n);
      if (mcr.size() != (1u << n)) {
        ok = false;
        w = "|MCR| at n=" + std::to_string(n);
        break;
      }
      std::set<DyckPath> image;
      std::map<RookVector, DyckPath> path_of;
      for (const RookVector& r : mcr) {
        const DyckPath d = delta(cset(eta(r), n + 1));
        if (!d.valid() || !d.avoids_011()) {
          ok = false;
          w = wit(r);
          break;
        }
        image.insert(d);
        path_of[r] = d;
      }
      if (!ok) break;
      std::set<DyckPath> avoiders;  // all 011-avoiding paths of semilength n+1
      std::vector<int> steps;
      std::function<void(int, int)> gen = [&](int ones, int height) {
        if (static_cast<int>(steps.size()) == 2 * (n + 1)) {
          DyckPath d{n + 1, steps};
          if (d.avoids_011()) avoiders.insert(d);
          return;
        }
        if (ones < n + 1) {
          steps.push_back(1);
          gen(ones + 1, height + 1);
          steps.pop_back();
        }
        if (height > 0) {
          steps.push_back(0);
          gen(ones, height - 1);
          steps.pop_back();
        }
      };
      gen(0, 0);
      if (image != avoiders) {
        ok = false;
        w = "image mismatch at n=" + std::to_string(n);
        break;
      }
      // cover edges <-> single diamond insertions
      size_t cover_edges = 0, diamond_edges = 0;
      for (const RookVector& a : mcr)
        for (const RookVector& b : mcr) {
          if (a == b || !leq(b, a)) continue;
          bool covered = true;
          for (const RookVector& c : mcr)
            if (c != a && c != b && leq(b, c) && leq(c, a)) {
              covered = false;
              break;
            }
          if (!covered) continue;
          ++cover_edges;
          const DyckPath &da = path_of[a], &db = path_of[b];
          if (!(da.below(db) && db.diamonds() == da.diamonds() + 1)) {
            ok = false;
            w = wit2(a, b);
          }
        }
      for (const DyckPath& d1 : avoiders)
        for (const DyckPath& d2 : avoiders)
          if (d1.below(d2) && d2.diamonds() == d1.diamonds() + 1) ++diamond_edges;
      if (ok && cover_edges != diamond_edges) {
        ok = false;
        w = "cover/diamond count mismatch at n=" + std::to_string(n);
      }
    }
    check(rep, "order/dyck-bijection", ok, w);
  }
  return rep;
}

VerifyReport verify_stellar_module(const VerifyOptions& opts) {
  VerifyReport rep;
  const int lin = opts.max_n_linear, exh = opts.max_n_exhaustive;
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= std::min(5, lin) && ok; ++n)
      for (int k = 0; k <= n && ok; ++k)
        for (const RookVector& r : enumerate_rooks(n)) {
          if (st_k(st_k(r, k), k) != st_k(r, k)) {
            ok = false;
            w = wit(r);
            break;
          }
        }
    check(rep, "stellar/projection", ok, w);
  }
  {
    bool ok = true;
    for (int n = 0; n <= std::min(5, lin) && ok; ++n) {
      std::set<RookVector> prev;
      for (int k = 0; k <= n && ok; ++k) {
        const auto elems = stellar_elements(n, k);
        std::set<RookVector> cur(elems.begin(), elems.end());
        ok = std::includes(cur.begin(), cur.end(), prev.begin(), prev.end());
        prev = std::move(cur);
      }
      ok = ok && prev.size() == enumerate_rooks(n).size();
    }
    check(rep, "stellar/inclusion-chain", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n <= std::min(7, lin + 1) && ok; ++n) {
      long long expect = 0;
      std::vector<long long> facts = {1};
      for (int m = 1; m <= n; ++m) facts.push_back(facts.back() * m);
      for (int m = 0; m <= n; ++m) expect += facts[static_cast<size_t>(n)] / facts[static_cast<size_t>(m)];
      ok = stellar_card(n, 1) == expect;
    }
    check(rep, "stellar/card-formula-k1", ok);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n <= exh && ok; ++n) {
      const auto all = enumerate_rooks(n);
      for (int k = 0; k <= n && ok; ++k) {
        std::map<RookVector, std::vector<RookVector>> classes;
        for (const RookVector& r : all) classes[st_k(r, k)].push_back(r);
        for (const auto& [img, members] : classes) {
          for (int i = 0; i < n && ok; ++i) {
            const RookVector ref = st_k(act_right(members.front(), Generator::pi(i)), k);
            const RookVector refl = st_k(act_left(Generator::pi(i), members.front()), k);
            for (const RookVector& r : members)
              if (st_k(act_right(r, Generator::pi(i)), k) != ref ||
                  st_k(act_left(Generator::pi(i), r), k) != refl) {
                ok = false;
                w = wit2(members.front(), r);
                break;
              }
          }
          if (!ok) break;
        }
      }
    }
    check(rep, "stellar/congruence", ok, w);
  }
  for (int n = 1; n <= exh; ++n) {
    const StellarReport sr = verify_stellar(n);
    std::string w;
    for (const StellarCheck& c : sr.checks)
      if (!c.holds) w += c.name + " ";
    check(rep, "stellar/verify-n" + std::to_string(n), sr.all_hold(), w);
  }
  return rep;
}

VerifyReport verify_reptheory(const VerifyOptions& opts) {
  VerifyReport rep;
  const int lin = opts.max_n_linear, exh = opts.max_n_exhaustive;

  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= std::min(5, lin) && ok; ++n) {
      std::set<RookVector> mul_idem;
      for (const RookVector& r : enumerate_rooks(n))
        if (mul(r, r) == r) mul_idem.insert(r);
      const auto idems = idempotents(n);
      ok = mul_idem == std::set<RookVector>(idems.begin(), idems.end()) &&
           idems.size() == (1u << n);
      if (!ok) w = "n=" + std::to_string(n);
    }
    check(rep, "reptheory/idempotents-are-parabolic-zeros", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= exh && ok; ++n)
      for (const RookVector& x : enumerate_rooks(n)) {
        const RookVector rf = rfix(x), lf = lfix(x);
        if (mul(x, rf) != x || mul(lf, x) != x) {
          ok = false;
          w = wit(x);
          break;
        }
        for (const RookVector& e : idempotents(n))
          if (mul(x, e) == x && star(rf, e) != rf) {
            ok = false;  // rfix must be the star-minimum among fixers
            w = wit2(x, e);
            break;
          }
        if (!ok) break;
      }
    check(rep, "reptheory/rfix-lfix", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= exh && ok; ++n) {
      for (const RookVector& e : idempotents(n))
        for (const RookVector& f : idempotents(n)) {
          const std::set<int> su = d_r(e).members(), sv = d_r(f).members();
          std::set<int> un = su;
          un.insert(sv.begin(), sv.end());
          if (star(e, f) != parabolic_zero(n, un)) {
            ok = false;
            w = wit2(e, f);
            break;
          }
        }
      const CartanMatrix cm = cartan_matrix(n);
      long long sum = 0;
      for (const auto& row : cm.c)
        for (long long v : row) sum += v;
      if (sum != static_cast<long long>(enumerate_rooks(n).size())) {
        ok = false;
        w = "cartan sum at n=" + std::to_string(n);
      }
    }
    check(rep, "reptheory/star-table-and-cartan-sum", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n <= std::min(5, lin) && ok; ++n) {
      // dim P^H_I = number of permutations with descent composition I
      std::map<Composition, long long> dim_h;
      std::vector<int> perm(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
      do {
        std::set<int> ds;
        for (int i = 1; i < n; ++i)
          if (perm[static_cast<size_t>(i - 1)] > perm[static_cast<size_t>(i)]) ds.insert(i);
        ++dim_h[cset(ds, n)];
      } while (std::next_permutation(perm.begin(), perm.end()));
      long long covered = 0;
      for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        DescentSet s;
        s.n = n;
        s.mask = mask;
        const Composition ext = subset_to_extended(s.members(), n);
        long long dim = 0;
        for (const auto& [label, mult] : decompose_projective(ext).terms)
          dim += mult * dim_h[label];
        const long long expect = static_cast<long long>(descent_class(s).size());
        if (dim != expect) {
          ok = false;
          w = "S=" + format_subset(s.members()) + " n=" + std::to_string(n);
          break;
        }
        covered += expect;
      }
      if (ok && covered != static_cast<long long>(enumerate_rooks(n).size())) {
        ok = false;
        w = "classes do not partition at n=" + std::to_string(n);
      }
    }
    check(rep, "reptheory/decompose-projective-dimensions", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n < 5 && ok; ++n)
      for (int m = 1; n + m <= 5 && ok; ++m)
        for (uint32_t mi = 0; mi < (1u << n) && ok; ++mi)
          for (uint32_t mj = 0; mj < (1u << m); ++mj) {
            DescentSet i{n, {}}, j{m, {}};
            i.mask = mi;
            j.mask = mj;
            const Induction ind = tower_ind_simple(i, j);
            std::vector<RookVector> oracle = aladin_quotient(idempotent_of(i), idempotent_of(j));
            std::sort(oracle.begin(), oracle.end());
            if (ind.basis != oracle) {
              ok = false;
              w = format_subset(i.members()) + " x " + format_subset(j.members());
              break;
            }
          }
    check(rep, "reptheory/tower-induction-matches-aladin", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 1; n < 4 && ok; ++n)
      for (int m = 1; n + m <= 4 && ok; ++m)
        for (uint32_t mi = 0; mi < (1u << n) && ok; ++mi)
          for (uint32_t mj = 0; mj < (1u << (m - 1)); ++mj) {
            DescentSet i{n, {}}, j{m, {}};
            i.mask = mi;
            j.mask = mj << 1;  // 0 not in J
            const Induction ind = ind_simple_RxH(i, j);
            std::vector<RookVector> oracle = aladin_quotient_RxH(idempotent_of(i), j);
            std::sort(oracle.begin(), oracle.end());
            if (ind.basis != oracle) {
              ok = false;
              w = format_subset(i.members()) + " x " + format_subset(j.members());
              break;
            }
            const Induction tower = tower_ind_simple(i, j);
            if (m >= 1 && !std::includes(ind.basis.begin(), ind.basis.end(), tower.basis.begin(),
                                         tower.basis.end())) {
              ok = false;
              w = "tower basis not inside RxH basis: " + format_subset(i.members());
            }
          }
    check(rep, "reptheory/RxH-induction-matches-oracle", ok, w);
  }
  {
    // Hopf compatibility fails: 8 terms on one side, 16 on the other.
    const auto [r1, r2] = tower_res_simple(1, 2, DescentSet(3, {0, 1}));
    const auto [s1, s2] = tower_res_simple(1, 1, DescentSet(2, {1}));
    const long long lhs = tower_ind_simple(r1, s1).simples.total() *
                          tower_ind_simple(r2, s2).simples.total();
    const long long rhs = tower_ind_simple(DescentSet(3, {0, 1}), DescentSet(2, {1})).simples.total();
    check(rep, "reptheory/hopf-counterexample-counts", lhs == 8 && rhs == 16,
          std::to_string(lhs) + " vs " + std::to_string(rhs));
  }
  {
    bool ok = true, differ = false;
    std::string w;
    for (int n = 1; n <= std::min(3, exh); ++n) {
      auto edges_key = [](const std::vector<BranchEdge>& es) {
        std::set<std::string> k;
        for (const BranchEdge& e : es)
          k.insert(format_subset(e.from.members()) + ">" + format_subset(e.to.members()) + ":" +
                   std::to_string(e.mult));
        return k;
      };
      const auto left = branching_graph(n, BranchSide::Left);
      const auto right = branching_graph(n, BranchSide::Right);
      for (const BranchEdge& e : left)
        if (e.mult <= 0 || e.to.n != n + 1) {
          ok = false;
          w = "bad edge";
        }
      if (edges_key(left) != edges_key(right)) differ = true;
    }
    if (!differ) {
      ok = false;
      w = "left and right branching never differ";
    }
    check(rep, "reptheory/branching-graphs", ok, w);
  }
  return rep;
}

VerifyReport verify_all(const VerifyOptions& opts) {
  VerifyReport rep;
  rep.merge(verify_rookcore(opts));
  rep.merge(verify_action(opts));
  rep.merge(verify_rcode(opts));
  rep.merge(verify_matsumoto(opts));
  rep.merge(verify_order(opts));
  rep.merge(verify_stellar_module(opts));
  rep.merge(verify_reptheory(opts));
  return rep;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "rookcore") return verify_rookcore(opts);
  if (name == "action" || name == "presentation") return verify_action(opts);
  if (name == "rcode" || name == "code") return verify_rcode(opts);
  if (name == "matsumoto") return verify_matsumoto(opts);
  if (name == "order" || name == "lattice") return verify_order(opts);
  if (name == "stellar") return verify_stellar_module(opts);
  if (name == "reptheory") return verify_reptheory(opts);
  if (name == "all") return verify_all(opts);
  fail("UsageError", "unknown suite '" + name + "'");
}

}  // namespace rook0
