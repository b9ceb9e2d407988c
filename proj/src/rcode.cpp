#include "rook0/rcode.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace rook0 {

int m_value(const std::vector<int>& word) {
  int m = 0;
  for (int d : word) {
    if (d <= 0)
      m = -d;
    else if (d <= m + 1)
      ++m;
  }
  return m;
}

bool is_rcode(const std::vector<int>& word) {
  int m = 0;
  for (size_t j = 0; j < word.size(); ++j) {
    const int d = word[j];
    if (d < -m || d > static_cast<int>(j) + 1) return false;
    if (d <= 0)
      m = -d;
    else if (d <= m + 1)
      ++m;
  }
  return true;
}

RCode rcode_from_letters(std::vector<int> letters) {
  if (!is_rcode(letters)) fail("NotAnRCode", "letter sequence violates the m constraint");
  RCode c;
  c.n = static_cast<int>(letters.size());
  c.letters = std::move(letters);
  return c;
}

namespace {

void enum_codes(int n, std::vector<int>& acc, int m, std::vector<RCode>& out) {
  if (static_cast<int>(acc.size()) == n) {
    out.push_back({n, acc});
    return;
  }
  const int j = static_cast<int>(acc.size()) + 1;
  for (int d = -m; d <= j; ++d) {
    acc.push_back(d);
    enum_codes(n, acc, d <= 0 ? -d : (d <= m + 1 ? m + 1 : m), out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<RCode> enumerate_rcodes(int n) {
  if (n < 0) fail("OutOfRange", "negative size");
  std::vector<RCode> out;
  std::vector<int> acc;
  enum_codes(n, acc, 0, out);
  return out;
}

RCode encode(const RookVector& r) {
  std::vector<int> word = r.entries();
  std::vector<int> letters(word.size());
  for (int j = static_cast<int>(word.size()); j >= 1; --j) {
    size_t cut = 0;
    int letter = 0;
    auto it = std::find(word.begin(), word.end(), j);
    if (it != word.end()) {
      cut = static_cast<size_t>(it - word.begin());
      letter = static_cast<int>(cut) + 1;
    } else {
      cut = static_cast<size_t>(std::find(word.begin(), word.end(), 0) - word.begin());
      letter = -static_cast<int>(cut);
    }
    letters[static_cast<size_t>(j - 1)] = letter;
    word.erase(word.begin() + static_cast<long>(cut));
  }
  return {static_cast<int>(r.entries().size()), std::move(letters)};
}

RookVector decode(const RCode& c) {
  if (!is_rcode(c.letters) || static_cast<int>(c.letters.size()) != c.n)
    fail("NotAnRCode", "invalid code");
  std::vector<int> word;
  word.reserve(static_cast<size_t>(c.n));
  for (int j = 1; j <= c.n; ++j) {
    const int d = c.letters[static_cast<size_t>(j - 1)];
    if (d > 0)
      word.insert(word.begin() + (d - 1), j);
    else
      word.insert(word.begin() + (-d), 0);
  }
  return RookVector::validate(std::move(word));
}

GenWord canonical_word(const RCode& c, Alphabet alphabet) {
  if (!is_rcode(c.letters)) fail("NotAnRCode", "invalid code");
  std::vector<Generator> letters;
  auto push = [&](int k) {
    letters.push_back(alphabet == Alphabet::Q1 && k != 0 ? Generator::s(k) : Generator::pi(k));
  };
  for (int j = 1; j <= c.n; ++j) {
    const int i = c.letters[static_cast<size_t>(j - 1)];
    const int top = j - 1;
    if (i > top) continue;
    if (i >= 0) {
      for (int k = top; k >= i; --k) push(k);
    } else {
      for (int k = top; k >= 0; --k) push(k);
      for (int k = 1; k <= -i; ++k) push(k);
    }
  }
  return GenWord(c.n, std::move(letters));
}

RCode code_act(const RCode& c, Generator t) {
  const int n = c.n;
  if (t.index < 0 || t.index >= n) fail("SizeMismatch", "generator index out of range");
  if (!t.is_pi() && t.index < 1) fail("OutOfRange", "bad s index");

  if (n == 1 && t.is_pi() && t.index == 0) return {1, {0}};

  const int cn = c.letters.back();
  std::vector<int> prefix(c.letters.begin(), c.letters.end() - 1);
  RCode pre{n - 1, prefix};
  auto with_last = [&](RCode head, int last) {
    head.letters.push_back(last);
    head.n = n;
    return head;
  };
  auto same_kind = [&](int idx) { return t.is_pi() ? Generator::pi(idx) : Generator::s(idx); };

  if (cn >= 1) {
    const int i = cn;
    const int j = t.index;
    if (j == i) return t.is_pi() ? c : with_last(pre, cn + 1);
    if (j == i - 1) return with_last(pre, cn - 1);
    if (j < i - 1) return with_last(code_act(pre, t), cn);
    return with_last(code_act(pre, same_kind(j - 1)), cn);  // j > i
  }

  const int i = -cn;
  const int j = t.index;
  if (t.is_pi() && j == 0) {
    RCode head = pre;
    for (int k = 0; k < i; ++k) head = code_act(head, Generator::pi(k));
    return with_last(head, 0);
  }
  if (j == i) return t.is_pi() ? c : with_last(pre, cn + 1);
  if (j < i) return with_last(code_act(pre, t), cn);
  if (j > i + 1) return with_last(code_act(pre, same_kind(j - 1)), cn);
  // j == i + 1
  if (m_value(prefix) == i) return c;
  return with_last(pre, -(i + 1));
}

RCode normalize(const GenWord& w) {
  RCode c = encode(RookVector::identity(w.n));
  for (Generator g : w.letters) c = code_act(c, g);
  return c;
}

int word_length(const RCode& c) {
  int len = 0;
  for (int j = 1; j <= c.n; ++j) len += j - c.letters[static_cast<size_t>(j - 1)];
  return len;
}

int length(const RookVector& r) { return word_length(encode(r)); }

bool is_reduced(const GenWord& w) {
  return static_cast<int>(w.letters.size()) == length(eval_word(w));
}

std::vector<GenWord> braid_neighbors(const GenWord& w) {
  std::vector<GenWord> out;
  const auto& ls = w.letters;
  for (size_t i = 0; i + 1 < ls.size(); ++i) {
    if (std::abs(ls[i].index - ls[i + 1].index) >= 2) {
      GenWord v = w;
      std::swap(v.letters[i], v.letters[i + 1]);
      out.push_back(std::move(v));
    }
    if (i + 2 < ls.size()) {
      const int a = ls[i].index;
      if (a >= 1 && ls[i + 1].index == a + 1 && ls[i + 2].index == a) {
        GenWord v = w;
        v.letters[i] = ls[i + 1];
        v.letters[i + 1] = ls[i];
        v.letters[i + 2] = ls[i + 1];
        out.push_back(std::move(v));
      } else if (a >= 2 && ls[i + 1].index == a - 1 && ls[i + 2].index == a) {
        GenWord v = w;
        v.letters[i] = ls[i + 1];
        v.letters[i + 1] = ls[i];
        v.letters[i + 2] = ls[i + 1];
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

namespace {

std::string word_key(const GenWord& w) {
  std::string k;
  k.reserve(w.letters.size());
  for (Generator g : w.letters) k.push_back(static_cast<char>((g.is_pi() ? 'a' : 'A') + g.index));
  return k;
}

}  // namespace

bool matsumoto_equivalent(const GenWord& u, const GenWord& v, MatsumotoMode mode) {
  if (!is_reduced(u) || !is_reduced(v)) fail("NotReduced", "both words must be reduced");
  if (mode == MatsumotoMode::Fast) return normalize(u) == normalize(v);
  if (u.letters.size() != v.letters.size()) return false;
  const std::string target = word_key(v);
  std::unordered_set<std::string> seen = {word_key(u)};
  std::deque<GenWord> frontier = {u};
  while (!frontier.empty()) {
    GenWord w = std::move(frontier.front());
    frontier.pop_front();
    if (word_key(w) == target) return true;
    for (GenWord& nb : braid_neighbors(w))
      if (seen.insert(word_key(nb)).second) frontier.push_back(std::move(nb));
  }
  return false;
}

std::vector<int> lehmer_code(const RookVector& sigma) {
  if (!sigma.is_permutation()) fail("NotAPermutation", "rook has a zero entry");
  const int n = sigma.size();
  std::vector<int> code(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int j = i + 1; j <= n; ++j)
      if (sigma.entry(i) > sigma.entry(j)) ++count;
    code[static_cast<size_t>(i - 1)] = count;
  }
  return code;
}

}  // namespace rook0
