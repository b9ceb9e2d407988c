#include "rook0/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace rook0 {

using nlohmann::json;

std::string format_rook(const RookVector& r) {
  std::string out;
  if (r.size() <= 9) {
    for (int v : r.entries()) out += static_cast<char>('0' + v);
  } else {
    for (int v : r.entries()) out += (out.empty() ? "" : ",") + std::to_string(v);
  }
  return out;
}

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    const int v = std::stoi(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) fail("ParseError", "bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string strip_brackets(std::string s, char open, char close) {
  if (!s.empty() && s.front() == open && s.back() == close) return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

RookVector parse_rook(const std::string& text) {
  if (text.find(',') != std::string::npos) return RookVector::validate(parse_ints(text));
  std::vector<int> e;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("ParseError", "bad rook digit string");
    e.push_back(c - '0');
  }
  return RookVector::validate(std::move(e));
}

std::string format_rcode(const RCode& c) {
  std::string out;
  for (int v : c.letters) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

RCode parse_rcode(const std::string& text) { return rcode_from_letters(parse_ints(text)); }

std::string format_genword(const GenWord& w) {
  std::string out;
  for (Generator g : w.letters)
    out += (out.empty() ? "" : " ") + std::string(g.is_pi() ? "p" : "s") + std::to_string(g.index);
  return out;
}

GenWord parse_genword(const std::string& text, int n) {
  std::vector<Generator> letters;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok.size() < 2 || (tok[0] != 'p' && tok[0] != 's')) fail("ParseError", "bad generator token '" + tok + "'");
    const int idx = std::stoi(tok.substr(1));
    letters.push_back(tok[0] == 'p' ? Generator::pi(idx) : Generator::s(idx));
  }
  return GenWord(n, std::move(letters));
}

std::string format_subset(const std::set<int>& s) {
  std::string out = "{";
  for (int x : s) out += (out.size() == 1 ? "" : ",") + std::to_string(x);
  return out + "}";
}

std::set<int> parse_subset(const std::string& text) {
  std::string body = strip_brackets(text, '{', '}');
  if (body.empty()) return {};
  std::vector<int> vs = parse_ints(body);
  return {vs.begin(), vs.end()};
}

std::string format_composition(const Composition& c) {
  std::string out = "(";
  for (int x : c) out += (out.size() == 1 ? "" : ",") + std::to_string(x);
  return out + ")";
}

Composition parse_composition(const std::string& text) {
  std::string body = strip_brackets(text, '(', ')');
  if (body.empty()) return {};
  return parse_ints(body);
}

std::string triple_to_json(const RookTriple& t) {
  json j;
  j["support"] = t.support;
  j["inversions"] = json::array();
  for (const auto& [b, a] : t.inversions) j["inversions"].push_back({b, a});
  j["z"] = json::object();
  for (const auto& [l, z] : t.zcount) j["z"][std::to_string(l)] = z;
  return j.dump();
}

std::string formal_sum_to_json(const FormalSum<DescentSet>& s) {
  json terms = json::array();
  for (const auto& [label, mult] : s.terms)
    terms.push_back({{"descents", label.members()}, {"mult", mult}});
  return json{{"terms", terms}}.dump();
}

std::string formal_sum_to_json(const FormalSum<Composition>& s) {
  json terms = json::array();
  for (const auto& [label, mult] : s.terms)
    terms.push_back({{"composition", label}, {"mult", mult}});
  return json{{"terms", terms}}.dump();
}

std::string chain_counts_to_json(int n, const ChainCounts& c) {
  return json{{"n", n}, {"maximal", c.maximal}, {"min_length", c.min_length_count}}.dump();
}

std::string cartan_to_csv(const CartanMatrix& m) {
  std::string out = "lfix\\rfix";
  for (const DescentSet& s : m.labels) out += ",\"" + format_subset(s.members()) + "\"";
  out += "\n";
  for (size_t r = 0; r < m.labels.size(); ++r) {
    out += "\"" + format_subset(m.labels[r].members()) + "\"";
    for (long long v : m.c[r]) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string cartan_to_json(const CartanMatrix& m) {
  json labels = json::array();
  for (const DescentSet& s : m.labels) labels.push_back(s.members());
  return json{{"labels", labels}, {"matrix", m.c}}.dump();
}

std::string branching_to_dot(const std::vector<BranchEdge>& edges) {
  std::string dot = "digraph branching {\n";
  for (const BranchEdge& e : edges)
    dot += "  \"" + format_subset(e.from.members()) + "\" -> \"" + format_subset(e.to.members()) +
           "\" [label=\"" + std::to_string(e.mult) + "\"];\n";
  dot += "}\n";
  return dot;
}

}  // namespace rook0
