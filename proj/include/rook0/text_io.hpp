#pragma once

#include <string>

#include "rook0/action.hpp"
#include "rook0/order.hpp"
#include "rook0/rcode.hpp"
#include "rook0/reptheory.hpp"
#include "rook0/rookcore.hpp"

namespace rook0 {

/// Compact digit string when n <= 9, comma-separated integers otherwise.
std::string format_rook(const RookVector& r);
/// Accepts both forms ("02401" or "2,0,5,4,0,0,1").
RookVector parse_rook(const std::string& text);

/// Comma-separated letters, negatives with a leading minus ("1,1,-1,2,0").
std::string format_rcode(const RCode& c);
RCode parse_rcode(const std::string& text);

/// Whitespace-separated tokens "p0 p1 s2 ...".
std::string format_genword(const GenWord& w);
GenWord parse_genword(const std::string& text, int n);

std::string format_subset(const std::set<int>& s);       // "{0,2}"
std::set<int> parse_subset(const std::string& text);     // "{0,2}" or "0,2" or ""

std::string format_composition(const Composition& c);    // "(3,1,2)"
Composition parse_composition(const std::string& text);  // "(3,1,2)" or "3,1,2"

std::string triple_to_json(const RookTriple& t);
std::string formal_sum_to_json(const FormalSum<DescentSet>& s);
std::string formal_sum_to_json(const FormalSum<Composition>& s);
std::string chain_counts_to_json(int n, const ChainCounts& c);

std::string cartan_to_csv(const CartanMatrix& m);
std::string cartan_to_json(const CartanMatrix& m);

std::string branching_to_dot(const std::vector<BranchEdge>& edges);

}  // namespace rook0
