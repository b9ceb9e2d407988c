#pragma once

#include <string>
#include <vector>

namespace rook0 {

struct VerifyOptions {
  int max_n_linear = 6;  // single sweeps over R_n
  int max_n_exhaustive = 4;  // pairwise / exhaustive suites
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  void merge(const VerifyReport& other);
};

VerifyReport verify_rookcore(const VerifyOptions& opts);
VerifyReport verify_action(const VerifyOptions& opts);
VerifyReport verify_rcode(const VerifyOptions& opts);
VerifyReport verify_matsumoto(const VerifyOptions& opts);
VerifyReport verify_order(const VerifyOptions& opts);
VerifyReport verify_stellar_module(const VerifyOptions& opts);
VerifyReport verify_reptheory(const VerifyOptions& opts);
VerifyReport verify_all(const VerifyOptions& opts);

/// Named suite lookup ("rookcore", "action", ..., "all"); throws on unknown.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace rook0
