#pragma once

#include <string>
#include <vector>

#include "sbcg/invariants.hpp"

namespace sbcg {

struct CheckResult {
  std::string name;
  bool pass = false;
  long cases = 0;
  std::string note;  // first counterexample, or side observations
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  long total_cases() const;
};

// Sweep bounds.  Defaults keep the full run comfortably under a minute;
// unit tests push individual suites further.
struct VerifyOptions {
  int max_total = 6;                // total quanta for state sweeps
  std::vector<int> ns = {2, 3, 4};  // mode counts for the N-mode flavor
  int two_jmax_routes = 6;          // doubled j1, j2 bound, route agreement
  int two_jmax_racah = 8;           // doubled bound for the single-sum cross-check
  int two_jmax_reduce = 4;          // doubled bound for the two-mode reduction
  int sun_route_total = 5;          // na+nb bound, N-mode route agreement
  int commutator_total = 4;         // dressed-commutator sweep bound
  int oracle_total = 6;             // spectral / symmetrizer sector bound
};

SuiteResult verify_algebra(const VerifyOptions& opt);
SuiteResult verify_projector(const VerifyOptions& opt);
SuiteResult verify_cgc(const VerifyOptions& opt);
SuiteResult verify_isb(const VerifyOptions& opt);
SuiteResult verify_oracle(const VerifyOptions& opt);

// all five suites, in dependency order
std::vector<SuiteResult> verify_all(const VerifyOptions& opt);

}  // namespace sbcg
