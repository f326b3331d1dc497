#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cinfty/cring.hpp"
#include "cinfty/random_gen.hpp"

namespace cinfty {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  int checks = 0;
  int failures = 0;
  std::string detail;  // first failure, or a summary
  double seconds = 0.0;
  double time_limit = 0.0;  // seconds; exceeding it fails the criterion
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::string first_failure;
  std::map<std::string, int> verdicts;  // verdict kind -> count
};

/// Supplies random endomorphisms of the ring for the pullback suites.
using Endomorphisms = std::function<RingHom(gen::Rng&)>;

/// Randomized exact identity suites over `ring`: d_squared, graded_leibniz,
/// graded_commutativity, chain_rule, pullback_cdga and pullback_functor, each
/// with `trials` trials. A check passes only with a ProvedEqual verdict.
/// Without `endo`, pullbacks use homs out of free rings (always well defined).
std::vector<SuiteResult> identity_suites(const Ring& ring, std::uint64_t seed, int trials,
                                         const Endomorphisms& endo = nullptr);

constexpr int kCriterionCount = 9;
constexpr std::uint64_t kAcceptanceSeed = 20240229;

/// Runs criterion `id` (1..9). Exceptions raised by a check count as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = kAcceptanceSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kAcceptanceSeed);

/// "PASS  [3] CDGA laws: 1500 checks (2.41 s / 30 s)" style line.
std::string format_result(const CriterionResult& r);

}  // namespace cinfty
