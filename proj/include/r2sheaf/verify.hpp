#pragma once

// Exhaustive and randomized self-checks shared by the `selftest` subcommand
// and the acceptance test binary. Each criterion sweeps a grid or a seeded
// random sample and compares independent computations exactly.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "r2sheaf/euler.hpp"
#include "r2sheaf/sheaf.hpp"

namespace r2sheaf::verify {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double seconds = 0;
  double budget_seconds = 0;  // 0 means no budget
  std::string first_failure;

  bool passed() const {
    return cases > 0 && failures == 0 && (budget_seconds <= 0 || seconds < budget_seconds);
  }
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<SuiteResult> suites;

  bool passed() const;
  std::size_t cases() const;
  std::string summary() const;
};

// Replaceable building blocks, so that deliberately broken variants can be
// shown to be caught.
using TwistFn = std::function<Rank2Sheaf(const Rank2Sheaf&, std::int64_t)>;

struct Hooks {
  BinomialFn binom;  // empty: polynomial binomial
  TwistFn twist;     // empty: the library twist
  std::uint64_t seed = 0x5eed2024;
  std::size_t random_cases = 1000;
};

CriterionResult rank_one_consistency(const Hooks& = {});      // 1
CriterionResult closed_form_sweep(const Hooks& = {});         // 2
CriterionResult dual_formula_sweep(const Hooks& = {});        // 3
CriterionResult serre_duality_zero(const Hooks& = {});        // 4
CriterionResult oldbound_thresholds(const Hooks& = {});       // 5
CriterionResult castelnuovo_equivalence(const Hooks& = {});   // 6
CriterionResult firstbound_degeneration(const Hooks& = {});   // 7
CriterionResult hypersurface_constants(const Hooks& = {});    // 8
CriterionResult inference_regression(const Hooks& = {});      // 9
CriterionResult moduli_reports(const Hooks& = {});            // 10
CriterionResult property_suites(const Hooks& = {});           // 11

std::vector<CriterionResult> run_all(const Hooks& = {});

}  // namespace r2sheaf::verify
