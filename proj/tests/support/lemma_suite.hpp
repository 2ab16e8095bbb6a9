#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

namespace hkas::oracle {

/// Randomized check of the entropy inequalities and identities over small
/// joint distributions (<= 4 variables, <= 4 values each).
struct LemmaSuiteResult {
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::map<std::string, std::size_t> violations;  // property name -> count
  std::map<std::string, std::size_t> equality_cases;  // exact equality cases seen
  double max_identity_err = 0.0;

  std::size_t total_violations() const {
    std::size_t n = 0;
    for (const auto& [name, count] : violations) n += count;
    return n;
  }
};

LemmaSuiteResult run_lemma_suite(std::uint64_t seed, std::size_t trials, double tolerance = 1e-9);

}  // namespace hkas::oracle
