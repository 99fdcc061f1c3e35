#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "core/dynkin.hpp"

namespace meshk0 {

struct VerifyOptions {
  int nmax = 8;
  int kmax = 6;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::uint64_t seed = 20240611;
  int snf_samples = 500;
  // Criteria to run; empty runs all nine.
  std::set<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  long checks = 0;
  long failures = 0;
  // First few failure descriptions.
  std::vector<std::string> samples;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
};

inline constexpr int kCriterionCount = 9;

const char* criterion_title(int id);

CriterionResult run_criterion(int id, const VerifyOptions& options);
VerificationReport run_verification(const VerifyOptions& options);

// Calls body(i) for i in [0, count) across `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

// Grid for the Cartan oracle: A_n (n <= 5), D4, D5 with k <= 3, and E6 with k = 1.
std::vector<MeshTriple> oracle_grid();
// Grid for knitting against brute force: A2..A4 and D4 with k <= 2.
std::vector<MeshTriple> bruteforce_grid();

}  // namespace meshk0
