#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "z4seq/report.hpp"

namespace z4seq {

struct SweepConfig {
  std::uint64_t p_max = 40;
  std::uint64_t q_max = 40;
  int r_max = 32;
  std::string output_path;
  std::string format = "csv";
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = false;
};

struct SweepSummary {
  std::size_t pairs = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t errors = 0;
};

/// Throws InvalidArgument unless p_max, q_max >= 5 and 1 <= r_max <= 64.
void validate(const SweepConfig& config);

/// Ordered admissible pairs with ord_pq(2) <= r_max, sorted by (p, q).
std::vector<std::pair<std::uint64_t, std::uint64_t>> sweep_pairs(const SweepConfig& config);

/// Analyzes one pair; failures become an error row.
SweepRow sweep_one(std::uint64_t p, std::uint64_t q, int r_max);

/// Runs the pairs on a bounded worker pool. emit sees rows in (p, q) order,
/// each as soon as it and all earlier rows are done.
SweepSummary run_sweep(const SweepConfig& config,
                       const std::function<void(const SweepRow&)>& emit);

/// Entry point of the z4seq tool. args excludes the program name.
/// Returns 0 when every requested check passed, 1 when a check failed,
/// 2 on errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace z4seq
