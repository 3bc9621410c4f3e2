#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stackprice/exact.hpp"
#include "stackprice/oracle.hpp"

namespace stackprice {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInstance = 2,
  kExitLimit = 3,
  kExitBenchFailure = 4,  // bench --strict saw a FAIL
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchConfig {
  ExactNumber epsilon{1, 4};
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
  std::size_t tuple_limit = kDefaultTupleLimit;
};

struct BenchRow {
  std::string file;
  std::string digest;
  std::size_t m = 0;
  std::size_t k = 0;
  std::optional<ExactNumber> r_star;  // nullopt when the oracle hit a limit
  ExactNumber delta_bound;            // sum_j d_j Delta at the last hull point
  bool delta_pass = true;             // r* <= delta_bound
  ExactNumber sp_revenue;
  ExactNumber sp_factor;
  std::optional<ExactNumber> sp_ratio;  // r* / single-price revenue
  std::optional<bool> sp_pass;
  std::string vc_solver;  // "stackvc", "stackvc2" or empty
  std::optional<ExactNumber> vc_revenue;
  std::optional<ExactNumber> vc_ratio;
  std::optional<bool> vc_pass;
};

struct BenchTable {
  std::vector<BenchRow> rows;
  std::vector<std::string> skipped;  // "file: message"
  std::optional<ExactNumber> worst_sp_ratio;
  std::optional<ExactNumber> worst_vc_ratio;
  std::size_t failures = 0;
};

/// Every *.json file of `dir` in name order: oracle optimum, single-price
/// and (for cover instances) flow-based revenues with bound checks.
/// Unreadable entries land in `skipped`.
BenchTable run_bench(const std::string& dir, const BenchConfig& config);

void write_bench_table(std::ostream& os, const BenchTable& table);

}  // namespace stackprice
