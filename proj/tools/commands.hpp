#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rotavg/power_matrix.hpp"

namespace rotavg::cli {

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitLimit = 3;

enum class Format { json, csv };

/// "[[Q,R,S],[T,U,V],[W,X,Y]]"
PowerMatrix parse_chi_literal(const std::string& text);
/// Comma-separated lab/mol digit pairs, e.g. "11,23,32". Whitespace ignored.
MultiIndex parse_index_string(const std::string& text);
/// "a..b" or "n".
std::pair<int, int> parse_rank_range(const std::string& text);
/// Shortest decimal that round-trips.
std::string format_double(double v);

struct ComputeOptions {
  std::optional<std::string> chi;
  std::optional<std::string> indices;
};

struct AverageOptions {
  std::string input = "-";
  std::string output = "-";
  bool nonzero_only = false;
  int max_rank = 10;
  unsigned threads = 0;
};

struct EnumerateOptions {
  int rank = 0;
  bool nonzero = false;    // keep only selection-rule-passing matrices
  bool canonical = false;  // one record per symmetry orbit
  Format format = Format::json;
  int max_rank = 16;
  unsigned threads = 0;
};

struct VerifyOptions {
  std::string suite = "all";  // oracle | beta | mc | props | all
  std::string ranks = "0..6";
  unsigned threads = 0;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 20240601;
};

// Each command writes its result to `out`, diagnostics to `err`, and returns
// a process exit code.
int run_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err);
int run_average(const AverageOptions& options, std::ostream& out, std::ostream& err);
int run_enumerate(const EnumerateOptions& options, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace rotavg::cli
