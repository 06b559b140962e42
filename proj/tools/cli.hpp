#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "padicmin/limits.hpp"

namespace padicmin::cli {

enum class Command { kAnalyze, kCycles, kConjugacy, kStream, kSweep };
enum class OutputFormat { kText, kJson };

inline constexpr int kExitMinimal = 0;
inline constexpr int kExitNotMinimal = 1;
inline constexpr int kExitError = 2;

struct CliConfig {
  Command command = Command::kAnalyze;
  std::uint64_t prime = 0;
  std::string coeffs;
  std::optional<int> level;
  std::optional<int> n_max;
  std::string seed = "0";
  std::optional<std::uint64_t> count;
  OutputFormat format = OutputFormat::kText;
  bool digits = false;
  unsigned threads = 1;
  // sweep box
  int degree = 4;
  std::optional<std::uint64_t> coefficient_bound;
  long constant_term = 1;
  std::optional<std::uint64_t> samples;
  Limits limits{};
};

/// Table bound and work budget from PADICMIN_TABLE_BOUND and
/// PADICMIN_WORK_BUDGET, falling back to the defaults.
Limits limits_from_environment();

int cmd_analyze(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_cycles(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_conjugacy(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_stream(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (without the program name) and dispatches. Diagnostics go to
/// `err`, results to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padicmin::cli
