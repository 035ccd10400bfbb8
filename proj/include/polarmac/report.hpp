#ifndef POLARMAC_REPORT_HPP
#define POLARMAC_REPORT_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "polarmac/problem.hpp"

namespace polarmac {

struct RunOptions {
  std::string command;  // profile | eu | eulerfn | chi | cycle | check
  int cycle_k = -1;     // for `cycle`
  std::optional<std::uint64_t> seed;
  std::optional<int> resamples;
  std::optional<FieldSpec> field;
  bool parallel = false;
};

struct RunResult {
  nlohmann::ordered_json report;
  int exit_code = 0;  // 5 when `check` finds a failing property
};

/// Executes one subcommand against a loaded problem. Throws InputError,
/// GenericityError or BadPrimeError (the latter only after the alternate
/// prime has also failed).
RunResult run_command(const ProblemFile& problem, const RunOptions& options);

/// Human-readable rendering derived from the JSON report.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace polarmac

#endif
