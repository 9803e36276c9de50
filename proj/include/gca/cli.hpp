#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "gca/report.hpp"

namespace gca {

enum class Command { Validate, CheckAxioms, ConstructCur, CendAssoc, Trivialize, Decompose, Recover, Simplicity };

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view name);

inline constexpr std::string_view kConventionsVersion = "additive-v1";

struct JobSpec {
  Command command = Command::Validate;
  std::string input;
  std::optional<unsigned> degree_bound;
  std::uint64_t seed = 0;
  Format format = Format::Human;
  /// Wall-clock timings make the report non-reproducible, so they are opt-in.
  bool timing = false;
};

enum ExitStatus : int { kSuccess = 0, kMathFailure = 1, kInputError = 2 };

/// Runs the job and fills the report; returns the exit status.
int run(const JobSpec& job, Report& report);
/// Runs the job and writes the report in the requested format.
int run(const JobSpec& job, std::ostream& out);

}  // namespace gca
