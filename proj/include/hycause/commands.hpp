#pragma once

#include "hycause/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace hycause {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitParse = 2,
  kExitSemantic = 3,
  kExitNotExecutable = 4,
  kExitInvalidSetting = 5,
  kExitNoCause = 6,
  kExitInternal = 70,
};

enum class Format { Json, Text };

struct CommandOptions {
  std::string theory_path;
  std::string scenario_path;
  std::string effect;
  Format format = Format::Json;
  /// Query time; the effect is always judged at the start of the last situation.
  std::optional<Rational> at;
  /// With `at` later than the scenario's start, append noOp(at).
  bool at_start = false;
  bool single_removal = false;
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

CommandResult cmd_validate(const CommandOptions& o);
CommandResult cmd_run(const CommandOptions& o);
CommandResult cmd_eval(const CommandOptions& o);
CommandResult cmd_cause(const CommandOptions& o);
CommandResult cmd_defuse(const CommandOptions& o);
CommandResult cmd_butfor(const CommandOptions& o);
/// Random valid settings from `seed`; verifies definition agreement, the
/// but-for dependence and that defusing leaves no cause.
CommandResult cmd_check(const CommandOptions& o);

/// Dispatch by command name; unknown names exit with kExitParse.
CommandResult run_command(const std::string& command, const CommandOptions& o);

}  // namespace hycause
