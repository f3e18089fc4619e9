#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/serialize.hpp"

namespace sfrey::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"covariants",      "frey",      "sf-set", "check-hypotheses",
                                              "tm-search",       "audit",     "distinguish"};
  return names;
}

/// Raw parameters as JSON values: flag text is coerced by `coerce_flag`,
/// config files are taken as is.
using RawConfig = io::Json;

/// "{...}" / "[...]" parse as JSON, an existing file path is read as JSON,
/// "a,b,c" becomes a list, anything else stays a string.
io::Json coerce_flag(const std::string& text);

struct JobConfig {
  std::string command;
  QuadField field = QuadField::rationals();
  std::optional<BinaryCubic> form;
  std::optional<Pair> point;
  std::optional<AlgInt> z;
  long height = 10;
  std::uint64_t class_bound = 10000;
  long l = 0;
  std::optional<PrimeIdeal> q;
  std::optional<WeierstrassCurve> curve1;
  std::optional<WeierstrassCurve> curve2;
  Int p = 2;
  std::uint64_t norm_bound = 1000;
  std::vector<PrimeIdeal> avoid;
  unsigned workers = 1;
  std::optional<std::string> resume;
  std::optional<std::string> out;
};

/// Validates everything the command needs; throws sfrey::Error.
JobConfig load_job(const std::string& command, const RawConfig& raw);

struct CommandResult {
  io::Json report;
  int exit_code = kOk;
};

CommandResult run_job(const JobConfig& job, std::ostream& log);

/// Full pipeline used by the binary: parse, run, map errors to exit code 2.
CommandResult execute(const std::string& command, const RawConfig& raw, std::ostream& log);

std::string render(const io::Json& report);

}  // namespace sfrey::cli
