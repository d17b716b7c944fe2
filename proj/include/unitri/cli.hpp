#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unitri/serialize.hpp"

namespace unitri::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kBadInput = 2, kCapExceeded = 3 };

struct CommandResult {
  Json output;
  int exit_code = kPass;
};

// Splits q = p^e; throws std::invalid_argument unless q is a prime power.
FieldSpec field_spec_for_order(long long q, std::optional<std::vector<int>> modulus = std::nullopt);

// Runs one job. Throws std::invalid_argument, std::domain_error or CapExceeded.
CommandResult execute(const JobSpec& job);

// Runs one job and maps failures to exit codes; error diagnostics go to err.
CommandResult execute_checked(const JobSpec& job, std::ostream& err);

// Full command line: "<command> [flags]" or "run --job FILE". JSON goes to out
// (or to --out), diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Canonical text form of an output document.
std::string dump(const Json& j);

}  // namespace unitri::cli
