#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "torikit/fan.hpp"

namespace torikit::cli {

enum class Command { Validate, Orbits, Betti, Ring, Picard, Hilbert, Certify };
enum class OutputFormat { Text, Json };
enum class BettiMode { Equivariant, Ordinary };

struct RunConfig {
  std::string input;
  Command command = Command::Validate;
  unsigned max_degree = 20;  // even
  BettiMode mode = BettiMode::Equivariant;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::size_t> cone;
  bool verbose = false;
};

/// Bad command line. `help` is set when --help was requested (exit 0).
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& what, bool help = false) : std::runtime_error(what), help_(help) {}
  bool help() const noexcept { return help_; }

 private:
  bool help_;
};

RunConfig parse_command_line(int argc, const char* const* argv);

using Report = nlohmann::ordered_json;

struct CommandResult {
  int exit_code = 0;
  Report report;
};

// Each command assumes a fan that passed validation (run() checks this).
CommandResult cmd_validate(const Fan& f, const RunConfig& config);
CommandResult cmd_orbits(const Fan& f, const RunConfig& config);
CommandResult cmd_betti(const Fan& f, const RunConfig& config);
CommandResult cmd_ring(const Fan& f, const RunConfig& config);
CommandResult cmd_picard(const Fan& f, const RunConfig& config);
CommandResult cmd_hilbert(const Fan& f, const RunConfig& config);
CommandResult cmd_certify(const Fan& f, const RunConfig& config);

/// Human-readable rendering of a report produced by one of the commands.
std::string render_text(const Report& report);

/// Loads the fan, dispatches and prints. Exit codes: 0 success, 1 failed
/// precondition or validation, 2 input or usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torikit::cli
