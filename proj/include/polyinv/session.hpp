#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polyinv/filtration.hpp"
#include "polyinv/monomial.hpp"

namespace polyinv {

enum class Engine { Iterative, Groebner, Both };
enum class OutputFormat { Pretty, Machine };

/// Exit status of a command.
enum ExitCode : int {
  kExitDefinitive = 0,
  kExitUsage = 1,
  kExitUnknown = 2,
  kExitDiscrepancy = 3,
};

struct SessionConfig {
  FiltrationSpec filtration = FiltrationSpec::degree();
  Engine engine = Engine::Iterative;
  /// Order inside the X and Y (or t) blocks of the Gröbner engine.
  MonomialOrder::Kind order = MonomialOrder::Kind::GrevLex;
  /// Iteration budget for invert; overrides every default.
  std::optional<unsigned> budget;
  /// t-degree budget for preimage; overrides every default.
  std::optional<unsigned> max_deg;
  /// Replaces the default budgets when no explicit one is given (the CLI
  /// fills this from POLYINV_MAX_DEG).
  std::optional<unsigned> default_budget_override;
  OutputFormat format = OutputFormat::Pretty;
  bool verbose = false;
};

struct Command {
  enum class Kind { Invert, GbInvert, Preimage, GbPreimage, Verify, Bench };

  Kind kind = Kind::Invert;
  /// Map literal F.
  std::string map;
  /// Map literal G for verify.
  std::string second_map;
  std::optional<std::string> point;
  std::optional<std::string> curve;

  // bench
  std::optional<std::uint64_t> seed;
  unsigned count = 20;
  std::size_t dim = 2;
  unsigned max_degree = 4;
  std::string domain = "QQ";
};

struct Report {
  int exit_code = kExitDefinitive;
  std::string text;
};

/// Parses the inputs, runs the selected engines, cross-checks them under
/// Engine::Both and renders the result. Never throws for bad input: parse
/// and precondition failures come back as exit code 1.
Report run(const SessionConfig& config, const Command& command);

}  // namespace polyinv
