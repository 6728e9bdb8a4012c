#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nf/error.hpp"
#include "nf/normalization.hpp"
#include "nf/rational.hpp"

namespace nf::cli {

enum class CommandKind { Solve, Normalize, CheckNormal, Resultant, Chart, PdeBasis, Audit };
enum class Format { Json, Text };

/// Bad flags, missing inputs or unreadable files. Maps to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Command {
  CommandKind kind = CommandKind::Solve;
  std::optional<std::string> p;
  std::optional<std::string> q;
  std::optional<std::string> file;
  Format format = Format::Text;
  int chart_budget = 10;
  Rational isolation_width = Rational(1, 1024);
  MultiplierStrategy strategy = MultiplierStrategy::ShiftedMonomial;
};

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

/// Parses argv (argv[0] is the program name). `env_budget` is the value of
/// NF_CHART_BUDGET, if set; an explicit --budget wins over it. Throws
/// UsageError. Returns nullopt after printing help to `out`.
std::optional<Command> parse_command_line(const std::vector<std::string>& args,
                                          const char* env_budget, std::ostream& out);

/// Executes the command, writing the report to `out`. Errors propagate.
void run(const Command& command, std::ostream& out);

/// parse + run with error handling: exit 0 on success, 1 on usage or parse
/// errors, 2 on domain errors. Failures print one JSON line to `err`.
int main_entry(const std::vector<std::string>& args, const char* env_budget, std::ostream& out,
               std::ostream& err);

}  // namespace nf::cli
