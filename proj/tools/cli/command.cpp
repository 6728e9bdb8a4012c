#include "command.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nf/elimination.hpp"
#include "nf/json.hpp"
#include "nf/parse.hpp"
#include "nf/pde.hpp"
#include "nf/projective.hpp"
#include "nf/solver.hpp"

namespace nf::cli {
namespace {

using nf::json::Json;

struct Inputs {
  std::vector<std::string> lines;  // polynomial texts in order
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// A file holds either a JSON job {"p": ..., "q": ...} / {"equations": [...]}
// or one polynomial per line ('#' starts a comment line).
Inputs load_file(const std::string& path) {
  const std::string text = read_file(path);
  Inputs inputs;
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json job;
    try {
      job = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(std::string("malformed JSON job: ") + e.what());
    }
    if (job.contains("equations")) {
      for (const auto& e : job.at("equations")) inputs.lines.push_back(e.get<std::string>());
    } else {
      if (!job.contains("p") || !job.contains("q")) throw UsageError("JSON job needs \"p\" and \"q\"");
      inputs.lines = {job.at("p").get<std::string>(), job.at("q").get<std::string>()};
    }
    return inputs;
  }
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    inputs.lines.push_back(line);
  }
  return inputs;
}

std::vector<std::string> polynomial_texts(const Command& cmd) {
  std::vector<std::string> texts;
  if (cmd.file) texts = load_file(*cmd.file).lines;
  if (cmd.p || cmd.q) {
    if (!cmd.p || !cmd.q) throw UsageError("both -p and -q are required");
    if (cmd.file) throw UsageError("give either -p/-q or --file, not both");
    texts = {*cmd.p, *cmd.q};
  }
  if (texts.empty()) throw UsageError("no input: pass -p and -q, or --file");
  return texts;
}

std::pair<BiPoly, BiPoly> read_pair(const Command& cmd, const VarNames& names = {}) {
  const auto texts = polynomial_texts(cmd);
  if (texts.size() != 2) throw UsageError("expected exactly two polynomials, got " + std::to_string(texts.size()));
  return {parse_polynomial(texts[0], names), parse_polynomial(texts[1], names)};
}

SolveOptions solve_options(const Command& cmd) {
  SolveOptions options;
  options.chart_budget = cmd.chart_budget;
  options.isolation_width = cmd.isolation_width;
  return options;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string chart_text(const ProjectiveMap& map) {
  if (map.is_identity()) return "identity";
  // Rendered as a linear form in X, Y with Z standing in for the constant slot.
  const auto& row = map.matrix()[2];
  const BiPoly x_part = row[0] * BiPoly::variable(Var::X), y_part = row[1] * BiPoly::variable(Var::Y);
  std::string z_part = to_string(row[2] * BiPoly::variable(Var::Y), VarNames{"X", "Z"});
  std::string xy = to_string(x_part + y_part, VarNames{"X", "Y"});
  if (xy == "0") return "Z' = " + z_part;
  return "Z' = " + xy + (z_part.front() == '-' ? " - " + z_part.substr(1) : " + " + z_part);
}

void print_solution_text(std::ostream& out, const SolutionSet& set) {
  out << "chart: " << chart_text(set.chart) << '\n';
  out << "eliminant: " << to_string(set.eliminant) << '\n';
  out << "solutions:\n";
  for (const auto& s : set.solutions) {
    const std::string mult = s.multiplicity ? std::to_string(*s.multiplicity) : "unresolved";
    if (s.is_exact()) {
      out << "  (" << to_string(s.point().x) << ", " << to_string(s.point().y) << ")  mult " << mult << '\n';
    } else {
      const auto& b = std::get<BoxedPoint>(s.location);
      out << "  x in [" << to_string(b.x.lo) << ", " << to_string(b.x.hi) << "]";
      if (b.y) out << ", y in [" << to_string(b.y->lo) << ", " << to_string(b.y->hi) << "]";
      out << "  mult " << mult << '\n';
    }
  }
  for (const auto& e : set.escaped) {
    out << "  [" << to_string(e.point[0]) << ":" << to_string(e.point[1]) << ":" << to_string(e.point[2])
        << "]  at infinity, mult " << e.multiplicity << '\n';
  }
  if (set.nonreal_distinct > 0) out << "  " << set.nonreal_distinct << " non-real\n";
  out << "distinct: " << set.distinct_count << " (bezout " << set.bezout << ")\n";
  out << "mult_sum: " << (set.multiplicity_sum ? std::to_string(*set.multiplicity_sum) : "partial") << '\n';
}

void run_solve(const Command& cmd, std::ostream& out) {
  const auto [p, q] = read_pair(cmd);
  const SolutionSet set = solve(p, q, solve_options(cmd));
  if (cmd.format == Format::Json) return emit(out, json::solution_set(set));
  print_solution_text(out, set);
}

void run_audit(const Command& cmd, std::ostream& out) {
  const auto [p, q] = read_pair(cmd);
  SolveOptions options = solve_options(cmd);
  options.separate_fibers = true;
  const SolutionSet set = solve(p, q, options);
  const AuditReport report = audit(set);
  if (cmd.format == Format::Json) {
    Json j = json::audit_report(report);
    j["chart"] = json::projective_map(set.chart);
    return emit(out, j);
  }
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  out << "distinct " << report.distinct << " <= bezout " << report.bezout << ": "
      << (report.distinct_within_bound ? "yes" : "no") << '\n';
  out << "multiplicity sum: "
      << (report.multiplicity_sum ? std::to_string(*report.multiplicity_sum) : std::string("partial"));
  if (report.multiplicity_sum_matches) out << (*report.multiplicity_sum_matches ? " = " : " != ") << report.bezout;
  out << '\n';
  for (const auto& c : report.checks) {
    out << "  (" << to_string(c.point.x) << ", " << to_string(c.point.y) << ") eliminant " << c.eliminant
        << " dual " << c.dual << (c.agree() ? " ok" : " MISMATCH") << '\n';
  }
}

void run_normalize(const Command& cmd, std::ostream& out) {
  const auto [p, q] = read_pair(cmd);
  ChartSearchOptions search;
  search.budget = cmd.chart_budget;
  const ChartChoice chart = choose_generic_chart(p, q, search);
  const MultiplierFamily family = build_multipliers(chart.p, chart.q, cmd.strategy);
  const NormalSystem system = build_normal_system(chart.p, chart.q, family);
  const NormalityVerdict verdict = check_normality(system);
  const PreservationReport preservation = check_preservation(chart.p, chart.q, system);
  if (cmd.format == Format::Json) {
    Json j = json::normal_system(system, verdict, preservation);
    j["chart"] = json::projective_map(chart.map);
    return emit(out, j);
  }
  out << "chart: " << chart_text(chart.map) << '\n';
  out << "N = " << system.degree << ", " << system.equations.size() << " equations:\n";
  for (const auto& e : system.equations) out << "  " << to_string(e) << '\n';
  out << "certificate: " << to_string(verdict.certificate) << (verdict.is_normal ? " (normal)" : " (not normal)")
      << '\n';
  out << "preserved: " << (preservation.preserved ? "yes" : "no") << '\n';
}

void run_check_normal(const Command& cmd, std::ostream& out) {
  const auto texts = polynomial_texts(cmd);
  std::vector<BiPoly> equations;
  for (const auto& t : texts) equations.push_back(parse_polynomial(t));
  NormalityVerdict verdict;
  if (cmd.p) {
    // -p/-q: check the default normal system built from the pair.
    const NormalSystem system =
        build_normal_system(equations[0], equations[1], build_multipliers(equations[0], equations[1], cmd.strategy));
    verdict = check_normality(system);
  } else {
    const int degree = static_cast<int>(equations.size()) - 1;
    verdict = check_normality(leading_matrix(equations, degree));
  }
  if (cmd.format == Format::Json) {
    return emit(out, Json{{"normal", verdict.is_normal}, {"certificate", json::rational(verdict.certificate)}});
  }
  out << (verdict.is_normal ? "normal" : "not normal") << ", certificate " << to_string(verdict.certificate) << '\n';
}

void run_resultant(const Command& cmd, std::ostream& out) {
  const auto [p, q] = read_pair(cmd);
  const UniPoly res = resultant_wrt_y(p, q);
  const Rational forms = resultant_of_forms(leading_form(p), leading_form(q));
  if (cmd.format == Format::Json) {
    return emit(out, Json{{"resultant_y", to_string(res)}, {"leading_forms_resultant", json::rational(forms)}});
  }
  out << "Res_y: " << to_string(res) << '\n';
  out << "resultant of leading forms: " << to_string(forms) << '\n';
}

void run_chart(const Command& cmd, std::ostream& out) {
  const auto [p, q] = read_pair(cmd);
  ChartSearchOptions search;
  search.budget = cmd.chart_budget;
  const ChartChoice chart = choose_generic_chart(p, q, search);
  if (cmd.format == Format::Json) {
    return emit(out, Json{{"chart", json::projective_map(chart.map)},
                          {"p", to_string(chart.p)},
                          {"q", to_string(chart.q)},
                          {"leading_forms_resultant", json::rational(chart.leading_resultant)}});
  }
  out << "chart: " << chart_text(chart.map) << '\n';
  out << "p' = " << to_string(chart.p) << '\n';
  out << "q' = " << to_string(chart.q) << '\n';
  out << "resultant of leading forms: " << to_string(chart.leading_resultant) << '\n';
}

void run_pde_basis(const Command& cmd, std::ostream& out) {
  const auto [p, q] = read_pair(cmd, VarNames::operators());
  const auto basis = solution_basis(p, q);
  if (cmd.format == Format::Json) return emit(out, json::solution_basis(basis));
  for (const auto& u : basis) out << to_string(u) << '\n';
}

int parse_budget(const std::string& text, const char* origin) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size() && value >= 0) return value;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("invalid chart budget from ") + origin + ": '" + text + "'");
}

}  // namespace

std::optional<Command> parse_command_line(const std::vector<std::string>& args, const char* env_budget,
                                          std::ostream& out) {
  CLI::App app{"Exact solver and normal-system builder for bivariate polynomial systems", "nf"};
  app.require_subcommand(1);

  Command cmd;
  std::optional<std::string> budget, width, strategy;
  bool json_output = false, text_output = false;

  struct Sub {
    const char* name;
    CommandKind kind;
    const char* help;
  };
  const Sub subs[] = {
      {"solve", CommandKind::Solve, "Solve p = q = 0 with multiplicities"},
      {"normalize", CommandKind::Normalize, "Build and check the normal system of (p, q)"},
      {"check-normal", CommandKind::CheckNormal, "Check normality of a system (file: one equation per line)"},
      {"resultant", CommandKind::Resultant, "Res_y(p, q) and the resultant of the leading forms"},
      {"chart", CommandKind::Chart, "Choose a chart where the leading forms are coprime"},
      {"pde-basis", CommandKind::PdeBasis, "Poly-exponential solutions of p(Dx,Dy)u = q(Dx,Dy)u = 0"},
      {"audit", CommandKind::Audit, "Solve and audit counts and multiplicities"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("-p", cmd.p, "first polynomial");
    sub->add_option("-q", cmd.q, "second polynomial");
    sub->add_option("-f,--file", cmd.file, "input file (one polynomial per line, or a JSON job)");
    sub->add_flag("--json", json_output, "JSON output");
    sub->add_flag("--text", text_output, "text output (default)");
    sub->add_option("--budget", budget, "chart search shell bound (default 10, or NF_CHART_BUDGET)");
    sub->add_option("--width", width, "real root isolation width, e.g. 1/1024");
    sub->add_option("--strategy", strategy, "multiplier strategy (shifted_monomial)");
    const CommandKind kind = s.kind;
    sub->callback([&cmd, kind] { cmd.kind = kind; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (json_output && text_output) throw UsageError("--json and --text are exclusive");
  cmd.format = json_output ? Format::Json : Format::Text;
  if (env_budget != nullptr && *env_budget != '\0') cmd.chart_budget = parse_budget(env_budget, "NF_CHART_BUDGET");
  if (budget) cmd.chart_budget = parse_budget(*budget, "--budget");
  if (width) {
    try {
      cmd.isolation_width = parse_rational(*width);
    } catch (const ParseError&) {
      throw UsageError("invalid --width '" + *width + "'");
    }
    if (cmd.isolation_width <= 0) throw UsageError("--width must be positive");
  }
  if (strategy) {
    try {
      cmd.strategy = parse_strategy(*strategy);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return cmd;
}

void run(const Command& command, std::ostream& out) {
  switch (command.kind) {
    case CommandKind::Solve: return run_solve(command, out);
    case CommandKind::Normalize: return run_normalize(command, out);
    case CommandKind::CheckNormal: return run_check_normal(command, out);
    case CommandKind::Resultant: return run_resultant(command, out);
    case CommandKind::Chart: return run_chart(command, out);
    case CommandKind::PdeBasis: return run_pde_basis(command, out);
    case CommandKind::Audit: return run_audit(command, out);
  }
}

namespace {

int fail(std::ostream& err, const std::string& kind, const std::string& message, int code,
         std::optional<std::size_t> column = std::nullopt) {
  nlohmann::ordered_json j{{"error", message}, {"kind", kind}, {"exit", code}};
  if (column) j["column"] = *column;
  err << j.dump() << '\n';
  return code;
}

}  // namespace

int main_entry(const std::vector<std::string>& args, const char* env_budget, std::ostream& out,
               std::ostream& err) {
  try {
    const auto cmd = parse_command_line(args, env_budget, out);
    if (!cmd) return kExitOk;
    std::ostringstream buffer;
    run(*cmd, buffer);
    out << buffer.str();
    return kExitOk;
  } catch (const UsageError& e) {
    return fail(err, "usage", e.what(), kExitUsage);
  } catch (const ParseError& e) {
    return fail(err, "parse", e.what(), kExitUsage, e.column());
  } catch (const DomainError& e) {
    return fail(err, "domain", e.what(), kExitDomain);
  } catch (const nlohmann::json::exception& e) {
    return fail(err, "usage", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return fail(err, "internal", e.what(), kExitDomain);
  }
}

}  // namespace nf::cli
