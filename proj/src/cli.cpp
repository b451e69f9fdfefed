#include "qset/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <string>

#include "qset/axiom_suite.hpp"
#include "qset/labelling.hpp"
#include "qset/notation.hpp"
#include "qset/relations.hpp"
#include "qset/statistics.hpp"

namespace qset::cli {

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

void print_parsed(const Entity& e, std::ostream& out) {
  out << print_canonical(e) << '\n';
  if (const QSet* q = e.as_qset()) out << "qc=" << q->qc() << '\n';
}

int cmd_parse(const std::optional<std::string>& expr, const std::optional<std::string>& file, std::ostream& out,
              std::ostream& err) {
  if (expr.has_value() == file.has_value()) {
    err << "parse: give exactly one of EXPR or --file\n";
    return code(ExitCode::Usage);
  }
  if (expr) {
    print_parsed(parse(*expr), out);
    return code(ExitCode::Success);
  }
  std::ifstream in(*file);
  if (!in) {
    err << "parse: cannot open " << *file << '\n';
    return code(ExitCode::Usage);
  }
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      print_parsed(parse(line), out);
    } catch (const Error& e) {
      err << *file << ':' << lineno << ": " << e.what() << '\n';
      return code(exit_code_for(e.kind()));
    }
  }
  return code(ExitCode::Success);
}

int cmd_eq(const std::string& a_text, const std::string& b_text, const std::string& relation, std::ostream& out,
           std::ostream& err) {
  Entity a = parse(a_text);
  Entity b = parse(b_text);
  const bool want_indist = relation != "ext_eq";
  const bool want_ext = relation != "indist";
  bool any_well_formed = false;
  std::string ill_message;
  if (want_indist) {
    out << "indist=" << (indist(a, b) ? "true" : "false") << '\n';
    any_well_formed = true;
  }
  if (want_ext) {
    try {
      const bool equal = ext_eq(a, b);
      out << "ext_eq=" << (equal ? "true" : "false") << '\n';
      any_well_formed = true;
    } catch (const IllFormedFormula& e) {
      out << "ext_eq=ill-formed\n";
      ill_message = e.what();
    }
  }
  if (!any_well_formed) {
    err << "eq: " << ill_message << '\n';
    return code(ExitCode::IllFormed);
  }
  return code(ExitCode::Success);
}

int cmd_label(const std::string& text, std::ostream& out, std::ostream& err) {
  Entity e = parse(text);
  const QSet* input = e.as_qset();
  if (input == nullptr) {
    throw Error(ErrorKind::NotPure, "labelling needs a qset, got the atom " + print_canonical(e));
  }
  LabelledWarehouse w = label(*input);
  if (!verify_weak_labelling(w)) {
    err << "label: weak labelling postcondition failed\n";
    return code(ExitCode::SuiteFailure);
  }
  for (const auto& p : w.pairs()) {
    out << p.second().as_nat()->value << ": " << print_canonical(p.first()) << '\n';
  }
  out << "qc(w)=" << w.w.qc() << '\n';
  return code(ExitCode::Success);
}

int cmd_stats(std::uint64_t n, std::uint64_t k, StatKind kind, bool enumerate, std::ostream& out) {
  out << "count=" << microstate_count(n, k, kind) << '\n';
  if (enumerate) {
    for (const auto& v : enumerate_occupancies(n, k, kind == StatKind::FermiDirac)) {
      out << '(';
      for (std::size_t i = 0; i < v.k(); ++i) out << (i ? "," : "") << v.counts()[i];
      out << ") weight=" << mb_weight(v) << '\n';
    }
  }
  return code(ExitCode::Success);
}

int cmd_check(std::uint64_t seed, std::uint64_t cases, std::ostream& out) {
  GenConfig cfg;
  cfg.seed = seed;
  SuiteReport report = run_suite(cfg, cases);
  out << report.to_text();
  return code(report.total_failures() == 0 ? ExitCode::Success : ExitCode::SuiteFailure);
}

}  // namespace

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IllFormedFormula:
    case ErrorKind::NotPure:
    case ErrorKind::MalformedPair:
      return ExitCode::IllFormed;
    case ErrorKind::Overflow:
    case ErrorKind::ScaleExceeded:
    case ErrorKind::CardinalTooLarge:
      return ExitCode::Scale;
    case ErrorKind::Syntax:
    case ErrorKind::CountZero:
    case ErrorKind::DepthExceeded:
    case ErrorKind::UniverseMiss:
    case ErrorKind::NotAMember:
    case ErrorKind::EmptyQset:
    case ErrorKind::InvalidArgument:
      return ExitCode::Usage;
  }
  return ExitCode::Usage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite models of quasi-set theory", "qset"};
  app.require_subcommand(1);

  std::optional<std::string> parse_expr_text;
  std::optional<std::string> parse_file;
  auto* parse_cmd = app.add_subcommand("parse", "Print the canonical form and quasi-cardinal of an expression");
  parse_cmd->add_option("expr", parse_expr_text, "qset expression");
  parse_cmd->add_option("--file", parse_file, "read one expression per line");

  std::string eq_a;
  std::string eq_b;
  std::string relation = "both";
  auto* eq_cmd = app.add_subcommand("eq", "Compare two entities under indistinguishability and extensional equality");
  eq_cmd->add_option("a", eq_a, "first entity")->required();
  eq_cmd->add_option("b", eq_b, "second entity")->required();
  eq_cmd->add_option("--relation", relation, "which relations to report")
      ->check(CLI::IsMember({"both", "indist", "ext_eq"}));

  std::string label_expr;
  auto* label_cmd = app.add_subcommand("label", "Label the elements of a finite weak singleton");
  label_cmd->add_option("expr", label_expr, "pure single-species qset")->required();

  std::uint64_t particles = 0;
  std::uint64_t states = 0;
  std::string kind_name;
  bool enumerate = false;
  auto* stats_cmd = app.add_subcommand("stats", "Count microstates of n particles over k states");
  stats_cmd->add_option("--particles", particles, "number of particles n")->required();
  stats_cmd->add_option("--states", states, "number of states k")->required();
  stats_cmd->add_option("--kind", kind_name, "be | fd | mb")->required()->check(CLI::IsMember({"be", "fd", "mb"}));
  stats_cmd->add_flag("--enumerate", enumerate, "list every occupancy vector with its multinomial weight");

  std::uint64_t seed = 42;
  std::uint64_t cases = 500;
  auto* check_cmd = app.add_subcommand("check", "Run the axiom battery");
  check_cmd->add_option("--seed", seed, "generator seed")->capture_default_str();
  check_cmd->add_option("--cases", cases, "cases per property")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return code(ExitCode::Success);
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return code(ExitCode::Success);
  } catch (const CLI::ParseError& e) {
    err << "qset: " << e.what() << '\n';
    return code(ExitCode::Usage);
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(parse_expr_text, parse_file, out, err);
    if (eq_cmd->parsed()) return cmd_eq(eq_a, eq_b, relation, out, err);
    if (label_cmd->parsed()) return cmd_label(label_expr, out, err);
    if (stats_cmd->parsed()) {
      StatKind kind = kind_name == "be"   ? StatKind::BoseEinstein
                      : kind_name == "fd" ? StatKind::FermiDirac
                                          : StatKind::MaxwellBoltzmann;
      return cmd_stats(particles, states, kind, enumerate, out);
    }
    if (check_cmd->parsed()) return cmd_check(seed, cases, out);
  } catch (const Error& e) {
    err << "qset: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return code(exit_code_for(e.kind()));
  }
  return code(ExitCode::Usage);
}

}  // namespace qset::cli
