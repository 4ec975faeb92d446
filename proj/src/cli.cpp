#include "btower/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "btower/core_rules.hpp"
#include "btower/diskpile.hpp"
#include "btower/oracle.hpp"
#include "btower/solver.hpp"
#include "btower/trace_io.hpp"

namespace btower {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

RuleSet rules_for_variant(const std::string& variant, const std::string& alpha) {
  if (variant == "hanoi") return RuleSet::hanoi();
  if (variant == "bouncing" || variant == "alt") return RuleSet::bouncing();
  if (variant == "levitating") {
    if (alpha.empty()) throw std::invalid_argument("the levitating variant needs --alpha p/q");
    return RuleSet(Rational::parse(alpha));
  }
  throw std::invalid_argument("unknown variant \"" + variant + "\"");
}

// Document shape of a solve for `variant` with n moving disks.  The
// alternative strategy works on n disks sitting above-of-order of one smaller
// helper disk on B, so its document holds n+1 disks.
TraceDocument document_shape(const std::string& variant, int n, const std::string& alpha) {
  TraceDocument doc;
  doc.variant = variant;
  doc.rules = rules_for_variant(variant, alpha);
  if (variant == "alt") {
    doc.n = n + 1;
    doc.initial = std::string(static_cast<std::size_t>(n), 'A') + "B";
  } else {
    doc.n = n;
    doc.initial = std::string(static_cast<std::size_t>(n), 'A');
  }
  return doc;
}

void write_output(const std::string& payload, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file \"" + path + "\"");
  file << payload;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty()) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open input file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

struct Options {
  std::string variant;
  std::string alpha;
  std::string function;
  std::string method = "recurrence";
  std::string format;
  std::string action;
  std::string profile;
  std::string output;
  std::string input;
  int n = 0;
  int max_n = 15;
  int total = 0;
  int sizes = 0;
  int cap = 0;  // 0 = default (env or 12)
};

int effective_cap(const Options& opt, std::ostream& err) {
  if (opt.cap <= 0) return default_scale_cap();
  if (opt.cap > 12)
    err << "warning: a cap of " << opt.cap << " builds 3^" << opt.cap
        << " states; expect significant memory use\n";
  return opt.cap;
}

int cmd_solve(const Options& opt, std::istream&, std::ostream& out, std::ostream& err) {
  TraceDocument doc = document_shape(opt.variant, opt.n, opt.alpha);
  if (opt.variant == "levitating") {
    // No recursive solver exists for general alpha; emit a BFS shortest path.
    const StateGraph g = build_graph(opt.n, doc.rules, effective_cap(opt, err));
    const auto trace =
        shortest_trace(g, doc.initial, std::string(static_cast<std::size_t>(opt.n), 'C'));
    if (!trace) {
      err << "no path from " << doc.initial << " to the target state\n";
      return kExitVerificationFailure;
    }
    doc.moves = *trace;
  } else {
    doc.moves = solve(solver_variant_from_name(opt.variant), opt.n);
  }
  const TraceFormat format = trace_format_from_name(opt.format.empty() ? "text" : opt.format);
  write_output(serialize_trace(doc, format), opt.output, out);
  return kExitOk;
}

int cmd_count(const Options& opt, std::istream&, std::ostream& out, std::ostream&) {
  const CountFunction f = count_function_from_name(opt.function);
  std::int64_t value = 0;
  if (opt.method == "recurrence") value = count_recurrence(f, opt.n);
  else if (opt.method == "closed") value = count_closed_form(f, opt.n);
  else throw std::invalid_argument("unknown method \"" + opt.method + "\" (use recurrence or closed)");
  out << value << "\n";
  return kExitOk;
}

int cmd_table(const Options& opt, std::istream&, std::ostream& out, std::ostream&) {
  if (opt.max_n < 0 || opt.max_n > 60)
    throw std::invalid_argument("table: --max-n must lie in [0, 60]");
  out << std::setw(4) << "n" << std::setw(18) << "f010" << std::setw(18) << "f100" << std::setw(18)
      << "f000" << std::setw(18) << "3^ceil(n/2)" << "\n";
  for (int n = 0; n <= opt.max_n; ++n) {
    out << std::setw(4) << n << std::setw(18) << count_recurrence(CountFunction::f010, n)
        << std::setw(18) << count_recurrence(CountFunction::f100, n) << std::setw(18)
        << count_recurrence(CountFunction::f000, n) << std::setw(18) << ipow(3, (n + 1) / 2)
        << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
  const std::string payload = read_input(opt.input, in);
  std::string format = opt.format;
  if (format.empty() || format == "auto") {
    const auto first = payload.find_first_not_of(" \t\r\n");
    format = (first != std::string::npos && payload[first] == '{') ? "json" : "text";
  }

  TraceDocument doc;
  if (format == "json") {
    doc = parse_trace(payload, TraceFormat::json);
    if (!opt.variant.empty() && opt.variant != doc.variant)
      throw std::invalid_argument("--variant " + opt.variant + " does not match the document (" +
                                  doc.variant + ")");
    if (opt.n > 0) {
      const TraceDocument expected = document_shape(doc.variant, opt.n, doc.rules.alpha().str());
      if (expected.n != doc.n)
        throw std::invalid_argument("--n does not match the document");
    }
  } else {
    if (opt.variant.empty()) throw std::invalid_argument("text traces need --variant (and --n)");
    doc = document_shape(opt.variant, opt.n, opt.alpha);
    doc.moves = parse_trace(payload, TraceFormat::text).moves;
  }

  const ReplayReport report = replay_verify(doc);
  out << "moves=" << doc.moves.size() << "\n";
  out << "legal_prefix=" << report.legal_prefix_len << "\n";
  out << "final=" << report.final_word << "\n";
  out << "solved=" << (report.solved ? "true" : "false") << "\n";
  return report.solved ? kExitOk : kExitVerificationFailure;
}

int cmd_graph(const Options& opt, std::istream&, std::ostream& out, std::ostream& err) {
  const RuleSet rules(Rational::parse(opt.alpha.empty() ? "1/2" : opt.alpha));
  const StateGraph g = build_graph(opt.n, rules, effective_cap(opt, err));
  const GraphFormat format = graph_format_from_name(opt.format.empty() ? "dot" : opt.format);
  write_output(export_graph(g, format), opt.output, out);
  return kExitOk;
}

int cmd_oracle_check(const Options& opt, std::istream&, std::ostream& out, std::ostream& err) {
  const int cap = effective_cap(opt, err);
  if (!opt.variant.empty() && !opt.alpha.empty())
    throw std::invalid_argument("oracle-check takes either --variant or --alpha, not both");

  if (!opt.variant.empty()) {
    const SolverCheck check = verify_solver(opt.n, solver_variant_from_name(opt.variant), cap);
    out << "trace_len=" << check.trace_len << "\n";
    out << "bfs_len=" << (check.bfs_len ? std::to_string(*check.bfs_len) : "unreachable") << "\n";
    out << "shortest_paths=" << check.shortest_paths.str() << "\n";
    out << "unique=" << (check.unique ? "true" : "false") << "\n";
    out << "legal=" << (check.legal ? "true" : "false") << "\n";
    out << "terminal=" << (check.terminal ? "true" : "false") << "\n";
    out << "result=" << (check.ok() ? "ok" : "mismatch") << "\n";
    return check.ok() ? kExitOk : kExitVerificationFailure;
  }

  if (opt.alpha.empty())
    throw std::invalid_argument("oracle-check needs --variant hanoi|bouncing or --alpha p/q");
  // Informational mode: no solver exists for general alpha, report BFS facts.
  const RuleSet rules(Rational::parse(opt.alpha));
  const StateGraph g = build_graph(opt.n, rules, cap);
  const std::string source(static_cast<std::size_t>(opt.n), 'A');
  const std::string target(static_cast<std::size_t>(opt.n), 'C');
  const auto distance = bfs_distance(g, source, target);
  out << "alpha=" << rules.alpha().str() << "\n";
  out << "bfs_len=" << (distance ? std::to_string(*distance) : "unreachable") << "\n";
  out << "shortest_paths=" << shortest_path_count(g, source, target).str() << "\n";
  return kExitOk;
}

int cmd_diskpile(const Options& opt, std::istream&, std::ostream& out, std::ostream&) {
  if (opt.action == "worst") {
    out << worst_case_count(opt.total, opt.sizes) << "\n";
    return kExitOk;
  }
  if (opt.profile.empty()) throw std::invalid_argument("diskpile needs --profile n1,n2,...");
  const SizeProfile profile = SizeProfile::parse(opt.profile);
  if (opt.action == "count") {
    out << count_diskpile(profile) << "\n";
  } else if (opt.action == "solve") {
    if (!opt.format.empty() && opt.format != "text")
      throw std::invalid_argument("pile traces are emitted as text only");
    TraceDocument doc;
    doc.moves = solve_diskpile(profile, PegId::A, PegId::B, PegId::C);
    write_output(serialize_trace(doc, TraceFormat::text), opt.output, out);
  } else if (opt.action == "oracle") {
    out << diskpile_oracle(profile, opt.cap > 0 ? opt.cap : 9) << "\n";
  } else {
    throw std::invalid_argument("unknown action \"" + opt.action + "\" (count, solve, oracle, worst)");
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Tower puzzle solvers, step-count formulas and brute-force verification"};
  app.name("btower");
  app.require_subcommand(1);
  Options opt;

  auto* solve_cmd = app.add_subcommand("solve", "Emit a solving trace");
  solve_cmd->add_option("--variant", opt.variant, "hanoi, bouncing, alt or levitating")->required();
  solve_cmd->add_option("--n", opt.n, "number of disks to move")->check(CLI::NonNegativeNumber)->required();
  solve_cmd->add_option("--alpha", opt.alpha, "exact rational p/q (levitating only)");
  solve_cmd->add_option("--format", opt.format, "text (default) or json");
  solve_cmd->add_option("--output", opt.output, "write to a file instead of stdout");
  solve_cmd->add_option("--cap", opt.cap, "state-graph cap for levitating solves");

  auto* count_cmd = app.add_subcommand("count", "Print a step count");
  count_cmd->add_option("--function", opt.function, "f000, f100, f001, f010 or hanoi")->required();
  count_cmd->add_option("--n", opt.n, "argument")->check(CLI::NonNegativeNumber)->required();
  count_cmd->add_option("--method", opt.method, "recurrence (default) or closed");

  auto* table_cmd = app.add_subcommand("table", "Print the table of first values");
  table_cmd->add_option("--max-n", opt.max_n, "last row (default 15, at most 60)");

  auto* verify_cmd = app.add_subcommand("verify", "Replay a trace and report whether it solves");
  verify_cmd->add_option("--n", opt.n, "number of moving disks (text traces)")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--variant", opt.variant, "hanoi, bouncing, alt or levitating");
  verify_cmd->add_option("--alpha", opt.alpha, "exact rational p/q (levitating only)");
  verify_cmd->add_option("--format", opt.format, "auto (default), text or json");
  verify_cmd->add_option("--input", opt.input, "read from a file instead of stdin");

  auto* graph_cmd = app.add_subcommand("graph", "Export the configuration graph");
  graph_cmd->add_option("--n", opt.n, "number of disks")->check(CLI::NonNegativeNumber)->required();
  graph_cmd->add_option("--alpha", opt.alpha, "exact rational p/q (default 1/2)");
  graph_cmd->add_option("--format", opt.format, "dot (default) or json");
  graph_cmd->add_option("--out", opt.output, "write to a file instead of stdout");
  graph_cmd->add_option("--cap", opt.cap, "raise the scale cap (default 12)");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Cross-check a solver against BFS");
  oracle_cmd->add_option("--n", opt.n, "number of disks")->check(CLI::NonNegativeNumber)->required();
  oracle_cmd->add_option("--variant", opt.variant, "hanoi or bouncing");
  oracle_cmd->add_option("--alpha", opt.alpha, "report BFS facts for a levitating tower");
  oracle_cmd->add_option("--cap", opt.cap, "raise the scale cap (default 12)");

  auto* pile_cmd = app.add_subcommand("diskpile", "Disk-pile tools");
  pile_cmd->add_option("--profile", opt.profile, "counts, smallest size first, e.g. 3,1,2");
  pile_cmd->add_option("--action", opt.action, "count, solve, oracle or worst")->required();
  pile_cmd->add_option("--format", opt.format, "text");
  pile_cmd->add_option("--output", opt.output, "write to a file instead of stdout");
  pile_cmd->add_option("--total", opt.total, "total disks (action worst)");
  pile_cmd->add_option("--sizes", opt.sizes, "distinct sizes (action worst)");
  pile_cmd->add_option("--cap", opt.cap, "pile oracle cap (default 9)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(opt, in, out, err);
    if (count_cmd->parsed()) return cmd_count(opt, in, out, err);
    if (table_cmd->parsed()) return cmd_table(opt, in, out, err);
    if (verify_cmd->parsed()) return cmd_verify(opt, in, out, err);
    if (graph_cmd->parsed()) return cmd_graph(opt, in, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle_check(opt, in, out, err);
    if (pile_cmd->parsed()) return cmd_diskpile(opt, in, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "no subcommand given\n";
  return kExitUsage;
}

}  // namespace btower
