#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "btower/core_rules.hpp"
#include "btower/diskpile.hpp"
#include "btower/oracle.hpp"
#include "btower/solver.hpp"
#include "btower/trace_io.hpp"

namespace py = pybind11;

using namespace btower;

namespace {

RuleSet rules_from(const std::string& alpha) { return RuleSet(Rational::parse(alpha)); }

std::pair<std::string, std::string> move_pair(Move m) {
  return {std::string(1, peg_char(m.from)), std::string(1, peg_char(m.to))};
}

Move move_from_pair(const std::pair<std::string, std::string>& p) {
  if (p.first.size() != 1 || p.second.size() != 1) throw WordError("peg names are single letters");
  return Move{peg_from_char(p.first[0]), peg_from_char(p.second[0])};
}

std::vector<std::pair<std::string, std::string>> trace_to_py(const MoveTrace& trace) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(trace.size());
  for (const Move& m : trace) out.push_back(move_pair(m));
  return out;
}

MoveTrace trace_from_py(const std::vector<std::pair<std::string, std::string>>& moves) {
  MoveTrace out;
  out.reserve(moves.size());
  for (const auto& p : moves) out.push_back(move_from_pair(p));
  return out;
}

py::int_ big_to_py(const BigCount& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

TraceDocument doc_from_py(const std::string& variant, const std::string& alpha, int n,
                          const std::string& initial,
                          const std::vector<std::pair<std::string, std::string>>& moves) {
  TraceDocument doc;
  doc.variant = variant;
  doc.rules = rules_from(alpha);
  doc.n = n;
  doc.initial = initial;
  doc.moves = trace_from_py(moves);
  return doc;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Solvers, step counts and brute-force verification for tower puzzles "
            "with parametric (middle) insertion and removal points";

  py::register_exception<EmptyPegError>(m, "EmptyPegError", PyExc_ValueError);
  py::register_exception<InsertionError>(m, "InsertionError", PyExc_ValueError);
  py::register_exception<WordError>(m, "WordError", PyExc_ValueError);
  py::register_exception<CapError>(m, "CapError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "TraceParseError", PyExc_ValueError);

  m.def("removal_rank",
        [](int count, const std::string& alpha) { return removal_rank(count, rules_from(alpha)); },
        py::arg("count"), py::arg("alpha") = "1/2",
        "Rank from the top (1 = topmost) of the disk that may leave a peg of `count` disks.");

  m.def("insertion_depth",
        [](int count, const std::string& alpha) { return insertion_depth(count, rules_from(alpha)); },
        py::arg("count"), py::arg("alpha") = "1/2",
        "Existing disks that stay above a disk inserted into a peg of `count` disks.");

  m.def("legal_moves",
        [](const std::string& word, const std::string& alpha) {
          return trace_to_py(legal_moves(Configuration::from_word(word), rules_from(alpha)));
        },
        py::arg("word"), py::arg("alpha") = "1/2");

  m.def("apply_move",
        [](const std::string& word, const std::pair<std::string, std::string>& move,
           const std::string& alpha) {
          return apply_move(Configuration::from_word(word), move_from_pair(move), rules_from(alpha))
              .word();
        },
        py::arg("word"), py::arg("move"), py::arg("alpha") = "1/2");

  m.def("removal_order",
        [](int n, const std::string& alpha) { return removal_order(n, rules_from(alpha)); },
        py::arg("n"), py::arg("alpha") = "1/2",
        "Order (by size) in which repeated removals empty a full n-tower.");

  m.def("solve",
        [](const std::string& variant, int n) {
          return trace_to_py(solve(solver_variant_from_name(variant), n));
        },
        py::arg("variant"), py::arg("n"),
        "Trace for a variant: 'hanoi', 'bouncing' or 'alt'.");

  m.def("count",
        [](const std::string& function, int n, const std::string& method) {
          const CountFunction f = count_function_from_name(function);
          if (method == "recurrence") return count_recurrence(f, n);
          if (method == "closed") return count_closed_form(f, n);
          throw std::invalid_argument("method must be 'recurrence' or 'closed'");
        },
        py::arg("function"), py::arg("n"), py::arg("method") = "recurrence");

  m.def("bfs_distance",
        [](int n, const std::string& alpha, const std::string& s, const std::string& t,
           int cap) -> std::optional<std::int64_t> {
          return bfs_distance(build_graph(n, rules_from(alpha), cap ? cap : default_scale_cap()), s, t);
        },
        py::arg("n"), py::arg("alpha"), py::arg("s"), py::arg("t"), py::arg("cap") = 0,
        "Shortest-path length between two words, or None when unreachable.");

  m.def("shortest_path_count",
        [](int n, const std::string& alpha, const std::string& s, const std::string& t, int cap) {
          return big_to_py(
              shortest_path_count(build_graph(n, rules_from(alpha), cap ? cap : default_scale_cap()), s, t));
        },
        py::arg("n"), py::arg("alpha"), py::arg("s"), py::arg("t"), py::arg("cap") = 0);

  m.def("verify_solver",
        [](int n, const std::string& variant, int cap) {
          const SolverCheck check =
              verify_solver(n, solver_variant_from_name(variant), cap ? cap : default_scale_cap());
          py::dict d;
          d["trace_len"] = check.trace_len;
          d["bfs_len"] = check.bfs_len ? py::cast(*check.bfs_len) : py::none();
          d["shortest_paths"] = big_to_py(check.shortest_paths);
          d["unique"] = check.unique;
          d["legal"] = check.legal;
          d["terminal"] = check.terminal;
          d["ok"] = check.ok();
          return d;
        },
        py::arg("n"), py::arg("variant"), py::arg("cap") = 0);

  m.def("export_graph",
        [](int n, const std::string& alpha, const std::string& format, int cap) {
          return export_graph(build_graph(n, rules_from(alpha), cap ? cap : default_scale_cap()),
                              graph_format_from_name(format));
        },
        py::arg("n"), py::arg("alpha") = "1/2", py::arg("format") = "dot", py::arg("cap") = 0);

  m.def("restricted_reachability",
        [](const std::string& start, const std::string& alpha,
           const std::vector<std::pair<int, std::string>>& fixed,
           const std::vector<std::string>& forbidden_pegs, int cap) {
          FixedDiskConstraint constraint;
          for (const auto& [disk, peg] : fixed) {
            if (peg.size() != 1) throw WordError("peg names are single letters");
            constraint.fixed.emplace_back(disk, peg_from_char(peg[0]));
          }
          std::set<PegId> forbidden;
          for (const auto& peg : forbidden_pegs) {
            if (peg.size() != 1) throw WordError("peg names are single letters");
            forbidden.insert(peg_from_char(peg[0]));
          }
          return restricted_reachability(Configuration::from_word(start), rules_from(alpha),
                                         constraint, forbidden, cap ? cap : default_scale_cap());
        },
        py::arg("start"), py::arg("alpha") = "1/2",
        py::arg("fixed") = std::vector<std::pair<int, std::string>>{},
        py::arg("forbidden_pegs") = std::vector<std::string>{}, py::arg("cap") = 0);

  m.def("diskpile_count",
        [](const std::vector<int>& counts) { return count_diskpile(SizeProfile{counts}); },
        py::arg("counts"));

  m.def("diskpile_solve",
        [](const std::vector<int>& counts) {
          return trace_to_py(solve_diskpile(SizeProfile{counts}, PegId::A, PegId::B, PegId::C));
        },
        py::arg("counts"));

  m.def("diskpile_oracle",
        [](const std::vector<int>& counts, std::int64_t cap) {
          return diskpile_oracle(SizeProfile{counts}, cap);
        },
        py::arg("counts"), py::arg("cap") = 9);

  m.def("worst_case_count", &worst_case_count, py::arg("n"), py::arg("s"));

  m.def("serialize_trace",
        [](const std::string& variant, const std::string& alpha, int n, const std::string& initial,
           const std::vector<std::pair<std::string, std::string>>& moves, const std::string& format) {
          return serialize_trace(doc_from_py(variant, alpha, n, initial, moves),
                                 trace_format_from_name(format));
        },
        py::arg("variant"), py::arg("alpha"), py::arg("n"), py::arg("initial"), py::arg("moves"),
        py::arg("format") = "json");

  m.def("parse_trace",
        [](const std::string& text, const std::string& format) {
          const TraceDocument doc = parse_trace(text, trace_format_from_name(format));
          py::dict d;
          d["variant"] = doc.variant;
          d["alpha"] = doc.rules.alpha().str();
          d["n"] = doc.n;
          d["initial"] = doc.initial;
          d["moves"] = trace_to_py(doc.moves);
          return d;
        },
        py::arg("text"), py::arg("format") = "json");

  m.def("replay_verify",
        [](const std::string& variant, const std::string& alpha, int n, const std::string& initial,
           const std::vector<std::pair<std::string, std::string>>& moves) {
          const ReplayReport report = replay_verify(doc_from_py(variant, alpha, n, initial, moves));
          py::dict d;
          d["legal_prefix_len"] = report.legal_prefix_len;
          d["final_word"] = report.final_word;
          d["solved"] = report.solved;
          return d;
        },
        py::arg("variant"), py::arg("alpha"), py::arg("n"), py::arg("initial"), py::arg("moves"));
}
