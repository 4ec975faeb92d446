#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "btower/core_rules.hpp"

namespace btower {

enum class TraceFormat { text, json };

TraceFormat trace_format_from_name(const std::string& name);

/// A trace plus enough context to replay it.  The text format carries only
/// the moves (one "A->C" line each); callers supply the metadata, e.g. from
/// command line flags.  The json format is self-describing:
///   {"variant":"...","alpha":"p/q","n":...,"initial":"...","moves":[["A","C"],...]}
struct TraceDocument {
  std::string variant;  // bouncing | hanoi | alt | levitating
  RuleSet rules;
  int n = 0;
  std::string initial;
  MoveTrace moves;

  friend bool operator==(const TraceDocument&, const TraceDocument&);
};

/// Input rejected by the parser; line() is 1-based and 0 for document-level
/// problems.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string serialize_trace(const TraceDocument& doc, TraceFormat format);

/// Inverse of serialize_trace.  For the text format, only the move list of
/// the returned document is populated.
TraceDocument parse_trace(std::string_view text, TraceFormat format);

struct ReplayReport {
  std::size_t legal_prefix_len = 0;
  std::string final_word;  // after the legal prefix
  bool solved = false;
};

/// Replays the document move by move under its own rules, stopping at the
/// first illegal move.  solved means the whole trace was legal and the final
/// word is the expected terminal word for the document's variant (all disks
/// on C; for the alternative variant, the helper disk stays on B).
ReplayReport replay_verify(const TraceDocument& doc);

/// Terminal word a solved document must reach.
std::string expected_final_word(const TraceDocument& doc);

}  // namespace btower
