#include "btower/trace_io.hpp"

#include <json.hpp>

namespace btower {

namespace {

const char* kVariants[] = {"bouncing", "hanoi", "alt", "levitating"};

bool known_variant(const std::string& v) {
  for (const char* k : kVariants)
    if (v == k) return true;
  return false;
}

void validate_document(const TraceDocument& doc) {
  if (!known_variant(doc.variant))
    throw ParseError(0, "unknown variant \"" + doc.variant + "\"");
  if (doc.n < 0) throw ParseError(0, "negative disk count");
  if (static_cast<int>(doc.initial.size()) != doc.n)
    throw ParseError(0, "initial word length " + std::to_string(doc.initial.size()) +
                            " does not match n = " + std::to_string(doc.n));
  for (char ch : doc.initial)
    if (ch < 'A' || ch > 'C') throw ParseError(0, std::string("bad peg letter '") + ch + "' in initial word");
}

}  // namespace

bool operator==(const TraceDocument& a, const TraceDocument& b) {
  return a.variant == b.variant && a.rules.alpha() == b.rules.alpha() && a.n == b.n &&
         a.initial == b.initial && a.moves == b.moves;
}

TraceFormat trace_format_from_name(const std::string& name) {
  if (name == "text") return TraceFormat::text;
  if (name == "json") return TraceFormat::json;
  throw std::invalid_argument("unsupported trace format \"" + name + "\"");
}

std::string serialize_trace(const TraceDocument& doc, TraceFormat format) {
  if (format == TraceFormat::text) {
    std::string out;
    for (const Move& m : doc.moves) {
      out += peg_char(m.from);
      out += "->";
      out += peg_char(m.to);
      out += '\n';
    }
    return out;
  }
  validate_document(doc);
  nlohmann::ordered_json j;
  j["variant"] = doc.variant;
  j["alpha"] = doc.rules.alpha().str();
  j["n"] = doc.n;
  j["initial"] = doc.initial;
  auto& moves = j["moves"] = nlohmann::ordered_json::array();
  for (const Move& m : doc.moves)
    moves.push_back({std::string(1, peg_char(m.from)), std::string(1, peg_char(m.to))});
  return j.dump() + "\n";
}

namespace {

Move parse_move_line(const std::string& line, std::size_t line_no) {
  if (line.size() != 4 || line[1] != '-' || line[2] != '>')
    throw ParseError(line_no, "expected a move of the form \"A->C\", got \"" + line + "\"");
  PegId from, to;
  try {
    from = peg_from_char(line[0]);
    to = peg_from_char(line[3]);
  } catch (const WordError& e) {
    throw ParseError(line_no, e.what());
  }
  if (from == to) throw ParseError(line_no, "move must use two distinct pegs");
  return Move{from, to};
}

TraceDocument parse_text(std::string_view text) {
  TraceDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string line(text.substr(pos, end - pos));
    if (!line.empty()) doc.moves.push_back(parse_move_line(line, line_no));
    pos = end + 1;
  }
  return doc;
}

TraceDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid json: ") + e.what());
  }
  TraceDocument doc;
  try {
    doc.variant = j.at("variant").get<std::string>();
    doc.rules = RuleSet(Rational::parse(j.at("alpha").get<std::string>()));
    doc.n = j.at("n").get<int>();
    doc.initial = j.at("initial").get<std::string>();
    std::size_t index = 0;
    for (const auto& m : j.at("moves")) {
      ++index;
      if (!m.is_array() || m.size() != 2 || !m[0].is_string() || !m[1].is_string() ||
          m[0].get<std::string>().size() != 1 || m[1].get<std::string>().size() != 1)
        throw ParseError(index, "moves must be pairs of peg letters");
      const PegId from = peg_from_char(m[0].get<std::string>()[0]);
      const PegId to = peg_from_char(m[1].get<std::string>()[0]);
      if (from == to) throw ParseError(index, "move must use two distinct pegs");
      doc.moves.push_back(Move{from, to});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad trace document: ") + e.what());
  } catch (const WordError& e) {
    throw ParseError(0, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  validate_document(doc);
  return doc;
}

}  // namespace

TraceDocument parse_trace(std::string_view text, TraceFormat format) {
  return format == TraceFormat::text ? parse_text(text) : parse_json(text);
}

std::string expected_final_word(const TraceDocument& doc) {
  std::string target(static_cast<std::size_t>(doc.n), 'C');
  if (doc.variant == "alt" && doc.n > 0) target.back() = 'B';  // helper disk stays on B
  return target;
}

ReplayReport replay_verify(const TraceDocument& doc) {
  validate_document(doc);
  ReplayReport report;
  Configuration conf = Configuration::from_word(doc.initial);
  for (const Move& m : doc.moves) {
    if (!is_legal_move(conf, m, doc.rules)) break;
    conf = apply_move(conf, m, doc.rules);
    ++report.legal_prefix_len;
  }
  report.final_word = conf.word();
  report.solved =
      report.legal_prefix_len == doc.moves.size() && report.final_word == expected_final_word(doc);
  return report;
}

}  // namespace btower
