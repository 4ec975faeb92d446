#include "btower/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

#include <json.hpp>

namespace btower {

namespace {

constexpr int kDefaultCap = 12;

std::int64_t pow3(int n) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

// Per-state scratch shared by build_graph and the restricted BFS: placements
// as raw peg indices, one entry per disk (index disk-1).
struct StateScratch {
  explicit StateScratch(int n) : pegs(static_cast<std::size_t>(n)), n(n) {}

  std::vector<std::uint8_t> pegs;
  int n;

  void decode(std::int64_t id) {
    // Digit i of the base-3 id is the peg of disk n-i.
    for (int i = 0; i < n; ++i) {
      pegs[static_cast<std::size_t>(n - 1 - i)] = static_cast<std::uint8_t>(id % 3);
      id /= 3;
    }
  }

  int count_on(int peg) const {
    int c = 0;
    for (const auto p : pegs)
      if (p == peg) ++c;
    return c;
  }

  // Disk leaving `peg` under `rules`, or 0 if the peg is empty.
  int removable(int peg, const RuleSet& rules) const {
    const int count = count_on(peg);
    if (count == 0) return 0;
    const int rank = static_cast<int>(rules.alpha().floor_mul(count)) + 1;
    int seen = 0;
    for (int d = 1; d <= n; ++d)
      if (pegs[static_cast<std::size_t>(d - 1)] == peg && ++seen == rank) return d;
    return 0;
  }

  bool insertion_legal(int peg, int disk, const RuleSet& rules) const {
    int count = 0, smaller = 0;
    for (int d = 1; d <= n; ++d) {
      if (pegs[static_cast<std::size_t>(d - 1)] == peg) {
        ++count;
        if (d < disk) ++smaller;
      }
    }
    return smaller == rules.alpha().floor_mul(count + 1);
  }
};

void check_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("graph: negative disk count");
  if (n > cap)
    throw CapError("graph for n = " + std::to_string(n) + " exceeds the scale cap " + std::to_string(cap));
}

std::int64_t encode_word(std::string_view word, int n) {
  if (static_cast<int>(word.size()) != n)
    throw WordError("word \"" + std::string(word) + "\" has length " + std::to_string(word.size()) +
                    ", expected " + std::to_string(n));
  std::int64_t id = 0;
  std::int64_t weight = 1;
  for (char ch : word) {
    id += peg_index(peg_from_char(ch)) * weight;
    weight *= 3;
  }
  return id;
}

std::string word_of_id(std::int64_t id, int n) {
  std::string w(static_cast<std::size_t>(n), 'A');
  for (int i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] = static_cast<char>('A' + id % 3);
    id /= 3;
  }
  return w;
}

struct BfsResult {
  std::vector<std::int32_t> dist;
  std::vector<BigCount> paths;
};

BfsResult layered_bfs(const StateGraph& g, std::int64_t source, bool count_paths) {
  BfsResult r;
  r.dist.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  if (count_paths) r.paths.assign(static_cast<std::size_t>(g.vertex_count()), BigCount(0));
  std::deque<std::int32_t> queue;
  r.dist[static_cast<std::size_t>(source)] = 0;
  if (count_paths) r.paths[static_cast<std::size_t>(source)] = 1;
  queue.push_back(static_cast<std::int32_t>(source));
  while (!queue.empty()) {
    const std::int32_t u = queue.front();
    queue.pop_front();
    for (const std::int32_t v : g.neighbors(u)) {
      if (r.dist[static_cast<std::size_t>(v)] < 0) {
        r.dist[static_cast<std::size_t>(v)] = r.dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
      if (count_paths && r.dist[static_cast<std::size_t>(v)] == r.dist[static_cast<std::size_t>(u)] + 1)
        r.paths[static_cast<std::size_t>(v)] += r.paths[static_cast<std::size_t>(u)];
    }
  }
  return r;
}

// Vertex ids sorted by their word, for deterministic exports.
std::vector<std::int64_t> lexicographic_ids(const StateGraph& g) {
  std::vector<std::int64_t> ids(static_cast<std::size_t>(g.vertex_count()));
  for (std::int64_t i = 0; i < g.vertex_count(); ++i) ids[static_cast<std::size_t>(i)] = i;
  std::sort(ids.begin(), ids.end(),
            [&](std::int64_t a, std::int64_t b) { return g.word_of(a) < g.word_of(b); });
  return ids;
}

}  // namespace

int default_scale_cap() {
  if (const char* env = std::getenv("BTOWER_ORACLE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0 && v <= 20) return static_cast<int>(v);
  }
  return kDefaultCap;
}

std::int64_t StateGraph::encode(std::string_view word) const { return encode_word(word, n_); }

std::string StateGraph::word_of(std::int64_t id) const { return word_of_id(id, n_); }

StateGraph build_graph(int n, const RuleSet& rules, int cap) {
  check_cap(n, cap);
  StateGraph g;
  g.n_ = n;
  g.rules_ = rules;
  const std::int64_t states = pow3(n);
  g.neighbors_.resize(static_cast<std::size_t>(states));
  g.degree_.assign(static_cast<std::size_t>(states), 0);

  StateScratch s(n);
  for (std::int64_t id = 0; id < states; ++id) {
    s.decode(id);
    int removable[3];
    for (int peg = 0; peg < 3; ++peg) removable[peg] = s.removable(peg, rules);
    auto& row = g.neighbors_[static_cast<std::size_t>(id)];
    std::uint8_t deg = 0;
    for (int from = 0; from < 3; ++from) {
      const int disk = removable[from];
      if (disk == 0) continue;
      for (int to = 0; to < 3; ++to) {
        if (to == from || !s.insertion_legal(to, disk, rules)) continue;
        // Moving disk d flips digit n-d of the id from `from` to `to`.
        const std::int64_t neighbor = id + static_cast<std::int64_t>(to - from) * pow3(n - disk);
        row[deg++] = static_cast<std::int32_t>(neighbor);
      }
    }
    g.degree_[static_cast<std::size_t>(id)] = deg;
  }
  return g;
}

std::optional<std::int64_t> bfs_distance(const StateGraph& g, std::string_view s, std::string_view t) {
  const std::int64_t sid = g.encode(s);
  const std::int64_t tid = g.encode(t);
  const BfsResult r = layered_bfs(g, sid, /*count_paths=*/false);
  const std::int32_t d = r.dist[static_cast<std::size_t>(tid)];
  if (d < 0) return std::nullopt;
  return static_cast<std::int64_t>(d);
}

BigCount shortest_path_count(const StateGraph& g, std::string_view s, std::string_view t) {
  const std::int64_t sid = g.encode(s);
  const std::int64_t tid = g.encode(t);
  const BfsResult r = layered_bfs(g, sid, /*count_paths=*/true);
  return r.paths[static_cast<std::size_t>(tid)];
}

std::optional<MoveTrace> shortest_trace(const StateGraph& g, std::string_view s, std::string_view t) {
  const std::int64_t sid = g.encode(s);
  const std::int64_t tid = g.encode(t);
  std::vector<std::int32_t> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  seen[static_cast<std::size_t>(sid)] = true;
  std::deque<std::int32_t> queue{static_cast<std::int32_t>(sid)};
  while (!queue.empty() && !seen[static_cast<std::size_t>(tid)]) {
    const std::int32_t u = queue.front();
    queue.pop_front();
    for (const std::int32_t v : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(tid)]) return std::nullopt;

  std::vector<std::int64_t> path{tid};
  while (path.back() != sid) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());

  MoveTrace trace;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const std::string before = g.word_of(path[i - 1]);
    const std::string after = g.word_of(path[i]);
    for (std::size_t k = 0; k < before.size(); ++k) {
      if (before[k] != after[k]) {
        trace.push_back(Move{peg_from_char(before[k]), peg_from_char(after[k])});
        break;
      }
    }
  }
  return trace;
}

SolverCheck verify_solver(int n, SolverVariant variant, int cap) {
  if (variant == SolverVariant::bouncing_alternative)
    throw std::invalid_argument("verify_solver: only the optimal variants (hanoi, bouncing) are checked");
  const RuleSet rules = (variant == SolverVariant::hanoi) ? RuleSet::hanoi() : RuleSet::bouncing();
  const MoveTrace trace = solve(variant, n);

  SolverCheck check;
  check.trace_len = static_cast<std::int64_t>(trace.size());

  Configuration conf = Configuration::uniform(n, PegId::A);
  check.legal = true;
  for (const Move& m : trace) {
    if (!is_legal_move(conf, m, rules)) {
      check.legal = false;
      break;
    }
    conf = apply_move(conf, m, rules);
  }
  check.terminal = check.legal && conf == Configuration::uniform(n, PegId::C);

  const StateGraph g = build_graph(n, rules, cap);
  const std::string source(static_cast<std::size_t>(n), 'A');
  const std::string target(static_cast<std::size_t>(n), 'C');
  check.bfs_len = bfs_distance(g, source, target);
  check.shortest_paths = shortest_path_count(g, source, target);
  check.unique = (check.shortest_paths == 1);
  return check;
}

std::vector<std::string> restricted_reachability(const Configuration& start, const RuleSet& rules,
                                                 const FixedDiskConstraint& constraint,
                                                 const std::set<PegId>& forbidden_pegs, int cap) {
  const int n = start.size();
  check_cap(n, cap);
  std::vector<bool> fixed(static_cast<std::size_t>(n) + 1, false);
  for (const auto& [disk, peg] : constraint.fixed) {
    if (disk < 1 || disk > n) throw std::invalid_argument("fixed-disk constraint names a nonexistent disk");
    if (start.peg_of(disk) != peg)
      throw std::invalid_argument("fixed-disk constraint disagrees with the start configuration");
    fixed[static_cast<std::size_t>(disk)] = true;
  }
  bool allowed[3];
  for (int p = 0; p < 3; ++p) allowed[p] = !forbidden_pegs.count(static_cast<PegId>(p));

  const std::int64_t start_id = encode_word(start.word(), n);
  std::vector<bool> seen(static_cast<std::size_t>(pow3(n)), false);
  seen[static_cast<std::size_t>(start_id)] = true;
  std::deque<std::int64_t> queue{start_id};
  std::vector<std::int64_t> reached{start_id};

  StateScratch s(n);
  while (!queue.empty()) {
    const std::int64_t id = queue.front();
    queue.pop_front();
    s.decode(id);
    for (int from = 0; from < 3; ++from) {
      if (!allowed[from]) continue;
      const int disk = s.removable(from, rules);
      if (disk == 0 || fixed[static_cast<std::size_t>(disk)]) continue;
      for (int to = 0; to < 3; ++to) {
        if (to == from || !allowed[to] || !s.insertion_legal(to, disk, rules)) continue;
        const std::int64_t neighbor = id + static_cast<std::int64_t>(to - from) * pow3(n - disk);
        if (!seen[static_cast<std::size_t>(neighbor)]) {
          seen[static_cast<std::size_t>(neighbor)] = true;
          queue.push_back(neighbor);
          reached.push_back(neighbor);
        }
      }
    }
  }

  std::vector<std::string> words;
  words.reserve(reached.size());
  for (const std::int64_t id : reached) words.push_back(word_of_id(id, n));
  std::sort(words.begin(), words.end());
  return words;
}

GraphFormat graph_format_from_name(const std::string& name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw std::invalid_argument("unsupported graph format \"" + name + "\"");
}

std::string export_graph(const StateGraph& g, GraphFormat format) {
  const std::vector<std::int64_t> ids = lexicographic_ids(g);
  std::vector<std::int64_t> lex_index(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < ids.size(); ++i) lex_index[static_cast<std::size_t>(ids[i])] = static_cast<std::int64_t>(i);

  // Each undirected edge once, as (i, j) with i < j in lexicographic index.
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (const std::int32_t nb : g.neighbors(ids[i])) {
      const std::int64_t j = lex_index[static_cast<std::size_t>(nb)];
      if (static_cast<std::int64_t>(i) < j) edges.emplace_back(static_cast<std::int64_t>(i), j);
    }
  }
  std::sort(edges.begin(), edges.end());

  if (format == GraphFormat::dot) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const std::int64_t id : ids) out << "  \"" << g.word_of(id) << "\";\n";
    for (const auto& [i, j] : edges)
      out << "  \"" << g.word_of(ids[static_cast<std::size_t>(i)]) << "\" -- \""
          << g.word_of(ids[static_cast<std::size_t>(j)]) << "\";\n";
    out << "}\n";
    return out.str();
  }

  nlohmann::ordered_json doc;
  doc["n"] = g.n();
  doc["alpha"] = g.rules().alpha().str();
  auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
  for (const std::int64_t id : ids) nodes.push_back(g.word_of(id));
  auto& jedges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [i, j] : edges) jedges.push_back({i, j});
  return doc.dump() + "\n";
}

}  // namespace btower
