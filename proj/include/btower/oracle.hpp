#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "btower/core_rules.hpp"
#include "btower/solver.hpp"

namespace btower {

/// Path counts are exact and must not silently overflow.
using BigCount = boost::multiprecision::cpp_int;

/// Default cap on the disk count for graph construction; overridable with
/// the BTOWER_ORACLE_CAP environment variable (3^12 = 531441 vertices).
int default_scale_cap();

/// The configuration graph: one vertex per word of {A,B,C}^n, one undirected
/// edge per legal move.  Vertex ids are the dense base-3 encoding of the
/// word (letter index times 3^position).  Immutable once built; queries are
/// safe from any number of threads.
class StateGraph {
 public:
  int n() const { return n_; }
  const RuleSet& rules() const { return rules_; }
  std::int64_t vertex_count() const { return static_cast<std::int64_t>(degree_.size()); }
  int degree(std::int64_t v) const { return degree_[static_cast<std::size_t>(v)]; }
  std::span<const std::int32_t> neighbors(std::int64_t v) const {
    return {neighbors_[static_cast<std::size_t>(v)].data(), static_cast<std::size_t>(degree(v))};
  }

  std::int64_t encode(std::string_view word) const;
  std::string word_of(std::int64_t id) const;

 private:
  friend StateGraph build_graph(int n, const RuleSet& rules, int cap);
  int n_ = 0;
  RuleSet rules_;
  std::vector<std::array<std::int32_t, 6>> neighbors_;
  std::vector<std::uint8_t> degree_;
};

StateGraph build_graph(int n, const RuleSet& rules, int cap = default_scale_cap());

/// Unweighted shortest-path length between two words, or nullopt when t is
/// unreachable from s.
std::optional<std::int64_t> bfs_distance(const StateGraph& g, std::string_view s, std::string_view t);

/// Number of distinct shortest paths from s to t (0 when unreachable, 1 when
/// s = t), counted over the layered BFS DAG with exact big-integer arithmetic.
BigCount shortest_path_count(const StateGraph& g, std::string_view s, std::string_view t);

/// One shortest move sequence from s to t, or nullopt when unreachable.
/// Deterministic for a given graph.
std::optional<MoveTrace> shortest_trace(const StateGraph& g, std::string_view s, std::string_view t);

struct SolverCheck {
  std::int64_t trace_len = 0;
  std::optional<std::int64_t> bfs_len;
  BigCount shortest_paths;
  bool unique = false;
  bool legal = false;
  bool terminal = false;
  bool ok() const { return legal && terminal && bfs_len && *bfs_len == trace_len && unique; }
};

/// Cross-checks the recursive solver against the graph: replays the trace for
/// legality and terminality, and compares its length with the BFS distance
/// A^n -> C^n, which must also be achieved by exactly one path.
SolverCheck verify_solver(int n, SolverVariant variant, int cap = default_scale_cap());

/// Disks that must not change pegs during a restricted search.
struct FixedDiskConstraint {
  std::vector<std::pair<int, PegId>> fixed;  // (disk size, peg it sits on)
};

/// Words reachable from `start` by legal moves that move no fixed disk and
/// touch no forbidden peg (as source or destination).  Sorted
/// lexicographically.  Throws std::invalid_argument if a fixed disk is not
/// where the constraint says.
std::vector<std::string> restricted_reachability(const Configuration& start, const RuleSet& rules,
                                                 const FixedDiskConstraint& constraint,
                                                 const std::set<PegId>& forbidden_pegs,
                                                 int cap = default_scale_cap());

enum class GraphFormat { dot, json };

GraphFormat graph_format_from_name(const std::string& name);

/// Deterministic serialization with vertices in lexicographic word order.
std::string export_graph(const StateGraph& g, GraphFormat format);

}  // namespace btower
