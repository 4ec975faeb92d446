#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "btower/core_rules.hpp"

namespace btower {

/// Disk multiplicities of a pile: counts[i] disks of size class i+1,
/// smallest class first, every count >= 1.
struct SizeProfile {
  std::vector<int> counts;

  int sizes() const { return static_cast<int>(counts.size()); }
  std::int64_t total() const;

  /// Comma-separated counts, smallest class first, e.g. "3,1,2".
  static SizeProfile parse(const std::string& text);
  std::string str() const;
};

/// Pile state: per peg, how many disks of each size class it holds.  Equal
/// disks are indistinguishable, so counts are a canonical encoding.  Disks
/// stack top-insertion/top-removal style and a disk may rest on an equal one.
class PileConfiguration {
 public:
  PileConfiguration(const SizeProfile& profile, PegId all_on);

  int count(PegId peg, int size_class) const;  // size_class in 1..s
  /// Smallest size class present on the peg (its top disk), or nullopt.
  std::optional<int> top_class(PegId peg) const;
  bool can_move(Move m) const;
  void apply(Move m);  // throws RuleError subtypes on illegal moves
  bool all_on(PegId peg) const;

 private:
  std::vector<std::array<int, 3>> counts_;  // [size_class-1][peg]
};

/// Recursive pile solver: moves each size class in consecutive moves.
/// The trace length always equals count_diskpile(p).
MoveTrace solve_diskpile(const SizeProfile& p, PegId from, PegId via, PegId to);

/// Sum of counts[i] * 2^(s-i-1): the exact optimal move count.
std::int64_t count_diskpile(const SizeProfile& p);

/// 2^(s-1) * (n - s + 2) - 1: the worst case over all profiles with n disks
/// in s size classes; equals 2^n - 1 when s = n.
std::int64_t worst_case_count(int n, int s);

/// Exact optimum by breadth-first search over canonical pile states.  The
/// default cap keeps the state space at desk scale.
std::int64_t diskpile_oracle(const SizeProfile& p, std::int64_t cap = 9);

}  // namespace btower
