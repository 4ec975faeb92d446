#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "btower/rational.hpp"

namespace btower {

// ---------------------------------------------------------------------------
// Pegs and moves
// ---------------------------------------------------------------------------

enum class PegId : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr PegId kAllPegs[3] = {PegId::A, PegId::B, PegId::C};

constexpr int peg_index(PegId p) { return static_cast<int>(p); }
constexpr char peg_char(PegId p) { return static_cast<char>('A' + peg_index(p)); }
PegId peg_from_char(char c);  // throws WordError on anything but A/B/C

struct Move {
  PegId from;
  PegId to;
  friend bool operator==(const Move&, const Move&) = default;
};

using MoveTrace = std::vector<Move>;

/// Parities (0/1) of the fixed-disk counts on the three pegs of a recursive
/// call: x for the source, y for the spare, z for the target.
struct ParityContext {
  int x = 0;
  int y = 0;
  int z = 0;
  friend bool operator==(const ParityContext&, const ParityContext&) = default;
};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct RuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Removal requested from a peg that holds no disk.
struct EmptyPegError final : RuleError {
  using RuleError::RuleError;
};

/// Insertion would leave a disk above a smaller one.
struct InsertionError final : RuleError {
  using RuleError::RuleError;
};

/// Malformed configuration word.
struct WordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested instance larger than a configured scale cap.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

/// The variant parameter.  alpha = 0 is the classic tower (top insertion and
/// removal), alpha = 1/2 is the bouncing tower (middle insertion and
/// removal), anything in between is a levitating tower.
class RuleSet {
 public:
  RuleSet() : alpha_() {}  // alpha = 0
  explicit RuleSet(Rational alpha);

  static RuleSet hanoi() { return RuleSet(); }
  static RuleSet bouncing() { return RuleSet(Rational(1, 2)); }

  const Rational& alpha() const { return alpha_; }

 private:
  Rational alpha_;  // in [0, 1/2]
};

/// Rank (counted from the top, 1 = topmost) of the one disk that may leave a
/// peg currently holding `count` disks.  Throws EmptyPegError for count = 0.
int removal_rank(int count, const RuleSet& rules);

/// Number of existing disks that remain above a disk inserted into a peg
/// currently holding `count` disks.
int insertion_depth(int count, const RuleSet& rules);

/// (total_on_peg - moving) mod 2; the parity that drives the removal order.
int fixed_disk_parity(int total_on_peg, int moving);

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

/// One peg's disks, bottom to top.  Stacking order within a peg is forced by
/// the sizes, so this is a derived view, mainly useful for invariant checks.
struct PegStack {
  std::vector<int> disks;  // sizes, bottom to top

  /// Strictly decreasing bottom to top, i.e. no disk above a smaller one.
  bool sorted() const;
};

/// Full puzzle state: which peg each of the disks 1..n (1 = smallest) is on.
/// Immutable value type; apply_move returns a fresh configuration.
class Configuration {
 public:
  Configuration() = default;  // n = 0, empty word

  static Configuration uniform(int n, PegId peg);
  /// Placement indexed by disk size, smallest first.
  static Configuration from_placement(std::vector<PegId> by_size);
  /// Word over {A,B,C}: letter i is the peg of the i-th largest disk.
  static Configuration from_word(std::string_view word);

  int size() const { return static_cast<int>(placement_.size()); }
  PegId peg_of(int disk) const;  // disk in 1..n
  int count_on(PegId peg) const;
  /// Number of disks on `peg` smaller than `disk`.
  int count_smaller_on(PegId peg, int disk) const;
  /// k-th smallest disk on `peg`, k in 1..count_on(peg).
  int kth_smallest_on(PegId peg, int k) const;

  std::string word() const;
  PegStack stack(PegId peg) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<PegId> placement_;  // index disk-1
  friend Configuration apply_move(const Configuration&, Move, const RuleSet&);
};

// ---------------------------------------------------------------------------
// Move legality and application
// ---------------------------------------------------------------------------

/// The disk that a move out of `peg` would relocate.  Throws EmptyPegError.
int removal_disk(const Configuration& c, PegId peg, const RuleSet& rules);

bool is_legal_move(const Configuration& c, Move m, const RuleSet& rules);

/// All legal moves of c, in lexicographic (from, to) order.
std::vector<Move> legal_moves(const Configuration& c, const RuleSet& rules);

/// Applies a move.  Throws EmptyPegError if the source peg is empty and
/// InsertionError if the insertion would break the sorted-stack invariant.
Configuration apply_move(const Configuration& c, Move m, const RuleSet& rules);

/// Applies the reverse of m to a post-move configuration; if c_after resulted
/// from applying m, this restores the pre-move configuration exactly.
Configuration inverse_move(const Configuration& c_after, Move m, const RuleSet& rules);

/// Order (by disk size) in which repeated single removals empty a full
/// n-tower.  Its reverse is the insertion order that rebuilds the tower.
std::vector<int> removal_order(int n, const RuleSet& rules);

/// Parity context of moving the first n disks off `a`, with spare `b` and
/// target `c`, in configuration `conf`.
ParityContext context_for(const Configuration& conf, int n, PegId a, PegId b, PegId c);

}  // namespace btower
