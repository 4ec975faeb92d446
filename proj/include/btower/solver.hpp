#pragma once

#include <cstdint>
#include <string>

#include "btower/core_rules.hpp"

namespace btower {

enum class SolverVariant { hanoi, bouncing, bouncing_alternative };

SolverVariant solver_variant_from_name(const std::string& name);  // "hanoi" | "bouncing" | "alt"
std::string solver_variant_name(SolverVariant v);

/// Step-count functions.  f001 always equals f100.
enum class CountFunction { f000, f100, f001, f010, hanoi };

CountFunction count_function_from_name(const std::string& name);
std::string count_function_name(CountFunction f);

/// Classic recursion: trace of length 2^n - 1 moving n disks from -> to.
/// Throws std::invalid_argument unless the three pegs are distinct.
MoveTrace solve_hanoi(int n, PegId from, PegId via, PegId to);

/// Bouncing-tower recursion.  Moves the n first-removable disks of peg a to
/// peg c via peg b, given the parity context of the call.  Contexts 000, 100,
/// 001 and 010 are the ones reachable from the initial call move_xyz(000);
/// the other four are served by the mirror symmetry of the rules (their
/// traces equal the complement context's and are correct under mirrored
/// insertion/removal conventions).
MoveTrace move_xyz(ParityContext ctx, int n, PegId a, PegId b, PegId c);

/// The non-optimal alternative to the 010 strategy: a closed pair of
/// recursions each peeling one disk per call.  Correct in a 010 context but
/// of length 2^n - 1, exponentially longer than the 3^(n/2)-order optimum.
MoveTrace solve_alternative_010(int n, PegId a, PegId b, PegId c);

/// Full solve of the standard task for a variant.  hanoi and bouncing move n
/// disks A -> C; bouncing_alternative emits the alternative 010 trace (its
/// task starts from n moving disks on A with one smaller disk on B).
MoveTrace solve(SolverVariant v, int n);

/// Exact step count by iterating the recurrence system
///   f000(n) = 2 f100(n-1) + 1
///   f100(n) = f100(n-2) + 2 + f010(n-2)
///   f010(n) = 3 f010(n-2) + 4        (n > 2)
/// with f(0) = 0, f(1) = 1, f010(2) = 3, and hanoi(n) = 2^n - 1.
std::int64_t count_recurrence(CountFunction f, int n);

/// Closed forms, equal to count_recurrence for every n:
///   f010: 3^((n+1)/2) - 2 (odd n >= 3), 5*3^(n/2-1) - 2 (even n >= 4)
///   f100: (3^((n+1)/2) - 1)/2 (odd n >= 5), (5*3^(n/2-1) - 1)/2 (even n >= 4)
///   f000: 5*3^((n-3)/2) (odd n >= 5), 3^(n/2) (even n >= 4)
/// See docs/step_counts.md for the derivations and for two tempting but
/// wrong variants of the f100-even and f000-odd cases.
std::int64_t count_closed_form(CountFunction f, int n);

}  // namespace btower
