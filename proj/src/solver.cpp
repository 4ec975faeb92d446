#include "btower/solver.hpp"

#include <stdexcept>
#include <vector>

namespace btower {

SolverVariant solver_variant_from_name(const std::string& name) {
  if (name == "hanoi") return SolverVariant::hanoi;
  if (name == "bouncing") return SolverVariant::bouncing;
  if (name == "alt") return SolverVariant::bouncing_alternative;
  throw std::invalid_argument("unknown solver variant \"" + name + "\"");
}

std::string solver_variant_name(SolverVariant v) {
  switch (v) {
    case SolverVariant::hanoi: return "hanoi";
    case SolverVariant::bouncing: return "bouncing";
    case SolverVariant::bouncing_alternative: return "alt";
  }
  throw std::logic_error("bad variant");
}

CountFunction count_function_from_name(const std::string& name) {
  if (name == "f000") return CountFunction::f000;
  if (name == "f100") return CountFunction::f100;
  if (name == "f001") return CountFunction::f001;
  if (name == "f010") return CountFunction::f010;
  if (name == "hanoi") return CountFunction::hanoi;
  throw std::invalid_argument("unknown count function \"" + name + "\"");
}

std::string count_function_name(CountFunction f) {
  switch (f) {
    case CountFunction::f000: return "f000";
    case CountFunction::f100: return "f100";
    case CountFunction::f001: return "f001";
    case CountFunction::f010: return "f010";
    case CountFunction::hanoi: return "hanoi";
  }
  throw std::logic_error("bad count function");
}

namespace {

void emit_hanoi(int n, PegId a, PegId b, PegId c, MoveTrace& out) {
  if (n <= 0) return;
  emit_hanoi(n - 1, a, c, b, out);
  out.push_back(Move{a, c});
  emit_hanoi(n - 1, b, a, c, out);
}

void emit100(int n, PegId a, PegId b, PegId c, MoveTrace& out);
void emit001(int n, PegId a, PegId b, PegId c, MoveTrace& out);
void emit010(int n, PegId a, PegId b, PegId c, MoveTrace& out);

void emit000(int n, PegId a, PegId b, PegId c, MoveTrace& out) {
  if (n <= 0) return;
  emit100(n - 1, a, c, b, out);
  out.push_back(Move{a, c});
  emit001(n - 1, b, a, c, out);
}

void emit100(int n, PegId a, PegId b, PegId c, MoveTrace& out) {
  if (n == 1) {
    out.push_back(Move{a, c});
  } else if (n > 1) {
    emit100(n - 2, a, c, b, out);
    out.push_back(Move{a, c});
    out.push_back(Move{a, c});
    emit010(n - 2, b, a, c, out);
  }
}

void emit001(int n, PegId a, PegId b, PegId c, MoveTrace& out) {
  if (n == 1) {
    out.push_back(Move{a, c});
  } else if (n > 1) {
    emit010(n - 2, a, c, b, out);
    out.push_back(Move{a, c});
    out.push_back(Move{a, c});
    emit001(n - 2, b, a, c, out);
  }
}

void emit010(int n, PegId a, PegId b, PegId c, MoveTrace& out) {
  if (n == 1) {
    out.push_back(Move{a, c});
  } else if (n == 2) {
    out.push_back(Move{a, b});
    out.push_back(Move{a, c});
    out.push_back(Move{b, c});
  } else if (n > 2) {
    emit010(n - 2, a, b, c, out);
    out.push_back(Move{a, b});
    out.push_back(Move{a, b});
    emit010(n - 2, c, b, a, out);
    out.push_back(Move{b, c});
    out.push_back(Move{b, c});
    emit010(n - 2, a, b, c, out);
  }
}

void emit_alt101(int n, PegId a, PegId b, PegId c, MoveTrace& out);

void emit_alt010(int n, PegId a, PegId b, PegId c, MoveTrace& out) {
  if (n == 1) {
    out.push_back(Move{a, c});
  } else if (n > 1) {
    emit_alt101(n - 1, a, c, b, out);
    out.push_back(Move{a, c});
    emit_alt101(n - 1, b, a, c, out);
  }
}

void emit_alt101(int n, PegId a, PegId b, PegId c, MoveTrace& out) {
  if (n == 1) {
    out.push_back(Move{a, c});
  } else if (n > 1) {
    emit_alt010(n - 1, a, c, b, out);
    out.push_back(Move{a, c});
    emit_alt010(n - 1, b, a, c, out);
  }
}

void check_distinct(PegId a, PegId b, PegId c) {
  if (a == b || a == c || b == c) throw std::invalid_argument("the three pegs must be distinct");
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Largest n a 64-bit step count can hold for each family.
constexpr int kMaxHanoiN = 62;
constexpr int kMaxBouncingN = 78;

void check_count_range(CountFunction f, int n) {
  if (n < 0) throw std::invalid_argument("count: negative n");
  const int cap = (f == CountFunction::hanoi) ? kMaxHanoiN : kMaxBouncingN;
  if (n > cap)
    throw std::overflow_error("count " + count_function_name(f) + "(" + std::to_string(n) +
                              ") exceeds the 64-bit range");
}

}  // namespace

MoveTrace solve_hanoi(int n, PegId from, PegId via, PegId to) {
  if (n < 0) throw std::invalid_argument("solve_hanoi: negative disk count");
  check_distinct(from, via, to);
  MoveTrace out;
  emit_hanoi(n, from, via, to, out);
  return out;
}

MoveTrace move_xyz(ParityContext ctx, int n, PegId a, PegId b, PegId c) {
  if (n < 0) throw std::invalid_argument("move_xyz: negative disk count");
  if ((ctx.x | ctx.y | ctx.z) > 1 || (ctx.x & ctx.y & ctx.z) < 0)
    throw std::invalid_argument("move_xyz: parity bits must be 0 or 1");
  check_distinct(a, b, c);
  MoveTrace out;
  // The four contexts not reachable from the initial 000 call mirror their
  // complements: flipping the insertion-above/removal-above conventions maps
  // each context onto its bitwise complement with an identical trace.
  const int code = ctx.x * 4 + ctx.y * 2 + ctx.z;
  switch (code) {
    case 0b000: case 0b111: emit000(n, a, b, c, out); break;
    case 0b100: case 0b011: emit100(n, a, b, c, out); break;
    case 0b001: case 0b110: emit001(n, a, b, c, out); break;
    case 0b010: case 0b101: emit010(n, a, b, c, out); break;
    default: throw std::invalid_argument("move_xyz: bad parity context");
  }
  return out;
}

MoveTrace solve_alternative_010(int n, PegId a, PegId b, PegId c) {
  if (n < 1) throw std::invalid_argument("solve_alternative_010: needs n >= 1");
  check_distinct(a, b, c);
  MoveTrace out;
  emit_alt010(n, a, b, c, out);
  return out;
}

MoveTrace solve(SolverVariant v, int n) {
  switch (v) {
    case SolverVariant::hanoi: return solve_hanoi(n, PegId::A, PegId::B, PegId::C);
    case SolverVariant::bouncing: return move_xyz(ParityContext{0, 0, 0}, n, PegId::A, PegId::B, PegId::C);
    case SolverVariant::bouncing_alternative: return solve_alternative_010(n, PegId::A, PegId::B, PegId::C);
  }
  throw std::logic_error("bad variant");
}

std::int64_t count_recurrence(CountFunction f, int n) {
  check_count_range(f, n);
  if (f == CountFunction::hanoi) return ipow(2, n) - 1;
  if (f == CountFunction::f001) f = CountFunction::f100;

  std::vector<std::int64_t> f010(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (i == 0) f010[i] = 0;
    else if (i == 1) f010[i] = 1;
    else if (i == 2) f010[i] = 3;
    else f010[i] = 3 * f010[i - 2] + 4;
  }
  if (f == CountFunction::f010) return f010[n];

  std::vector<std::int64_t> f100(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (i == 0) f100[i] = 0;
    else if (i == 1) f100[i] = 1;
    else f100[i] = f100[i - 2] + 2 + f010[i - 2];
  }
  if (f == CountFunction::f100) return f100[n];

  // f000
  if (n == 0) return 0;
  if (n == 1) return 1;
  return 2 * f100[n - 1] + 1;
}

std::int64_t count_closed_form(CountFunction f, int n) {
  check_count_range(f, n);
  const bool odd = (n % 2) != 0;
  switch (f) {
    case CountFunction::hanoi:
      return ipow(2, n) - 1;
    case CountFunction::f010:
      if (n == 0) return 0;
      if (n == 1) return 1;
      if (n == 2) return 3;
      return odd ? ipow(3, (n + 1) / 2) - 2 : 5 * ipow(3, n / 2 - 1) - 2;
    case CountFunction::f001:
    case CountFunction::f100:
      if (n == 0) return 0;
      if (n == 1) return 1;
      if (n == 2) return 2;
      if (n == 3) return 4;
      return odd ? (ipow(3, (n + 1) / 2) - 1) / 2 : (5 * ipow(3, n / 2 - 1) - 1) / 2;
    case CountFunction::f000:
      if (n == 0) return 0;
      if (n == 1) return 1;
      if (n == 2) return 3;
      if (n == 3) return 5;
      return odd ? 5 * ipow(3, (n - 3) / 2) : ipow(3, n / 2);
  }
  throw std::logic_error("bad count function");
}

}  // namespace btower
