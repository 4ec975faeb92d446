#include "btower/diskpile.hpp"

#include <array>
#include <deque>
#include <numeric>
#include <sstream>

namespace btower {

std::int64_t SizeProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

SizeProfile SizeProfile::parse(const std::string& text) {
  SizeProfile p;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("profile: \"" + item + "\" is not a count");
    }
    if (pos != item.size() || value < 1)
      throw std::invalid_argument("profile: counts must be positive integers, got \"" + item + "\"");
    p.counts.push_back(value);
  }
  if (p.counts.empty()) throw std::invalid_argument("profile: at least one size class required");
  return p;
}

std::string SizeProfile::str() const {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

PileConfiguration::PileConfiguration(const SizeProfile& profile, PegId all_on)
    : counts_(profile.counts.size(), {0, 0, 0}) {
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    if (profile.counts[i] < 1) throw std::invalid_argument("profile: counts must be positive");
    counts_[i][peg_index(all_on)] = profile.counts[i];
  }
}

int PileConfiguration::count(PegId peg, int size_class) const {
  return counts_.at(static_cast<std::size_t>(size_class - 1))[peg_index(peg)];
}

std::optional<int> PileConfiguration::top_class(PegId peg) const {
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i][peg_index(peg)] > 0) return static_cast<int>(i) + 1;
  return std::nullopt;
}

bool PileConfiguration::can_move(Move m) const {
  if (m.from == m.to) return false;
  const auto src = top_class(m.from);
  if (!src) return false;
  const auto dst = top_class(m.to);
  return !dst || *dst >= *src;  // a disk may rest on an equal or larger one
}

void PileConfiguration::apply(Move m) {
  const auto src = top_class(m.from);
  if (!src) throw EmptyPegError("pile: removal from an empty peg");
  if (!can_move(m)) throw InsertionError("pile: disk would rest on a strictly smaller one");
  --counts_[static_cast<std::size_t>(*src - 1)][peg_index(m.from)];
  ++counts_[static_cast<std::size_t>(*src - 1)][peg_index(m.to)];
}

bool PileConfiguration::all_on(PegId peg) const {
  for (const auto& row : counts_)
    for (int p = 0; p < 3; ++p)
      if (p != peg_index(peg) && row[p] != 0) return false;
  return true;
}

namespace {

void emit_pile(const std::vector<int>& counts, std::size_t classes, PegId a, PegId b, PegId c,
               MoveTrace& out) {
  if (classes == 0) return;
  emit_pile(counts, classes - 1, a, c, b, out);
  for (int i = 0; i < counts[classes - 1]; ++i) out.push_back(Move{a, c});
  emit_pile(counts, classes - 1, b, a, c, out);
}

void validate(const SizeProfile& p) {
  if (p.counts.empty()) throw std::invalid_argument("profile: at least one size class required");
  for (const int c : p.counts)
    if (c < 1) throw std::invalid_argument("profile: counts must be positive");
  if (p.sizes() > 60) throw std::overflow_error("profile: too many size classes for 64-bit counts");
}

}  // namespace

MoveTrace solve_diskpile(const SizeProfile& p, PegId from, PegId via, PegId to) {
  validate(p);
  if (from == via || from == to || via == to)
    throw std::invalid_argument("the three pegs must be distinct");
  MoveTrace out;
  emit_pile(p.counts, p.counts.size(), from, via, to, out);
  return out;
}

std::int64_t count_diskpile(const SizeProfile& p) {
  validate(p);
  const int s = p.sizes();
  std::int64_t total = 0;
  for (int i = 0; i < s; ++i) total += static_cast<std::int64_t>(p.counts[static_cast<std::size_t>(i)]) << (s - i - 1);
  return total;
}

std::int64_t worst_case_count(int n, int s) {
  if (s < 1 || s > n) throw std::invalid_argument("worst_case_count: needs 1 <= s <= n");
  if (s > 60) throw std::overflow_error("worst_case_count: s too large for 64-bit counts");
  return (std::int64_t{1} << (s - 1)) * (n - s + 2) - 1;
}

std::int64_t diskpile_oracle(const SizeProfile& p, std::int64_t cap) {
  validate(p);
  if (p.total() > cap)
    throw CapError("pile oracle: " + std::to_string(p.total()) + " disks exceed the cap " +
                   std::to_string(cap));

  // A state is the per-class count on pegs A and B (peg C is implied):
  // a mixed-radix number with two digits of base counts[i]+1 per class.
  const int s = p.sizes();
  std::vector<std::int64_t> stride(static_cast<std::size_t>(2 * s));
  std::int64_t states = 1;
  for (int i = 0; i < 2 * s; ++i) {
    stride[static_cast<std::size_t>(i)] = states;
    states *= p.counts[static_cast<std::size_t>(i / 2)] + 1;
  }

  std::vector<int> digits(static_cast<std::size_t>(2 * s));
  const auto decode = [&](std::int64_t id) {
    for (int i = 0; i < 2 * s; ++i) {
      const int base = p.counts[static_cast<std::size_t>(i / 2)] + 1;
      digits[static_cast<std::size_t>(i)] = static_cast<int>(id % base);
      id /= base;
    }
  };
  const auto count_of = [&](int size_class, int peg) -> int {  // peg 0=A,1=B,2=C
    const int a = digits[static_cast<std::size_t>(2 * size_class)];
    const int b = digits[static_cast<std::size_t>(2 * size_class + 1)];
    if (peg == 0) return a;
    if (peg == 1) return b;
    return p.counts[static_cast<std::size_t>(size_class)] - a - b;
  };
  const auto top_of = [&](int peg) -> int {  // smallest class present, or -1
    for (int i = 0; i < s; ++i)
      if (count_of(i, peg) > 0) return i;
    return -1;
  };

  std::int64_t start = 0;
  for (int i = 0; i < s; ++i) start += p.counts[static_cast<std::size_t>(i)] * stride[static_cast<std::size_t>(2 * i)];
  const std::int64_t target = 0;  // nothing on A or B

  std::vector<std::int32_t> dist(static_cast<std::size_t>(states), -1);
  dist[static_cast<std::size_t>(start)] = 0;
  std::deque<std::int64_t> queue{start};
  while (!queue.empty()) {
    const std::int64_t id = queue.front();
    queue.pop_front();
    if (id == target) return dist[static_cast<std::size_t>(id)];
    decode(id);
    for (int from = 0; from < 3; ++from) {
      const int moved = top_of(from);
      if (moved < 0) continue;
      for (int to = 0; to < 3; ++to) {
        if (to == from) continue;
        const int below = top_of(to);
        if (below >= 0 && below < moved) continue;  // would rest on a smaller disk
        std::int64_t next = id;
        if (from < 2) next -= stride[static_cast<std::size_t>(2 * moved + from)];
        if (to < 2) next += stride[static_cast<std::size_t>(2 * moved + to)];
        if (dist[static_cast<std::size_t>(next)] < 0) {
          dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(id)] + 1;
          queue.push_back(next);
        }
      }
    }
  }
  throw std::logic_error("pile oracle: target state unreachable");
}

}  // namespace btower
