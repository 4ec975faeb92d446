#include "btower/core_rules.hpp"

#include <algorithm>
#include <numeric>

namespace btower {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ <= 0) throw std::invalid_argument("rational: denominator must be >= 1");
  if (num_ < 0) throw std::invalid_argument("rational: negative value");
  const std::int64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  const auto digits_only = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!digits_only(text))
      throw std::invalid_argument("rational: expected \"p/q\" or a non-negative integer, got \"" + text + "\"");
    return Rational(std::stoll(text), 1);
  }
  const std::string p = text.substr(0, slash);
  const std::string q = text.substr(slash + 1);
  if (!digits_only(p) || !digits_only(q))
    throw std::invalid_argument("rational: expected \"p/q\" with integer p, q, got \"" + text + "\"");
  return Rational(std::stoll(p), std::stoll(q));
}

RuleSet::RuleSet(Rational alpha) : alpha_(alpha) {
  if (!alpha_.less_equal(1, 2))
    throw std::invalid_argument("rules: alpha must lie in [0, 1/2], got " + alpha_.str());
}

int removal_rank(int count, const RuleSet& rules) {
  if (count < 1) throw EmptyPegError("removal from a peg with no disks");
  return static_cast<int>(rules.alpha().floor_mul(count)) + 1;
}

int insertion_depth(int count, const RuleSet& rules) {
  if (count < 0) throw std::invalid_argument("insertion_depth: negative disk count");
  return static_cast<int>(rules.alpha().floor_mul(count + 1));
}

int fixed_disk_parity(int total_on_peg, int moving) {
  if (moving > total_on_peg)
    throw std::invalid_argument("fixed_disk_parity: moving more disks than the peg holds");
  if (moving < 0 || total_on_peg < 0) throw std::invalid_argument("fixed_disk_parity: negative count");
  return (total_on_peg - moving) % 2;
}

PegId peg_from_char(char c) {
  if (c < 'A' || c > 'C') throw WordError(std::string("bad peg letter '") + c + "' (expected A, B or C)");
  return static_cast<PegId>(c - 'A');
}

bool PegStack::sorted() const {
  for (std::size_t i = 1; i < disks.size(); ++i)
    if (disks[i] >= disks[i - 1]) return false;
  return true;
}

Configuration Configuration::uniform(int n, PegId peg) {
  if (n < 0) throw std::invalid_argument("configuration: negative disk count");
  Configuration c;
  c.placement_.assign(static_cast<std::size_t>(n), peg);
  return c;
}

Configuration Configuration::from_placement(std::vector<PegId> by_size) {
  Configuration c;
  c.placement_ = std::move(by_size);
  return c;
}

Configuration Configuration::from_word(std::string_view word) {
  Configuration c;
  c.placement_.resize(word.size());
  const int n = static_cast<int>(word.size());
  for (int i = 0; i < n; ++i) {
    // Letter i describes the i-th largest disk, i.e. disk n-i.
    c.placement_[static_cast<std::size_t>(n - 1 - i)] = peg_from_char(word[static_cast<std::size_t>(i)]);
  }
  return c;
}

PegId Configuration::peg_of(int disk) const {
  if (disk < 1 || disk > size()) throw std::out_of_range("configuration: no such disk");
  return placement_[static_cast<std::size_t>(disk - 1)];
}

int Configuration::count_on(PegId peg) const {
  return static_cast<int>(std::count(placement_.begin(), placement_.end(), peg));
}

int Configuration::count_smaller_on(PegId peg, int disk) const {
  int k = 0;
  for (int d = 1; d < disk; ++d)
    if (placement_[static_cast<std::size_t>(d - 1)] == peg) ++k;
  return k;
}

int Configuration::kth_smallest_on(PegId peg, int k) const {
  int seen = 0;
  for (int d = 1; d <= size(); ++d) {
    if (placement_[static_cast<std::size_t>(d - 1)] == peg && ++seen == k) return d;
  }
  throw std::out_of_range("configuration: peg holds fewer disks than requested");
}

std::string Configuration::word() const {
  std::string w(static_cast<std::size_t>(size()), '?');
  for (int i = 0; i < size(); ++i)
    w[static_cast<std::size_t>(i)] = peg_char(placement_[static_cast<std::size_t>(size() - 1 - i)]);
  return w;
}

PegStack Configuration::stack(PegId peg) const {
  PegStack s;
  for (int d = size(); d >= 1; --d)
    if (placement_[static_cast<std::size_t>(d - 1)] == peg) s.disks.push_back(d);
  return s;
}

int removal_disk(const Configuration& c, PegId peg, const RuleSet& rules) {
  const int count = c.count_on(peg);
  const int rank = removal_rank(count, rules);  // throws on empty peg
  // Rank r from the top of a sorted stack is the r-th smallest disk.
  return c.kth_smallest_on(peg, rank);
}

namespace {

// The inserted disk ends up with insertion_depth(count) existing disks above
// it; since the stack is sorted those must be exactly the disks smaller than
// it, which is what this checks.
bool insertion_legal(const Configuration& c, PegId peg, int disk, const RuleSet& rules) {
  return c.count_smaller_on(peg, disk) == insertion_depth(c.count_on(peg), rules);
}

}  // namespace

bool is_legal_move(const Configuration& c, Move m, const RuleSet& rules) {
  if (m.from == m.to) return false;
  if (c.count_on(m.from) == 0) return false;
  return insertion_legal(c, m.to, removal_disk(c, m.from, rules), rules);
}

std::vector<Move> legal_moves(const Configuration& c, const RuleSet& rules) {
  std::vector<Move> out;
  for (PegId from : kAllPegs) {
    if (c.count_on(from) == 0) continue;
    const int disk = removal_disk(c, from, rules);
    for (PegId to : kAllPegs) {
      if (to == from) continue;
      if (insertion_legal(c, to, disk, rules)) out.push_back(Move{from, to});
    }
  }
  return out;
}

Configuration apply_move(const Configuration& c, Move m, const RuleSet& rules) {
  if (m.from == m.to) throw InsertionError("move must use two distinct pegs");
  const int disk = removal_disk(c, m.from, rules);  // throws EmptyPegError
  if (!insertion_legal(c, m.to, disk, rules))
    throw InsertionError("inserting disk " + std::to_string(disk) + " on peg " +
                         std::string(1, peg_char(m.to)) + " would leave a disk above a smaller one");
  Configuration next = c;
  next.placement_[static_cast<std::size_t>(disk - 1)] = m.to;
  return next;
}

Configuration inverse_move(const Configuration& c_after, Move m, const RuleSet& rules) {
  return apply_move(c_after, Move{m.to, m.from}, rules);
}

std::vector<int> removal_order(int n, const RuleSet& rules) {
  if (n < 0) throw std::invalid_argument("removal_order: negative disk count");
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);  // ascending sizes
  std::vector<int> order;
  order.reserve(remaining.size());
  while (!remaining.empty()) {
    const int rank = removal_rank(static_cast<int>(remaining.size()), rules);
    // remaining is sorted ascending, so the rank-th from the top is the
    // rank-th smallest.
    const auto it = remaining.begin() + (rank - 1);
    order.push_back(*it);
    remaining.erase(it);
  }
  return order;
}

ParityContext context_for(const Configuration& conf, int n, PegId a, PegId b, PegId c) {
  ParityContext ctx;
  ctx.x = fixed_disk_parity(conf.count_on(a), n);
  ctx.y = fixed_disk_parity(conf.count_on(b), 0);
  ctx.z = fixed_disk_parity(conf.count_on(c), 0);
  return ctx;
}

}  // namespace btower
