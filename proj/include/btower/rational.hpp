#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace btower {

/// Exact non-negative rational p/q, kept normalized.  Used for the variant
/// parameter alpha, where floor expressions like floor(alpha*n) must be
/// bit-exact; floating point is never involved.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "p/q" or a bare non-negative integer.  Decimal notation such as
  /// "0.5" is rejected so that callers cannot smuggle in inexact values.
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// floor(*this * n) computed with integer arithmetic only.
  std::int64_t floor_mul(std::int64_t n) const { return num_ * n / den_; }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;

  /// Compares *this with p/q.
  bool less_equal(std::int64_t p, std::int64_t q) const { return num_ * q <= p * den_; }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace btower
