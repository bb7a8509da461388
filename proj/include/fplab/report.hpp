#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fplab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Direction { upper, lower, exact };

std::string to_string(Direction d);

struct Hypothesis {
  std::string text;
  bool ok;
};

/// One closed-form bound. It applies only when every hypothesis holds.
struct BoundEntry {
  std::string source;
  Direction direction;
  Rational value;
  std::vector<Hypothesis> hypotheses;

  bool applicable() const;
  /// floor(value) for upper bounds, ceil(value) for lower bounds, value for exact ones
  /// (the bounded quantities are integers).
  BigInt integral() const;
};

struct BoundReport {
  std::string quantity;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& source) const;
  /// Tightest applicable integral upper bound (exact entries count in both directions).
  std::optional<BigInt> best_upper() const;
  std::optional<BigInt> best_lower() const;
  /// Set when applicable bounds pin the quantity: an exact entry or best_lower == best_upper.
  std::optional<BigInt> pinned_value() const;
};

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);
/// "7" for integers, "21/4" otherwise.
std::string rational_string(const Rational& r);
BigInt big_binomial(int n, int k);
BigInt big_pow(int base, int exp);

}  // namespace fplab
