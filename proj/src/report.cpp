#include "fplab/report.hpp"

#include <algorithm>
#include <stdexcept>

#include "fplab/errors.hpp"

namespace fplab {

std::string to_string(Direction d) {
  switch (d) {
    case Direction::upper:
      return "upper";
    case Direction::lower:
      return "lower";
    case Direction::exact:
      return "exact";
  }
  return "unknown";
}

bool BoundEntry::applicable() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.ok; });
}

BigInt BoundEntry::integral() const {
  switch (direction) {
    case Direction::upper:
      return floor_of(value);
    case Direction::lower:
      return ceil_of(value);
    case Direction::exact:
      break;
  }
  return floor_of(value);
}

const BoundEntry* BoundReport::find(const std::string& source) const {
  for (const BoundEntry& e : entries) {
    if (e.source == source) return &e;
  }
  return nullptr;
}

std::optional<BigInt> BoundReport::best_upper() const {
  std::optional<BigInt> best;
  for (const BoundEntry& e : entries) {
    if (!e.applicable() || e.direction == Direction::lower) continue;
    BigInt v = e.integral();
    if (!best || v < *best) best = v;
  }
  return best;
}

std::optional<BigInt> BoundReport::best_lower() const {
  std::optional<BigInt> best;
  for (const BoundEntry& e : entries) {
    if (!e.applicable() || e.direction == Direction::upper) continue;
    BigInt v = e.integral();
    if (!best || v > *best) best = v;
  }
  return best;
}

std::optional<BigInt> BoundReport::pinned_value() const {
  for (const BoundEntry& e : entries) {
    if (e.applicable() && e.direction == Direction::exact) return e.integral();
  }
  auto lo = best_lower();
  auto hi = best_upper();
  if (lo && hi && *lo == *hi) return lo;
  return std::nullopt;
}

BigInt floor_of(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil_of(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return q;
}

std::string rational_string(const Rational& r) {
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

BigInt big_binomial(int n, int k) {
  if (n < 0) throw ParameterError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt big_pow(int base, int exp) {
  if (exp < 0) throw ParameterError("negative exponent");
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace fplab
