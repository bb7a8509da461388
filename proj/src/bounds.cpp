#include "fplab/bounds.hpp"

#include <algorithm>
#include <string>

#include "fplab/core.hpp"
#include "fplab/errors.hpp"

namespace fplab {

namespace {

std::string str(const BigInt& v) { return v.str(); }

void check_common(int c, int s, const BigInt& m, const BigInt& total) {
  FrameproofParams(c, s);
  if (m < 0) throw ParameterError("m must be non-negative");
  if (m > total) throw ParameterError("m=" + str(m) + " exceeds C(n,t)=" + str(total));
}

}  // namespace

std::uint64_t smallest_prime_power_factor(std::uint64_t q) {
  if (q < 2) throw ParameterError("q must be at least 2");
  std::uint64_t best = q;
  std::uint64_t rest = q;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    std::uint64_t pe = 1;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
    }
    best = std::min(best, pe);
  }
  if (rest > 1) best = std::min(best, rest);
  return best;
}

BoundReport hypergraph_bounds(int n, int k, int c, int s, const BigInt& m, std::optional<std::uint64_t> packing_size,
                              bool design_available) {
  if (k < 2 || n < k) throw ParameterError("need n >= k >= 2");
  const FrameproofParams fp(c, s);
  const LambdaT lt = lambda_of(c, s, k);
  const int t = lt.t;
  const int lambda = lt.lambda;
  const int s0 = fp.s0();
  const BigInt in_member = big_binomial(k, t);
  check_common(c, s, m, in_member);
  const BigInt total = big_binomial(n, t);
  const BigInt denom = in_member - m;

  BoundReport report;
  report.quantity = "f_{" + std::to_string(c) + "," + std::to_string(s) + "}(" + std::to_string(n) + "," +
                    std::to_string(k) + ")";

  const BigInt n0 = denom * t + t - 1;
  const Hypothesis denom_pos{"C(k,t) - m > 0", denom > 0};
  const Rational per_member = denom > 0 ? Rational(total, denom) : Rational(total);

  report.entries.push_back({"own-subset-upper", Direction::upper, per_member,
                            {denom_pos, {"n >= n0 = (C(k,t)-m)t + t-1 = " + str(n0), BigInt(n) >= n0}}});

  if (packing_size) {
    report.entries.push_back({"packing-lower", Direction::lower, Rational(BigInt(*packing_size)),
                              {{"an (n,k,t)-packing of this size is known", true}}});
  }

  report.entries.push_back(
      {"design-exact", Direction::exact, Rational(total, in_member),
       {{"1 <= lambda <= s0", lambda >= 1 && lambda <= s0},
        {"c | (sk - lambda)", (s * k - lambda) % c == 0},
        {"n >= n0 = " + str(n0), BigInt(n) >= n0},
        {"an (n,k,t)-design is available", design_available}}});

  const BigInt crit_threshold_num = denom * (t + c);
  // n >= denom (t+c)/s0 + t - 1  <=>  s0 (n - t + 1) >= denom (t+c)
  const bool crit_ok = BigInt(s0) * (n - t + 1) >= crit_threshold_num;
  report.entries.push_back(
      {"critical-upper-factor-s0", Direction::upper,
       denom > 0 ? Rational(BigInt(s0) * total, denom) : Rational(total),
       {denom_pos,
        {"n >= (C(k,t)-m)(t+c)/s0 + t-1 = " + rational_string(Rational(crit_threshold_num, s0) + (t - 1)), crit_ok}}});
  return report;
}

BoundReport code_bounds(int n, int c, int s, int q, const BigInt& m) {
  if (q < 2) throw ParameterError("q=" + std::to_string(q) + " must be at least 2");
  if (n < 2) throw ParameterError("n must be at least 2");
  const FrameproofParams fp(c, s);
  const LambdaT lt = lambda_of(c, s, n);
  const int t = lt.t;
  const int lambda = lt.lambda;
  const int s0 = fp.s0();
  const BigInt total = big_binomial(n, t);
  check_common(c, s, m, total);
  const BigInt denom = total - m;
  const BigInt qt = big_pow(q, t);

  BoundReport report;
  report.quantity = "f^" + std::to_string(q) + "_{" + std::to_string(c) + "," + std::to_string(s) + "}(" +
                    std::to_string(n) + ")";

  const Hypothesis denom_pos{"C(n,t) - m > 0", denom > 0};
  const Rational threshold = Rational(BigInt(t) * denom, n - t + 1);
  report.entries.push_back({"code-own-subsequence-upper", Direction::upper,
                            denom > 0 ? Rational(total * qt, denom) : Rational(qt),
                            {denom_pos,
                             {"q >= t/(n-t+1) (C(n,t)-m) = " + rational_string(threshold), Rational(q) >= threshold}}});

  const bool small_lambda = lambda >= 1 && lambda <= s0;
  report.entries.push_back({"code-small-alphabet-upper", Direction::upper, Rational(qt),
                            {{"1 <= lambda <= s0", small_lambda}, {"q > c - lambda", q > c - lambda}}});

  const std::uint64_t p1e1 = smallest_prime_power_factor(static_cast<std::uint64_t>(q));
  const bool n_low = static_cast<long long>(n) * (c - s) >= 2LL * c && n >= c - lambda;
  const bool n_high = static_cast<std::uint64_t>(n) <= p1e1 + 1;
  report.entries.push_back({"code-exact", Direction::exact, Rational(qt),
                            {{"q >= c", q >= c},
                             {"1 <= lambda <= s0", small_lambda},
                             {"c | (sn - lambda)", (s * n - lambda) % c == 0},
                             {"n >= max(2c/(c-s), c-lambda)", n_low},
                             {"n <= p1^e1 + 1 = " + std::to_string(p1e1 + 1), n_high}}});

  const Rational crit_threshold = Rational(BigInt(t) * denom, BigInt(s0) * (n - t + 1));
  // q >= ((c+1)/s0)^{1/t}  <=>  s0 q^t >= c+1
  const bool root_ok = BigInt(s0) * qt >= c + 1;
  report.entries.push_back({"code-critical-upper-factor-s0", Direction::upper,
                            denom > 0 ? Rational(BigInt(s0) * total * qt, denom) : Rational(qt),
                            {denom_pos,
                             {"q >= t/(s0(n-t+1)) (C(n,t)-m) = " + rational_string(crit_threshold),
                              Rational(q) >= crit_threshold},
                             {"q >= ((c+1)/s0)^(1/t)", root_ok}}});
  return report;
}

}  // namespace fplab
