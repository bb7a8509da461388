#include "fplab/matching.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "fplab/errors.hpp"

namespace fplab {

namespace detail {
namespace {

class CollectionSearch {
 public:
  CollectionSearch(std::span<const Mask> sets, Mask universe, const DisjointnessParams& params)
      : sets_(sets), universe_(universe), lo_(params.min_count()), hi_(params.max_count()) {
    suffix_union_.assign(sets_.size() + 1, 0);
    for (std::size_t j = sets_.size(); j-- > 0;) suffix_union_[j] = suffix_union_[j + 1] | sets_[j];
  }

  bool try_add(std::size_t j) {
    for (Mask m = sets_[j]; m != 0; m &= m - 1) {
      if (counts_[std::countr_zero(m)] >= hi_) return false;
    }
    for (Mask m = sets_[j]; m != 0; m &= m - 1) ++counts_[std::countr_zero(m)];
    chosen_.push_back(j);
    return true;
  }

  void undo() {
    const std::size_t j = chosen_.back();
    chosen_.pop_back();
    for (Mask m = sets_[j]; m != 0; m &= m - 1) --counts_[std::countr_zero(m)];
  }

  // Non-decreasing choices of `remaining` more members with index >= start.
  bool run(std::size_t start, int remaining) {
    Mask needy = 0;
    for (Mask m = universe_; m != 0; m &= m - 1) {
      const int bit = std::countr_zero(m);
      const int need = lo_ - counts_[bit];
      if (need > remaining) return false;
      if (need > 0) needy |= Mask{1} << bit;
    }
    if (remaining == 0) return true;
    if (start >= sets_.size()) return false;
    if ((needy & ~suffix_union_[start]) != 0) return false;
    for (std::size_t j = start; j < sets_.size(); ++j) {
      if (!try_add(j)) continue;
      if (run(j, remaining - 1)) return true;
      undo();
    }
    return false;
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  std::span<const Mask> sets_;
  Mask universe_;
  int lo_;
  int hi_;
  std::array<int, kMaxPoints> counts_{};
  std::vector<std::size_t> chosen_;
  std::vector<Mask> suffix_union_;
};

}  // namespace

std::optional<std::vector<std::size_t>> violating_collection(std::span<const Mask> sets, Mask universe,
                                                             const DisjointnessParams& params,
                                                             std::optional<std::size_t> must_include) {
  if (must_include && *must_include >= sets.size()) {
    throw ParameterError("must_include index " + std::to_string(*must_include) + " out of range");
  }
  if (sets.empty() || params.infeasible()) return std::nullopt;
  if (params.trivial()) {
    return std::vector<std::size_t>(static_cast<std::size_t>(params.lambda), must_include.value_or(0));
  }
  CollectionSearch search(sets, universe, params);
  int remaining = params.lambda;
  if (must_include) {
    if (!search.try_add(*must_include)) return std::nullopt;
    --remaining;
  }
  if (!search.run(0, remaining)) return std::nullopt;
  std::vector<std::size_t> out = search.chosen();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

std::optional<std::vector<std::size_t>> find_violating_collection(const SubsetFamily& family,
                                                                  const DisjointnessParams& params,
                                                                  std::optional<std::size_t> must_include) {
  std::vector<Mask> masks;
  masks.reserve(family.size());
  for (const Subset& s : family.sets()) masks.push_back(s.mask());
  return detail::violating_collection(masks, family.ground().full_mask(), params, must_include);
}

std::optional<std::uint64_t> cyclic_upper_bound(int n, int t, int lambda, int s1, int s2) {
  if (!(n > t && t > 1 && s1 >= 1 && s2 >= 1)) return std::nullopt;
  if (lambda < std::min(s1 + 1, s2 + 1) || lambda > s1 + s2) return std::nullopt;
  const int chi = static_cast<int>(std::max(ceil_div(t, s1), ceil_div(n - t, s2)));
  const int m = n / chi;
  const int gamma = static_cast<int>(ceil_div(n, m));
  const BigInt numer = big_binomial(n, t) * (lambda - 1) * gamma;
  return static_cast<std::uint64_t>(BigInt(numer / n));
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const MatchingInstance& inst, const MatchingOptions& opts, std::vector<Subset> cands,
                 std::uint64_t cap)
      : inst_(inst), opts_(opts), universe_(GroundSet(inst.n).full_mask()), cap_(cap) {
    for (const Subset& s : cands) cand_.push_back(s.mask());
  }

  void solve() {
    std::vector<std::size_t> alive;
    for (std::size_t j = 0; j < cand_.size(); ++j) {
      std::vector<Mask> alone{cand_[j]};
      if (!detail::violating_collection(alone, universe_, inst_.params, 0)) alive.push_back(j);
    }
    recurse(alive);
  }

  std::uint64_t explored() const { return explored_; }
  bool exhausted() const { return exhausted_; }
  const std::vector<std::size_t>& best() const { return best_; }

 private:
  // `alive` holds the undecided candidates that are each compatible with chosen_.
  void recurse(const std::vector<std::size_t>& alive) {
    if (done_ || exhausted_) return;
    if (++explored_ > opts_.budget) {
      exhausted_ = true;
      return;
    }
    if (chosen_.size() > best_.size()) {
      best_ = chosen_;
      if (best_.size() >= cap_) {
        done_ = true;
        return;
      }
    }
    if (alive.empty() || chosen_.size() + alive.size() <= best_.size()) return;

    const std::size_t x = alive.front();
    chosen_.push_back(x);
    std::vector<Mask> trial;
    trial.reserve(chosen_.size() + 1);
    for (std::size_t i : chosen_) trial.push_back(cand_[i]);
    trial.push_back(0);
    std::vector<std::size_t> next;
    for (std::size_t k = 1; k < alive.size(); ++k) {
      trial.back() = cand_[alive[k]];
      if (!detail::violating_collection(trial, universe_, inst_.params, trial.size() - 1)) next.push_back(alive[k]);
    }
    recurse(next);
    chosen_.pop_back();

    recurse(std::vector<std::size_t>(alive.begin() + 1, alive.end()));
  }

  const MatchingInstance& inst_;
  const MatchingOptions& opts_;
  Mask universe_;
  std::uint64_t cap_;
  std::vector<Mask> cand_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t explored_ = 0;
  bool done_ = false;
  bool exhausted_ = false;
};

}  // namespace

MatchingCertificate matching_number_exact(const MatchingInstance& instance, const MatchingOptions& options) {
  const int n = instance.n;
  const int t = instance.t;
  const GroundSet ground(n);
  if (t < 1 || t > n) throw ParameterError("uniformity t=" + std::to_string(t) + " outside 1..n");
  const std::uint64_t total = binomial(n, t);
  if (total > options.cap) {
    throw GuardError("C(" + std::to_string(n) + "," + std::to_string(t) + ")=" + std::to_string(total) +
                     " exceeds solver cap " + std::to_string(options.cap));
  }
  const DisjointnessParams& p = instance.params;
  std::vector<Subset> cands = enumerate_subsets(n, t);

  MatchingCertificate cert;
  if (p.trivial()) {
    cert.extremal_family = SubsetFamily(ground, {}, t);
    return cert;
  }
  if (p.infeasible()) {
    cert.value = total;
    cert.extremal_family = SubsetFamily(ground, cands, t);
    return cert;
  }

  std::uint64_t cap = total;
  if (options.use_closed_form_cap) {
    if (auto u = cyclic_upper_bound(n, t, p.lambda, p.k1 - 1, p.k2 - 1)) cap = std::min(cap, *u);
  }
  BranchAndBound bb(instance, options, cands, cap);
  bb.solve();

  std::vector<Subset> members;
  for (std::size_t i : bb.best()) members.push_back(cands[i]);
  cert.value = members.size();
  cert.extremal_family = SubsetFamily(ground, std::move(members), t);
  cert.status = bb.exhausted() ? CertificateStatus::lower_only : CertificateStatus::exact;
  cert.explored = bb.explored();
  if (find_violating_collection(cert.extremal_family, p)) {
    throw std::logic_error("matching solver produced a family containing a disjoint collection");
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Cyclic interval classes

std::vector<Subset> CyclicPartitionPlan::class_sets(std::size_t i) const {
  std::vector<Subset> out;
  for (int a : classes.at(i)) out.push_back(intervals[static_cast<std::size_t>(a - 1)]);
  return out;
}

CyclicPartitionPlan cyclic_partition_plan(int n, int t, int s1, int s2) {
  if (!(n > t && t > 1)) throw ParameterError("cyclic plan needs n > t > 1");
  if (s1 < 1 || s2 < 1) throw ParameterError("cyclic plan needs s1, s2 >= 1");
  const GroundSet ground(n);
  CyclicPartitionPlan plan;
  plan.n = n;
  plan.t = t;
  plan.chi = static_cast<int>(std::max(ceil_div(t, s1), ceil_div(n - t, s2)));
  plan.m = n / plan.chi;
  plan.gamma = static_cast<int>(ceil_div(n, plan.m));
  plan.n0 = plan.m * plan.gamma - n;

  auto wrap = [n](long long a) { return static_cast<int>(((a - 1) % n + n) % n) + 1; };
  for (int a = 1; a <= n; ++a) {
    Mask m = 0;
    for (int j = 0; j < t; ++j) m |= Mask{1} << (wrap(a + j) - 1);
    plan.intervals.emplace_back(m);
  }

  const int m = plan.m;
  const int gamma = plan.gamma;
  const int n0 = plan.n0;
  for (int i = 1; i <= gamma - 1; ++i) {
    std::vector<int> cls;
    const int long_steps = n0 > 0 ? m - n0 : m - 1;
    for (int j = 0; j <= long_steps; ++j) cls.push_back(wrap(i + static_cast<long long>(j) * gamma));
    for (int j = 1; j <= n0 - 1; ++j) {
      cls.push_back(wrap(i + static_cast<long long>(m - n0) * gamma + static_cast<long long>(j) * (gamma - 1)));
    }
    plan.classes.push_back(std::move(cls));
  }
  std::vector<int> last;
  for (int j = 1; j <= m - n0; ++j) last.push_back(wrap(static_cast<long long>(j) * gamma));
  plan.classes.push_back(std::move(last));

  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& cls : plan.classes) {
    for (int a : cls) ++seen[a];
  }
  for (int a = 1; a <= n; ++a) {
    if (seen[a] != 1) throw std::logic_error("cyclic plan: interval T(" + std::to_string(a) + ") not used once");
  }
  for (std::size_t i = 0; i < plan.classes.size(); ++i) {
    const std::vector<Subset> sets = plan.class_sets(i);
    const DisjointnessParams caps(s1 + 1, s2 + 1, static_cast<int>(sets.size()));
    if (!sets.empty() && !is_disjoint_collection(sets, ground, caps)) {
      throw std::logic_error("cyclic plan: class " + std::to_string(i + 1) + " exceeds multiplicity caps");
    }
  }
  return plan;
}

SubsetFamily star_family(int n, int t, int lambda, int s) {
  const GroundSet ground(n);
  if (t < 1 || t > n) throw ParameterError("uniformity t outside 1..n");
  if (s < 1 || lambda < 1) throw ParameterError("star family needs lambda, s >= 1");
  if (lambda <= s) return SubsetFamily(ground, {}, t);
  const int core = static_cast<int>(ceil_div(lambda, s)) - 1;
  if (core > n) throw ParameterError("star core size exceeds n");
  const Mask core_mask = GroundSet(core).full_mask();
  std::vector<Subset> sets;
  for (const Subset& a : enumerate_subsets(n, t)) {
    if ((a.mask() & core_mask) != 0) sets.push_back(a);
  }
  return SubsetFamily(ground, std::move(sets), t);
}

// ---------------------------------------------------------------------------
// Closed-form sandwich

namespace {

Hypothesis hyp(std::string text, bool ok) { return {std::move(text), ok}; }

}  // namespace

BoundReport matching_closed_bounds(int n, int t, int lambda, int s1, int s2,
                                   std::optional<FrameproofParams> coalition) {
  if (n < 1 || t < 1 || t > n) throw ParameterError("need 1 <= t <= n");
  if (lambda < 1 || s1 < 1 || s2 < 1) throw ParameterError("lambda, s1, s2 must be positive");
  BoundReport report;
  report.quantity = "m(" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(lambda) + ";" +
                    std::to_string(s1 + 1) + "," + std::to_string(s2 + 1) + ")";
  const BigInt total = big_binomial(n, t);
  const bool in_range = std::min(s1 + 1, s2 + 1) <= lambda && lambda <= s1 + s2;
  const std::string range_text = "min(s1+1,s2+1) <= lambda <= s1+s2";

  report.entries.push_back({"no-disjoint-collection-exists", Direction::exact, Rational(total),
                            {hyp("lambda >= s1+s2+1", lambda >= s1 + s2 + 1)}});
  report.entries.push_back({"disjointness-trivial", Direction::exact, Rational(0),
                            {hyp("lambda <= min(s1,s2)", lambda <= std::min(s1, s2))}});

  {
    BoundEntry e{"cyclic-double-counting", Direction::upper, Rational(total), {}};
    e.hypotheses.push_back(hyp("n > t > 1", n > t && t > 1));
    e.hypotheses.push_back(hyp(range_text, in_range));
    if (n > t && t > 1) {
      const int chi = static_cast<int>(std::max(ceil_div(t, s1), ceil_div(n - t, s2)));
      const int m = n / chi;
      const int gamma = static_cast<int>(ceil_div(n, m));
      e.value = Rational(floor_of(Rational(total * (lambda - 1) * gamma, n)));
    }
    report.entries.push_back(std::move(e));
  }

  auto star_value = [&](int s, int size) {
    const int shrink = static_cast<int>(ceil_div(lambda, s)) - 1;
    const BigInt outside = n - shrink < 0 ? BigInt(0) : big_binomial(n - shrink, size);
    return Rational(total - outside);
  };
  report.entries.push_back({"star-lower", Direction::lower, star_value(s1, t), {hyp(range_text, in_range)}});
  report.entries.push_back(
      {"complement-star-lower", Direction::lower, star_value(s2, n - t), {hyp(range_text, in_range)}});

  if (coalition) {
    const int c = coalition->c;
    const int s = coalition->s;
    const int s0 = coalition->s0();
    const int t_expected = static_cast<int>(ceil_div(static_cast<long long>(s) * n, c));
    const bool matches = s1 == s && s2 == c - s;
    const bool t_ok = t == t_expected;
    const bool big_n = n >= c * (c - 1);
    const bool lam_ok = std::min(s + 1, c - s + 1) <= lambda && lambda <= c;
    const bool divides = n % c == 0;
    const std::vector<Hypothesis> base{hyp("s1 = s and s2 = c-s", matches), hyp("t = ceil(sn/c)", t_ok),
                                       hyp("n >= c(c-1)", big_n), hyp("min(s+1,c-s+1) <= lambda <= c", lam_ok)};

    BoundEntry up{"coalition-upper", Direction::upper,
                  floor_of(Rational(BigInt(lambda - 1) * ceil_div(n, c - 1) * total, n)), base};
    report.entries.push_back(up);
    BoundEntry up_div{"coalition-upper-divisible", Direction::upper, Rational(BigInt(lambda - 1) * total, c), base};
    up_div.hypotheses.push_back(hyp("c | n", divides));
    report.entries.push_back(up_div);

    const Rational frac_small = Rational(s0, c) - Rational(1, n);
    const Rational frac_large = Rational(c - s0, c) - Rational(1, n);
    BoundEntry lo_small{"coalition-lower", Direction::lower, frac_small * Rational(total), base};
    lo_small.hypotheses.push_back(hyp("lambda >= s0+1", lambda >= s0 + 1));
    report.entries.push_back(lo_small);
    BoundEntry lo_large{"coalition-lower-large-lambda", Direction::lower, frac_large * Rational(total), base};
    lo_large.hypotheses.push_back(hyp("lambda >= c-s0+1", lambda >= c - s0 + 1));
    report.entries.push_back(lo_large);
    BoundEntry lo_small_div{"coalition-lower-divisible", Direction::lower, Rational(BigInt(s0) * total, c), base};
    lo_small_div.hypotheses.push_back(hyp("lambda >= s0+1", lambda >= s0 + 1));
    lo_small_div.hypotheses.push_back(hyp("c | n", divides));
    report.entries.push_back(lo_small_div);
    BoundEntry lo_large_div{"coalition-lower-large-lambda-divisible", Direction::lower,
                            Rational(BigInt(c - s0) * total, c), base};
    lo_large_div.hypotheses.push_back(hyp("lambda >= c-s0+1", lambda >= c - s0 + 1));
    lo_large_div.hypotheses.push_back(hyp("c | n", divides));
    report.entries.push_back(lo_large_div);

    const bool exact_t = divides && static_cast<long long>(s) * n == static_cast<long long>(c) * t;
    const bool lam_small = lambda == s0 + 1;
    const bool lam_large = lambda == c - s0 + 1;
    const int numer = lam_small ? s0 : c - s0;
    BoundEntry ex{"coalition-exact", Direction::exact, Rational(BigInt(numer) * total, c),
                  {hyp("s1 = s and s2 = c-s", matches), hyp("c | n", divides), hyp("t = sn/c", exact_t),
                   hyp("lambda = s0+1 or lambda = c-s0+1", lam_small || lam_large)}};
    report.entries.push_back(ex);
  }
  return report;
}

}  // namespace fplab
