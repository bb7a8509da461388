#include <algorithm>
#include <string>

#include "fplab/constructions.hpp"
#include "fplab/errors.hpp"

namespace fplab {

std::vector<Subset> greedy_multiset_partition(Subset a, std::span<const Subset> given, const FrameproofParams& params) {
  const int c = params.c;
  const int s = params.s;
  const int k = a.size();
  if (k < 1) throw WitnessError("A must be nonempty");
  const LambdaT lt = lambda_of(c, s, k);
  const int t = lt.t;
  const int lambda = lt.lambda;
  if (static_cast<int>(given.size()) != lambda) {
    throw WitnessError("expected lambda=" + std::to_string(lambda) + " given sets, got " +
                       std::to_string(given.size()));
  }
  for (std::size_t i = 0; i < given.size(); ++i) {
    if (given[i].size() != t || !given[i].is_subset_of(a)) {
      throw WitnessError("given[" + std::to_string(i) + "] = " + given[i].to_string() + " is not a " +
                         std::to_string(t) + "-subset of " + a.to_string());
    }
  }
  if (!is_disjoint_collection(given, a, DisjointnessParams(s + 1, c - s + 1, lambda))) {
    throw WitnessError("given sets are not (s+1,c-s+1)-disjoint on A");
  }

  // need[x] = copies of x still to place
  std::vector<int> need(kMaxPoints + 1, 0);
  const std::vector<int> pts = a.points();
  for (int x : pts) need[x] = s;
  for (const Subset& g : given) {
    for (int x : g.points()) --need[x];
  }

  std::vector<Subset> parts;
  for (int left = c - lambda; left >= 1; --left) {
    Mask part = 0;
    int taken = 0;
    for (int level = left; level >= 1 && taken < t - 1; --level) {
      for (int x : pts) {
        if (taken == t - 1) break;
        if (need[x] == level) {
          part |= Mask{1} << (x - 1);
          ++taken;
        }
      }
    }
    if (taken != t - 1) throw WitnessError("residual multiset cannot be split into parts of size t-1");
    for (Mask m = part; m != 0; m &= m - 1) --need[std::countr_zero(m) + 1];
    parts.emplace_back(part);
  }

  std::vector<Subset> all(given.begin(), given.end());
  all.insert(all.end(), parts.begin(), parts.end());
  const std::vector<int> counts = point_counts(all, kMaxPoints);
  for (int x = 1; x <= kMaxPoints; ++x) {
    const int expected = a.contains(x) ? s : 0;
    if (counts[static_cast<std::size_t>(x)] != expected) {
      throw WitnessError("multiset identity fails at point " + std::to_string(x));
    }
  }
  return parts;
}

}  // namespace fplab
