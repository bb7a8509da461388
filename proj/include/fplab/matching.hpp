#pragma once

// Exact generalized matching numbers m(n,t,lambda;k1,k2): the largest
// t-uniform family on [n] with no (k1,k2)-disjoint collection of lambda
// (possibly repeated) members.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fplab/core.hpp"
#include "fplab/report.hpp"

namespace fplab {

struct MatchingInstance {
  int n;
  int t;
  DisjointnessParams params;
};

enum class CertificateStatus { exact, lower_only };

struct MatchingCertificate {
  std::uint64_t value = 0;
  SubsetFamily extremal_family{GroundSet(1), {}};
  CertificateStatus status = CertificateStatus::exact;
  /// Branch-and-bound nodes visited (0 for short-circuited instances).
  std::uint64_t explored = 0;
};

struct MatchingOptions {
  std::uint64_t budget = 50'000'000;
  /// Largest C(n,t) the solver accepts.
  std::size_t cap = 400;
  /// Stop as soon as the cyclic double-counting upper bound is reached.
  bool use_closed_form_cap = true;
};

/// A lambda-multiset of member indices (non-decreasing) forming a
/// (k1,k2)-disjoint collection, containing `must_include` when given.
std::optional<std::vector<std::size_t>> find_violating_collection(
    const SubsetFamily& family, const DisjointnessParams& params,
    std::optional<std::size_t> must_include = std::nullopt);

/// Branch and bound over colex-ordered t-subsets. Throws GuardError when
/// C(n,t) exceeds options.cap. A spent budget yields status lower_only with
/// the best family found so far.
MatchingCertificate matching_number_exact(const MatchingInstance& instance, const MatchingOptions& options = {});

/// floor((1/n) C(n,t) (lambda-1) ceil(n / floor(n/chi))), chi = max(ceil(t/s1), ceil((n-t)/s2)),
/// when n > t > 1, s1,s2 >= 1 and min(s1+1,s2+1) <= lambda <= s1+s2.
std::optional<std::uint64_t> cyclic_upper_bound(int n, int t, int lambda, int s1, int s2);

/// Closed-form sandwich for m(n,t,lambda;s1+1,s2+1), plus the coalition
/// specializations when (c,s) is supplied.
BoundReport matching_closed_bounds(int n, int t, int lambda, int s1, int s2,
                                   std::optional<FrameproofParams> coalition = std::nullopt);

struct CyclicPartitionPlan {
  int n;
  int t;
  int chi;
  int m;
  int gamma;
  int n0;
  /// intervals[a-1] = T(a) = {a, a+1, ..., a+t-1} mod n, points in 1..n.
  std::vector<Subset> intervals;
  /// Each class lists interval start points a in 1..n.
  std::vector<std::vector<int>> classes;

  std::vector<Subset> class_sets(std::size_t i) const;
};

/// Splits the n cyclic t-intervals of Z_n into gamma classes; within a class
/// every point lies in at most s1 intervals and outside at most s2 of them.
/// When n0 = 0 each of the first gamma-1 classes stops after m intervals
/// (the next start would wrap onto the first).
CyclicPartitionPlan cyclic_partition_plan(int n, int t, int s1, int s2);

/// All t-subsets of [n] meeting S = {1, ..., ceil(lambda/s) - 1}; empty when lambda <= s.
SubsetFamily star_family(int n, int t, int lambda, int s);

namespace detail {

/// Works on raw masks; every point of `universe` is subject to the count bounds.
std::optional<std::vector<std::size_t>> violating_collection(std::span<const Mask> sets, Mask universe,
                                                             const DisjointnessParams& params,
                                                             std::optional<std::size_t> must_include);

}  // namespace detail

}  // namespace fplab
