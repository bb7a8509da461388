#pragma once

// Ground sets, bitmask subsets, uniform families and the shared
// congruence arithmetic used by every other part of the library.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fplab {

inline constexpr int kMaxPoints = 64;

using Mask = std::uint64_t;

/// Number of points of a ground set [n] = {1, ..., n}, 1 <= n <= 64.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int n() const { return n_; }
  Mask full_mask() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  bool operator==(const GroundSet&) const = default;

 private:
  int n_;
};

/// A subset of [n]; point i is stored in bit i-1. Numeric order of masks
/// coincides with colexicographic order on subsets of equal size.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(Mask mask) : mask_(mask) {}
  Subset(std::initializer_list<int> points);

  static Subset from_points(std::span<const int> points);

  constexpr Mask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int point) const { return point >= 1 && point <= 64 && ((mask_ >> (point - 1)) & 1U); }
  bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
  /// Largest point, 0 for the empty set.
  int max_point() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
  std::vector<int> points() const;
  std::string to_string() const;

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.mask_ & b.mask_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.mask_ | b.mask_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.mask_ & ~b.mask_); }
  constexpr auto operator<=>(const Subset&) const = default;

 private:
  Mask mask_ = 0;
};

/// An ordered family of pairwise distinct subsets of a ground set.
class SubsetFamily {
 public:
  /// Throws ParameterError on out-of-range points, repeated members, or a
  /// member whose size disagrees with `uniform_k`.
  SubsetFamily(GroundSet ground, std::vector<Subset> sets, std::optional<int> uniform_k = std::nullopt);

  /// Same as the constructor with `uniform_k` inferred when every member has equal size.
  static SubsetFamily infer_uniform(GroundSet ground, std::vector<Subset> sets);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n(); }
  const std::vector<Subset>& sets() const { return sets_; }
  std::optional<int> uniform_k() const { return uniform_k_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const Subset& operator[](std::size_t i) const { return sets_[i]; }
  std::optional<std::size_t> index_of(Subset s) const;

 private:
  GroundSet ground_;
  std::vector<Subset> sets_;
  std::optional<int> uniform_k_;
};

/// Member index -> positive multiplicity. Coalitions and collections that
/// may repeat a member live here rather than in SubsetFamily.
class IndexMultiset {
 public:
  IndexMultiset() = default;
  /// Builds from a list of indices, counting repeats.
  static IndexMultiset from_indices(std::span<const std::size_t> indices);

  void add(std::size_t index, std::size_t times = 1);
  std::size_t total() const;
  std::size_t multiplicity(std::size_t index) const;
  bool contains(std::size_t index) const { return counts_.contains(index); }
  const std::map<std::size_t, std::size_t>& counts() const { return counts_; }
  /// Indices in non-decreasing order, each repeated by its multiplicity.
  std::vector<std::size_t> sorted_indices() const;
  bool operator==(const IndexMultiset&) const = default;

 private:
  std::map<std::size_t, std::size_t> counts_;
};

/// Coalition size c >= 2 and threshold 1 <= s <= c-1.
struct FrameproofParams {
  int c;
  int s;

  FrameproofParams(int c, int s);
  int s0() const { return s < c - s ? s : c - s; }
};

/// (k1,k2)-disjointness of a collection of `lambda` sets. Setting k2 > lambda
/// (resp. k1 > lambda) switches the covering (resp. disjointness) clause off.
struct DisjointnessParams {
  int k1;
  int k2;
  int lambda;

  DisjointnessParams(int k1, int k2, int lambda);
  /// Pure k1-disjoint mode: covering clause disabled.
  static DisjointnessParams disjoint_only(int k1, int lambda) { return {k1, lambda + 1, lambda}; }

  /// Each point must lie in at least this many sets (may be <= 0).
  int min_count() const { return lambda - k2 + 1; }
  /// Each point may lie in at most this many sets.
  int max_count() const { return k1 - 1; }
  /// No collection can satisfy both clauses.
  bool infeasible() const { return min_count() > max_count(); }
  /// Every collection satisfies both clauses.
  bool trivial() const { return min_count() <= 0 && max_count() >= lambda; }
};

struct LambdaT {
  int lambda;
  int t;
};

constexpr long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

/// Binomial coefficient; throws ParameterError when the value exceeds 64 bits.
std::uint64_t binomial(int n, int k);

/// All k-subsets of [n] in colexicographic order.
std::vector<Subset> enumerate_subsets(int n, int k);

/// t = ceil(sk/c) and the lambda in {1..c} with lambda = sk (mod c).
LambdaT lambda_of(int c, int s, int k);

/// Per-point membership counts of a collection (index positions, so repeats count).
std::vector<int> point_counts(std::span<const Subset> collection, int n);

/// Checks (k1,k2)-disjointness on the points of `universe`.
bool is_disjoint_collection(std::span<const Subset> collection, Subset universe, const DisjointnessParams& params);
bool is_disjoint_collection(std::span<const Subset> collection, const GroundSet& ground,
                            const DisjointnessParams& params);

struct OwnSplit {
  std::vector<Subset> own;
  std::vector<Subset> non_own;
};

/// For every member, its r-subsets split into own (contained in no other
/// member) and non-own ones, both in colex order.
std::vector<OwnSplit> own_subset_index(const SubsetFamily& family, int r);

/// True when `part` is contained in no member other than `member`.
bool is_own_subset(const SubsetFamily& family, std::size_t member, Subset part);

/// Number of members other than `member` that contain `part`.
std::size_t containing_members(const SubsetFamily& family, std::size_t member, Subset part);

}  // namespace fplab
