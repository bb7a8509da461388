#include "fplab/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "fplab/errors.hpp"

namespace fplab {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxPoints) {
    throw ParameterError("ground set size n=" + std::to_string(n) + " outside 1..64");
  }
}

Subset::Subset(std::initializer_list<int> points) {
  *this = from_points(std::span<const int>(points.begin(), points.size()));
}

Subset Subset::from_points(std::span<const int> points) {
  Mask m = 0;
  for (int p : points) {
    if (p < 1 || p > kMaxPoints) throw ParameterError("point " + std::to_string(p) + " outside 1..64");
    m |= Mask{1} << (p - 1);
  }
  return Subset(m);
}

std::vector<int> Subset::points() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int p : points()) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << '}';
  return os.str();
}

SubsetFamily::SubsetFamily(GroundSet ground, std::vector<Subset> sets, std::optional<int> uniform_k)
    : ground_(ground), sets_(std::move(sets)), uniform_k_(uniform_k) {
  const Mask full = ground_.full_mask();
  std::unordered_set<Mask> seen;
  seen.reserve(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const Subset& s = sets_[i];
    if ((s.mask() & ~full) != 0) {
      throw ParameterError("member " + std::to_string(i) + " " + s.to_string() + " has points outside 1.." +
                           std::to_string(ground_.n()));
    }
    if (uniform_k_ && s.size() != *uniform_k_) {
      throw ParameterError("member " + std::to_string(i) + " has size " + std::to_string(s.size()) +
                           ", expected " + std::to_string(*uniform_k_));
    }
    if (!seen.insert(s.mask()).second) {
      throw ParameterError("member " + std::to_string(i) + " " + s.to_string() + " is repeated");
    }
  }
}

SubsetFamily SubsetFamily::infer_uniform(GroundSet ground, std::vector<Subset> sets) {
  std::optional<int> k;
  if (!sets.empty()) {
    k = sets.front().size();
    for (const Subset& s : sets) {
      if (s.size() != *k) {
        k.reset();
        break;
      }
    }
  }
  return SubsetFamily(ground, std::move(sets), k);
}

std::optional<std::size_t> SubsetFamily::index_of(Subset s) const {
  auto it = std::find(sets_.begin(), sets_.end(), s);
  if (it == sets_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

IndexMultiset IndexMultiset::from_indices(std::span<const std::size_t> indices) {
  IndexMultiset out;
  for (std::size_t i : indices) out.add(i);
  return out;
}

void IndexMultiset::add(std::size_t index, std::size_t times) {
  if (times == 0) return;
  counts_[index] += times;
}

std::size_t IndexMultiset::total() const {
  std::size_t sum = 0;
  for (const auto& [idx, cnt] : counts_) sum += cnt;
  return sum;
}

std::size_t IndexMultiset::multiplicity(std::size_t index) const {
  auto it = counts_.find(index);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::size_t> IndexMultiset::sorted_indices() const {
  std::vector<std::size_t> out;
  for (const auto& [idx, cnt] : counts_) out.insert(out.end(), cnt, idx);
  return out;
}

FrameproofParams::FrameproofParams(int c_, int s_) : c(c_), s(s_) {
  if (c < 2) throw ParameterError("c=" + std::to_string(c) + " must be at least 2");
  if (s < 1 || s > c - 1) {
    throw ParameterError("s=" + std::to_string(s) + " must lie in 1..c-1=" + std::to_string(c - 1));
  }
}

DisjointnessParams::DisjointnessParams(int k1_, int k2_, int lambda_) : k1(k1_), k2(k2_), lambda(lambda_) {
  if (k1 < 1) throw ParameterError("k1 must be positive");
  if (k2 < 1) throw ParameterError("k2 must be positive");
  if (lambda < 1) throw ParameterError("lambda must be positive");
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw ParameterError("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<Subset> enumerate_subsets(int n, int k) {
  if (n < 0 || n > kMaxPoints) throw ParameterError("n=" + std::to_string(n) + " outside 0..64");
  if (k < 0 || k > n) {
    throw ParameterError("subset size k=" + std::to_string(k) + " outside 0..n=" + std::to_string(n));
  }
  const std::uint64_t count = binomial(n, k);
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 27;
  if (count > kLimit) {
    throw GuardError("C(" + std::to_string(n) + "," + std::to_string(k) + ") subsets is too many to materialize");
  }
  std::vector<Subset> out;
  out.reserve(count);
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  Mask x = k == 64 ? ~Mask{0} : (Mask{1} << k) - 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    out.emplace_back(x);
    if (i + 1 == count) break;
    // Gosper's hack: next larger integer with the same popcount.
    const Mask low = x & (~x + 1);
    const Mask ripple = x + low;
    x = (((ripple ^ x) >> 2) / low) | ripple;
  }
  return out;
}

LambdaT lambda_of(int c, int s, int k) {
  FrameproofParams params(c, s);
  if (k < 1) throw ParameterError("k must be positive");
  const long long sk = static_cast<long long>(s) * k;
  const int t = static_cast<int>(ceil_div(sk, c));
  int lambda = static_cast<int>(sk % c);
  if (lambda == 0) lambda = c;
  if (static_cast<long long>(lambda) * t + static_cast<long long>(c - lambda) * (t - 1) != sk) {
    throw std::logic_error("lambda_of: counting identity violated");
  }
  return {lambda, t};
}

std::vector<int> point_counts(std::span<const Subset> collection, int n) {
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
  for (const Subset& a : collection) {
    for (Mask m = a.mask(); m != 0; m &= m - 1) {
      const int p = std::countr_zero(m) + 1;
      if (p <= n) ++counts[p];
    }
  }
  return counts;
}

bool is_disjoint_collection(std::span<const Subset> collection, Subset universe, const DisjointnessParams& params) {
  if (collection.size() != static_cast<std::size_t>(params.lambda)) {
    throw ParameterError("collection has " + std::to_string(collection.size()) + " entries, lambda=" +
                         std::to_string(params.lambda));
  }
  const std::vector<int> counts = point_counts(collection, kMaxPoints);
  for (int p : universe.points()) {
    if (counts[p] > params.max_count() || counts[p] < params.min_count()) return false;
  }
  return true;
}

bool is_disjoint_collection(std::span<const Subset> collection, const GroundSet& ground,
                            const DisjointnessParams& params) {
  return is_disjoint_collection(collection, Subset(ground.full_mask()), params);
}

std::size_t containing_members(const SubsetFamily& family, std::size_t member, Subset part) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (j != member && part.is_subset_of(family[j])) ++count;
  }
  return count;
}

bool is_own_subset(const SubsetFamily& family, std::size_t member, Subset part) {
  return containing_members(family, member, part) == 0;
}

std::vector<OwnSplit> own_subset_index(const SubsetFamily& family, int r) {
  if (r < 0 || r > family.n()) throw ParameterError("r=" + std::to_string(r) + " outside 0..n");
  std::vector<OwnSplit> out(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Subset a = family[i];
    if (r > a.size()) continue;
    // Enumerate r-subsets of `a` in colex order by mapping r-subsets of [|a|].
    const std::vector<int> pts = a.points();
    for (const Subset& local : enumerate_subsets(static_cast<int>(pts.size()), r)) {
      Mask m = 0;
      for (int idx : local.points()) m |= Mask{1} << (pts[idx - 1] - 1);
      const Subset part(m);
      if (is_own_subset(family, i, part)) {
        out[i].own.push_back(part);
      } else {
        out[i].non_own.push_back(part);
      }
    }
  }
  return out;
}

}  // namespace fplab
