#pragma once

// Exact decision procedures for the (c,s)-frameproof and
// (c,s)-critical-frameproof properties of families and codes.
//
// A (c,s)-focal configuration is a focus member plus a coalition of c other
// members (repeats allowed, or pairwise distinct in the critical variant)
// that covers every point of the focus at least s times. A family or code is
// frameproof exactly when it contains no focal configuration.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fplab/code.hpp"
#include "fplab/core.hpp"

namespace fplab {

/// Instance-size guards for exhaustive searches. Exceeding one raises GuardError.
struct Guards {
  int max_c = 8;
  std::size_t max_members = 200;
  /// Cap on C(n,t) for the exact matching solver.
  std::size_t matching_cap = 400;
  /// Cap on materialized codes and candidate pools in constructions.
  std::size_t max_words = std::size_t{1} << 20;

  /// Defaults overridden by FRAMEPROOF_LAB_GUARDS="key=value,..." when set.
  static Guards from_env();
  /// Parses "max_c=10,max_members=500" on top of the defaults.
  static Guards parse(const std::string& spec);
};

struct SearchOptions {
  Guards guards{};
  /// Worker count for the per-focus loop; results do not depend on it.
  unsigned threads = 1;
};

enum class WitnessKind { hypergraph, code };

struct FocalWitness {
  std::size_t focus = 0;
  IndexMultiset coalition;
  WitnessKind kind = WitnessKind::hypergraph;
  bool critical = false;
};

/// Least witness (focus index first, then the coalition as a sorted index
/// sequence in lexicographic order), or nullopt when `family` is (c,s)-frameproof.
std::optional<FocalWitness> find_focal_hypergraph(const SubsetFamily& family, const FrameproofParams& params,
                                                  const SearchOptions& options = {});
std::optional<FocalWitness> find_focal_code(const Code& code, const FrameproofParams& params,
                                            const SearchOptions& options = {});

/// Coalition members must be pairwise distinct.
std::optional<FocalWitness> find_critical_focal(const SubsetFamily& family, const FrameproofParams& params,
                                                const SearchOptions& options = {});
std::optional<FocalWitness> find_critical_focal(const Code& code, const FrameproofParams& params,
                                                const SearchOptions& options = {});

/// Search restricted to one focus.
std::optional<FocalWitness> find_focal_with_focus(const SubsetFamily& family, std::size_t focus,
                                                  const FrameproofParams& params, bool critical = false);

/// Re-checks a witness by direct coverage counting.
bool validate_witness(const SubsetFamily& family, const FocalWitness& witness, const FrameproofParams& params);
bool validate_witness(const Code& code, const FocalWitness& witness, const FrameproofParams& params);

/// Given a focus A and c parts T_1..T_c with sA ⊆ T_1 ⊎ ... ⊎ T_c, each part
/// contained in at least s0 members other than A, returns c pairwise distinct
/// member indices B_1..B_c (all different from A) with sA ⊆ B_1 ⊎ ... ⊎ B_c.
/// When s0 = c-s a Hall matching assigns a distinct container to every part;
/// otherwise parts are processed greedily and parts whose candidate containers
/// are all taken are covered by the containers already chosen. Unused slots
/// are padded with the least-index unused members.
/// Throws WitnessError when a precondition fails.
std::vector<std::size_t> distinctify_witness(const SubsetFamily& family, std::size_t focus,
                                             std::span<const Subset> parts, const FrameproofParams& params);

struct DescendantReport {
  /// symbols[i] = symbols usable at coordinate i+1, ascending.
  std::vector<std::vector<int>> symbols;
  boost::multiprecision::cpp_int feasible_words;
};

/// Per coordinate, the symbols appearing at least s times among the coalition's words.
DescendantReport descendant_alphabet(const Code& code, const IndexMultiset& coalition, int s);

/// Own-subsequence census of a code at restriction size r.
class OwnCensus {
 public:
  int r() const { return r_; }
  /// All r-subsets S of [n] in colex order.
  const std::vector<Subset>& restrictions() const { return restrictions_; }
  /// True iff x_S is an own subsequence of word x.
  bool is_own(std::size_t word, std::size_t restriction) const { return own_[restriction][word]; }
  bool is_own(std::size_t word, Subset restriction) const;
  /// U_S: words whose restriction to S is own.
  std::vector<std::size_t> owners(std::size_t restriction) const;
  std::vector<Subset> own_restrictions(std::size_t word) const;
  std::vector<Subset> non_own_restrictions(std::size_t word) const;

 private:
  friend OwnCensus own_subsequence_census(const Code& code, int r);
  int r_ = 0;
  std::size_t words_ = 0;
  std::vector<Subset> restrictions_;
  std::vector<std::vector<bool>> own_;
};

OwnCensus own_subsequence_census(const Code& code, int r);

/// x_S is own iff no other word agrees with x on every coordinate of S.
bool is_own_subsequence(const Code& code, std::size_t word, Subset restriction);

namespace detail {

/// Lexicographically least sorted index sequence of length c over
/// `candidates` (repeats allowed unless `distinct`) covering every point of
/// `target` at least s times; nullopt when none exists.
std::optional<std::vector<std::size_t>> least_cover(Mask target, std::span<const Mask> candidates, int c, int s,
                                                    bool distinct);

}  // namespace detail

}  // namespace fplab
