#pragma once

// Explicit families and codes: the multiset partition behind the own-subset
// counting argument, Reed-Solomon codes, greedy packings, design files,
// induced packings of a pattern, and the word-to-set transform for codes.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fplab/code.hpp"
#include "fplab/core.hpp"
#include "fplab/focal.hpp"

namespace fplab {

// ---------------------------------------------------------------------------
// Multiset partition

/// Given A with |A| = k and lambda t-subsets of A forming an
/// (s+1, c-s+1)-disjoint collection on A, returns c-lambda subsets of A of
/// size t-1 such that sA is exactly the multiset union of all c parts.
/// Each new part takes every point still needed by all remaining parts, then
/// fills up from the next highest remaining multiplicities, smallest point first.
/// Throws WitnessError when the input does not meet these conditions.
std::vector<Subset> greedy_multiset_partition(Subset a, std::span<const Subset> given, const FrameproofParams& params);

// ---------------------------------------------------------------------------
// Reed-Solomon codes

/// Evaluations of all polynomials of degree < t over GF(q) at the field
/// elements 0, 1, ..., n-1. Message (m_0, ..., m_{t-1}) is the base-q digit
/// expansion of the word index (m_0 least significant); field element v is
/// stored as symbol v+1. Throws ParameterError unless q is a prime power,
/// 1 <= t <= n <= q, and GuardError when q^t exceeds guards.max_words.
Code rs_code(int q, int n, int t, const Guards& guards = {});

struct DistanceCertificate {
  bool certified = false;
  /// Minimum distance (n+1 for codes with fewer than two words).
  int distance = 0;
  /// floor((c-s) n / c); certified iff distance > threshold.
  int threshold = 0;
};

/// Sufficient distance condition for (c,s)-frameproofness. A false
/// `certified` is inconclusive, not a refutation.
DistanceCertificate certify_frameproof_by_distance(const Code& code, const FrameproofParams& params);

// ---------------------------------------------------------------------------
// Packings and designs

struct Packing {
  SubsetFamily family;
  int t;
  bool is_design;
};

/// Validates that members are k-uniform and pairwise meet in fewer than t
/// points and recomputes the design flag. Throws ParameterError otherwise.
Packing make_packing(SubsetFamily family, int t);

/// Maximal packing built by scanning k-subsets of [n] in colex order (or a
/// seeded shuffle of it) and keeping each one that meets every kept member in
/// fewer than t points. Requires n > k > t >= 1.
Packing greedy_packing(int n, int k, int t, std::optional<std::uint64_t> seed = std::nullopt,
                       const Guards& guards = {});

struct FrameproofValidation {
  /// False when the exhaustive check was skipped by the size guards.
  bool checked = false;
  bool frameproof = false;
  std::optional<FocalWitness> witness;
  std::string note;
};

struct ValidatedFamily {
  SubsetFamily family;
  FrameproofValidation validation;
};

/// The packing's members as a (c,s)-frameproof family. Throws ParameterError
/// unless the packing strength equals ceil(s k / c).
ValidatedFamily packing_to_frameproof(const Packing& packing, const FrameproofParams& params,
                                      const SearchOptions& options = {});

/// Text format: first line "n k t", then one block per line as k 1-based
/// points. Blank lines and lines starting with '#' are ignored. Throws
/// FormatError naming the first t-subset covered twice or never.
Packing load_design(const std::filesystem::path& path);
Packing parse_design(std::istream& in);

// ---------------------------------------------------------------------------
// Induced packings

struct InducedCopy {
  Subset vertices;
  /// embedding[i] is the image of pattern point i+1.
  std::vector<int> embedding;
  /// Image of the pattern's edges, colex order.
  std::vector<Subset> edges;
};

struct InducedPacking {
  /// t-uniform family on [k].
  SubsetFamily pattern;
  int n;
  int t;
  std::vector<InducedCopy> copies;
};

/// Returns a description of the first violated packing condition, or nullopt:
/// each copy is an embedding of the pattern into k points of [n]; copies
/// share no edge; two vertex sets meet in at most t points; and a meet of
/// exactly t points is an edge of neither copy.
std::optional<std::string> induced_packing_violation(const InducedPacking& packing);

struct InducedFamilyResult {
  InducedPacking packing;
  /// The copies' vertex sets, in acceptance order.
  SubsetFamily family;
  /// m(k,t,lambda;s+1,c-s+1) from the exact solver.
  std::uint64_t matching_value = 0;
  bool budget_exhausted = false;
  FrameproofValidation validation;
};

/// Pattern = all t-subsets of [k] outside the solver's extremal family for
/// m(k,t,lambda;s+1,c-s+1). Copies are accepted greedily over k-subsets of [n]
/// (colex, or a seeded shuffle) and, per vertex set, embeddings in
/// lexicographic permutation order starting from the identity. `budget` caps
/// the number of (vertex set, embedding) candidates examined.
InducedFamilyResult induced_packing_family(int k, int c, int s, int n, std::optional<std::uint64_t> seed,
                                           std::uint64_t budget, const SearchOptions& options = {});

struct FaithfulCodeResult {
  Code code;
  /// Pattern on [n] (t-uniform) embedded in every copy.
  SubsetFamily pattern;
  std::uint64_t matching_value = 0;
  bool budget_exhausted = false;
  FrameproofValidation validation;
};

/// Words y in [q]^n accepted greedily (lexicographic, or a seeded shuffle)
/// when every accepted z has |I(y,z)| <= t and, if |I(y,z)| = t, I(y,z) is not
/// a pattern edge. This is a faithful induced packing of the pattern in the
/// complete n-partite host with parts {i} x [q]. `budget` caps candidate words.
FaithfulCodeResult faithful_code_family(int n, int c, int s, int q, std::optional<std::uint64_t> seed,
                                        std::uint64_t budget, const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Words as transversal sets

/// Point (i, x) of [n] x [q] is stored as 1-based point (i-1) q + x.
/// Requires n q <= 64.
class Multipartite {
 public:
  Multipartite(int n, int q);

  int n() const { return n_; }
  int q() const { return q_; }
  int point(int coordinate, int symbol) const { return (coordinate - 1) * q_ + symbol; }
  /// pi(x) = {(1,x_1), ..., (n,x_n)}.
  Subset image(const Word& word) const;
  /// pi(x_T) = {(i, x_i) : i in T}.
  Subset restriction(const Word& word, Subset coordinates) const;
  /// Throws ParameterError unless `set` meets every part exactly once.
  Word inverse(Subset set) const;
  /// Coordinates touched by a set of points.
  Subset coordinates(Subset set) const;
  /// pi(C) as an n-uniform family on [nq].
  SubsetFamily image(const Code& code) const;

 private:
  int n_;
  int q_;
};

}  // namespace fplab
