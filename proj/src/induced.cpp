#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "fplab/constructions.hpp"
#include "fplab/errors.hpp"
#include "fplab/matching.hpp"
#include "seeded_order.hpp"

namespace fplab {

namespace {

struct PatternChoice {
  SubsetFamily pattern;
  std::uint64_t matching_value;
};

// All t-subsets of [size] outside the solver's extremal family.
PatternChoice avoiding_pattern(int size, int c, int s, const Guards& guards) {
  const LambdaT lt = lambda_of(c, s, size);
  MatchingOptions mo;
  mo.cap = guards.matching_cap;
  const MatchingCertificate cert =
      matching_number_exact({size, lt.t, DisjointnessParams(s + 1, c - s + 1, lt.lambda)}, mo);
  if (cert.status != CertificateStatus::exact) {
    throw GuardError("matching solver budget exhausted while choosing the pattern");
  }
  std::vector<Subset> edges;
  for (const Subset& e : enumerate_subsets(size, lt.t)) {
    if (!cert.extremal_family.index_of(e)) edges.push_back(e);
  }
  return {SubsetFamily(GroundSet(size), std::move(edges), lt.t), cert.value};
}

std::vector<Subset> embed_edges(const SubsetFamily& pattern, const std::vector<int>& embedding) {
  std::vector<Subset> out;
  out.reserve(pattern.size());
  for (const Subset& e : pattern.sets()) {
    Mask m = 0;
    for (int p : e.points()) m |= Mask{1} << (embedding[static_cast<std::size_t>(p - 1)] - 1);
    out.emplace_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_edge(const std::vector<Subset>& sorted_edges, Subset e) {
  return std::binary_search(sorted_edges.begin(), sorted_edges.end(), e);
}

// Conditions between two copies; nullopt when compatible.
std::optional<std::string> pair_violation(const InducedCopy& a, const InducedCopy& b, int t) {
  const Subset meet = a.vertices & b.vertices;
  if (meet.size() > t) return "vertex sets meet in " + std::to_string(meet.size()) + " > t points";
  for (const Subset& e : a.edges) {
    if (has_edge(b.edges, e)) return "shared edge " + e.to_string();
  }
  if (meet.size() == t && (has_edge(a.edges, meet) || has_edge(b.edges, meet))) {
    return "meet " + meet.to_string() + " of size t is an edge";
  }
  return std::nullopt;
}

FrameproofValidation validate_family(const SubsetFamily& family, const FrameproofParams& params,
                                     const SearchOptions& options) {
  FrameproofValidation v;
  if (family.empty()) {
    v.checked = true;
    v.frameproof = true;
    return v;
  }
  if (params.c > options.guards.max_c || family.size() > options.guards.max_members) {
    v.note = "exhaustive check skipped by size guards";
    return v;
  }
  v.checked = true;
  v.witness = find_focal_hypergraph(family, params, options);
  v.frameproof = !v.witness;
  return v;
}

}  // namespace

std::optional<std::string> induced_packing_violation(const InducedPacking& packing) {
  const int k = packing.pattern.n();
  const int t = packing.t;
  if (packing.pattern.uniform_k() && *packing.pattern.uniform_k() != t) return "pattern is not t-uniform";
  for (std::size_t i = 0; i < packing.copies.size(); ++i) {
    const InducedCopy& cp = packing.copies[i];
    const std::string tag = "copy " + std::to_string(i) + ": ";
    if (cp.vertices.size() != k || cp.embedding.size() != static_cast<std::size_t>(k)) {
      return tag + "vertex set or embedding has the wrong size";
    }
    if (cp.vertices.max_point() > packing.n) return tag + "vertex outside [n]";
    Mask img = 0;
    for (int v : cp.embedding) {
      if (v < 1 || v > packing.n) return tag + "embedding leaves [n]";
      img |= Mask{1} << (v - 1);
    }
    if (img != cp.vertices.mask()) return tag + "embedding is not a bijection onto the vertex set";
    if (embed_edges(packing.pattern, cp.embedding) != cp.edges) return tag + "edges are not the pattern's image";
  }
  for (std::size_t i = 0; i < packing.copies.size(); ++i) {
    for (std::size_t j = i + 1; j < packing.copies.size(); ++j) {
      if (auto why = pair_violation(packing.copies[i], packing.copies[j], t)) {
        return "copies " + std::to_string(i) + " and " + std::to_string(j) + ": " + *why;
      }
    }
  }
  return std::nullopt;
}

InducedFamilyResult induced_packing_family(int k, int c, int s, int n, std::optional<std::uint64_t> seed,
                                           std::uint64_t budget, const SearchOptions& options) {
  const FrameproofParams params(c, s);
  if (k < 2 || n < k) throw ParameterError("induced packing needs n >= k >= 2");
  GroundSet ground(n);
  if (binomial(n, k) > options.guards.max_words) {
    throw GuardError("C(n,k) exceeds guard max_words=" + std::to_string(options.guards.max_words));
  }
  PatternChoice choice = avoiding_pattern(k, c, s, options.guards);
  const int t = lambda_of(c, s, k).t;

  InducedFamilyResult result{InducedPacking{choice.pattern, n, t, {}}, SubsetFamily(ground, {}, k),
                             choice.matching_value, false, {}};
  std::vector<Subset> order = enumerate_subsets(n, k);
  if (seed) detail::seeded_shuffle(order, *seed);

  std::uint64_t examined = 0;
  std::vector<Subset> vertex_sets;
  for (const Subset& vs : order) {
    if (examined >= budget) {
      result.budget_exhausted = true;
      break;
    }
    bool fits = true;
    for (const InducedCopy& cp : result.packing.copies) {
      if ((cp.vertices & vs).size() > t) {
        fits = false;
        break;
      }
    }
    if (!fits) {
      ++examined;
      continue;
    }
    std::vector<int> embedding = vs.points();
    std::set<std::vector<Subset>> tried;
    bool accepted = false;
    do {
      if (examined >= budget) {
        result.budget_exhausted = true;
        break;
      }
      InducedCopy cand{vs, embedding, embed_edges(choice.pattern, embedding)};
      if (!tried.insert(cand.edges).second) continue;
      ++examined;
      bool ok = true;
      for (const InducedCopy& cp : result.packing.copies) {
        if (pair_violation(cand, cp, t)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        result.packing.copies.push_back(std::move(cand));
        vertex_sets.push_back(vs);
        accepted = true;
      }
    } while (!accepted && std::next_permutation(embedding.begin(), embedding.end()));
    if (result.budget_exhausted) break;
  }

  if (auto why = induced_packing_violation(result.packing)) {
    throw std::logic_error("induced packing construction broke a packing condition: " + *why);
  }
  result.family = SubsetFamily(ground, std::move(vertex_sets), k);
  result.validation = validate_family(result.family, params, options);
  return result;
}

FaithfulCodeResult faithful_code_family(int n, int c, int s, int q, std::optional<std::uint64_t> seed,
                                        std::uint64_t budget, const SearchOptions& options) {
  const FrameproofParams params(c, s);
  if (n < 2) throw ParameterError("faithful code family needs n >= 2");
  if (q < 2) throw ParameterError("faithful code family needs q >= 2");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(q);
    if (total > options.guards.max_words) {
      throw GuardError("q^n exceeds guard max_words=" + std::to_string(options.guards.max_words));
    }
  }
  PatternChoice choice = avoiding_pattern(n, c, s, options.guards);
  const int t = lambda_of(c, s, n).t;
  std::unordered_set<Mask> pattern_edges;
  for (const Subset& e : choice.pattern.sets()) pattern_edges.insert(e.mask());

  std::vector<std::uint64_t> order(total);
  for (std::uint64_t i = 0; i < total; ++i) order[i] = i;
  if (seed) detail::seeded_shuffle(order, *seed);

  FaithfulCodeResult result{Code(q, n, {}), choice.pattern, choice.matching_value, false, {}};
  std::vector<Word> accepted;
  std::uint64_t examined = 0;
  for (std::uint64_t index : order) {
    if (examined >= budget) {
      result.budget_exhausted = true;
      break;
    }
    ++examined;
    Word y(static_cast<std::size_t>(n));
    std::uint64_t rest = index;
    for (int i = n - 1; i >= 0; --i) {
      y[i] = static_cast<int>(rest % static_cast<std::uint64_t>(q)) + 1;
      rest /= static_cast<std::uint64_t>(q);
    }
    bool ok = true;
    for (const Word& z : accepted) {
      const Subset meet = agreement_set(y, z);
      if (meet.size() > t || (meet.size() == t && pattern_edges.contains(meet.mask()))) {
        ok = false;
        break;
      }
    }
    if (ok) accepted.push_back(std::move(y));
  }
  result.code = Code(q, n, std::move(accepted));

  FrameproofValidation& v = result.validation;
  if (result.code.size() <= 1) {
    v.checked = true;
    v.frameproof = true;
  } else if (params.c > options.guards.max_c || result.code.size() > options.guards.max_members) {
    v.note = "exhaustive check skipped by size guards";
  } else {
    v.checked = true;
    v.witness = find_focal_code(result.code, params, options);
    v.frameproof = !v.witness;
  }
  return result;
}

}  // namespace fplab
