#include "fplab/focal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "fplab/errors.hpp"

namespace fplab {

// ---------------------------------------------------------------------------
// Guards

Guards Guards::parse(const std::string& spec) {
  Guards g;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParameterError("guard entry '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::size_t parsed = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(value, &parsed);
    } catch (const std::exception&) {
      parsed = 0;
    }
    if (parsed != value.size() || value.empty()) throw ParameterError("guard " + key + ": bad value '" + value + "'");
    if (key == "max_c") {
      g.max_c = static_cast<int>(v);
    } else if (key == "max_members") {
      g.max_members = v;
    } else if (key == "matching_cap") {
      g.matching_cap = v;
    } else if (key == "max_words") {
      g.max_words = v;
    } else {
      throw ParameterError("unknown guard '" + key + "'");
    }
  }
  return g;
}

Guards Guards::from_env() {
  const char* env = std::getenv("FRAMEPROOF_LAB_GUARDS");
  return env == nullptr ? Guards{} : parse(env);
}

namespace detail {
namespace {

// Remaining coverage demand as nested masks: layers[i] holds the points that
// still need at least i+1 more covering members.
using Layers = std::vector<Mask>;

void cover_with(Layers& layers, Mask member) {
  const std::size_t s = layers.size();
  for (std::size_t i = 0; i < s; ++i) {
    const Mask above = i + 1 < s ? layers[i + 1] : 0;
    layers[i] = (layers[i] & ~member) | (above & member);
  }
}

int max_deficit(const Layers& layers) {
  int d = 0;
  while (d < static_cast<int>(layers.size()) && layers[d] != 0) ++d;
  return d;
}

long long total_deficit(const Layers& layers) {
  long long sum = 0;
  for (Mask m : layers) sum += std::popcount(m);
  return sum;
}

struct StateKey {
  Layers layers;
  int remaining;
  std::size_t from;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::size_t h = std::hash<int>{}(k.remaining) * 1000003U ^ std::hash<std::size_t>{}(k.from);
    for (Mask m : k.layers) h = h * 0x9E3779B97F4A7C15ULL + std::hash<Mask>{}(m);
    return h;
  }
};

class CoverSearch {
 public:
  CoverSearch(Mask target, std::span<const Mask> candidates, int s)
      : target_(target), s_(s), cand_(candidates.begin(), candidates.end()) {
    const std::size_t n = cand_.size();
    for (Mask& m : cand_) m &= target_;
    suffix_union_.assign(n + 1, 0);
    suffix_max_size_.assign(n + 1, 0);
    // suffix_avail_[j][l] = points lying in at least l candidates with index >= j.
    suffix_avail_.assign(n + 1, Layers(static_cast<std::size_t>(s_) + 1, 0));
    suffix_avail_[n][0] = target_;
    for (std::size_t j = n; j-- > 0;) {
      suffix_union_[j] = suffix_union_[j + 1] | cand_[j];
      suffix_max_size_[j] = std::max(suffix_max_size_[j + 1], std::popcount(cand_[j]));
      Layers g = suffix_avail_[j + 1];
      for (int l = s_; l >= 1; --l) g[l] |= g[l - 1] & cand_[j];
      suffix_avail_[j] = std::move(g);
    }
  }

  std::optional<std::vector<std::size_t>> least_repeatable(int c) {
    Layers layers(static_cast<std::size_t>(s_), target_);
    if (!feasible_repeatable(layers, c, 0)) return std::nullopt;
    std::vector<std::size_t> picks;
    std::size_t from = 0;
    for (int pos = 0; pos < c; ++pos) {
      bool placed = false;
      for (std::size_t j = from; j < cand_.size(); ++j) {
        Layers next = layers;
        cover_with(next, cand_[j]);
        if (feasible_repeatable(next, c - pos - 1, j)) {
          picks.push_back(j);
          layers = std::move(next);
          from = j;
          placed = true;
          break;
        }
      }
      if (!placed) throw std::logic_error("cover search: canonical completion lost feasibility");
    }
    return picks;
  }

  std::optional<std::vector<std::size_t>> least_distinct(int c) {
    Layers layers(static_cast<std::size_t>(s_), target_);
    std::vector<std::size_t> picks;
    if (!search_distinct(layers, c, 0, picks)) return std::nullopt;
    return picks;
  }

 private:
  bool quick_reject(const Layers& layers, int remaining, std::size_t from) const {
    if (max_deficit(layers) > remaining) return true;
    if ((layers[0] & ~suffix_union_[from]) != 0) return true;
    return total_deficit(layers) > static_cast<long long>(remaining) * suffix_max_size_[from];
  }

  // Is there a multiset of `remaining` candidates with index >= from covering the demand?
  bool feasible_repeatable(const Layers& layers, int remaining, std::size_t from) {
    if (layers.empty() || layers[0] == 0) return true;
    if (remaining == 0 || from >= cand_.size()) return false;
    if (quick_reject(layers, remaining, from)) return false;
    StateKey key{layers, remaining, from};
    if (failed_.contains(key)) return false;
    // Branch on the most demanding point; every completion must contain it.
    const int top = max_deficit(layers);
    const Mask point = layers[top - 1] & (~layers[top - 1] + 1);
    for (std::size_t j = from; j < cand_.size(); ++j) {
      if ((cand_[j] & point) == 0) continue;
      Layers next = layers;
      cover_with(next, cand_[j]);
      if (feasible_repeatable(next, remaining - 1, from)) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  // Strictly increasing indices, explored in lexicographic order.
  bool search_distinct(const Layers& layers, int remaining, std::size_t from, std::vector<std::size_t>& picks) {
    const std::size_t available = from <= cand_.size() ? cand_.size() - from : 0;
    if (available < static_cast<std::size_t>(remaining)) return false;
    if (layers.empty() || layers[0] == 0) {
      for (int i = 0; i < remaining; ++i) picks.push_back(from + static_cast<std::size_t>(i));
      return true;
    }
    if (remaining == 0) return false;
    if (quick_reject(layers, remaining, from)) return false;
    const Layers& avail = suffix_avail_[from];
    for (int l = 1; l <= s_; ++l) {
      if ((layers[l - 1] & ~avail[l]) != 0) return false;
    }
    StateKey key{layers, remaining, from};
    if (failed_.contains(key)) return false;
    for (std::size_t j = from; j + static_cast<std::size_t>(remaining) <= cand_.size(); ++j) {
      Layers next = layers;
      cover_with(next, cand_[j]);
      picks.push_back(j);
      if (search_distinct(next, remaining - 1, j + 1, picks)) return true;
      picks.pop_back();
    }
    failed_.insert(std::move(key));
    return false;
  }

  Mask target_;
  int s_;
  std::vector<Mask> cand_;
  std::vector<Mask> suffix_union_;
  std::vector<int> suffix_max_size_;
  std::vector<Layers> suffix_avail_;
  std::unordered_set<StateKey, StateKeyHash> failed_;
};

}  // namespace

std::optional<std::vector<std::size_t>> least_cover(Mask target, std::span<const Mask> candidates, int c, int s,
                                                    bool distinct) {
  if (c < 1 || s < 1) throw ParameterError("cover search needs c >= 1 and s >= 1");
  CoverSearch search(target, candidates, s);
  return distinct ? search.least_distinct(c) : search.least_repeatable(c);
}

}  // namespace detail

namespace {

void check_guards(std::size_t members, const FrameproofParams& params, const Guards& guards) {
  if (params.c > guards.max_c) {
    throw GuardError("c=" + std::to_string(params.c) + " exceeds guard max_c=" + std::to_string(guards.max_c));
  }
  if (members > guards.max_members) {
    throw GuardError(std::to_string(members) + " members exceed guard max_members=" +
                     std::to_string(guards.max_members));
  }
}

// Runs `per_focus` over 0..count-1 and returns the result at the least focus
// that produced one. Workers may skip foci above the current best.
template <class PerFocus>
std::optional<FocalWitness> least_focus(std::size_t count, unsigned threads, PerFocus per_focus) {
  if (threads <= 1 || count < 2) {
    for (std::size_t f = 0; f < count; ++f) {
      if (auto w = per_focus(f)) return w;
    }
    return std::nullopt;
  }
  std::vector<std::optional<FocalWitness>> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t f = next++; f < count; f = next++) {
            if (f > best.load()) break;
            if (auto r = per_focus(f)) {
              results[f] = std::move(r);
              std::size_t cur = best.load();
              while (f < cur && !best.compare_exchange_weak(cur, f)) {
              }
            }
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  const std::size_t b = best.load();
  if (b == count) return std::nullopt;
  return results[b];
}

std::optional<FocalWitness> witness_for_focus(std::size_t focus, Mask target, const std::vector<Mask>& candidates,
                                              const std::vector<std::size_t>& member_of, const FrameproofParams& params,
                                              bool critical, WitnessKind kind) {
  auto picks = detail::least_cover(target, candidates, params.c, params.s, critical);
  if (!picks) return std::nullopt;
  FocalWitness w;
  w.focus = focus;
  w.kind = kind;
  w.critical = critical;
  for (std::size_t p : *picks) w.coalition.add(member_of[p]);
  return w;
}

std::optional<FocalWitness> family_focus(const SubsetFamily& family, std::size_t focus,
                                         const FrameproofParams& params, bool critical) {
  std::vector<Mask> cand;
  std::vector<std::size_t> member_of;
  cand.reserve(family.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (j == focus) continue;
    cand.push_back(family[j].mask());
    member_of.push_back(j);
  }
  return witness_for_focus(focus, family[focus].mask(), cand, member_of, params, critical, WitnessKind::hypergraph);
}

std::optional<FocalWitness> code_focus(const Code& code, std::size_t focus, const FrameproofParams& params,
                                       bool critical) {
  std::vector<Mask> cand;
  std::vector<std::size_t> member_of;
  cand.reserve(code.size());
  for (std::size_t j = 0; j < code.size(); ++j) {
    if (j == focus) continue;
    cand.push_back(agreement_set(code[focus], code[j]).mask());
    member_of.push_back(j);
  }
  return witness_for_focus(focus, GroundSet(code.n()).full_mask(), cand, member_of, params, critical,
                           WitnessKind::code);
}

std::optional<FocalWitness> search_family(const SubsetFamily& family, const FrameproofParams& params,
                                          const SearchOptions& options, bool critical) {
  check_guards(family.size(), params, options.guards);
  const std::size_t needed = critical ? static_cast<std::size_t>(params.c) + 1 : 2;
  if (family.size() < needed) return std::nullopt;
  return least_focus(family.size(), options.threads,
                     [&](std::size_t f) { return family_focus(family, f, params, critical); });
}

std::optional<FocalWitness> search_code(const Code& code, const FrameproofParams& params,
                                        const SearchOptions& options, bool critical) {
  check_guards(code.size(), params, options.guards);
  const std::size_t needed = critical ? static_cast<std::size_t>(params.c) + 1 : 2;
  if (code.size() < needed) return std::nullopt;
  return least_focus(code.size(), options.threads,
                     [&](std::size_t f) { return code_focus(code, f, params, critical); });
}

bool coalition_well_formed(std::size_t members, const FocalWitness& w, const FrameproofParams& params) {
  if (w.focus >= members) return false;
  if (w.coalition.total() != static_cast<std::size_t>(params.c)) return false;
  for (const auto& [idx, mult] : w.coalition.counts()) {
    if (idx >= members || idx == w.focus) return false;
    if (w.critical && mult != 1) return false;
  }
  return true;
}

}  // namespace

std::optional<FocalWitness> find_focal_hypergraph(const SubsetFamily& family, const FrameproofParams& params,
                                                  const SearchOptions& options) {
  return search_family(family, params, options, false);
}

std::optional<FocalWitness> find_focal_code(const Code& code, const FrameproofParams& params,
                                            const SearchOptions& options) {
  return search_code(code, params, options, false);
}

std::optional<FocalWitness> find_critical_focal(const SubsetFamily& family, const FrameproofParams& params,
                                                const SearchOptions& options) {
  return search_family(family, params, options, true);
}

std::optional<FocalWitness> find_critical_focal(const Code& code, const FrameproofParams& params,
                                                const SearchOptions& options) {
  return search_code(code, params, options, true);
}

std::optional<FocalWitness> find_focal_with_focus(const SubsetFamily& family, std::size_t focus,
                                                  const FrameproofParams& params, bool critical) {
  if (focus >= family.size()) throw ParameterError("focus index " + std::to_string(focus) + " out of range");
  return family_focus(family, focus, params, critical);
}

bool validate_witness(const SubsetFamily& family, const FocalWitness& w, const FrameproofParams& params) {
  if (!coalition_well_formed(family.size(), w, params)) return false;
  for (int p : family[w.focus].points()) {
    std::size_t covered = 0;
    for (const auto& [idx, mult] : w.coalition.counts()) {
      if (family[idx].contains(p)) covered += mult;
    }
    if (covered < static_cast<std::size_t>(params.s)) return false;
  }
  return true;
}

bool validate_witness(const Code& code, const FocalWitness& w, const FrameproofParams& params) {
  if (!coalition_well_formed(code.size(), w, params)) return false;
  const Word& x = code[w.focus];
  for (int i = 0; i < code.n(); ++i) {
    std::size_t agree = 0;
    for (const auto& [idx, mult] : w.coalition.counts()) {
      if (code[idx][i] == x[i]) agree += mult;
    }
    if (agree < static_cast<std::size_t>(params.s)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Distinct coalition from non-own parts

namespace {

std::vector<std::size_t> containers(const SubsetFamily& family, std::size_t focus, Subset part) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (j != focus && part.is_subset_of(family[j])) out.push_back(j);
  }
  return out;
}

bool augment(std::size_t part, const std::vector<std::vector<std::size_t>>& adj, std::vector<bool>& seen,
             std::map<std::size_t, std::size_t>& owner_of, std::vector<std::size_t>& match) {
  for (std::size_t b : adj[part]) {
    if (seen[b]) continue;
    seen[b] = true;
    auto it = owner_of.find(b);
    if (it == owner_of.end() || augment(it->second, adj, seen, owner_of, match)) {
      owner_of[b] = part;
      match[part] = b;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::size_t> distinctify_witness(const SubsetFamily& family, std::size_t focus,
                                             std::span<const Subset> parts, const FrameproofParams& params) {
  const auto c = static_cast<std::size_t>(params.c);
  const int s0 = params.s0();
  if (focus >= family.size()) throw WitnessError("focus index out of range");
  if (family.size() < c + 1) throw WitnessError("family has fewer than c+1 members");
  if (parts.size() != c) {
    throw WitnessError("expected " + std::to_string(c) + " parts, got " + std::to_string(parts.size()));
  }
  const Subset a = family[focus];
  std::vector<std::vector<std::size_t>> adj(c);
  for (std::size_t i = 0; i < c; ++i) {
    if (!parts[i].is_subset_of(a)) throw WitnessError("part " + std::to_string(i) + " is not inside the focus");
    adj[i] = containers(family, focus, parts[i]);
    if (adj[i].size() < static_cast<std::size_t>(s0)) {
      throw WitnessError("part " + std::to_string(i) + " " + parts[i].to_string() + " lies in fewer than s0=" +
                         std::to_string(s0) + " other members");
    }
  }
  const std::vector<int> counts = point_counts(parts, kMaxPoints);
  for (int p : a.points()) {
    if (counts[p] < params.s) {
      throw WitnessError("point " + std::to_string(p) + " covered " + std::to_string(counts[p]) +
                         " times by the parts, need s=" + std::to_string(params.s));
    }
  }

  std::vector<std::size_t> chosen;
  if (s0 == params.c - params.s) {
    // Every container holds at most c-s parts, every part has >= c-s containers.
    std::vector<std::size_t> match(c, family.size());
    std::map<std::size_t, std::size_t> owner_of;
    for (std::size_t i = 0; i < c; ++i) {
      std::vector<bool> seen(family.size(), false);
      if (!augment(i, adj, seen, owner_of, match)) {
        throw WitnessError("parts admit no system of distinct containing members");
      }
    }
    chosen = match;
  } else {
    std::vector<bool> used(family.size(), false);
    for (std::size_t i = 0; i < c; ++i) {
      const auto first_s0 = std::min(adj[i].size(), static_cast<std::size_t>(s0));
      for (std::size_t k = 0; k < first_s0; ++k) {
        const std::size_t b = adj[i][k];
        if (!used[b]) {
          used[b] = true;
          chosen.push_back(b);
          break;
        }
      }
      // Otherwise all s0 = s candidates are already chosen and cover the part s times.
    }
  }

  std::vector<bool> taken(family.size(), false);
  taken[focus] = true;
  for (std::size_t b : chosen) taken[b] = true;
  for (std::size_t j = 0; chosen.size() < c && j < family.size(); ++j) {
    if (!taken[j]) {
      taken[j] = true;
      chosen.push_back(j);
    }
  }

  FocalWitness check;
  check.focus = focus;
  check.critical = true;
  for (std::size_t b : chosen) check.coalition.add(b);
  if (!validate_witness(family, check, params)) {
    throw WitnessError("distinct members fail to cover the focus s times");
  }
  return chosen;
}

// ---------------------------------------------------------------------------
// Descendants and own subsequences

DescendantReport descendant_alphabet(const Code& code, const IndexMultiset& coalition, int s) {
  if (s < 1) throw ParameterError("threshold s must be positive");
  if (coalition.total() == 0) throw ParameterError("coalition is empty");
  for (const auto& [idx, mult] : coalition.counts()) {
    if (idx >= code.size()) throw ParameterError("coalition index " + std::to_string(idx) + " out of range");
  }
  DescendantReport report;
  report.feasible_words = 1;
  for (int i = 0; i < code.n(); ++i) {
    std::map<int, std::size_t> tally;
    for (const auto& [idx, mult] : coalition.counts()) tally[code[idx][i]] += mult;
    std::vector<int> col;
    for (const auto& [sym, cnt] : tally) {
      if (cnt >= static_cast<std::size_t>(s)) col.push_back(sym);
    }
    report.feasible_words *= col.size();
    report.symbols.push_back(std::move(col));
  }
  return report;
}

bool is_own_subsequence(const Code& code, std::size_t word, Subset restriction) {
  for (std::size_t j = 0; j < code.size(); ++j) {
    if (j != word && restriction.is_subset_of(agreement_set(code[word], code[j]))) return false;
  }
  return true;
}

OwnCensus own_subsequence_census(const Code& code, int r) {
  if (r < 0 || r > code.n()) throw ParameterError("restriction size r=" + std::to_string(r) + " outside 0..n");
  OwnCensus census;
  census.r_ = r;
  census.words_ = code.size();
  census.restrictions_ = enumerate_subsets(code.n(), r);
  census.own_.reserve(census.restrictions_.size());
  for (const Subset& s : census.restrictions_) {
    const std::vector<int> pts = s.points();
    std::map<Word, std::size_t> seen;
    std::vector<Word> keys(code.size());
    for (std::size_t w = 0; w < code.size(); ++w) {
      Word key;
      key.reserve(pts.size());
      for (int p : pts) key.push_back(code[w][p - 1]);
      ++seen[key];
      keys[w] = std::move(key);
    }
    std::vector<bool> own(code.size());
    for (std::size_t w = 0; w < code.size(); ++w) own[w] = seen[keys[w]] == 1;
    census.own_.push_back(std::move(own));
  }
  return census;
}

bool OwnCensus::is_own(std::size_t word, Subset restriction) const {
  auto it = std::lower_bound(restrictions_.begin(), restrictions_.end(), restriction);
  if (it == restrictions_.end() || *it != restriction) {
    throw ParameterError("restriction " + restriction.to_string() + " is not an r-subset of [n]");
  }
  return own_[static_cast<std::size_t>(it - restrictions_.begin())][word];
}

std::vector<std::size_t> OwnCensus::owners(std::size_t restriction) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    if (own_[restriction][w]) out.push_back(w);
  }
  return out;
}

std::vector<Subset> OwnCensus::own_restrictions(std::size_t word) const {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < restrictions_.size(); ++i) {
    if (own_[i][word]) out.push_back(restrictions_[i]);
  }
  return out;
}

std::vector<Subset> OwnCensus::non_own_restrictions(std::size_t word) const {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < restrictions_.size(); ++i) {
    if (!own_[i][word]) out.push_back(restrictions_[i]);
  }
  return out;
}

}  // namespace fplab
