#pragma once

// Brute-force reference implementations. They share no search code with the
// library: plain enumeration over all candidates, definitions read literally.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fplab/code.hpp"
#include "fplab/core.hpp"

namespace oracle {

using fplab::Mask;
using fplab::Subset;

// Calls f on every non-decreasing (or strictly increasing) length-len
// sequence over 0..count-1 in lexicographic order; stops when f returns true.
inline bool for_each_sequence(std::size_t count, int len, bool strict,
                              const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> seq;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (static_cast<int>(seq.size()) == len) return f(seq);
    for (std::size_t i = from; i < count; ++i) {
      seq.push_back(i);
      if (rec(strict ? i + 1 : i)) return true;
      seq.pop_back();
    }
    return false;
  };
  return rec(0);
}

struct Witness {
  std::size_t focus;
  std::vector<std::size_t> coalition;  // member indices, sorted
};

// Least (focus, sorted coalition) such that every point of the focus lies in
// at least s coalition members, counting repeats.
inline std::optional<Witness> focal(const std::vector<Mask>& members, int c, int s, bool distinct) {
  const std::size_t m = members.size();
  for (std::size_t focus = 0; focus < m; ++focus) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < m; ++i) {
      if (i != focus) others.push_back(i);
    }
    std::optional<Witness> found;
    for_each_sequence(others.size(), c, distinct, [&](const std::vector<std::size_t>& seq) {
      for (int p = 0; p < 64; ++p) {
        if (!((members[focus] >> p) & 1U)) continue;
        int cover = 0;
        for (std::size_t j : seq) cover += static_cast<int>((members[others[j]] >> p) & 1U);
        if (cover < s) return false;
      }
      Witness w{focus, {}};
      for (std::size_t j : seq) w.coalition.push_back(others[j]);
      found = w;
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

inline std::vector<Mask> masks(const fplab::SubsetFamily& f) {
  std::vector<Mask> out;
  for (const Subset& s : f.sets()) out.push_back(s.mask());
  return out;
}

// Code version: coalition members agree with the focus on every coordinate
// at least s times.
inline std::optional<Witness> focal_code(const fplab::Code& code, int c, int s, bool distinct) {
  const std::size_t m = code.size();
  for (std::size_t focus = 0; focus < m; ++focus) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < m; ++i) {
      if (i != focus) others.push_back(i);
    }
    std::optional<Witness> found;
    for_each_sequence(others.size(), c, distinct, [&](const std::vector<std::size_t>& seq) {
      for (int p = 0; p < code.n(); ++p) {
        int agree = 0;
        for (std::size_t j : seq) agree += code[others[j]][p] == code[focus][p] ? 1 : 0;
        if (agree < s) return false;
      }
      Witness w{focus, {}};
      for (std::size_t j : seq) w.coalition.push_back(others[j]);
      found = w;
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

// (k1,k2)-disjointness read off the definition: every k1 of the sets have
// empty intersection and every k2 of them have union [n].
inline bool disjoint_by_quantifiers(const std::vector<Mask>& sets, int n, int k1, int k2) {
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  const int lambda = static_cast<int>(sets.size());
  bool ok = true;
  if (k1 <= lambda) {
    for_each_sequence(sets.size(), k1, true, [&](const std::vector<std::size_t>& b) {
      Mask inter = full;
      for (std::size_t i : b) inter &= sets[i];
      if (inter != 0) ok = false;
      return !ok;
    });
  }
  if (ok && k2 <= lambda) {
    for_each_sequence(sets.size(), k2, true, [&](const std::vector<std::size_t>& b) {
      Mask uni = 0;
      for (std::size_t i : b) uni |= sets[i];
      if ((uni & full) != full) ok = false;
      return !ok;
    });
  }
  return ok;
}

// m(n,t,lambda;k1,k2) by enumerating every subfamily of the t-subsets.
// A subfamily is bad when it contains the support of some violating
// lambda-multiset; badness is closed upward, computed by a superset sweep.
inline int matching_by_enumeration(int n, int t, int lambda, int k1, int k2) {
  const std::vector<Subset> all = fplab::enumerate_subsets(n, t);
  const int count = static_cast<int>(all.size());
  std::vector<Mask> sets;
  for (const Subset& s : all) sets.push_back(s.mask());
  std::vector<char> bad(std::size_t{1} << count, 0);
  for_each_sequence(sets.size(), lambda, false, [&](const std::vector<std::size_t>& seq) {
    std::vector<Mask> chosen;
    std::uint32_t support = 0;
    for (std::size_t i : seq) {
      chosen.push_back(sets[i]);
      support |= 1U << i;
    }
    if (disjoint_by_quantifiers(chosen, n, k1, k2)) bad[support] = 1;
    return false;
  });
  for (int bit = 0; bit < count; ++bit) {
    for (std::uint32_t f = 0; f < (1U << count); ++f) {
      if ((f >> bit) & 1U) bad[f] = static_cast<char>(bad[f] | bad[f ^ (1U << bit)]);
    }
  }
  int best = 0;
  for (std::uint32_t f = 0; f < (1U << count); ++f) {
    if (!bad[f]) best = std::max(best, std::popcount(f));
  }
  return best;
}

// Own r-subsets of member i by direct containment scan.
inline std::vector<Mask> own_subsets(const std::vector<Mask>& members, std::size_t i, int r) {
  std::vector<Mask> out;
  for (Mask sub = members[i];; sub = (sub - 1) & members[i]) {
    if (std::popcount(sub) == r) {
      bool own = true;
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j != i && (sub & ~members[j]) == 0) own = false;
      }
      if (own) out.push_back(sub);
    }
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
