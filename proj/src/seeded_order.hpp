#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace fplab::detail {

// Fisher-Yates driven by mt19937_64 directly, so a seed gives the same order
// on every standard library.
template <class T>
void seeded_shuffle(std::vector<T>& items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace fplab::detail
