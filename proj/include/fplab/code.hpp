#pragma once

#include <cstddef>
#include <vector>

#include "fplab/core.hpp"

namespace fplab {

using Word = std::vector<int>;

/// A code C ⊆ [q]^n: distinct words of length n over symbols 1..q.
class Code {
 public:
  /// Throws ParameterError on q < 2, n outside 1..64, wrong word length,
  /// symbols outside 1..q, or repeated words. An empty code is allowed.
  Code(int q, int n, std::vector<Word> words);

  int q() const { return q_; }
  int n() const { return n_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }

 private:
  int q_;
  int n_;
  std::vector<Word> words_;
};

/// I(x,y) = coordinates where x and y agree.
Subset agreement_set(const Word& x, const Word& y);

int hamming_distance(const Word& x, const Word& y);

/// Minimum pairwise distance; n+1 for codes with fewer than two words.
int minimum_distance(const Code& code);

}  // namespace fplab
