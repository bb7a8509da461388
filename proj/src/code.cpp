#include "fplab/code.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fplab/errors.hpp"

namespace fplab {

Code::Code(int q, int n, std::vector<Word> words) : q_(q), n_(n), words_(std::move(words)) {
  if (q_ < 2) throw ParameterError("alphabet size q=" + std::to_string(q_) + " must be at least 2");
  if (n_ < 1 || n_ > kMaxPoints) throw ParameterError("word length n=" + std::to_string(n_) + " outside 1..64");
  std::set<Word> seen;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& w = words_[i];
    if (static_cast<int>(w.size()) != n_) {
      throw ParameterError("word " + std::to_string(i) + " has length " + std::to_string(w.size()) +
                           ", expected " + std::to_string(n_));
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] < 1 || w[j] > q_) {
        throw ParameterError("word " + std::to_string(i) + " coordinate " + std::to_string(j + 1) + ": symbol " +
                             std::to_string(w[j]) + " outside 1.." + std::to_string(q_));
      }
    }
    if (!seen.insert(w).second) throw ParameterError("word " + std::to_string(i) + " is repeated");
  }
}

Subset agreement_set(const Word& x, const Word& y) {
  Mask m = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] == y[i]) m |= Mask{1} << i;
  }
  return Subset(m);
}

int hamming_distance(const Word& x, const Word& y) {
  return static_cast<int>(x.size()) - agreement_set(x, y).size();
}

int minimum_distance(const Code& code) {
  int best = code.n() + 1;
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      best = std::min(best, hamming_distance(code[i], code[j]));
    }
  }
  return best;
}

}  // namespace fplab
