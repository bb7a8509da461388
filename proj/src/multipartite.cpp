#include <string>

#include "fplab/constructions.hpp"
#include "fplab/errors.hpp"

namespace fplab {

Multipartite::Multipartite(int n, int q) : n_(n), q_(q) {
  if (n < 1 || q < 1 || n * q > kMaxPoints) {
    throw ParameterError("n*q=" + std::to_string(n * q) + " must lie in 1..64");
  }
}

Subset Multipartite::image(const Word& word) const {
  return restriction(word, Subset(GroundSet(n_).full_mask()));
}

Subset Multipartite::restriction(const Word& word, Subset coordinates) const {
  if (static_cast<int>(word.size()) != n_) throw ParameterError("word length differs from n");
  Mask m = 0;
  for (int i : coordinates.points()) {
    if (i > n_) throw ParameterError("coordinate " + std::to_string(i) + " outside 1..n");
    const int x = word[static_cast<std::size_t>(i - 1)];
    if (x < 1 || x > q_) throw ParameterError("symbol " + std::to_string(x) + " outside 1..q");
    m |= Mask{1} << (point(i, x) - 1);
  }
  return Subset(m);
}

Word Multipartite::inverse(Subset set) const {
  Word w(static_cast<std::size_t>(n_), 0);
  for (int p : set.points()) {
    if (p > n_ * q_) throw ParameterError("point " + std::to_string(p) + " outside [nq]");
    const int i = (p - 1) / q_;
    if (w[static_cast<std::size_t>(i)] != 0) {
      throw ParameterError("set meets part " + std::to_string(i + 1) + " more than once");
    }
    w[static_cast<std::size_t>(i)] = (p - 1) % q_ + 1;
  }
  for (int i = 0; i < n_; ++i) {
    if (w[static_cast<std::size_t>(i)] == 0) throw ParameterError("set misses part " + std::to_string(i + 1));
  }
  return w;
}

Subset Multipartite::coordinates(Subset set) const {
  Mask m = 0;
  for (int p : set.points()) m |= Mask{1} << ((p - 1) / q_);
  return Subset(m);
}

SubsetFamily Multipartite::image(const Code& code) const {
  if (code.n() != n_ || code.q() != q_) throw ParameterError("code shape differs from (n,q)");
  std::vector<Subset> sets;
  sets.reserve(code.size());
  for (const Word& w : code.words()) sets.push_back(image(w));
  return SubsetFamily(GroundSet(n_ * q_), std::move(sets), n_);
}

}  // namespace fplab
