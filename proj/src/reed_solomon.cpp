#include <string>

#include "fplab/constructions.hpp"
#include "fplab/errors.hpp"
#include "fplab/field.hpp"

namespace fplab {

Code rs_code(int q, int n, int t, const Guards& guards) {
  if (q < 2 || q > 65536) throw ParameterError("q=" + std::to_string(q) + " outside 2..65536");
  if (prime_power_of(static_cast<std::uint64_t>(q)).e == 0) {
    throw ParameterError("q=" + std::to_string(q) + " is not a prime power");
  }
  if (n < 1 || n > q) throw ParameterError("length n=" + std::to_string(n) + " must satisfy 1 <= n <= q");
  if (t < 1 || t > n) throw ParameterError("dimension t=" + std::to_string(t) + " must satisfy 1 <= t <= n");
  std::uint64_t count = 1;
  for (int i = 0; i < t; ++i) {
    count *= static_cast<std::uint64_t>(q);
    if (count > guards.max_words) {
      throw GuardError("q^t exceeds guard max_words=" + std::to_string(guards.max_words));
    }
  }

  const GaloisField field(static_cast<std::uint32_t>(q));
  std::vector<Word> words;
  words.reserve(count);
  std::vector<GaloisField::Element> message(static_cast<std::size_t>(t), 0);
  for (std::uint64_t index = 0; index < count; ++index) {
    std::uint64_t rest = index;
    for (int i = 0; i < t; ++i) {
      message[i] = static_cast<GaloisField::Element>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    Word w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const auto x = static_cast<GaloisField::Element>(j);
      GaloisField::Element acc = 0;
      for (int i = t - 1; i >= 0; --i) acc = field.add(field.mul(acc, x), message[i]);
      w[j] = static_cast<int>(acc) + 1;
    }
    words.push_back(std::move(w));
  }
  return Code(q, n, std::move(words));
}

DistanceCertificate certify_frameproof_by_distance(const Code& code, const FrameproofParams& params) {
  DistanceCertificate cert;
  cert.distance = minimum_distance(code);
  cert.threshold = (params.c - params.s) * code.n() / params.c;
  cert.certified = cert.distance > cert.threshold;
  return cert;
}

}  // namespace fplab
