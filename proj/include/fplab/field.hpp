#pragma once

// Finite fields GF(p^e), q = p^e <= 2^16.
//
// An element is the integer sum a_i p^i of its coefficient vector
// (a_0, ..., a_{e-1}) over Z_p, so 0 and 1 are the usual constants and the
// prime subfield is {0, ..., p-1}. The modulus is the monic irreducible
// polynomial of degree e whose lower coefficients have the smallest such
// integer code.

#include <cstdint>
#include <vector>

namespace fplab {

class GaloisField {
 public:
  using Element = std::uint32_t;

  /// Throws ParameterError unless q is a prime power with 2 <= q <= 65536.
  explicit GaloisField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  int degree() const { return e_; }
  /// Coefficients of the modulus from x^0 up to x^e (the last is 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  /// Throws std::domain_error for a == 0.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t k) const;
  /// A generator of the multiplicative group (the least one).
  Element primitive() const { return primitive_; }

 private:
  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(const std::vector<std::uint32_t>& d) const;
  Element poly_mul(Element a, Element b) const;

  std::uint32_t q_;
  std::uint32_t p_;
  int e_;
  std::vector<std::uint32_t> modulus_;
  Element primitive_ = 1;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

/// (p, e) with q = p^e, or nullopt-like (0, 0) when q is not a prime power.
struct PrimePower {
  std::uint32_t p = 0;
  int e = 0;
};
PrimePower prime_power_of(std::uint64_t q);

}  // namespace fplab
