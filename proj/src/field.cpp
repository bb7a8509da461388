#include "fplab/field.hpp"

#include <stdexcept>
#include <string>

#include "fplab/errors.hpp"

namespace fplab {

PrimePower prime_power_of(std::uint64_t q) {
  if (q < 2) return {};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(q), 1};
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {};
  return {static_cast<std::uint32_t>(p), e};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, no trailing zeros

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1;
  std::uint64_t b = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1U) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of f modulo g over Z_p; g nonzero.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::size_t shift = f.size() - g.size();
    const std::uint64_t factor = static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

Poly monic_from_code(std::uint64_t code, int degree, std::uint32_t p) {
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= e / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
  if (q < 2 || q > 65536) throw ParameterError("field order q=" + std::to_string(q) + " outside 2..65536");
  const PrimePower pp = prime_power_of(q);
  if (pp.e == 0) throw ParameterError("field order q=" + std::to_string(q) + " is not a prime power");
  p_ = pp.p;
  e_ = pp.e;

  if (e_ == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t code = 0;; ++code) {
      Poly f = monic_from_code(code, e_, p_);
      if (f[0] != 0 && irreducible(f, p_)) {
        modulus_ = f;
        break;
      }
    }
  }

  for (Element g = 1; g < q_; ++g) {
    exp_.assign(q_ - 1, 0);
    Element x = 1;
    bool generator = true;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      if (i > 0 && x == 1) {
        generator = false;
        break;
      }
      exp_[i] = x;
      x = poly_mul(x, g);
    }
    if (generator) {
      primitive_ = g;
      break;
    }
  }
  log_.assign(q_, 0);
  for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
}

std::vector<std::uint32_t> GaloisField::digits(Element a) const {
  std::vector<std::uint32_t> d(static_cast<std::size_t>(e_), 0);
  for (int i = 0; i < e_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

GaloisField::Element GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
  Element a = 0;
  for (int i = e_ - 1; i >= 0; --i) a = a * p_ + d[i];
  return a;
}

GaloisField::Element GaloisField::poly_mul(Element a, Element b) const {
  if (e_ == 1) return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  const auto da = digits(a);
  const auto db = digits(b);
  Poly prod(static_cast<std::size_t>(2 * e_ - 1), 0);
  for (int i = 0; i < e_; ++i) {
    for (int j = 0; j < e_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(static_cast<std::size_t>(e_), 0);
  return from_digits(r);
}

GaloisField::Element GaloisField::add(Element a, Element b) const {
  if (e_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  auto da = digits(a);
  const auto db = digits(b);
  for (int i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
  return from_digits(da);
}

GaloisField::Element GaloisField::neg(Element a) const {
  if (e_ == 1) return (p_ - a) % p_;
  if (p_ == 2) return a;
  auto da = digits(a);
  for (int i = 0; i < e_; ++i) da[i] = (p_ - da[i]) % p_;
  return from_digits(da);
}

GaloisField::Element GaloisField::sub(Element a, Element b) const { return add(a, neg(b)); }

GaloisField::Element GaloisField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

GaloisField::Element GaloisField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Element GaloisField::pow(Element a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1)];
}

}  // namespace fplab
