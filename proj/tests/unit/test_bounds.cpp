#include "doctest.h"

#include "fplab/bounds.hpp"
#include "fplab/constructions.hpp"
#include "fplab/errors.hpp"
#include "fplab/matching.hpp"

using namespace fplab;

namespace {

std::uint64_t solver_m(int k, int c, int s) {
  const LambdaT lt = lambda_of(c, s, k);
  return matching_number_exact({k, lt.t, DisjointnessParams(s + 1, c - s + 1, lt.lambda)}).value;
}

}  // namespace

TEST_CASE("hypergraph bounds: Fano plane is extremal") {
  const auto r = hypergraph_bounds(7, 3, 4, 2, 0, 7, true);
  const auto* up = r.find("own-subset-upper");
  REQUIRE(up);
  CHECK(up->applicable());
  CHECK(up->value == 7);
  CHECK(r.find("design-exact")->applicable());
  CHECK(r.pinned_value() == 7);
}

TEST_CASE("hypergraph bounds: affine plane of order 3") {
  const auto r = hypergraph_bounds(9, 3, 4, 2, 0, 12, true);
  CHECK(r.find("own-subset-upper")->value == 12);
  CHECK(r.pinned_value() == 12);
}

TEST_CASE("hypergraph bounds: below the n0 threshold nothing applies") {
  const auto r = hypergraph_bounds(5, 3, 4, 2, 0);
  const auto* up = r.find("own-subset-upper");
  REQUIRE(up);
  CHECK_FALSE(up->applicable());
  CHECK_FALSE(r.best_upper().has_value());
  CHECK_FALSE(r.pinned_value().has_value());
}

TEST_CASE("code bounds: Reed-Solomon instance is extremal") {
  const auto r = code_bounds(5, 2, 1, 5, 0);
  CHECK(r.find("code-small-alphabet-upper")->applicable());
  CHECK(r.find("code-small-alphabet-upper")->value == 125);
  CHECK(r.find("code-exact")->applicable());
  CHECK(r.pinned_value() == 125);
  CHECK(r.find("code-critical-upper-factor-s0")->value == 125);
}

TEST_CASE("code bounds: short length keeps exactness off") {
  const auto r = code_bounds(3, 2, 1, 3, 0);
  CHECK(r.find("code-small-alphabet-upper")->value == 9);
  CHECK(r.find("code-small-alphabet-upper")->applicable());
  CHECK_FALSE(r.find("code-exact")->applicable());
  CHECK_THROWS_AS(code_bounds(3, 2, 1, 1, 0), ParameterError);
}

TEST_CASE("smallest prime power factor") {
  CHECK(smallest_prime_power_factor(5) == 5);
  CHECK(smallest_prime_power_factor(12) == 3);
  CHECK(smallest_prime_power_factor(72) == 8);
  CHECK(smallest_prime_power_factor(1024) == 1024);
}

TEST_CASE("small-alphabet bound never exceeds the census bound with m = 0") {
  for (int n = 2; n <= 9; ++n) {
    for (int c = 2; c <= 5; ++c) {
      for (int s = 1; s < c; ++s) {
        for (int q = 2; q <= 9; ++q) {
          const auto r = code_bounds(n, c, s, q, 0);
          const auto* a = r.find("code-small-alphabet-upper");
          const auto* b = r.find("code-own-subsequence-upper");
          if (a->applicable() && b->applicable()) CHECK(a->value <= b->value);
        }
      }
    }
  }
}

TEST_CASE("constructions never beat applicable upper bounds") {
  for (int n = 5; n <= 10; ++n) {
    for (int c = 2; c <= 4; ++c) {
      for (int s = 1; s < c; ++s) {
        const int k = 3;
        const LambdaT lt = lambda_of(c, s, k);
        if (lt.t >= k) continue;
        const auto pk = greedy_packing(n, k, lt.t);
        const auto m = solver_m(k, c, s);
        const auto r = hypergraph_bounds(n, k, c, s, m, pk.family.size(), pk.is_design);
        if (auto up = r.best_upper()) CHECK(BigInt(pk.family.size()) <= *up);
      }
    }
  }
  for (int q : {3, 4, 5, 7}) {
    for (int n = 2; n <= q; ++n) {
      const LambdaT lt = lambda_of(2, 1, n);
      const Code rs = rs_code(q, n, lt.t);
      const auto m = matching_number_exact({n, lt.t, DisjointnessParams(2, 2, lt.lambda)}).value;
      const auto r = code_bounds(n, 2, 1, q, m);
      if (auto up = r.best_upper()) CHECK(BigInt(rs.size()) <= *up);
    }
  }
}

TEST_CASE("packing density moves toward the limit constant") {
  // Fixed (k,c,s) = (3,4,2): t = 2, m = 0, limit constant 1/3 of C(n,2).
  Rational previous = 0;
  for (int n : {4, 5, 6, 7}) {
    const auto pk = greedy_packing(n, 3, 2);
    const Rational ratio(BigInt(pk.family.size()), big_binomial(n, 2));
    CHECK(ratio >= previous);
    CHECK(ratio <= Rational(1, 3));
    previous = ratio;
  }
}
