#include <sstream>

#include "doctest.h"

#include "builders.hpp"
#include "fplab/constructions.hpp"
#include "fplab/errors.hpp"
#include "fplab/field.hpp"
#include "fplab/matching.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace fplab;

namespace {

const std::string kData = FPLAB_DATA_DIR;

}  // namespace

TEST_CASE("greedy multiset partition examples") {
  const Subset a({1, 2, 3, 4});
  CHECK(greedy_multiset_partition(a, build::sets({{1, 2}}), FrameproofParams(3, 1)) == build::sets({{3}, {4}}));
  CHECK(greedy_multiset_partition(a, build::sets({{1, 2}, {3, 4}, {1, 3}}), FrameproofParams(5, 2)) ==
        build::sets({{2}, {4}}));
  CHECK(greedy_multiset_partition(a, build::sets({{1, 2}, {3, 4}}), FrameproofParams(2, 1)).empty());
  CHECK_THROWS_AS(greedy_multiset_partition(a, build::sets({{1, 2}, {1, 3}}), FrameproofParams(2, 1)), WitnessError);
}

TEST_CASE("greedy multiset partition property") {
  const auto o = props::partition_identity(12, 250);
  CHECK_MESSAGE(o.failures == 0, o.first_failure);
  CHECK(o.cases >= 200);
}

TEST_CASE("field axioms for every small field") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    const GaloisField f(q);
    CAPTURE(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        for (std::uint32_t c = 0; c < q; c += (q > 9 ? 3 : 1)) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
    }
    // The primitive element generates every nonzero element.
    std::vector<bool> seen(q, false);
    for (std::uint32_t k = 0; k + 1 < q; ++k) seen[f.pow(f.primitive(), k)] = true;
    for (std::uint32_t a = 1; a < q; ++a) CHECK(seen[a]);
  }
  CHECK_THROWS_AS(GaloisField(6), ParameterError);
  CHECK_THROWS_AS(GaloisField(1), ParameterError);
  CHECK_THROWS_AS(GaloisField(3).inv(0), std::domain_error);
}

TEST_CASE("Reed-Solomon codes") {
  const Code a = rs_code(5, 5, 3);
  CHECK(a.size() == 125);
  CHECK(minimum_distance(a) == 3);
  const Code b = rs_code(3, 3, 2);
  CHECK(b.size() == 9);
  CHECK(minimum_distance(b) == 2);
  CHECK_THROWS_AS(rs_code(2, 3, 1), ParameterError);
  CHECK_THROWS_AS(rs_code(6, 3, 1), ParameterError);
  Guards small;
  small.max_words = 100;
  CHECK_THROWS_AS(rs_code(5, 5, 3, small), GuardError);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int n = 1; n <= q; ++n) {
      for (int t = 1; t <= n && t <= 3; ++t) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(t);
        CHECK(minimum_distance(rs_code(q, n, t)) == n - t + 1);
      }
    }
  }
}

TEST_CASE("distance certificates") {
  const auto a = certify_frameproof_by_distance(rs_code(5, 5, 3), FrameproofParams(2, 1));
  CHECK(a.certified);
  CHECK(a.distance == 3);
  CHECK(a.threshold == 2);
  CHECK(certify_frameproof_by_distance(build::code(2, {{1, 1}, {2, 2}}), FrameproofParams(2, 1)).certified);
  const auto c = certify_frameproof_by_distance(build::code(2, {{1, 1}, {1, 2}}), FrameproofParams(2, 1));
  CHECK_FALSE(c.certified);
  CHECK(c.distance == 1);
}

TEST_CASE("greedy packings") {
  const auto fano = greedy_packing(7, 3, 2);
  CHECK(fano.family.size() == 7);
  CHECK(fano.is_design);
  const auto six = greedy_packing(6, 3, 2);
  CHECK(six.family.sets() == build::sets({{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}}));
  CHECK_FALSE(six.is_design);
  CHECK(greedy_packing(4, 2, 1).family.sets() == build::sets({{1, 2}, {3, 4}}));
  CHECK(greedy_packing(9, 3, 2, 17).family.sets() == greedy_packing(9, 3, 2, 17).family.sets());
  CHECK_THROWS_AS(make_packing(build::family(4, {{1, 2, 3}, {1, 2, 4}}), 2), ParameterError);
}

TEST_CASE("packings as frameproof families") {
  const auto fano = packing_to_frameproof(greedy_packing(7, 3, 2), FrameproofParams(4, 2));
  CHECK(fano.family.size() == 7);
  CHECK(fano.validation.checked);
  CHECK(fano.validation.frameproof);
  const auto pairs = packing_to_frameproof(make_packing(build::family(4, {{1, 2}, {3, 4}}), 1), FrameproofParams(2, 1));
  CHECK(pairs.validation.frameproof);
  const auto nine = packing_to_frameproof(greedy_packing(9, 3, 2), FrameproofParams(4, 2));
  CHECK(nine.validation.frameproof);
  CHECK_FALSE(oracle::focal(oracle::masks(nine.family), 4, 2, false));
  CHECK_THROWS_AS(packing_to_frameproof(greedy_packing(7, 3, 2), FrameproofParams(3, 1)), ParameterError);
}

TEST_CASE("design files") {
  const auto fano = load_design(kData + "/fano.txt");
  CHECK(fano.family.size() == 7);
  CHECK(fano.is_design);
  const auto sts = load_design(kData + "/sts9.txt");
  CHECK(sts.family.size() == 12);
  CHECK(sts.is_design);
  std::istringstream twice("4 2 1\n1 2\n1 3\n");
  CHECK_THROWS_AS(parse_design(twice), FormatError);
  std::istringstream dup("7 3 2\n1 2 3\n1 2 4\n");
  try {
    parse_design(dup);
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("{1,2}") != std::string::npos);
  }
  std::istringstream missing("4 2 1\n1 2\n");
  CHECK_THROWS_AS(parse_design(missing), FormatError);
}

TEST_CASE("induced packing families") {
  const auto a = induced_packing_family(3, 4, 2, 7, std::nullopt, 100000);
  CHECK(a.matching_value == 0);
  CHECK(a.packing.pattern.size() == 3);
  CHECK(a.family.size() >= 1);
  CHECK(a.family.size() <= 7);
  CHECK_FALSE(induced_packing_violation(a.packing));
  CHECK(a.validation.frameproof);

  const auto b = induced_packing_family(4, 2, 1, 9, std::nullopt, 100000);
  CHECK(b.matching_value == 3);
  CHECK(b.packing.pattern.size() == 3);
  CHECK(b.validation.frameproof);
  CHECK_FALSE(oracle::focal(oracle::masks(b.family), 2, 1, false));

  const auto empty = induced_packing_family(3, 4, 2, 7, std::nullopt, 0);
  CHECK(empty.family.empty());
  CHECK(empty.packing.copies.empty());
  CHECK(empty.budget_exhausted);
}

TEST_CASE("faithful code families") {
  const auto a = faithful_code_family(3, 2, 1, 3, std::nullopt, 100000);
  CHECK(a.matching_value == 0);
  CHECK(a.pattern.size() == 3);
  CHECK(a.code.size() >= 1);
  CHECK(a.code.size() <= 9);
  CHECK(a.validation.frameproof);
  CHECK_FALSE(oracle::focal_code(a.code, 2, 1, false));

  const auto b = faithful_code_family(4, 2, 1, 4, std::nullopt, 100000);
  CHECK(b.pattern.size() == 3);
  CHECK(b.validation.frameproof);

  CHECK(faithful_code_family(3, 2, 1, 3, std::nullopt, 0).code.empty());
}

TEST_CASE("words as transversal sets") {
  const Multipartite mp(2, 2);
  CHECK(mp.image(Word{1, 2}) == Subset({mp.point(1, 1), mp.point(2, 2)}));
  const Multipartite m3(3, 4);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = 1; c <= 4; ++c) CHECK(m3.inverse(m3.image(Word{a, b, c})) == Word{a, b, c});
    }
  }
  CHECK_THROWS_AS(m3.inverse(Subset({1, 2})), ParameterError);

  const auto code = build::code(2, {{1, 1}, {1, 2}});
  const auto census = own_subsequence_census(code, 1);
  const auto image = mp.image(code);
  for (std::size_t w = 0; w < 2; ++w) {
    for (std::size_t s = 0; s < census.restrictions().size(); ++s) {
      CHECK(census.is_own(w, s) == is_own_subset(image, w, mp.restriction(code[w], census.restrictions()[s])));
    }
  }
}

TEST_CASE("construction properties") {
  const auto packs = props::packings_clean(13, 200);
  CHECK_MESSAGE(packs.failures == 0, packs.first_failure);
  CHECK(packs.cases >= 200);
  const auto induced = props::induced_clean(14, 200);
  CHECK_MESSAGE(induced.failures == 0, induced.first_failure);
  const auto faithful = props::faithful_clean(15, 200);
  CHECK_MESSAGE(faithful.failures == 0, faithful.first_failure);
  const auto pi = props::pi_census(16, 200);
  CHECK_MESSAGE(pi.failures == 0, pi.first_failure);
}
