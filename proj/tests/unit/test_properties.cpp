#include "doctest.h"

#include "properties.hpp"

TEST_CASE("matching solver equals subfamily enumeration on tiny instances") {
  const auto o = props::matching_vs_enumeration();
  CHECK_MESSAGE(o.failures == 0, o.first_failure);
}

TEST_CASE("own-subset census law on frameproof uniform families") {
  int checked = 0;
  const auto o = props::own_subset_census_law(17, 200, &checked);
  CHECK_MESSAGE(o.failures == 0, o.first_failure);
  CHECK(o.cases >= 200);
  CHECK(checked > 0);
}
