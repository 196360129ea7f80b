#include <doctest.h>

#include "gradus/errors.hpp"
#include "gradus/invariants.hpp"
#include "gradus/koszul.hpp"
#include "support.hpp"

using namespace gradus;
using namespace gradus::testing;

TEST_CASE("krull_dimension") {
  CHECK(krull_dimension(fixture("R3.mod")).dimension == 3);
  CHECK(krull_dimension(fixture("k.mod")).dimension == 0);
  const auto bad = fixture("noncm.mod");
  CHECK(krull_dimension(bad).dimension == 1);
  CHECK(hilbert_function(bad, 0, 5) == std::vector<std::size_t>{1, 2, 1, 1, 1, 1});
  CHECK(krull_dimension(mod("vars x y; gens 0; rels 1;")).dimension == -1);
  CHECK(krull_dimension(fixture("twisted_sum.mod")).dimension == 2);
}

TEST_CASE("depth") {
  CHECK(depth(fixture("R2.mod")).depth == 2);
  CHECK(depth(fixture("noncm.mod")).depth == 0);
  CHECK(depth(fixture("k.mod")).depth == 0);
}

TEST_CASE("is_cohen_macaulay") {
  CHECK(is_cohen_macaulay(fixture("R2.mod")));
  CHECK_FALSE(is_cohen_macaulay(fixture("noncm.mod")));
  CHECK(is_cohen_macaulay(fixture("xy.mod")));
  CHECK(is_cohen_macaulay(fixture("conic.mod")));
  CHECK_THROWS_AS(is_cohen_macaulay(mod("vars x y; gens 0; rels 1;")), DomainError);
}

TEST_CASE("is_regular_sequence") {
  const auto r2 = fixture("R2.mod");
  CHECK(is_regular_sequence(r2, variables_of(r2.ring())).regular);
  const auto xy = fixture("xy.mod");
  const auto res = is_regular_sequence(xy, {var(xy.ring(), 0)});
  CHECK_FALSE(res.regular);
  CHECK(res.failed_step == 0);
  CHECK(is_regular_sequence(xy, {}).regular);
  CHECK(is_regular_sequence(xy, {poly(xy.ring(), "x + y")}).regular);
  // x + y is zero on R/(x, y).
  CHECK_FALSE(is_regular_sequence(r2, seq(r2.ring(), "x, y, x + y")).regular);
}

TEST_CASE("find_sop") {
  const auto r2 = fixture("R2.mod");
  CHECK(find_sop(r2) == variables_of(r2.ring()));
  const auto xy = fixture("xy.mod");
  const auto sop = find_sop(xy);
  REQUIRE(sop.size() == 1);
  CHECK_FALSE(sop[0] == var(xy.ring(), 0));
  CHECK_FALSE(sop[0] == var(xy.ring(), 1));
  CHECK(has_finite_length(quotient_by_elements(xy, sop), 8));
  CHECK(find_sop(fixture("k.mod")).empty());
  CHECK(find_sop(xy, {std::nullopt, 6, 20, 9}) == find_sop(xy, {std::nullopt, 6, 20, 9}));
}

TEST_CASE("property: invariants on fixtures") {
  for (const char* name : {"R1.mod", "R2.mod", "R3.mod", "k.mod", "xy.mod", "noncm.mod", "conic.mod",
                           "principal.mod", "twisted_sum.mod"}) {
    INFO(name);
    const auto m = fixture(name);
    const int d = krull_dimension(m).dimension;
    CHECK(depth(m).depth <= d);
    if (d == 0) continue;
    const auto sop = find_sop(m);
    if (is_cohen_macaulay(m)) CHECK(is_regular_sequence(m, sop).regular);
    CHECK(krull_dimension(quotient_by_elements(m, {sop[0]})).dimension == d - 1);
  }
}
