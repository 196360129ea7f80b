#include <doctest.h>

#include <memory>

#include "gradus/errors.hpp"
#include "gradus/koszul.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace gradus;
using namespace gradus::testing;

namespace {

std::shared_ptr<const DegreewiseModule> base_of(const PresentedModule& m, int lo, int hi) {
  return std::make_shared<const DegreewiseModule>(realize(m, lo, hi));
}

}  // namespace

TEST_CASE("complex on one element") {
  const RingSpec r1 = ring(1);
  const auto m = PresentedModule::free(r1, {0});
  const auto base = base_of(m, 0, 6);
  const KoszulComplex k(base, {var(r1, 0)}, 1, 0, 5);
  PolyAction act(*base);
  for (int j = 0; j <= 5; ++j) {
    CHECK(k.spot_dim(1, j) == binomial_dim(1, j - 1));
    CHECK(k.spot_dim(0, j) == 1);
    if (j >= 1) CHECK(k.differential(1, j) == act.apply(var(r1, 0), j - 1));
  }
  const auto h0 = homology(k, 0);
  const auto h1 = homology(k, 1);
  CHECK(h0.module.hilbert(0, 5) == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});
  CHECK(h1.module.total_dim() == 0);
}

TEST_CASE("twisted slots") {
  const RingSpec r2 = ring(2);
  const auto m = PresentedModule::free(r2, {0});
  const KoszulComplex k(base_of(m, 0, 8), variables_of(r2), 2, 0, 8);
  for (int j = 0; j <= 8; ++j) {
    CHECK(k.spot_dim(2, j) == binomial_dim(2, j - 4));
    CHECK(k.spot_dim(1, j) == 2 * binomial_dim(2, j - 2));
    CHECK((k.differential(1, j) * k.differential(2, j)).is_zero());
  }
}

TEST_CASE("window overflow") {
  const RingSpec r2 = ring(2);
  const auto base = base_of(PresentedModule::free(r2, {0}), 2, 6);
  CHECK_THROWS_AS(KoszulComplex(base, variables_of(r2), 1, 2, 6), WindowOverflow);
}

TEST_CASE("homology against direct computations") {
  const RingSpec r2 = ring(2);
  SUBCASE("H_1(x; F_p[x,y]/(x)) is the module shifted by one") {
    const auto m = mod("vars x y; gens 0; rels x;");
    const auto h = homology(m, {var(r2, 0)}, 1, 1, 0, 6);
    CHECK(h.module.hilbert(0, 6) == std::vector<std::size_t>{0, 1, 1, 1, 1, 1, 1});
  }
  SUBCASE("regular element kills H_1") {
    for (const char* name : {"R2.mod", "xy.mod", "conic.mod"}) {
      const auto m = fixture(name);
      CHECK(homology(m, {poly(m.ring(), "x + y")}, 2, 1, 0, 7).module.total_dim() == 0);
    }
  }
  SUBCASE("H_0 is the quotient") {
    const auto m = fixture("noncm.mod");
    const auto f = seq(m.ring(), "y, x + y");
    for (int n = 1; n <= 2; ++n) {
      const auto h = homology(m, f, n, 0, 0, 7);
      const auto q = hilbert_function(quotient_by_elements(m, {f[0].pow(n), f[1].pow(n)}), 0, 7);
      CHECK(h.module.hilbert(0, 7) == q);
    }
  }
  SUBCASE("swapping the sequence keeps every Hilbert function") {
    const auto m = fixture("noncm.mod");
    const auto f = seq(m.ring(), "x, y^2");
    const std::vector<Polynomial> g = {f[1], f[0]};
    for (int i = 0; i <= 2; ++i)
      CHECK(homology(m, f, 1, i, 0, 8).module.hilbert(0, 8) == homology(m, g, 1, i, 0, 8).module.hilbert(0, 8));
  }
}

TEST_CASE("level transitions") {
  const RingSpec r1 = ring(1);
  const auto m = PresentedModule::free(r1, {0});
  const auto base = base_of(m, 0, 10);
  const std::vector<Polynomial> f = {var(r1, 0)};
  const KoszulComplex one(base, f, 1, 0, 8);
  const KoszulComplex two(base, f, 2, 0, 8);
  SUBCASE("homological: slot {1} is multiplication by x, slot {} the identity") {
    const ChainMap t = transition(two, one);
    CHECK(commutes(t, two, one));
    PolyAction act(*base);
    for (int j = 2; j <= 8; ++j) {
      CHECK(t.at(1, j) == act.apply(var(r1, 0), j - 2));
      CHECK(t.at(0, j) == Matrix::identity(base->field(), 1));
    }
  }
  SUBCASE("cohomological direction is a chain map") { CHECK(commutes(transition(one, two), one, two)); }
}

TEST_CASE("induced H_2 map is multiplication by xy on colon submodules") {
  const RingSpec r2 = ring(2);
  const auto m = PresentedModule::cyclic(r2, seq(r2, "x^4, y^4"));
  const auto base = base_of(m, 0, 14);
  const auto f = variables_of(r2);
  const KoszulComplex one(base, f, 1, 0, 12);
  const KoszulComplex two(base, f, 2, 0, 12);
  const GradedMap induced = induced_on_homology(transition(two, one), homology(two, 2), homology(one, 2));
  PolyAction act(*base);
  const Polynomial xy = poly(r2, "x*y");
  for (int j = 4; j <= 12; ++j) {
    // H_2 at level n in internal degree j is 0:_M(x^n, y^n) in degree j - 2n.
    const int b = j - 4;
    const Matrix stacked = act.apply(poly(r2, "x^2"), b).vstack(act.apply(poly(r2, "y^2"), b));
    const Matrix colon = kernel_basis(stacked);
    CHECK(induced.rank_at(j) == rank(act.apply(xy, b) * colon));
  }
}

TEST_CASE("depth_via_koszul") {
  CHECK(depth_via_koszul(fixture("R2.mod"), 6).depth == 2);
  CHECK(depth_via_koszul(fixture("noncm.mod"), 6).depth == 0);
  CHECK(depth_via_koszul(fixture("k.mod"), 4).depth == 0);
  CHECK(depth_via_koszul(fixture("xy.mod"), 6).depth == 1);
  CHECK_THROWS_AS(depth_via_koszul(mod("vars x y; gens 0; rels 1;"), 4), DomainError);
}

TEST_CASE("property: d∘d = 0 and chain maps on random complexes") {
  const auto out = testing::koszul_complex_properties(50, 3);
  INFO(out.first_failure);
  CHECK(out.cases == 50);
  CHECK(out.failures == 0);
}

TEST_CASE("property: H_0 and H_top against quotient and colon") {
  const auto out = testing::koszul_extreme_properties(20, 11);
  INFO(out.first_failure);
  CHECK(out.cases == 20);
  CHECK(out.failures == 0);
}
