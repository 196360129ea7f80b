#include <doctest.h>

#include "gradus/artinian.hpp"
#include "gradus/koszul.hpp"
#include "gradus/limits.hpp"
#include "support.hpp"

using namespace gradus;
using namespace gradus::testing;

TEST_CASE("cohomology systems") {
  const auto r2 = fixture("R2.mod");
  const auto vars = variables_of(r2.ring());
  SUBCASE("top index: level n is R/(x^n, y^n) up to twist") {
    const LevelSystem s = build_cohomology_system(realizer_of(r2), vars, 2, -10, 0, 4);
    for (int n = 1; n <= 4; ++n) CHECK(s.level(n).total_dim() == static_cast<std::size_t>(n * n));
    // Top spot transitions are injective.
    for (int n = 1; n < 4; ++n)
      for (int j = -10; j <= 0; ++j) CHECK(s.transition(n).rank_at(j) == s.level(n).dim(j));
  }
  SUBCASE("index 0 with a regular element vanishes") {
    const LevelSystem s = build_cohomology_system(realizer_of(r2), vars, 0, -6, 4, 3);
    for (int n = 1; n <= 3; ++n) CHECK(s.level(n).total_dim() == 0);
  }
  SUBCASE("R/(x^n) -> R/(x^{n+1}) is injective") {
    const auto r1 = fixture("R1.mod");
    const LevelSystem s = build_cohomology_system(realizer_of(r1), variables_of(r1.ring()), 1, -8, 0, 4);
    for (int n = 1; n < 4; ++n) {
      CHECK(s.level(n).total_dim() == static_cast<std::size_t>(n));
      for (int j = -8; j <= 0; ++j) CHECK(s.transition(n).rank_at(j) == s.level(n).dim(j));
    }
  }
  SUBCASE("composition of transitions is the two-step transition") {
    const LevelSystem s = build_cohomology_system(realizer_of(fixture("xy.mod")), vars, 1, -6, 2, 3);
    const GradedMap direct = direct_transition(s, 1, 3);
    const GradedMap composite = composite_transition(s, 1, 3);
    for (int j = -6; j <= 2; ++j) CHECK(direct.at(j) == composite.at(j));
  }
}

TEST_CASE("local cohomology") {
  const auto r2 = fixture("R2.mod");
  const auto vars = variables_of(r2.ring());
  const auto h2 = local_cohomology(realizer_of(r2), vars, 2, -6, 1);
  CHECK(h2.result.all_stabilized());
  CHECK(h2.result.module.dim(-2) == 1);
  CHECK(h2.result.module.dim(-3) == 2);
  // Reflected dims of the dual of R, shifted by -2.
  const auto k = inverse_polynomial_module(2).realize(-4, 0);
  for (int j = -6; j <= 1; ++j) CHECK(h2.result.module.dim(j) == (j + 2 <= 0 && j + 2 >= -4 ? k.dim(j + 2) : 0));
  CHECK(recheck_stability(h2.system, h2.result));
  CHECK(local_cohomology(realizer_of(r2), vars, 1, -6, 1).result.module.total_dim() == 0);
  // Above the dimension.
  const auto xy = fixture("xy.mod");
  CHECK(local_cohomology(realizer_of(xy), vars, 2, -6, 1).result.module.total_dim() == 0);
  CHECK(local_cohomology(realizer_of(xy), vars, 1, -6, 1).result.module.total_dim() > 0);
}

TEST_CASE("unstabilized degrees are flagged") {
  const auto r2 = fixture("R2.mod");
  LimitConfig cfg;
  cfg.levels = 2;
  cfg.adaptive = false;
  const auto h2 = local_cohomology(realizer_of(r2), variables_of(r2.ring()), 2, -6, 1, cfg);
  CHECK_FALSE(h2.result.all_stabilized());
  CHECK(h2.result.unstable_degrees().count(-6) == 1);
  CHECK_FALSE(h2.result.status(-6).reason.empty());
}

TEST_CASE("homology systems") {
  const auto k2 = inverse_polynomial_module(2);
  const auto vars = variables_of(k2.ring());
  SUBCASE("top index: level n is 0:_K(x^n, y^n)") {
    const LevelSystem s = build_homology_system(realizer_of(k2), vars, 2, -2, 8, 4);
    for (int n = 1; n <= 4; ++n) CHECK(s.level(n).total_dim() == static_cast<std::size_t>(n * n));
    const GradedMap direct = direct_transition(s, 3, 1);
    const GradedMap composite = composite_transition(s, 3, 1);
    for (int j = -2; j <= 8; ++j) CHECK(direct.at(j) == composite.at(j));
  }
  SUBCASE("index 0 of a divisible module vanishes") {
    const LevelSystem s = build_homology_system(realizer_of(k2), vars, 0, -6, 2, 3);
    for (int n = 1; n <= 3; ++n) CHECK(s.level(n).total_dim() == 0);
  }
  SUBCASE("residue field: index 0 is k with identity transitions") {
    const auto k = graded_dual(fixture("k.mod"));
    const LevelSystem s = build_homology_system(realizer_of(k), vars, 0, -3, 3, 3);
    for (int n = 1; n <= 3; ++n) CHECK(s.level(n).hilbert(-3, 3) == std::vector<std::size_t>{0, 0, 0, 1, 0, 0, 0});
    for (int n = 1; n < 3; ++n) CHECK(s.transition(n).rank_at(0) == 1);
  }
}

TEST_CASE("local homology") {
  const auto k2 = inverse_polynomial_module(2);
  const auto vars = variables_of(k2.ring());
  // K = D(R) sits in degrees <= 0, so H_2(K) is R(-2).
  const auto h = local_homology(realizer_of(k2), vars, 2, 0, 5);
  CHECK(h.result.all_stabilized());
  CHECK(h.result.module.hilbert(0, 5) == std::vector<std::size_t>{0, 0, 1, 2, 3, 4});
  CHECK(recheck_stability(h.system, h.result));
  // Mittag-Leffler: images from farther levels never grow.
  for (int j = 0; j <= 5; ++j)
    for (int k = 2; k < h.system.level_count(); ++k)
      CHECK(composite_transition(h.system, k + 1, 1).rank_at(j) <= composite_transition(h.system, k, 1).rank_at(j));
  // Below the width.
  for (int i = 0; i <= 1; ++i) CHECK(local_homology(realizer_of(k2), vars, i, 0, 3).result.module.total_dim() == 0);
  // Above N.dim.
  const auto k = graded_dual(fixture("k.mod"));
  for (int i = 1; i <= 2; ++i) CHECK(local_homology(realizer_of(k), vars, i, -3, 3).result.module.total_dim() == 0);
}

TEST_CASE("nested realizers") {
  const auto r2 = fixture("R2.mod");
  const auto vars = variables_of(r2.ring());
  const Realizer top = cohomology_realizer(realizer_of(r2), vars, 2, {});
  const Realized piece = top(-5, -1);
  CHECK(piece.unstable.empty());
  CHECK(piece.module.hilbert(-5, -1) == std::vector<std::size_t>{4, 3, 2, 1, 0});
  const auto back = local_homology(top, vars, 2, 0, 2);
  CHECK(back.result.module.hilbert(0, 2) == std::vector<std::size_t>{1, 2, 3});
}
