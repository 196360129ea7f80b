#pragma once

#include <cstdint>
#include <string>

namespace gradus::testing {

struct PropertyOutcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what);
};

// d∘d = 0 and level-transition chain-map commutation on random Koszul complexes.
PropertyOutcome koszul_complex_properties(int fixtures, std::uint64_t seed);
// rank + nullity == cols, kernel vectors are killed, solve(m, m x) is sound,
// rref idempotent.
PropertyOutcome matrix_properties(int count, std::uint64_t seed);
// Duality involution and width <= N.dim on the Artinian fixtures.
PropertyOutcome artinian_properties();
// H_0 and H_top of random Koszul complexes against quotient and colon
// computed without the complex.
PropertyOutcome koszul_extreme_properties(int count, std::uint64_t seed);

}  // namespace gradus::testing
