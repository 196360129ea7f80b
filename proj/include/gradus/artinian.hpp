#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <vector>

#include "gradus/degreewise.hpp"
#include "gradus/invariants.hpp"
#include "gradus/presented_module.hpp"

namespace gradus {

/// Width of the zero module: every sequence is vacuously coregular.
inline constexpr int kInfinite = INT_MAX;

/// Artinian graded module X = D(N): X_j is the dual of N_{-j} and x_t acts by
/// the transpose of its action on N.
class ArtinianDual {
 public:
  ArtinianDual() = default;
  explicit ArtinianDual(PresentedModule n) : n_(std::move(n)) {}

  const PresentedModule& dual_of() const { return n_; }
  const RingSpec& ring() const { return n_.ring(); }
  // X vanishes above this degree.
  int top_degree() const { return -n_.min_twist(); }
  DegreewiseModule realize(int lo, int hi) const;
  bool operator==(const ArtinianDual&) const = default;

 private:
  PresentedModule n_;
};

ArtinianDual graded_dual(const PresentedModule& n);

/// K = k[X_1^-1, ..., X_n^-1] = D(R). Variables are named x, y, z, w for n <= 4
/// and x1..xn otherwise.
ArtinianDual inverse_polynomial_module(int nvars, PrimeField field = PrimeField(kDefaultPrime));
ArtinianDual inverse_polynomial_module(const RingSpec& ring);

/// 0:_X(f) = D(N/(f)N).
ArtinianDual annihilator_submodule(const ArtinianDual& x, const std::vector<Polynomial>& f);

/// Window of X examined by the sequence searches: [-top(N), top(X)], where
/// top(N) is the dual-side window top chosen by `invariants`.
struct ArtinianConfig {
  InvariantConfig invariants;
};

struct CoregularStep {
  int step = 0;
  bool surjective = true;
  // Target degree of the first failure (only meaningful when !surjective).
  int failed_degree = 0;
};

struct CoregularResult {
  bool coregular = true;
  std::vector<CoregularStep> steps;
};

/// Each x_i must map 0:_X(x_1..x_{i-1}) onto itself in every target degree of
/// [lo, hi]. Surjectivity on X and injectivity on the dual quotient are both
/// evaluated; disagreement throws DiagnosticError.
CoregularResult is_coregular(const ArtinianDual& x, const std::vector<Polynomial>& seq, int lo, int hi);

struct WidthResult {
  int value = 0;        // kInfinite for X = 0
  int cross_check = 0;  // greedy coregular search
  bool window_heuristic = false;
};
WidthResult width(const ArtinianDual& x, const ArtinianConfig& cfg = {});

struct NdimResult {
  int value = -1;
  int cross_check = -1;
  bool window_insufficient = false;
};
NdimResult ndim(const ArtinianDual& x, const ArtinianConfig& cfg = {});

/// width == ndim. Throws DomainError for X = 0.
bool is_co_cohen_macaulay(const ArtinianDual& x, const ArtinianConfig& cfg = {});

/// Total dimension when X has finite length (certified on the dual side).
std::optional<std::size_t> finite_length(const ArtinianDual& x, const ArtinianConfig& cfg = {});

// Algorithms on a realized module whose only description is its pieces (for
// example a computed local cohomology module). Results are window heuristics.

/// 0:_Y(f) as a submodule of Y, realized on the degrees where every f_t lands
/// in a known degree.
DegreewiseModule colon(const DegreewiseModule& y, const std::vector<Polynomial>& f);

/// Coregularity on every target degree of y's window whose source is known.
bool realized_is_coregular(const DegreewiseModule& y, const std::vector<Polynomial>& seq);

/// Zero in the lowest `bottom_degrees` degrees of its window.
bool realized_finite_length(const DegreewiseModule& y, int bottom_degrees = 2);

/// y/(f)y degreewise, on the degrees whose image part is fully known.
struct RealizedQuotient {
  int lo = 0;
  DegreewiseModule module;
  std::vector<Subquotient> pieces;
  const Subquotient& piece(int j) const { return pieces.at(j - lo); }
};
RealizedQuotient realized_quotient(const DegreewiseModule& y, const std::vector<Polynomial>& f);

/// Each f_t injective on y/(f_1..f_{t-1})y wherever source and target are known.
bool realized_is_regular(const DegreewiseModule& y, const std::vector<Polynomial>& seq);

int realized_width(const DegreewiseModule& y, const RingSpec& ring, int trials, std::uint64_t seed);
int realized_ndim(const DegreewiseModule& y, const RingSpec& ring, int trials, std::uint64_t seed);

}  // namespace gradus
