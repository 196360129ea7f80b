#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gradus/matrix.hpp"
#include "gradus/presented_module.hpp"

namespace gradus {

/// A graded module realized on a finite degree window [lo, hi]: one finite
/// dimensional piece per degree and, for each variable, the multiplication
/// maps piece(j) -> piece(j+1). Degrees outside the window are errors unless
/// the module is certified to vanish there (zero_below / zero_above).
class DegreewiseModule {
 public:
  DegreewiseModule() = default;
  // actions[t][j - lo] is the map for x_t from degree j to j+1, j in [lo, hi-1].
  DegreewiseModule(PrimeField field, int nvars, int lo, int hi, std::vector<std::size_t> dims,
                   std::vector<std::vector<Matrix>> actions, bool zero_below, bool zero_above);

  const PrimeField& field() const { return field_; }
  int nvars() const { return nvars_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool zero_below() const { return zero_below_; }
  bool zero_above() const { return zero_above_; }

  bool in_window(int j) const { return j >= lo_ && j <= hi_; }
  // In the window or certified zero.
  bool known(int j) const;
  // Throws WindowOverflow for unknown degrees.
  std::size_t dim(int j) const;
  Matrix action(int var, int j) const;

  std::vector<std::size_t> hilbert(int lo, int hi) const;
  std::size_t total_dim() const;
  bool is_zero_on_window() const { return total_dim() == 0; }

  /// Same data with every degree moved by `offset` (degree j becomes j + offset).
  DegreewiseModule reindexed(int offset) const;
  DegreewiseModule restricted(int lo, int hi) const;
  /// Graded dual: degree j of the result is the dual of degree -j, actions transposed.
  DegreewiseModule dual() const;

 private:
  PrimeField field_{};
  int nvars_ = 0;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Matrix>> actions_;
  bool zero_below_ = false;
  bool zero_above_ = false;
};

/// Degree-preserving (up to `shift`) family of linear maps between two
/// degreewise modules: maps[j - lo] goes from source degree j to target degree j + shift.
struct GradedMap {
  int shift = 0;
  int lo = 0;
  int hi = -1;
  std::vector<Matrix> maps;

  const Matrix& at(int j) const;
  std::size_t rank_at(int j) const;
};

GradedMap compose(const GradedMap& second, const GradedMap& first);

/// Evaluates homogeneous polynomials acting on a degreewise module. Monomial
/// maps are memoized; an instance must not be shared across threads.
class PolyAction {
 public:
  explicit PolyAction(const DegreewiseModule& m) : m_(m) {}
  Matrix monomial(const Exponents& e, int source_degree);
  // g must be homogeneous; zero g gives the zero map into degree j (shape dim(j) x dim(j)).
  Matrix apply(const Polynomial& g, int source_degree);

 private:
  const DegreewiseModule& m_;
  std::map<std::pair<Exponents, int>, Matrix> cache_;
};

/// Degree slice of the free cover ⊕ R(-a_i): summands in declaration order,
/// monomials lex-descending inside each summand.
struct FreeSlice {
  int degree = 0;
  std::vector<MonomialBasis> summands;
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;

  FreeSlice(const PresentedModule& m, int degree);
  // Position of monomial e in summand i; e must have degree `degree - a_i`.
  std::size_t index(std::size_t summand, const Exponents& e) const;
};

/// A presented module realized on a window, keeping the coset data needed to
/// map between modules with the same free cover.
class PresentedRealization {
 public:
  PresentedRealization(const PresentedModule& m, int lo, int hi);

  const PresentedModule& presentation() const { return presentation_; }
  const DegreewiseModule& module() const { return module_; }
  const FreeSlice& slice(int j) const { return slices_.at(j - lo_); }
  const Subquotient& piece(int j) const { return pieces_.at(j - lo_); }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

 private:
  PresentedModule presentation_;
  int lo_;
  int hi_;
  std::vector<FreeSlice> slices_;
  std::vector<Subquotient> pieces_;
  DegreewiseModule module_;
};

/// realize: pieces and variable actions of M on [lo, hi]. zero_below holds when
/// lo <= min twist; zero_above when M vanishes at hi >= max twist.
DegreewiseModule realize(const PresentedModule& m, int lo, int hi);

std::vector<std::size_t> hilbert_function(const PresentedModule& m, int lo, int hi);

/// True iff M_{j0} = 0; requires j0 >= max generator twist (else DomainError),
/// in which case M_j = 0 for all j >= j0.
bool vanishing_certificate(const PresentedModule& m, int j0);

/// Map induced by the identity on generators from `source` to `target`, whose
/// relations must contain those of `source` (e.g. M/(f^{n+1})M -> M/(f^n)M).
GradedMap natural_projection(const PresentedRealization& source, const PresentedRealization& target);

/// For e' = 0..max_degree: basis (columns, in monomial coordinates of R_{e'})
/// of { r in R_{e'} : r * X_j = 0 for all j in [lo, hi] with j + e' known }.
std::vector<Matrix> annihilator_pieces(const DegreewiseModule& x, int max_degree, int lo, int hi);
std::vector<Matrix> annihilator_pieces(const PresentedModule& m, int max_degree, int lo, int hi);

/// Polynomials for the columns of one annihilator piece.
std::vector<Polynomial> piece_polynomials(const RingSpec& ring, int degree, const Matrix& columns);

}  // namespace gradus
