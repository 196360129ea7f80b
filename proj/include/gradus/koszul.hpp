#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "gradus/degreewise.hpp"

namespace gradus {

/// Homological Koszul complex K.(f_1^n, ..., f_r^n; B) realized on internal
/// degrees [lo, hi]. Spot i in degree j is ⊕_{|S|=i} B_{j - n·e_S}, where
/// e_S is the sum of the degrees of f_t for t in S. Slots S are ordered
/// lexicographically by their ascending element lists, and
///   d(m e_S) = Σ_k (-1)^k f_{s_k}^n m e_{S \ s_k}   (k counted from 0).
class KoszulComplex {
 public:
  // Throws WindowOverflow if some slot needs a base degree that is not known,
  // InputError for zero or non-homogeneous sequence elements.
  KoszulComplex(std::shared_ptr<const DegreewiseModule> base, std::vector<Polynomial> sequence, int level, int lo,
                int hi);

  const DegreewiseModule& base() const { return *base_; }
  std::shared_ptr<const DegreewiseModule> base_ptr() const { return base_; }
  const std::vector<Polynomial>& sequence() const { return sequence_; }
  int length() const { return static_cast<int>(sequence_.size()); }
  int level() const { return level_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int total_degree() const;  // Σ deg f_t

  const std::vector<unsigned>& slots(int i) const { return slots_.at(i); }
  int slot_degree(unsigned mask) const;  // Σ_{t in S} deg f_t
  std::size_t spot_dim(int i, int j) const;
  std::size_t slot_offset(int i, int j, std::size_t slot_index) const;
  // d_i : K_i -> K_{i-1} in degree j, for 1 <= i <= r.
  const Matrix& differential(int i, int j) const;
  // Block-diagonal action of x_var from degree j to j+1 (j < hi).
  Matrix spot_action(int i, int var, int j) const;

 private:
  std::shared_ptr<const DegreewiseModule> base_;
  std::vector<Polynomial> sequence_;
  int level_;
  int lo_;
  int hi_;
  std::vector<std::vector<unsigned>> slots_;
  // offsets_[i][j-lo][k] = start of slot k; last entry is the spot dimension
  std::vector<std::vector<std::vector<std::size_t>>> offsets_;
  std::vector<std::vector<Matrix>> differentials_;  // [i][j-lo], i >= 1
};

/// H_i of a Koszul complex with the inherited variable actions, in the same
/// internal degrees as the complex.
struct KoszulHomology {
  int index = 0;
  int lo = 0;
  DegreewiseModule module;
  std::vector<Subquotient> pieces;

  const Subquotient& piece(int j) const { return pieces.at(j - lo); }
};

KoszulHomology homology(const KoszulComplex& k, int i);
KoszulHomology homology(const PresentedModule& m, const std::vector<Polynomial>& f, int level, int i, int lo, int hi);

/// Per-spot linear maps between two Koszul complexes; spots[i][j - lo] goes
/// from source degree j to target degree j + shift.
struct ChainMap {
  int shift = 0;
  int lo = 0;
  int hi = -1;
  std::vector<std::vector<Matrix>> spots;

  const Matrix& at(int i, int j) const;
};

/// Level transition between complexes on the same base and sequence.
/// source level > target level (homological direction): slot S is multiplied
/// by Π_{t in S} f_t^{Δ}. source level < target level (cohomological
/// direction): slot S is multiplied by Π_{t not in S} f_t^{Δ}, raising the
/// internal degree by Δ·Σ deg f_t.
ChainMap transition(const KoszulComplex& source, const KoszulComplex& target);

/// Slotwise application of a map of base modules (same sequence and level).
ChainMap base_change(const KoszulComplex& source, const KoszulComplex& target, const GradedMap& base_map);

/// True iff d_target ∘ map == map ∘ d_source in every spot and degree.
bool commutes(const ChainMap& map, const KoszulComplex& source, const KoszulComplex& target);

/// Map on H_i induced by a chain map.
GradedMap induced_on_homology(const ChainMap& map, const KoszulHomology& source, const KoszulHomology& target);

struct DepthResult {
  int depth = 0;
  // Some Koszul homology reaches the top of the window, so vanishing above
  // it is not certified.
  bool window_heuristic = false;
};

/// depth M = n - max{ i : H_i(x_1..x_n; M) != 0 } over degrees [min twist, hi].
/// Throws DomainError for the zero module.
DepthResult depth_via_koszul(const PresentedModule& m, int hi);

/// Coordinate variables x_1..x_n of the ring.
std::vector<Polynomial> variables_of(const RingSpec& ring);

}  // namespace gradus
