#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gradus/artinian.hpp"
#include "gradus/degreewise.hpp"
#include "gradus/koszul.hpp"

namespace gradus {

/// A base module realized on demand, with the degrees whose values are not
/// certified (for example unstabilized degrees of a computed limit).
struct Realized {
  DegreewiseModule module;
  std::set<int> unstable;
};
using Realizer = std::function<Realized(int lo, int hi)>;

Realizer realizer_of(const PresentedModule& m);
Realizer realizer_of(const ArtinianDual& x);
Realizer realizer_of(const DegreewiseModule& y);

struct LimitConfig {
  int levels = 8;
  int streak = 2;
  // Grow the level count by 4 until every degree stabilizes or max_levels is hit.
  bool adaptive = true;
  int max_levels = 32;
};

enum class Direction { kDirect, kInverse };

/// Koszul (co)homology at levels 1..N on a common degree window, with the
/// level transitions. Direct systems are indexed by cohomological degree
/// (level n degree j is internal Koszul degree j + n·Σ deg f_t) and carry
/// maps n -> n+1; inverse systems use internal degrees and carry n+1 -> n.
struct LevelSystem {
  Direction direction = Direction::kDirect;
  int index = 0;  // cohomological index i for direct systems, homological for inverse
  int lo = 0;
  int hi = -1;
  std::vector<Polynomial> sequence;
  std::vector<KoszulComplex> complexes;    // [n-1]
  std::vector<KoszulHomology> homologies;  // [n-1], internal degrees
  std::vector<DegreewiseModule> levels;    // [n-1], aligned degrees
  std::vector<GradedMap> transitions;      // [n-1]: n -> n+1 (direct) or n+1 -> n (inverse), aligned, shift 0
  std::set<int> base_unstable;             // aligned degrees depending on uncertified base degrees

  int level_count() const { return static_cast<int>(levels.size()); }
  const DegreewiseModule& level(int n) const { return levels.at(n - 1); }
  // Transition between adjacent levels n and n+1 in the system's direction.
  const GradedMap& transition(int n) const { return transitions.at(n - 1); }
};

LevelSystem build_cohomology_system(const Realizer& base, const std::vector<Polynomial>& f, int i, int lo, int hi,
                                    int levels);
LevelSystem build_homology_system(const Realizer& base, const std::vector<Polynomial>& x, int i, int lo, int hi,
                                  int levels);

/// Transition between arbitrary levels a and b built directly from one
/// Koszul chain map (a < b for direct systems, a > b for inverse ones).
GradedMap direct_transition(const LevelSystem& s, int from, int to);
/// Composite of adjacent transitions from level `from` to level `to`.
GradedMap composite_transition(const LevelSystem& s, int from, int to);

/// Map of colimits induced by a map of base modules, read off at the last
/// level. Both direct systems must have the same sequence, index, window and
/// level count; base_map goes between their base modules.
GradedMap colimit_map(const LevelSystem& source, const LevelSystem& target, const GradedMap& base_map);

struct DegreeStatus {
  int degree = 0;
  bool stabilized = false;
  int stable_level = -1;  // least level from which the piece is constant
  int top_level = -1;     // inverse systems: last level with a stable image
  std::string reason;     // empty when stabilized
  std::vector<std::size_t> level_dims;
  std::vector<std::size_t> transition_ranks;
  std::vector<std::size_t> stable_image_dims;  // inverse systems; 0 where undefined
};

struct LimitResult {
  Direction direction = Direction::kDirect;
  int levels = 0;
  int representation_level = 0;
  int streak = 2;
  int lo = 0;
  int hi = -1;
  DegreewiseModule module;
  std::vector<DegreeStatus> degrees;

  bool all_stabilized() const;
  std::set<int> unstable_degrees() const;
  int max_stable_level() const;
  const DegreeStatus& status(int j) const { return degrees.at(j - lo); }
};

LimitResult colimit(const LevelSystem& s, int streak);
LimitResult inverse_limit(const LevelSystem& s, int streak);

/// Re-checks the recorded stabilization: the last `streak` transitions are
/// isomorphisms (direct) or restrict to isomorphisms of stable images (inverse).
bool recheck_stability(const LevelSystem& s, const LimitResult& r);

struct LimitComputation {
  LevelSystem system;
  LimitResult result;
};

/// H^i_I(M) for I = (f): colimit of Koszul cohomology on f^n.
LimitComputation local_cohomology(const Realizer& base, const std::vector<Polynomial>& f, int i, int lo, int hi,
                                  const LimitConfig& cfg = {});
/// H_i^x(X): inverse limit of Koszul homology on x^n.
LimitComputation local_homology(const Realizer& base, const std::vector<Polynomial>& x, int i, int lo, int hi,
                                const LimitConfig& cfg = {});

/// Realizers for computed limits; unstabilized degrees are passed on.
Realizer cohomology_realizer(Realizer base, std::vector<Polynomial> f, int i, LimitConfig cfg);
Realizer homology_realizer(Realizer base, std::vector<Polynomial> x, int i, LimitConfig cfg);

}  // namespace gradus
