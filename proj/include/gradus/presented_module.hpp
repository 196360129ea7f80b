#pragma once

#include <vector>

#include "gradus/polynomial.hpp"

namespace gradus {

/// One column of a homogeneous presentation matrix. Entry i is homogeneous of
/// degree `degree - twist_i` or zero.
struct RelationColumn {
  int degree = 0;
  std::vector<Polynomial> entries;

  bool operator==(const RelationColumn&) const = default;
};

/// M = coker( ⊕_c R(-b_c) -> ⊕_i R(-a_i) ), a finitely generated graded module.
class PresentedModule {
 public:
  PresentedModule() = default;
  // Throws InputError when an entry has the wrong degree or shape.
  PresentedModule(RingSpec ring, std::vector<int> twists, std::vector<RelationColumn> relations);

  static PresentedModule free(RingSpec ring, std::vector<int> twists);
  /// R/(f_1, ..., f_k) with one generator in degree 0.
  static PresentedModule cyclic(RingSpec ring, const std::vector<Polynomial>& ideal_generators);

  const RingSpec& ring() const { return ring_; }
  const std::vector<int>& twists() const { return twists_; }
  const std::vector<RelationColumn>& relations() const { return relations_; }
  std::size_t num_generators() const { return twists_.size(); }

  int min_twist() const;
  int max_twist() const;
  // Max of generator twists and relation degrees.
  int max_presentation_degree() const;

  bool operator==(const PresentedModule&) const = default;

 private:
  RingSpec ring_;
  std::vector<int> twists_;
  std::vector<RelationColumn> relations_;
};

/// Presentation of M/(f)M: appends the columns f_t * e_i for every generator.
/// Throws InputError on non-homogeneous f.
PresentedModule quotient_by_elements(const PresentedModule& m, const std::vector<Polynomial>& f);

}  // namespace gradus
