#include "gradus/presented_module.hpp"

#include <algorithm>
#include <string>

#include "gradus/errors.hpp"

namespace gradus {

PresentedModule::PresentedModule(RingSpec ring, std::vector<int> twists, std::vector<RelationColumn> relations)
    : ring_(std::move(ring)), twists_(std::move(twists)), relations_(std::move(relations)) {
  for (std::size_t c = 0; c < relations_.size(); ++c) {
    const auto& col = relations_[c];
    if (col.entries.size() != twists_.size())
      throw InputError("relation " + std::to_string(c) + " has " + std::to_string(col.entries.size()) +
                       " entries, expected " + std::to_string(twists_.size()));
    for (std::size_t i = 0; i < col.entries.size(); ++i) {
      const Polynomial& e = col.entries[i];
      if (e.nvars() != ring_.nvars() && !e.is_zero())
        throw InputError("relation entry over the wrong number of variables");
      if (e.is_zero()) continue;
      if (!e.is_homogeneous())
        throw InputError("relation " + std::to_string(c) + " entry " + std::to_string(i) + " is not homogeneous");
      if (e.degree() != col.degree - twists_[i])
        throw InputError("relation " + std::to_string(c) + " entry " + std::to_string(i) + " has degree " +
                         std::to_string(e.degree()) + ", expected " + std::to_string(col.degree - twists_[i]));
    }
  }
}

PresentedModule PresentedModule::free(RingSpec ring, std::vector<int> twists) {
  return PresentedModule(std::move(ring), std::move(twists), {});
}

PresentedModule PresentedModule::cyclic(RingSpec ring, const std::vector<Polynomial>& ideal_generators) {
  std::vector<RelationColumn> cols;
  for (const auto& f : ideal_generators) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw InputError("ideal generator is not homogeneous");
    cols.push_back({f.degree(), {f}});
  }
  return PresentedModule(std::move(ring), {0}, std::move(cols));
}

int PresentedModule::min_twist() const {
  return twists_.empty() ? 0 : *std::min_element(twists_.begin(), twists_.end());
}

int PresentedModule::max_twist() const {
  return twists_.empty() ? 0 : *std::max_element(twists_.begin(), twists_.end());
}

int PresentedModule::max_presentation_degree() const {
  int g = max_twist();
  for (const auto& c : relations_) g = std::max(g, c.degree);
  return g;
}

PresentedModule quotient_by_elements(const PresentedModule& m, const std::vector<Polynomial>& f) {
  std::vector<RelationColumn> cols = m.relations();
  for (const auto& g : f) {
    if (!g.is_homogeneous()) throw InputError("quotient_by_elements: element is not homogeneous");
    if (g.is_zero()) continue;
    for (std::size_t i = 0; i < m.num_generators(); ++i) {
      RelationColumn col;
      col.degree = m.twists()[i] + g.degree();
      col.entries.assign(m.num_generators(), Polynomial(m.ring()));
      col.entries[i] = g;
      cols.push_back(std::move(col));
    }
  }
  return PresentedModule(m.ring(), m.twists(), std::move(cols));
}

}  // namespace gradus
