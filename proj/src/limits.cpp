#include "gradus/limits.hpp"

#include <algorithm>
#include <climits>

#include "gradus/errors.hpp"
#include "gradus/parallel.hpp"

namespace gradus {

Realizer realizer_of(const PresentedModule& m) {
  return [m](int lo, int hi) { return Realized{realize(m, lo, hi), {}}; };
}

Realizer realizer_of(const ArtinianDual& x) {
  return [x](int lo, int hi) { return Realized{x.realize(lo, hi), {}}; };
}

Realizer realizer_of(const DegreewiseModule& y) {
  return [y](int lo, int hi) {
    for (int j : {lo, hi})
      if (!y.known(j)) throw WindowOverflow("module requested at degree " + std::to_string(j) + " outside its window");
    return Realized{y.restricted(lo, hi), {}};
  };
}

namespace {

int total_degree_of(const std::vector<Polynomial>& f) {
  int e = 0;
  for (const auto& g : f) {
    if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1)
      throw InputError("sequence elements must be homogeneous of positive degree");
    e += g.degree();
  }
  return e;
}

GradedMap realigned(GradedMap g, int offset) {
  g.lo += offset;
  g.hi += offset;
  g.shift = 0;
  return g;
}

std::set<int> dependent_degrees(const std::set<int>& unstable, int lo, int hi, int below, int above) {
  std::set<int> out;
  for (int j = lo; j <= hi; ++j) {
    auto it = unstable.lower_bound(j - below);
    if (it != unstable.end() && *it <= j + above) out.insert(j);
  }
  return out;
}

}  // namespace

LevelSystem build_cohomology_system(const Realizer& base, const std::vector<Polynomial>& f, int i, int lo, int hi,
                                    int levels) {
  const int r = static_cast<int>(f.size());
  if (i < 0 || i > r) throw InputError("cohomological index out of range");
  if (levels < 1) throw InputError("level count must be positive");
  const int e = total_degree_of(f);
  LevelSystem s;
  s.direction = Direction::kDirect;
  s.index = i;
  s.lo = lo;
  s.hi = hi;
  s.sequence = f;
  Realized b = base(lo, hi + levels * e);
  s.base_unstable = dependent_degrees(b.unstable, lo, hi, 0, levels * e);
  auto module = std::make_shared<const DegreewiseModule>(std::move(b.module));
  for (int n = 1; n <= levels; ++n) {
    s.complexes.emplace_back(module, f, n, lo + n * e, hi + n * e);
    s.homologies.push_back(homology(s.complexes.back(), r - i));
    s.levels.push_back(s.homologies.back().module.reindexed(-n * e));
  }
  for (int n = 1; n < levels; ++n) {
    const ChainMap c = transition(s.complexes[n - 1], s.complexes[n]);
    s.transitions.push_back(realigned(induced_on_homology(c, s.homologies[n - 1], s.homologies[n]), -n * e));
  }
  return s;
}

LevelSystem build_homology_system(const Realizer& base, const std::vector<Polynomial>& x, int i, int lo, int hi,
                                  int levels) {
  const int r = static_cast<int>(x.size());
  if (i < 0 || i > r) throw InputError("homological index out of range");
  if (levels < 1) throw InputError("level count must be positive");
  const int e = total_degree_of(x);
  LevelSystem s;
  s.direction = Direction::kInverse;
  s.index = i;
  s.lo = lo;
  s.hi = hi;
  s.sequence = x;
  Realized b = base(lo - levels * e, hi);
  s.base_unstable = dependent_degrees(b.unstable, lo, hi, levels * e, 0);
  auto module = std::make_shared<const DegreewiseModule>(std::move(b.module));
  for (int n = 1; n <= levels; ++n) {
    s.complexes.emplace_back(module, x, n, lo, hi);
    s.homologies.push_back(homology(s.complexes.back(), i));
    s.levels.push_back(s.homologies.back().module);
  }
  for (int n = 1; n < levels; ++n) {
    const ChainMap c = transition(s.complexes[n], s.complexes[n - 1]);
    s.transitions.push_back(induced_on_homology(c, s.homologies[n], s.homologies[n - 1]));
  }
  return s;
}

GradedMap direct_transition(const LevelSystem& s, int from, int to) {
  const bool direct = s.direction == Direction::kDirect;
  if (direct ? from >= to : from <= to) throw InputError("transition levels run against the system direction");
  const ChainMap c = transition(s.complexes.at(from - 1), s.complexes.at(to - 1));
  GradedMap g = induced_on_homology(c, s.homologies.at(from - 1), s.homologies.at(to - 1));
  if (!direct) return g;
  const int e = s.complexes.front().total_degree();
  return realigned(std::move(g), -from * e);
}

GradedMap composite_transition(const LevelSystem& s, int from, int to) {
  const bool direct = s.direction == Direction::kDirect;
  if (direct ? from >= to : from <= to) throw InputError("transition levels run against the system direction");
  if (direct) {
    GradedMap g = s.transition(from);
    for (int n = from + 1; n < to; ++n) g = compose(s.transition(n), g);
    return g;
  }
  GradedMap g = s.transition(from - 1);
  for (int n = from - 2; n >= to; --n) g = compose(s.transition(n), g);
  return g;
}

GradedMap colimit_map(const LevelSystem& source, const LevelSystem& target, const GradedMap& base_map) {
  if (source.direction != Direction::kDirect || target.direction != Direction::kDirect)
    throw InputError("colimit_map needs direct systems");
  if (source.level_count() != target.level_count() || source.lo != target.lo || source.hi != target.hi ||
      source.index != target.index)
    throw InputError("colimit_map: systems differ in shape");
  const int n = source.level_count();
  const ChainMap c = base_change(source.complexes.back(), target.complexes.back(), base_map);
  GradedMap g = induced_on_homology(c, source.homologies.back(), target.homologies.back());
  return realigned(std::move(g), -n * source.complexes.back().total_degree());
}

bool LimitResult::all_stabilized() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeStatus& d) { return d.stabilized; });
}

std::set<int> LimitResult::unstable_degrees() const {
  std::set<int> out;
  for (const auto& d : degrees)
    if (!d.stabilized) out.insert(d.degree);
  return out;
}

int LimitResult::max_stable_level() const {
  int out = 0;
  for (const auto& d : degrees)
    if (d.stabilized) out = std::max(out, d.stable_level);
  return out;
}

LimitResult colimit(const LevelSystem& s, int streak) {
  if (s.direction != Direction::kDirect) throw InputError("colimit of an inverse system");
  const int levels = s.level_count();
  LimitResult out;
  out.direction = Direction::kDirect;
  out.levels = levels;
  out.representation_level = levels;
  out.streak = streak;
  out.lo = s.lo;
  out.hi = s.hi;
  out.module = s.level(levels);
  const std::size_t width = s.hi >= s.lo ? static_cast<std::size_t>(s.hi - s.lo + 1) : 0;
  out.degrees.resize(width);
  parallel_for(width, [&](std::size_t w) {
    const int j = s.lo + static_cast<int>(w);
    DegreeStatus& st = out.degrees[w];
    st.degree = j;
    std::vector<bool> iso(levels, false);
    for (int n = 1; n <= levels; ++n) st.level_dims.push_back(s.level(n).dim(j));
    for (int n = 1; n < levels; ++n) {
      const std::size_t rk = s.transition(n).rank_at(j);
      st.transition_ranks.push_back(rk);
      iso[n] = st.level_dims[n - 1] == st.level_dims[n] && rk == st.level_dims[n];
    }
    int first = levels;
    while (first > 1 && iso[first - 1]) --first;
    if (levels - first >= streak) {
      st.stabilized = true;
      st.stable_level = first;
    } else {
      st.reason = "transitions not isomorphisms for " + std::to_string(streak) + " levels";
    }
    if (s.base_unstable.count(j)) {
      st.stabilized = false;
      st.reason = "depends on uncertified base degrees";
    }
  });
  return out;
}

namespace {

struct InverseDegree {
  std::vector<Matrix> top_images;  // [n-1]: composite from level N into level n (n < N)
  std::vector<std::optional<std::size_t>> stable_dims;
};

}  // namespace

LimitResult inverse_limit(const LevelSystem& s, int streak) {
  if (s.direction != Direction::kInverse) throw InputError("inverse limit of a direct system");
  const int levels = s.level_count();
  const PrimeField field = s.levels.front().field();
  LimitResult out;
  out.direction = Direction::kInverse;
  out.levels = levels;
  out.streak = streak;
  out.lo = s.lo;
  out.hi = s.hi;
  const std::size_t width = s.hi >= s.lo ? static_cast<std::size_t>(s.hi - s.lo + 1) : 0;
  out.degrees.resize(width);
  std::vector<InverseDegree> data(width);

  parallel_for(width, [&](std::size_t w) {
    const int j = s.lo + static_cast<int>(w);
    DegreeStatus& st = out.degrees[w];
    InverseDegree& d = data[w];
    st.degree = j;
    for (int n = 1; n <= levels; ++n) st.level_dims.push_back(s.level(n).dim(j));
    for (int n = 1; n < levels; ++n) st.transition_ranks.push_back(s.transition(n).rank_at(j));
    d.top_images.resize(levels);
    d.stable_dims.assign(levels, std::nullopt);
    for (int n = 1; n < levels; ++n) {
      // composite from level n + k down to level n, k = 1 .. levels - n
      Matrix c = s.transition(n).at(j);
      std::vector<std::size_t> ranks{rank(c)};
      for (int k = 2; n + k <= levels; ++k) {
        c = c * s.transition(n + k - 1).at(j);
        ranks.push_back(rank(c));
      }
      d.top_images[n - 1] = c;
      const int count = static_cast<int>(ranks.size());
      if (count < streak) continue;
      bool constant = true;
      for (int k = count - streak; k < count; ++k) constant = constant && ranks[k] == ranks.back();
      if (constant) d.stable_dims[n - 1] = ranks.back();
    }
    st.stable_image_dims.assign(levels, 0);
    for (int n = 1; n <= levels; ++n)
      if (d.stable_dims[n - 1]) st.stable_image_dims[n - 1] = *d.stable_dims[n - 1];
    int top = -1;
    for (int n = levels - 1; n >= 1; --n)
      if (d.stable_dims[n - 1]) {
        top = n;
        break;
      }
    st.top_level = top;
    if (top < 0) {
      st.reason = "images from higher levels did not stabilize";
      return;
    }
    int first = top;
    while (first > 1 && d.stable_dims[first - 2] && *d.stable_dims[first - 2] == *d.stable_dims[top - 1]) --first;
    st.stable_level = first;
    if (top - first + 1 < streak) {
      st.reason = "stable images not constant for " + std::to_string(streak) + " levels";
      return;
    }
    st.stabilized = true;
  });

  int rep = INT_MAX;
  for (const auto& st : out.degrees)
    if (st.top_level > 0) rep = std::min(rep, st.top_level);
  if (rep == INT_MAX) rep = 1;
  out.representation_level = rep;
  for (auto& st : out.degrees) {
    if (st.stabilized && st.stable_level > rep) {
      st.stabilized = false;
      st.reason = "stable range starts above the representation level " + std::to_string(rep);
    }
    if (s.base_unstable.count(st.degree)) {
      st.stabilized = false;
      st.reason = "depends on uncertified base degrees";
    }
  }

  // Limit pieces: stable images at the representation level, with the
  // restricted level actions.
  std::vector<Subspace> pieces(width);
  for (std::size_t w = 0; w < width; ++w) {
    const int j = s.lo + static_cast<int>(w);
    if (rep < levels)
      pieces[w] = Subspace::span_of_columns(data[w].top_images[rep - 1]);
    else
      pieces[w] = Subspace::whole(field, s.level(rep).dim(j));
  }
  const DegreewiseModule& level = s.level(rep);
  const int nv = level.nvars();
  std::vector<std::size_t> dims(width);
  for (std::size_t w = 0; w < width; ++w) dims[w] = pieces[w].dim();
  std::vector<std::vector<Matrix>> actions(nv, std::vector<Matrix>(width > 0 ? width - 1 : 0));
  parallel_for(width > 0 ? width - 1 : 0, [&](std::size_t w) {
    const int j = s.lo + static_cast<int>(w);
    for (int t = 0; t < nv; ++t) {
      const Matrix a = level.action(t, j);
      Matrix m(field, dims[w + 1], dims[w]);
      for (std::size_t b = 0; b < dims[w]; ++b) {
        const auto coords = pieces[w + 1].coordinates(a.apply(pieces[w].basis_vector(b)));
        if (!coords) throw DiagnosticError("stable images are not closed under the variable action");
        for (std::size_t k = 0; k < coords->size(); ++k) m(k, b) = (*coords)[k];
      }
      actions[t][w] = std::move(m);
    }
  });
  out.module = DegreewiseModule(field, nv, s.lo, s.hi, std::move(dims), std::move(actions), false, false);
  return out;
}

bool recheck_stability(const LevelSystem& s, const LimitResult& r) {
  const int levels = s.level_count();
  for (const auto& st : r.degrees) {
    if (!st.stabilized) continue;
    const int j = st.degree;
    if (s.direction == Direction::kDirect) {
      for (int n = levels - r.streak; n < levels; ++n) {
        const Matrix& t = s.transition(n).at(j);
        if (t.rows() != t.cols() || rank(t) != t.rows()) return false;
      }
      continue;
    }
    // T_n maps the stable image at n+1 onto the stable image at n.
    for (int n = st.stable_level; n < st.top_level; ++n) {
      const Matrix upper = composite_transition(s, levels, n + 1).at(j);
      const Matrix lower = composite_transition(s, levels, n).at(j);
      const Subspace s_upper = Subspace::span_of_columns(upper);
      const Subspace s_lower = Subspace::span_of_columns(lower);
      const Matrix& t = s.transition(n).at(j);
      const std::size_t mapped = rank(t * (s_upper.dim() ? s_upper.basis_rows().transpose() : Matrix(t.field(), t.cols(), 0)));
      if (s_upper.dim() != s_lower.dim() || mapped != s_lower.dim()) return false;
    }
  }
  return true;
}

namespace {

template <typename Build, typename Limit>
LimitComputation grow(const Build& build, const Limit& limit, const LimitConfig& cfg) {
  int levels = std::max(cfg.levels, cfg.streak + 2);
  while (true) {
    LimitComputation c{build(levels), {}};
    c.result = limit(c.system, cfg.streak);
    bool only_base = true;
    for (int j : c.result.unstable_degrees())
      if (!c.system.base_unstable.count(j)) only_base = false;
    if (only_base || !cfg.adaptive || levels >= cfg.max_levels) return c;
    levels = std::min(levels + 4, cfg.max_levels);
  }
}

}  // namespace

LimitComputation local_cohomology(const Realizer& base, const std::vector<Polynomial>& f, int i, int lo, int hi,
                                  const LimitConfig& cfg) {
  return grow([&](int levels) { return build_cohomology_system(base, f, i, lo, hi, levels); }, colimit, cfg);
}

LimitComputation local_homology(const Realizer& base, const std::vector<Polynomial>& x, int i, int lo, int hi,
                                const LimitConfig& cfg) {
  return grow([&](int levels) { return build_homology_system(base, x, i, lo, hi, levels); }, inverse_limit, cfg);
}

Realizer cohomology_realizer(Realizer base, std::vector<Polynomial> f, int i, LimitConfig cfg) {
  return [base = std::move(base), f = std::move(f), i, cfg](int lo, int hi) {
    LimitComputation c = local_cohomology(base, f, i, lo, hi, cfg);
    return Realized{std::move(c.result.module), c.result.unstable_degrees()};
  };
}

Realizer homology_realizer(Realizer base, std::vector<Polynomial> x, int i, LimitConfig cfg) {
  return [base = std::move(base), x = std::move(x), i, cfg](int lo, int hi) {
    LimitComputation c = local_homology(base, x, i, lo, hi, cfg);
    return Realized{std::move(c.result.module), c.result.unstable_degrees()};
  };
}

}  // namespace gradus
