#include "gradus/artinian.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "gradus/errors.hpp"
#include "gradus/koszul.hpp"

namespace gradus {

DegreewiseModule ArtinianDual::realize(int lo, int hi) const { return gradus::realize(n_, -hi, -lo).dual(); }

ArtinianDual graded_dual(const PresentedModule& n) { return ArtinianDual(n); }

ArtinianDual inverse_polynomial_module(const RingSpec& ring) {
  return graded_dual(PresentedModule::free(ring, {0}));
}

ArtinianDual inverse_polynomial_module(int nvars, PrimeField field) {
  if (nvars < 1) throw InputError("inverse polynomial module needs at least one variable");
  static const char* kNames[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back(nvars <= 4 ? kNames[i] : "x" + std::to_string(i + 1));
  return inverse_polynomial_module(RingSpec(field, names));
}

ArtinianDual annihilator_submodule(const ArtinianDual& x, const std::vector<Polynomial>& f) {
  if (f.empty()) return x;
  return graded_dual(quotient_by_elements(x.dual_of(), f));
}

namespace {

int dual_top(const ArtinianDual& x, const ArtinianConfig& cfg) { return cfg.invariants.top_for(x.dual_of()); }

std::vector<Polynomial> candidate_forms(const RingSpec& ring, int trials, std::uint64_t seed) {
  std::vector<Polynomial> out = variables_of(ring);
  for (int t = 0; t < trials; ++t) out.push_back(random_linear_form(ring, seed + static_cast<std::uint64_t>(t)));
  return out;
}

}  // namespace

CoregularResult is_coregular(const ArtinianDual& x, const std::vector<Polynomial>& seq, int lo, int hi) {
  CoregularResult out;
  PresentedModule current = x.dual_of();
  for (std::size_t step = 0; step < seq.size(); ++step) {
    const Polynomial& f = seq[step];
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
      throw InputError("coregular sequence elements must be homogeneous of positive degree");
    const int e = f.degree();
    const DegreewiseModule n_side = realize(current, -hi, -lo + e);
    const DegreewiseModule x_side = n_side.dual();
    PolyAction on_n(n_side);
    PolyAction on_x(x_side);
    CoregularStep record{static_cast<int>(step), true, 0};
    for (int t = lo; t <= hi; ++t) {
      const bool surjective = rank(on_x.apply(f, t - e)) == x_side.dim(t);
      const bool injective = rank(on_n.apply(f, -t)) == n_side.dim(-t);
      if (surjective != injective)
        throw DiagnosticError("coregularity: surjectivity on X and injectivity on its dual disagree in degree " +
                              std::to_string(t));
      if (!surjective) {
        record.surjective = false;
        record.failed_degree = t;
        break;
      }
    }
    out.steps.push_back(record);
    if (!record.surjective) {
      out.coregular = false;
      return out;
    }
    current = quotient_by_elements(current, {f});
  }
  return out;
}

WidthResult width(const ArtinianDual& x, const ArtinianConfig& cfg) {
  WidthResult out;
  const PresentedModule& n = x.dual_of();
  if (is_zero_module(n)) {
    out.value = kInfinite;
    out.cross_check = kInfinite;
    return out;
  }
  const int top = dual_top(x, cfg);
  const DepthResult d = depth_via_koszul(n, top);
  out.value = d.depth;
  out.window_heuristic = d.window_heuristic;

  const int lo = -top;
  const int hi = x.top_degree();
  std::vector<Polynomial> seq;
  const auto candidates = candidate_forms(x.ring(), cfg.invariants.trials, cfg.invariants.seed);
  while (static_cast<int>(seq.size()) < x.ring().nvars()) {
    bool extended = false;
    for (const auto& c : candidates) {
      auto trial = seq;
      trial.push_back(c);
      if (is_coregular(x, trial, lo, hi).coregular) {
        seq = std::move(trial);
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  out.cross_check = static_cast<int>(seq.size());
  if (out.cross_check != out.value)
    throw DiagnosticError("width: dual depth " + std::to_string(out.value) + " but coregular search found " +
                          std::to_string(out.cross_check));
  return out;
}

NdimResult ndim(const ArtinianDual& x, const ArtinianConfig& cfg) {
  NdimResult out;
  const PresentedModule& n = x.dual_of();
  if (is_zero_module(n)) return out;
  const KrullResult k = krull_dimension(n, cfg.invariants);
  out.value = k.dimension;
  out.window_insufficient = k.window_insufficient;
  for (int r = 0; r <= x.ring().nvars(); ++r) {
    auto forms = find_parameters(n, r, cfg.invariants);
    if (forms && finite_length(annihilator_submodule(x, *forms), cfg)) {
      out.cross_check = r;
      break;
    }
  }
  if (out.cross_check != out.value)
    throw DiagnosticError("N.dim: dual dimension " + std::to_string(out.value) + " but colon search gives " +
                          std::to_string(out.cross_check));
  return out;
}

bool is_co_cohen_macaulay(const ArtinianDual& x, const ArtinianConfig& cfg) {
  if (is_zero_module(x.dual_of())) throw DomainError("co-Cohen-Macaulay test on the zero module");
  return width(x, cfg).value == ndim(x, cfg).value;
}

std::optional<std::size_t> finite_length(const ArtinianDual& x, const ArtinianConfig& cfg) {
  const PresentedModule& n = x.dual_of();
  if (n.num_generators() == 0) return 0;
  const int top = dual_top(x, cfg);
  if (!has_finite_length(n, top)) return std::nullopt;
  std::size_t total = 0;
  for (std::size_t d : hilbert_function(n, n.min_twist(), top)) total += d;
  return total;
}

DegreewiseModule colon(const DegreewiseModule& y, const std::vector<Polynomial>& f) {
  if (f.empty()) return y;
  int maxdeg = 0;
  for (const auto& g : f) {
    if (g.is_zero() || !g.is_homogeneous()) throw InputError("colon: elements must be nonzero and homogeneous");
    maxdeg = std::max(maxdeg, g.degree());
  }
  const int lo = y.lo();
  const int hi = y.zero_above() ? y.hi() : y.hi() - maxdeg;
  const PrimeField field = y.field();
  const std::size_t width = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  std::vector<Subspace> pieces(width);
  PolyAction act(y);
  for (std::size_t w = 0; w < width; ++w) {
    const int j = lo + static_cast<int>(w);
    Matrix stacked(field, 0, y.dim(j));
    for (const auto& g : f) stacked = stacked.vstack(act.apply(g, j));
    pieces[w] = Subspace::span_of_columns(kernel_basis(stacked));
  }
  std::vector<std::size_t> dims(width);
  for (std::size_t w = 0; w < width; ++w) dims[w] = pieces[w].dim();
  std::vector<std::vector<Matrix>> actions(y.nvars(), std::vector<Matrix>(width > 0 ? width - 1 : 0));
  for (int t = 0; t < y.nvars(); ++t) {
    for (std::size_t w = 0; w + 1 < width; ++w) {
      const int j = lo + static_cast<int>(w);
      const Matrix a = y.action(t, j);
      Matrix m(field, dims[w + 1], dims[w]);
      for (std::size_t b = 0; b < dims[w]; ++b) {
        const Vector image = a.apply(pieces[w].basis_vector(b));
        const auto coords = pieces[w + 1].coordinates(image);
        if (!coords) throw DiagnosticError("colon: submodule not closed under the variable action");
        for (std::size_t r = 0; r < coords->size(); ++r) m(r, b) = (*coords)[r];
      }
      actions[t][w] = std::move(m);
    }
  }
  return DegreewiseModule(field, y.nvars(), lo, hi, std::move(dims), std::move(actions), y.zero_below(),
                          y.zero_above());
}

bool realized_is_coregular(const DegreewiseModule& y, const std::vector<Polynomial>& seq) {
  DegreewiseModule current = y;
  for (const auto& f : seq) {
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
      throw InputError("coregular sequence elements must be homogeneous of positive degree");
    const int e = f.degree();
    PolyAction act(current);
    for (int t = current.lo() + e; t <= current.hi(); ++t)
      if (rank(act.apply(f, t - e)) != current.dim(t)) return false;
    current = colon(current, {f});
  }
  return true;
}

bool realized_finite_length(const DegreewiseModule& y, int bottom_degrees) {
  if (y.zero_below()) return true;
  for (int j = y.lo(); j < y.lo() + bottom_degrees && j <= y.hi(); ++j)
    if (y.dim(j) != 0) return false;
  return true;
}

RealizedQuotient realized_quotient(const DegreewiseModule& y, const std::vector<Polynomial>& f) {
  int maxdeg = 0;
  for (const auto& g : f) {
    if (g.is_zero() || !g.is_homogeneous()) throw InputError("quotient: elements must be nonzero and homogeneous");
    maxdeg = std::max(maxdeg, g.degree());
  }
  RealizedQuotient out;
  out.lo = y.zero_below() ? y.lo() : y.lo() + maxdeg;
  const int hi = y.hi();
  const PrimeField field = y.field();
  const std::size_t width = hi >= out.lo ? static_cast<std::size_t>(hi - out.lo + 1) : 0;
  out.pieces.resize(width);
  PolyAction act(y);
  for (std::size_t w = 0; w < width; ++w) {
    const int j = out.lo + static_cast<int>(w);
    Matrix image(field, y.dim(j), 0);
    for (const auto& g : f) image = image.hstack(act.apply(g, j - g.degree()));
    out.pieces[w] = Subquotient(Subspace::whole(field, y.dim(j)), image);
  }
  std::vector<std::size_t> dims(width);
  for (std::size_t w = 0; w < width; ++w) dims[w] = out.pieces[w].dim();
  std::vector<std::vector<Matrix>> actions(y.nvars(), std::vector<Matrix>(width > 0 ? width - 1 : 0));
  for (int t = 0; t < y.nvars(); ++t)
    for (std::size_t w = 0; w + 1 < width; ++w) {
      const int j = out.lo + static_cast<int>(w);
      actions[t][w] = induced_map(y.action(t, j), out.pieces[w], out.pieces[w + 1]);
    }
  out.module = DegreewiseModule(field, y.nvars(), out.lo, hi, std::move(dims), std::move(actions), y.zero_below(),
                                y.zero_above());
  return out;
}

bool realized_is_regular(const DegreewiseModule& y, const std::vector<Polynomial>& seq) {
  DegreewiseModule current = y;
  for (const auto& f : seq) {
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
      throw InputError("regular sequence elements must be homogeneous of positive degree");
    PolyAction act(current);
    for (int j = current.lo(); j + f.degree() <= current.hi(); ++j)
      if (rank(act.apply(f, j)) != current.dim(j)) return false;
    current = realized_quotient(current, {f}).module;
  }
  return true;
}

int realized_width(const DegreewiseModule& y, const RingSpec& ring, int trials, std::uint64_t seed) {
  if (y.is_zero_on_window()) return kInfinite;
  std::vector<Polynomial> seq;
  const auto candidates = candidate_forms(ring, trials, seed);
  while (static_cast<int>(seq.size()) < ring.nvars()) {
    bool extended = false;
    for (const auto& c : candidates) {
      auto trial = seq;
      trial.push_back(c);
      if (realized_is_coregular(y, trial)) {
        seq = std::move(trial);
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  return static_cast<int>(seq.size());
}

int realized_ndim(const DegreewiseModule& y, const RingSpec& ring, int trials, std::uint64_t seed) {
  if (y.is_zero_on_window()) return -1;
  const int n = ring.nvars();
  const auto vars = variables_of(ring);
  for (int r = 0; r <= n; ++r) {
    // Coordinate subsets first.
    std::vector<int> pick(r);
    std::function<bool(int, int)> rec = [&](int depth, int start) -> bool {
      if (depth == r) {
        std::vector<Polynomial> forms;
        for (int i : pick) forms.push_back(vars[i]);
        return realized_finite_length(colon(y, forms));
      }
      for (int i = start; i < n; ++i) {
        pick[depth] = i;
        if (rec(depth + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) return r;
    for (int t = 0; t < trials && r > 0; ++t) {
      std::vector<Polynomial> forms;
      for (int k = 0; k < r; ++k)
        forms.push_back(random_linear_form(ring, seed + static_cast<std::uint64_t>(t * n + k)));
      if (realized_finite_length(colon(y, forms))) return r;
    }
  }
  return n;
}

}  // namespace gradus
