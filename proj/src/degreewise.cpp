#include "gradus/degreewise.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gradus/errors.hpp"
#include "gradus/parallel.hpp"

namespace gradus {

DegreewiseModule::DegreewiseModule(PrimeField field, int nvars, int lo, int hi, std::vector<std::size_t> dims,
                                   std::vector<std::vector<Matrix>> actions, bool zero_below, bool zero_above)
    : field_(field),
      nvars_(nvars),
      lo_(lo),
      hi_(hi),
      dims_(std::move(dims)),
      actions_(std::move(actions)),
      zero_below_(zero_below),
      zero_above_(zero_above) {
  const std::size_t width = hi_ >= lo_ ? static_cast<std::size_t>(hi_ - lo_ + 1) : 0;
  if (dims_.size() != width) throw InputError("DegreewiseModule: dims do not match the window");
  if (actions_.size() != static_cast<std::size_t>(nvars_)) throw InputError("DegreewiseModule: one action list per variable");
  for (const auto& per_var : actions_) {
    if (per_var.size() != (width > 0 ? width - 1 : 0)) throw InputError("DegreewiseModule: action count mismatch");
    for (std::size_t k = 0; k < per_var.size(); ++k) {
      if (per_var[k].cols() != dims_[k] || per_var[k].rows() != dims_[k + 1])
        throw InputError("DegreewiseModule: action shape mismatch at degree " + std::to_string(lo_ + int(k)));
    }
  }
}

bool DegreewiseModule::known(int j) const {
  return in_window(j) || (j < lo_ && zero_below_) || (j > hi_ && zero_above_);
}

std::size_t DegreewiseModule::dim(int j) const {
  if (in_window(j)) return dims_[j - lo_];
  if (known(j)) return 0;
  throw WindowOverflow("degree " + std::to_string(j) + " is outside the realized window [" + std::to_string(lo_) +
                       ", " + std::to_string(hi_) + "]");
}

Matrix DegreewiseModule::action(int var, int j) const {
  if (var < 0 || var >= nvars_) throw InputError("action: variable index out of range");
  if (j >= lo_ && j < hi_) return actions_[var][j - lo_];
  return Matrix(field_, dim(j + 1), dim(j));
}

std::vector<std::size_t> DegreewiseModule::hilbert(int lo, int hi) const {
  std::vector<std::size_t> out;
  for (int j = lo; j <= hi; ++j) out.push_back(dim(j));
  return out;
}

std::size_t DegreewiseModule::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

DegreewiseModule DegreewiseModule::reindexed(int offset) const {
  DegreewiseModule out(*this);
  out.lo_ += offset;
  out.hi_ += offset;
  return out;
}

DegreewiseModule DegreewiseModule::restricted(int lo, int hi) const {
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> actions(nvars_);
  for (int j = lo; j <= hi; ++j) {
    dims.push_back(dim(j));
    if (j < hi)
      for (int t = 0; t < nvars_; ++t) actions[t].push_back(action(t, j));
  }
  return DegreewiseModule(field_, nvars_, lo, hi, std::move(dims), std::move(actions), zero_below_ && lo <= lo_,
                          zero_above_ && hi >= hi_);
}

DegreewiseModule DegreewiseModule::dual() const {
  std::vector<std::size_t> dims(dims_.rbegin(), dims_.rend());
  std::vector<std::vector<Matrix>> actions(nvars_);
  for (int t = 0; t < nvars_; ++t) {
    for (int j = -hi_; j < -lo_; ++j) actions[t].push_back(actions_[t][(-j - 1) - lo_].transpose());
  }
  return DegreewiseModule(field_, nvars_, -hi_, -lo_, std::move(dims), std::move(actions), zero_above_, zero_below_);
}

const Matrix& GradedMap::at(int j) const {
  if (j < lo || j > hi)
    throw WindowOverflow("graded map queried at degree " + std::to_string(j) + " outside [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
  return maps[j - lo];
}

std::size_t GradedMap::rank_at(int j) const { return rank(at(j)); }

GradedMap compose(const GradedMap& second, const GradedMap& first) {
  GradedMap out;
  out.shift = first.shift + second.shift;
  out.lo = std::max(first.lo, second.lo - first.shift);
  out.hi = std::min(first.hi, second.hi - first.shift);
  for (int j = out.lo; j <= out.hi; ++j) out.maps.push_back(second.at(j + first.shift) * first.at(j));
  return out;
}

Matrix PolyAction::monomial(const Exponents& e, int source_degree) {
  auto key = std::make_pair(e, source_degree);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Matrix result;
  int last = -1;
  for (int t = 0; t < static_cast<int>(e.size()); ++t)
    if (e[t] > 0) last = t;
  if (last < 0) {
    result = Matrix::identity(m_.field(), m_.dim(source_degree));
  } else {
    Exponents rest = e;
    --rest[last];
    const Matrix head = monomial(rest, source_degree);
    result = m_.action(last, source_degree + total_degree(rest)) * head;
  }
  cache_.emplace(std::move(key), result);
  return result;
}

Matrix PolyAction::apply(const Polynomial& g, int source_degree) {
  if (g.is_zero()) throw InputError("PolyAction: zero polynomial has no degree");
  if (!g.is_homogeneous()) throw InputError("PolyAction: polynomial is not homogeneous");
  const int target = source_degree + g.degree();
  Matrix out(m_.field(), m_.dim(target), m_.dim(source_degree));
  if (out.rows() == 0 || out.cols() == 0) return out;
  for (const auto& [e, c] : g.terms()) out = out + monomial(e, source_degree).scaled(c);
  return out;
}

FreeSlice::FreeSlice(const PresentedModule& m, int deg) : degree(deg) {
  const int n = m.ring().nvars();
  for (int a : m.twists()) {
    offsets.push_back(dim);
    summands.emplace_back(n, deg - a);
    dim += summands.back().size();
  }
}

std::size_t FreeSlice::index(std::size_t summand, const Exponents& e) const {
  return offsets.at(summand) + summands.at(summand).index_of(e);
}

namespace {

// v lives in `from`; returns mono * v in `to` (to.degree == from.degree + deg(mono)).
Vector multiply_free(const PrimeField& f, const FreeSlice& from, const FreeSlice& to, const Vector& v,
                     const Exponents& mono) {
  Vector out(to.dim, 0);
  Exponents e(mono.size());
  for (std::size_t s = 0; s < from.summands.size(); ++s) {
    const auto& basis = from.summands[s];
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Scalar c = v[from.offsets[s] + k];
      if (c == 0) continue;
      for (std::size_t t = 0; t < e.size(); ++t) e[t] = basis[k][t] + mono[t];
      const std::size_t idx = to.index(s, e);
      out[idx] = f.add(out[idx], c);
    }
  }
  return out;
}

Subquotient quotient_piece(const PresentedModule& m, const FreeSlice& slice) {
  const PrimeField& f = m.ring().field;
  const int n = m.ring().nvars();
  std::vector<Vector> rows;
  for (const auto& col : m.relations()) {
    for (const auto& mu : monomials_of_degree(n, slice.degree - col.degree)) {
      Vector v(slice.dim, 0);
      Exponents e(n);
      for (std::size_t i = 0; i < col.entries.size(); ++i) {
        for (const auto& [eps, c] : col.entries[i].terms()) {
          for (int t = 0; t < n; ++t) e[t] = mu[t] + eps[t];
          const std::size_t idx = slice.index(i, e);
          v[idx] = f.add(v[idx], c);
        }
      }
      rows.push_back(std::move(v));
    }
  }
  const Matrix relation_rows = Matrix::from_rows(f, slice.dim, rows);
  return Subquotient(Subspace::whole(f, slice.dim), relation_rows.transpose());
}

}  // namespace

PresentedRealization::PresentedRealization(const PresentedModule& m, int lo, int hi)
    : presentation_(m), lo_(lo), hi_(hi) {
  if (hi < lo - 1) throw InputError("realize: empty window must be [lo, lo-1]");
  const PrimeField f = m.ring().field;
  const int n = m.ring().nvars();
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  for (int j = lo; j <= hi; ++j) slices_.emplace_back(m, j);
  pieces_.resize(width);
  parallel_for(width, [&](std::size_t k) { pieces_[k] = quotient_piece(m, slices_[k]); });

  std::vector<std::size_t> dims(width);
  for (std::size_t k = 0; k < width; ++k) dims[k] = pieces_[k].dim();
  std::vector<std::vector<Matrix>> actions(n, std::vector<Matrix>(width > 0 ? width - 1 : 0));
  parallel_for(width > 0 ? width - 1 : 0, [&](std::size_t k) {
    for (int t = 0; t < n; ++t) {
      Exponents unit(n, 0);
      unit[t] = 1;
      Matrix a(f, dims[k + 1], dims[k]);
      for (std::size_t b = 0; b < dims[k]; ++b) {
        const Vector image = multiply_free(f, slices_[k], slices_[k + 1], pieces_[k].lift(b), unit);
        const Vector coords = *pieces_[k + 1].project(image);
        for (std::size_t r = 0; r < coords.size(); ++r) a(r, b) = coords[r];
      }
      actions[t][k] = std::move(a);
    }
  });
  const bool zero_below = lo <= m.min_twist() || m.num_generators() == 0;
  const bool zero_above = m.num_generators() == 0 || (width > 0 && hi >= m.max_twist() && dims.back() == 0);
  module_ = DegreewiseModule(f, n, lo, hi, std::move(dims), std::move(actions), zero_below, zero_above);
}

DegreewiseModule realize(const PresentedModule& m, int lo, int hi) { return PresentedRealization(m, lo, hi).module(); }

std::vector<std::size_t> hilbert_function(const PresentedModule& m, int lo, int hi) {
  return realize(m, lo, hi).hilbert(lo, hi);
}

bool vanishing_certificate(const PresentedModule& m, int j0) {
  if (m.num_generators() > 0 && j0 < m.max_twist())
    throw DomainError("vanishing certificate needs j0 >= max generator degree " + std::to_string(m.max_twist()));
  return quotient_piece(m, FreeSlice(m, j0)).dim() == 0;
}

GradedMap natural_projection(const PresentedRealization& source, const PresentedRealization& target) {
  if (source.presentation().twists() != target.presentation().twists())
    throw InputError("natural_projection: modules have different free covers");
  GradedMap out;
  out.lo = std::max(source.lo(), target.lo());
  out.hi = std::min(source.hi(), target.hi());
  const PrimeField f = source.presentation().ring().field;
  for (int j = out.lo; j <= out.hi; ++j) {
    const auto& sp = source.piece(j);
    const auto& tp = target.piece(j);
    Matrix m(f, tp.dim(), sp.dim());
    for (std::size_t b = 0; b < sp.dim(); ++b) {
      const Vector coords = *tp.project(sp.lift(b));
      for (std::size_t r = 0; r < coords.size(); ++r) m(r, b) = coords[r];
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> annihilator_pieces(const DegreewiseModule& x, int max_degree, int lo, int hi) {
  std::vector<Matrix> out;
  PolyAction act(x);
  for (int e = 0; e <= max_degree; ++e) {
    const auto monos = monomials_of_degree(x.nvars(), e);
    std::vector<Vector> condition_rows;
    for (int j = lo; j <= hi; ++j) {
      if (!x.known(j) || !x.known(j + e)) continue;
      if (x.dim(j) == 0 || x.dim(j + e) == 0) continue;
      std::vector<Matrix> maps;
      for (const auto& mu : monos) maps.push_back(act.monomial(mu, j));
      for (std::size_t r = 0; r < maps.front().rows(); ++r) {
        for (std::size_t c = 0; c < maps.front().cols(); ++c) {
          Vector row(monos.size());
          for (std::size_t k = 0; k < monos.size(); ++k) row[k] = maps[k](r, c);
          condition_rows.push_back(std::move(row));
        }
      }
    }
    out.push_back(kernel_basis(Matrix::from_rows(x.field(), monos.size(), condition_rows)));
  }
  return out;
}

std::vector<Matrix> annihilator_pieces(const PresentedModule& m, int max_degree, int lo, int hi) {
  return annihilator_pieces(realize(m, lo, hi + max_degree), max_degree, lo, hi);
}

std::vector<Polynomial> piece_polynomials(const RingSpec& ring, int degree, const Matrix& columns) {
  const auto monos = monomials_of_degree(ring.nvars(), degree);
  std::vector<Polynomial> out;
  for (std::size_t c = 0; c < columns.cols(); ++c) {
    Polynomial p(ring);
    for (std::size_t k = 0; k < monos.size(); ++k) p.add_term(monos[k], columns(k, c));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace gradus
