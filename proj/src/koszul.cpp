#include "gradus/koszul.hpp"

#include <bit>
#include <string>

#include "gradus/errors.hpp"
#include "gradus/parallel.hpp"

namespace gradus {

namespace {

void combinations(int r, int size, int start, unsigned mask, std::vector<unsigned>& out) {
  if (size == 0) {
    out.push_back(mask);
    return;
  }
  for (int t = start; t <= r - size; ++t) combinations(r, size - 1, t + 1, mask | (1u << t), out);
}

std::vector<int> elements(unsigned mask) {
  std::vector<int> out;
  for (int t = 0; mask; ++t, mask >>= 1)
    if (mask & 1u) out.push_back(t);
  return out;
}

}  // namespace

KoszulComplex::KoszulComplex(std::shared_ptr<const DegreewiseModule> base, std::vector<Polynomial> sequence,
                             int level, int lo, int hi)
    : base_(std::move(base)), sequence_(std::move(sequence)), level_(level), lo_(lo), hi_(hi) {
  if (level_ < 1) throw InputError("Koszul level must be at least 1");
  if (sequence_.size() > 16) throw InputError("Koszul sequence too long");
  for (const auto& f : sequence_) {
    if (f.is_zero()) throw InputError("Koszul sequence contains zero");
    if (!f.is_homogeneous()) throw InputError("Koszul sequence element is not homogeneous");
  }
  const int r = length();
  slots_.resize(r + 1);
  for (int i = 0; i <= r; ++i) combinations(r, i, 0, 0u, slots_[i]);

  const std::size_t width = hi_ >= lo_ ? static_cast<std::size_t>(hi_ - lo_ + 1) : 0;
  offsets_.assign(r + 1, std::vector<std::vector<std::size_t>>(width));
  for (int i = 0; i <= r; ++i) {
    for (std::size_t w = 0; w < width; ++w) {
      const int j = lo_ + static_cast<int>(w);
      auto& off = offsets_[i][w];
      off.push_back(0);
      for (unsigned mask : slots_[i]) {
        const int b = j - level_ * slot_degree(mask);
        if (!base_->known(b))
          throw WindowOverflow("Koszul spot " + std::to_string(i) + " in degree " + std::to_string(j) +
                               " needs base degree " + std::to_string(b) + " outside [" +
                               std::to_string(base_->lo()) + ", " + std::to_string(base_->hi()) + "]");
        off.push_back(off.back() + base_->dim(b));
      }
    }
  }

  std::vector<Polynomial> powers;
  for (const auto& f : sequence_) powers.push_back(f.pow(level_));
  std::vector<int> index_of(std::size_t{1} << r, -1);
  for (int i = 0; i <= r; ++i)
    for (std::size_t k = 0; k < slots_[i].size(); ++k) index_of[slots_[i][k]] = static_cast<int>(k);

  differentials_.assign(r + 1, std::vector<Matrix>(width));
  parallel_for(width, [&](std::size_t w) {
    const int j = lo_ + static_cast<int>(w);
    PolyAction act(*base_);
    const PrimeField& f = base_->field();
    for (int i = 1; i <= r; ++i) {
      Matrix d(f, spot_dim(i - 1, j), spot_dim(i, j));
      for (std::size_t s = 0; s < slots_[i].size(); ++s) {
        const unsigned mask = slots_[i][s];
        const int b = j - level_ * slot_degree(mask);
        const auto elems = elements(mask);
        for (std::size_t k = 0; k < elems.size(); ++k) {
          const unsigned face = mask & ~(1u << elems[k]);
          Matrix block = act.apply(powers[elems[k]], b);
          if (k % 2 == 1) block = block.scaled(f.neg(1));
          d.add_block(offsets_[i - 1][w][index_of[face]], offsets_[i][w][s], block);
        }
      }
      differentials_[i][w] = std::move(d);
    }
  });
}

int KoszulComplex::total_degree() const {
  int e = 0;
  for (const auto& f : sequence_) e += f.degree();
  return e;
}

int KoszulComplex::slot_degree(unsigned mask) const {
  int e = 0;
  for (int t : elements(mask)) e += sequence_[t].degree();
  return e;
}

std::size_t KoszulComplex::spot_dim(int i, int j) const {
  if (j < lo_ || j > hi_) throw WindowOverflow("Koszul spot queried outside its degree window");
  return offsets_.at(i)[j - lo_].back();
}

std::size_t KoszulComplex::slot_offset(int i, int j, std::size_t slot_index) const {
  if (j < lo_ || j > hi_) throw WindowOverflow("Koszul spot queried outside its degree window");
  return offsets_.at(i)[j - lo_].at(slot_index);
}

const Matrix& KoszulComplex::differential(int i, int j) const {
  if (i < 1 || i > length()) throw InputError("differential index out of range");
  if (j < lo_ || j > hi_) throw WindowOverflow("differential queried outside its degree window");
  return differentials_[i][j - lo_];
}

Matrix KoszulComplex::spot_action(int i, int var, int j) const {
  Matrix out(base_->field(), spot_dim(i, j + 1), spot_dim(i, j));
  for (std::size_t s = 0; s < slots_[i].size(); ++s) {
    const int b = j - level_ * slot_degree(slots_[i][s]);
    out.set_block(slot_offset(i, j + 1, s), slot_offset(i, j, s), base_->action(var, b));
  }
  return out;
}

KoszulHomology homology(const KoszulComplex& k, int i) {
  if (i < 0 || i > k.length()) throw InputError("homology index out of range");
  const PrimeField f = k.base().field();
  const int lo = k.lo();
  const int hi = k.hi();
  const std::size_t width = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  KoszulHomology out;
  out.index = i;
  out.lo = lo;
  out.pieces.resize(width);
  parallel_for(width, [&](std::size_t w) {
    const int j = lo + static_cast<int>(w);
    const std::size_t n = k.spot_dim(i, j);
    Subspace cycles = i == 0 ? Subspace::whole(f, n) : Subspace::span_of_columns(kernel_basis(k.differential(i, j)));
    Matrix boundaries = i == k.length() ? Matrix(f, n, 0) : k.differential(i + 1, j);
    out.pieces[w] = Subquotient(std::move(cycles), boundaries);
  });
  std::vector<std::size_t> dims(width);
  for (std::size_t w = 0; w < width; ++w) dims[w] = out.pieces[w].dim();
  const int nv = k.base().nvars();
  std::vector<std::vector<Matrix>> actions(nv, std::vector<Matrix>(width > 0 ? width - 1 : 0));
  parallel_for(width > 0 ? width - 1 : 0, [&](std::size_t w) {
    const int j = lo + static_cast<int>(w);
    for (int t = 0; t < nv; ++t) actions[t][w] = induced_map(k.spot_action(i, t, j), out.pieces[w], out.pieces[w + 1]);
  });
  const DegreewiseModule& b = k.base();
  const bool zero_below = b.zero_below() && lo <= b.lo();
  const bool zero_above = b.zero_above() && hi >= b.hi() + k.level() * k.total_degree();
  out.module = DegreewiseModule(f, nv, lo, hi, std::move(dims), std::move(actions), zero_below, zero_above);
  return out;
}

KoszulHomology homology(const PresentedModule& m, const std::vector<Polynomial>& f, int level, int i, int lo,
                        int hi) {
  auto base = std::make_shared<const DegreewiseModule>(realize(m, std::min(lo, m.min_twist()), hi));
  return homology(KoszulComplex(base, f, level, lo, hi), i);
}

const Matrix& ChainMap::at(int i, int j) const {
  if (j < lo || j > hi) throw WindowOverflow("chain map queried outside its degree window");
  return spots.at(i).at(j - lo);
}

namespace {

ChainMap slotwise(const KoszulComplex& source, const KoszulComplex& target, int shift,
                  const std::function<Matrix(PolyAction&, unsigned mask, int base_degree)>& block) {
  if (source.sequence() != target.sequence()) throw InputError("chain map between complexes on different sequences");
  ChainMap out;
  out.shift = shift;
  out.lo = std::max(source.lo(), target.lo() - shift);
  out.hi = std::min(source.hi(), target.hi() - shift);
  const int r = source.length();
  const std::size_t width = out.hi >= out.lo ? static_cast<std::size_t>(out.hi - out.lo + 1) : 0;
  out.spots.assign(r + 1, std::vector<Matrix>(width));
  parallel_for(width, [&](std::size_t w) {
    const int j = out.lo + static_cast<int>(w);
    PolyAction act(source.base());
    for (int i = 0; i <= r; ++i) {
      Matrix m(source.base().field(), target.spot_dim(i, j + shift), source.spot_dim(i, j));
      const auto& slots = source.slots(i);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const int b = j - source.level() * source.slot_degree(slots[s]);
        m.set_block(target.slot_offset(i, j + shift, s), source.slot_offset(i, j, s), block(act, slots[s], b));
      }
      out.spots[i][w] = std::move(m);
    }
  });
  return out;
}

}  // namespace

ChainMap transition(const KoszulComplex& source, const KoszulComplex& target) {
  const int delta = std::abs(source.level() - target.level());
  const bool homological = source.level() >= target.level();
  const int r = source.length();
  const unsigned all = r == 0 ? 0u : ((1u << r) - 1u);
  std::vector<Polynomial> powers;
  for (const auto& f : source.sequence()) powers.push_back(f.pow(delta));
  const int shift = homological ? 0 : delta * source.total_degree();
  return slotwise(source, target, shift, [&](PolyAction& act, unsigned mask, int b) {
    const unsigned chosen = homological ? mask : (all & ~mask);
    Polynomial multiplier(source.base().field(), source.base().nvars());
    multiplier.add_term(Exponents(source.base().nvars(), 0), 1);
    for (int t = 0; t < r; ++t)
      if (chosen & (1u << t)) multiplier = multiplier * powers[t];
    return act.apply(multiplier, b);
  });
}

ChainMap base_change(const KoszulComplex& source, const KoszulComplex& target, const GradedMap& base_map) {
  if (source.level() != target.level()) throw InputError("base_change needs complexes at the same level");
  return slotwise(source, target, base_map.shift,
                  [&](PolyAction&, unsigned, int b) { return base_map.at(b); });
}

bool commutes(const ChainMap& map, const KoszulComplex& source, const KoszulComplex& target) {
  for (int i = 1; i <= source.length(); ++i) {
    for (int j = map.lo; j <= map.hi; ++j) {
      if (!(target.differential(i, j + map.shift) * map.at(i, j) == map.at(i - 1, j) * source.differential(i, j)))
        return false;
    }
  }
  return true;
}

GradedMap induced_on_homology(const ChainMap& map, const KoszulHomology& source, const KoszulHomology& target) {
  if (source.index != target.index) throw InputError("induced map between homologies of different index");
  GradedMap out;
  out.shift = map.shift;
  out.lo = map.lo;
  out.hi = map.hi;
  const std::size_t width = out.hi >= out.lo ? static_cast<std::size_t>(out.hi - out.lo + 1) : 0;
  out.maps.resize(width);
  parallel_for(width, [&](std::size_t w) {
    const int j = out.lo + static_cast<int>(w);
    out.maps[w] = induced_map(map.at(source.index, j), source.piece(j), target.piece(j + map.shift));
  });
  return out;
}

std::vector<Polynomial> variables_of(const RingSpec& ring) {
  std::vector<Polynomial> out;
  for (int t = 0; t < ring.nvars(); ++t) out.push_back(Polynomial::variable(ring, t));
  return out;
}

DepthResult depth_via_koszul(const PresentedModule& m, int hi) {
  const int lo = m.min_twist();
  bool zero = true;
  for (std::size_t d : hilbert_function(m, lo, m.max_twist()))
    if (d != 0) zero = false;
  if (zero) throw DomainError("depth of the zero module");
  if (hi < m.max_twist()) throw DomainError("depth window must reach the top generator degree");
  auto base = std::make_shared<const DegreewiseModule>(realize(m, lo, hi));
  const KoszulComplex k(base, variables_of(m.ring()), 1, lo, hi);
  const int n = m.ring().nvars();
  DepthResult out;
  int top = -1;
  for (int i = n; i >= 0; --i) {
    const KoszulHomology h = homology(k, i);
    if (i >= 1 && h.module.dim(hi) != 0) out.window_heuristic = true;
    if (top < 0 && !h.module.is_zero_on_window()) top = i;
  }
  // H_0 = M/mM is nonzero for M != 0, so top >= 0.
  out.depth = n - top;
  return out;
}

}  // namespace gradus
