#include "gradus/invariants.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "gradus/degreewise.hpp"
#include "gradus/errors.hpp"
#include "gradus/koszul.hpp"

namespace gradus {

int default_top(const PresentedModule& m, int fit_span) {
  return m.max_presentation_degree() + m.ring().nvars() + fit_span + 2;
}

int InvariantConfig::top_for(const PresentedModule& m) const {
  const int top = hi.value_or(default_top(m, fit_span));
  return std::max(top, m.max_twist());
}

bool is_zero_module(const PresentedModule& m) {
  if (m.num_generators() == 0) return true;
  for (std::size_t d : hilbert_function(m, m.min_twist(), m.max_twist()))
    if (d != 0) return false;
  return true;
}

bool has_finite_length(const PresentedModule& m, int top) {
  if (m.num_generators() == 0) return true;
  return vanishing_certificate(m, std::max(top, m.max_twist()));
}

namespace {

std::vector<Polynomial> random_forms(const RingSpec& ring, int count, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  const Scalar p = ring.field.modulus();
  std::vector<Polynomial> out;
  for (int k = 0; k < count; ++k) {
    Polynomial form(ring);
    for (int t = 0; t < ring.nvars(); ++t) {
      Exponents e(ring.nvars(), 0);
      e[t] = 1;
      form.add_term(e, static_cast<Scalar>(engine() % p));
    }
    if (form.is_zero()) form = Polynomial::variable(ring, k % ring.nvars());
    out.push_back(std::move(form));
  }
  return out;
}

// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

Polynomial random_linear_form(const RingSpec& ring, std::uint64_t seed) { return random_forms(ring, 1, seed)[0]; }

std::optional<std::vector<Polynomial>> find_parameters(const PresentedModule& m, int r, const InvariantConfig& cfg) {
  const int top = cfg.top_for(m);
  const RingSpec& ring = m.ring();
  if (r == 0) {
    if (has_finite_length(m, top)) return std::vector<Polynomial>{};
    return std::nullopt;
  }
  if (r > ring.nvars()) return std::nullopt;
  for (const auto& subset : subsets(ring.nvars(), r)) {
    std::vector<Polynomial> forms;
    for (int t : subset) forms.push_back(Polynomial::variable(ring, t));
    if (has_finite_length(quotient_by_elements(m, forms), top)) return forms;
  }
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto forms = random_forms(ring, r, cfg.seed + static_cast<std::uint64_t>(trial));
    if (has_finite_length(quotient_by_elements(m, forms), top)) return forms;
  }
  return std::nullopt;
}

KrullResult krull_dimension(const PresentedModule& m, const InvariantConfig& cfg) {
  KrullResult out;
  if (is_zero_module(m)) {
    out.dimension = -1;
    out.cross_check = -1;
    return out;
  }
  const int top = cfg.top_for(m);
  for (int r = 0; r <= m.ring().nvars(); ++r) {
    if (find_parameters(m, r, cfg)) {
      out.cross_check = r;
      break;
    }
  }

  const int span = cfg.fit_span;
  const int lo = m.min_twist();
  std::optional<int> fitted;
  if (top - span + 1 >= lo && span >= 2) {
    const auto h = hilbert_function(m, top - span + 1, top);
    std::vector<long long> diff(h.begin(), h.end());
    bool all_zero = true;
    for (long long v : diff) all_zero = all_zero && v == 0;
    if (all_zero) {
      fitted = 0;
    } else {
      // Smallest k whose (k+1)-th differences vanish, confirmed on >= 2 values.
      for (int k = 0; k + 3 <= span; ++k) {
        std::vector<long long> next(diff.size() - 1);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) next[i] = diff[i + 1] - diff[i];
        bool zero = true;
        for (long long v : next) zero = zero && v == 0;
        if (zero) {
          fitted = k + 1;
          break;
        }
        diff = std::move(next);
      }
    }
  }
  if (!fitted) {
    out.window_insufficient = true;
    out.dimension = out.cross_check;
    return out;
  }
  out.dimension = *fitted;
  if (out.cross_check != out.dimension)
    throw DiagnosticError("krull dimension: Hilbert fit gives " + std::to_string(out.dimension) +
                          " but parameter search gives " + std::to_string(out.cross_check));
  return out;
}

DepthInfo depth(const PresentedModule& m, const InvariantConfig& cfg) {
  const DepthResult r = depth_via_koszul(m, cfg.top_for(m));
  return {r.depth, r.window_heuristic};
}

bool is_cohen_macaulay(const PresentedModule& m, const InvariantConfig& cfg) {
  if (is_zero_module(m)) throw DomainError("Cohen-Macaulay test on the zero module");
  return depth(m, cfg).depth == krull_dimension(m, cfg).dimension;
}

RegularSequenceResult is_regular_sequence(const PresentedModule& m, const std::vector<Polynomial>& seq,
                                          const InvariantConfig& cfg) {
  RegularSequenceResult out;
  const int top = cfg.top_for(m);
  PresentedModule current = m;
  for (std::size_t step = 0; step < seq.size(); ++step) {
    const Polynomial& f = seq[step];
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
      throw InputError("regular sequence elements must be homogeneous of positive degree");
    const int lo = current.min_twist();
    const int e = f.degree();
    const DegreewiseModule piece = realize(current, lo, top);
    PolyAction act(piece);
    for (int j = lo; j + e <= top; ++j) {
      if (piece.dim(j) == 0) continue;
      if (rank(act.apply(f, j)) < piece.dim(j)) {
        out.regular = false;
        out.failed_step = static_cast<int>(step);
        out.failed_degree = j;
        return out;
      }
    }
    current = quotient_by_elements(current, {f});
  }
  if (!seq.empty() && is_zero_module(current)) {
    out.regular = false;
    out.failed_step = static_cast<int>(seq.size()) - 1;
    out.failed_degree = current.max_twist();
  }
  return out;
}

std::vector<Polynomial> find_sop(const PresentedModule& m, const InvariantConfig& cfg) {
  const KrullResult k = krull_dimension(m, cfg);
  if (k.dimension < 0) throw DomainError("system of parameters of the zero module");
  auto forms = find_parameters(m, k.dimension, cfg);
  if (!forms)
    throw SearchFailure("no system of parameters found in " + std::to_string(cfg.trials) +
                        " trials; try a larger prime or more trials");
  return *forms;
}

}  // namespace gradus
