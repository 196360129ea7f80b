#include "properties.hpp"

#include <memory>
#include <random>

#include "gradus/artinian.hpp"
#include "gradus/harness.hpp"
#include "gradus/invariants.hpp"
#include "gradus/koszul.hpp"
#include "support.hpp"

namespace gradus::testing {

void PropertyOutcome::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

namespace {

std::vector<Polynomial> random_sequence(const RingSpec& r, int length, std::mt19937_64& rng) {
  std::vector<Polynomial> f;
  for (int t = 0; t < length; ++t) f.push_back(random_form(r, 1 + static_cast<int>(rng() % 2), rng, true));
  return f;
}

Matrix random_matrix(PrimeField field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(field, rows, cols);
  const bool sparse = rng() % 2;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!sparse || rng() % 3 == 0) m(r, c) = static_cast<Scalar>(rng() % field.modulus());
  // Occasionally force a dependent row.
  if (rows >= 2 && rng() % 3 == 0)
    for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = field.mul(m(0, c), 2 % field.modulus());
  return m;
}

}  // namespace

PropertyOutcome koszul_complex_properties(int fixtures, std::uint64_t seed) {
  PropertyOutcome out;
  std::mt19937_64 rng(seed);
  for (int c = 0; c < fixtures; ++c) {
    const RingSpec r = ring(2 + static_cast<int>(rng() % 2));
    const PresentedModule m = random_module(r, rng);
    const auto f = random_sequence(r, 1 + static_cast<int>(rng() % 3), rng);
    const int n = 1 + static_cast<int>(rng() % 2);
    const int lo = m.min_twist();
    const int hi = lo + (r.nvars() == 2 ? 7 : 5);
    int etot = 0;
    for (const auto& g : f) etot += g.degree();
    auto base = std::make_shared<const DegreewiseModule>(realize(m, lo, hi + etot));
    const KoszulComplex a(base, f, n, lo, hi);
    const KoszulComplex b(base, f, n + 1, lo, hi + etot);
    const std::string tag = "fixture " + std::to_string(c);
    ++out.cases;
    for (const KoszulComplex* k : {&a, &b})
      for (int i = 2; i <= k->length(); ++i)
        for (int j = k->lo(); j <= k->hi(); ++j)
          if (!(k->differential(i - 1, j) * k->differential(i, j)).is_zero()) out.fail(tag + ": d∘d != 0");
    if (!commutes(transition(b, a), b, a)) out.fail(tag + ": homological transition is not a chain map");
    if (!commutes(transition(a, b), a, b)) out.fail(tag + ": cohomological transition is not a chain map");
  }
  return out;
}

PropertyOutcome matrix_properties(int count, std::uint64_t seed) {
  PropertyOutcome out;
  std::mt19937_64 rng(seed);
  const Scalar primes[] = {2, 3, 5, 7, 101, 32003};
  for (int c = 0; c < count; ++c) {
    const PrimeField field(primes[rng() % 6]);
    const std::size_t rows = rng() % 9;
    const std::size_t cols = rng() % 9;
    const Matrix m = random_matrix(field, rows, cols, rng);
    const std::string tag = "matrix " + std::to_string(c);
    ++out.cases;
    const RrefResult rr = rref(m);
    const Matrix k = kernel_basis(m);
    if (rr.rank + k.cols() != cols) out.fail(tag + ": rank + nullity != cols");
    if (rr.rank != rr.pivots.size()) out.fail(tag + ": rank != pivot count");
    if (k.cols() && !(m * k).is_zero()) out.fail(tag + ": kernel vector not killed");
    if (rank(k) != k.cols()) out.fail(tag + ": kernel basis dependent");
    if (!(rref(rr.reduced).reduced == rr.reduced)) out.fail(tag + ": rref not idempotent");
    Vector x(cols);
    for (auto& v : x) v = static_cast<Scalar>(rng() % field.modulus());
    const Vector b = m.apply(x);
    const auto y = solve(m, b);
    if (!y || m.apply(*y) != b) out.fail(tag + ": solve(m, m x) unsound");
    Vector b2(rows);
    for (auto& v : b2) v = static_cast<Scalar>(rng() % field.modulus());
    const auto y2 = solve(m, b2);
    Matrix augmented = m.hstack(Matrix::from_columns(field, rows, {b2}));
    const bool in_image = rank(augmented) == rr.rank;
    if (y2.has_value() != in_image) out.fail(tag + ": solve disagrees with the rank test");
    if (y2 && m.apply(*y2) != b2) out.fail(tag + ": solution does not satisfy the system");
  }
  return out;
}

PropertyOutcome artinian_properties() {
  PropertyOutcome out;
  std::vector<ArtinianDual> xs = {inverse_polynomial_module(1), inverse_polynomial_module(2),
                                  inverse_polynomial_module(3)};
  for (const char* name : {"k.mod", "xy.mod", "noncm.mod", "conic.mod", "principal.mod", "twisted_sum.mod"})
    xs.push_back(graded_dual(fixture(name)));
  xs.push_back(graded_dual(mod("vars x y; gens 0; rels x;")));
  xs.push_back(graded_dual(mod("vars x y; gens 0; rels x^2, y^2;")));
  xs.push_back(graded_dual(mod("vars x y; gens 0; rels 1;")));
  for (const auto& x : xs) {
    const PresentedModule& n = x.dual_of();
    const std::string tag = describe(x);
    ++out.cases;
    const int top = x.top_degree();
    const int lo = top - 6;
    const DegreewiseModule back = x.realize(lo, top).dual();
    const DegreewiseModule direct = realize(n, -top, -lo);
    for (int j = -top; j <= -lo; ++j) {
      if (back.dim(j) != direct.dim(j)) {
        out.fail(tag + ": dual of dual changes dimensions");
        break;
      }
      if (j < -lo)
        for (int t = 0; t < n.ring().nvars(); ++t)
          if (!(back.action(t, j) == direct.action(t, j))) out.fail(tag + ": dual of dual changes actions");
    }
    if (is_zero_module(n)) {
      if (width(x).value != kInfinite || ndim(x).value != -1) out.fail(tag + ": zero module sentinels");
      continue;
    }
    const int w = width(x).value;
    const int d = ndim(x).value;
    if (w > d) out.fail(tag + ": width " + std::to_string(w) + " > N.dim " + std::to_string(d));
  }
  return out;
}

PropertyOutcome koszul_extreme_properties(int count, std::uint64_t seed) {
  PropertyOutcome out;
  std::mt19937_64 rng(seed);
  for (int c = 0; c < count; ++c) {
    const RingSpec r = ring(2 + static_cast<int>(rng() % 2));
    const PresentedModule m = random_module(r, rng);
    const auto f = random_sequence(r, 1 + static_cast<int>(rng() % 2), rng);
    const int n = 1 + static_cast<int>(rng() % 2);
    const int lo = m.min_twist();
    const int hi = lo + 6;
    std::vector<Polynomial> fn;
    int etot = 0;
    int emax = 0;
    for (const auto& g : f) {
      fn.push_back(g.pow(n));
      etot += g.degree();
      emax = std::max(emax, g.degree());
    }
    const std::string tag = "module " + std::to_string(c);
    ++out.cases;
    const auto h0 = homology(m, f, n, 0, lo, hi);
    const auto q = hilbert_function(quotient_by_elements(m, fn), lo, hi);
    for (int j = lo; j <= hi; ++j)
      if (h0.module.dim(j) != q[j - lo]) out.fail(tag + ": H_0 differs from M/(f^n)M in degree " + std::to_string(j));
    const int r_top = static_cast<int>(f.size());
    const auto htop = homology(m, f, n, r_top, lo, hi);
    const DegreewiseModule base = realize(m, lo, hi + n * emax);
    for (int j = lo; j <= hi; ++j) {
      const int b = j - n * etot;
      const std::size_t expect = b < lo ? 0 : colon_dim(base, fn, b);
      if (htop.module.dim(j) != expect)
        out.fail(tag + ": H_top differs from 0:_M(f^n) in degree " + std::to_string(j));
    }
  }
  return out;
}

}  // namespace gradus::testing
