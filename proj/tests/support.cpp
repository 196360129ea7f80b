#include "support.hpp"

#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace gradus::testing {

RingSpec ring(int nvars, Scalar p) {
  static const std::vector<std::string> names = {"x", "y", "z", "w"};
  std::vector<std::string> vars;
  for (int t = 0; t < nvars; ++t) vars.push_back(nvars <= 4 ? names[t] : "x" + std::to_string(t + 1));
  return RingSpec(PrimeField(p), vars);
}

Polynomial var(const RingSpec& r, int t) { return Polynomial::variable(r, t); }

Polynomial poly(const RingSpec& r, const std::string& text) { return parse_polynomial(r, text); }

std::vector<Polynomial> seq(const RingSpec& r, const std::string& text) { return parse_sequence(r, text); }

PresentedModule mod(const std::string& text) { return parse_module_file(text); }

PresentedModule fixture(const std::string& name) {
  std::ifstream in(std::string(GRADUS_FIXTURE_DIR) + "/" + name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_module_file(buffer.str());
}

namespace {

void enumerate(int nvars, int j, Exponents& e, int t, const std::function<void(const Exponents&)>& fn) {
  if (t == nvars - 1) {
    e[t] = j;
    fn(e);
    return;
  }
  for (int a = 0; a <= j; ++a) {
    e[t] = a;
    enumerate(nvars, j - a, e, t + 1, fn);
  }
}

}  // namespace

std::size_t standard_monomials(int nvars, int j, const std::vector<Exponents>& gens) {
  if (j < 0) return 0;
  std::size_t count = 0;
  Exponents e(nvars, 0);
  enumerate(nvars, j, e, 0, [&](const Exponents& m) {
    for (const auto& g : gens) {
      bool divides = true;
      for (int t = 0; t < nvars; ++t) divides = divides && g[t] <= m[t];
      if (divides) return;
    }
    ++count;
  });
  return count;
}

std::size_t binomial_dim(int nvars, int j) {
  if (j < 0) return 0;
  std::size_t c = 1;
  for (int k = 1; k < nvars; ++k) c = c * static_cast<std::size_t>(j + k) / static_cast<std::size_t>(k);
  return c;
}

std::size_t total(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

std::size_t colon_dim(const DegreewiseModule& y, const std::vector<Polynomial>& f, int j) {
  PolyAction act(y);
  Matrix stacked(y.field(), 0, y.dim(j));
  for (const auto& g : f) stacked = stacked.vstack(act.apply(g, j));
  return y.dim(j) - rank(stacked);
}

Polynomial random_form(const RingSpec& r, int degree, std::mt19937_64& rng, bool sparse) {
  Polynomial g(r);
  const Scalar p = r.field.modulus();
  for (const auto& e : monomials_of_degree(r.nvars(), degree)) {
    if (sparse && rng() % 2) continue;
    g.add_term(e, static_cast<Scalar>(rng() % p));
  }
  if (g.is_zero()) g.add_term(monomials_of_degree(r.nvars(), degree).front(), 1);
  return g;
}

PresentedModule random_module(const RingSpec& r, std::mt19937_64& rng) {
  const int gens = 1 + static_cast<int>(rng() % 2);
  std::vector<int> twists;
  for (int i = 0; i < gens; ++i) twists.push_back(static_cast<int>(rng() % 2));
  std::vector<RelationColumn> rels;
  const int nrels = static_cast<int>(rng() % 3);
  for (int c = 0; c < nrels; ++c) {
    RelationColumn col;
    col.degree = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < gens; ++i) col.entries.push_back(random_form(r, col.degree - twists[i], rng, true));
    rels.push_back(std::move(col));
  }
  return PresentedModule(r, twists, rels);
}

}  // namespace gradus::testing
