#include "gradus/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "gradus/errors.hpp"

namespace gradus {

RingSpec::RingSpec(PrimeField f, std::vector<std::string> vars) : field(f), variables(std::move(vars)) {
  if (variables.empty()) throw InputError("ring needs at least one variable");
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

namespace {

void enumerate(int nvars, int pos, int remaining, Exponents& current, std::vector<Exponents>& out) {
  if (pos == nvars - 1) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[pos] = e;
    enumerate(nvars, pos + 1, remaining - e, current, out);
  }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponents> out;
  if (degree < 0 || nvars <= 0) return out;
  Exponents current(nvars, 0);
  enumerate(nvars, 0, degree, current, out);
  return out;
}

MonomialBasis::MonomialBasis(int nvars, int degree)
    : degree_(degree), monomials_(monomials_of_degree(nvars, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw InputError("monomial not in basis of degree " + std::to_string(degree_));
  return it->second;
}

Polynomial Polynomial::constant(const RingSpec& ring, Scalar c) {
  Polynomial p(ring);
  p.add_term(Exponents(ring.nvars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const RingSpec& ring, int index) {
  Exponents e(ring.nvars(), 0);
  e.at(index) = 1;
  return monomial(ring, std::move(e));
}

Polynomial Polynomial::monomial(const RingSpec& ring, Exponents e, Scalar c) {
  if (static_cast<int>(e.size()) != ring.nvars()) throw InputError("monomial: wrong number of exponents");
  Polynomial p(ring);
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, Scalar c) {
  if (static_cast<int>(e.size()) != nvars_) throw InputError("add_term: wrong number of exponents");
  c = c % field_.modulus();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, field_.neg(c));
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(field_, nvars_);
  Exponents e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, field_.mul(c1, c2));
    }
  }
  return out;
}

Polynomial Polynomial::scaled(Scalar s) const {
  Polynomial out(field_, nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, field_.mul(c, s));
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InputError("negative polynomial power");
  Polynomial result(field_, nvars_);
  result.add_term(Exponents(nvars_, 0), 1);
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const Scalar p = field_.modulus();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c > p / 2;
    const Scalar magnitude = negative ? p - c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (magnitude != 1 || total_degree(e) == 0) {
      os << magnitude;
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << names.at(i);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial product(const RingSpec& ring, const std::vector<Polynomial>& factors) {
  Polynomial out = Polynomial::constant(ring, 1);
  for (const auto& f : factors) out = out * f;
  return out;
}

}  // namespace gradus
