#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradus/field.hpp"

namespace gradus {

using Exponents = std::vector<int>;

/// Standard-graded polynomial ring k[x_1..x_n] over a prime field. The
/// maximal homogeneous ideal is generated by the variables.
struct RingSpec {
  PrimeField field;
  std::vector<std::string> variables;

  RingSpec() = default;
  RingSpec(PrimeField f, std::vector<std::string> vars);

  int nvars() const { return static_cast<int>(variables.size()); }
  bool operator==(const RingSpec&) const = default;
};

int total_degree(const Exponents& e);

/// Monomials of degree d in n variables, lexicographically descending
/// (x_1^d first). Empty for d < 0.
std::vector<Exponents> monomials_of_degree(int nvars, int degree);

/// Lookup table from exponent vectors to positions in monomials_of_degree.
class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree);
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponents>& monomials() const { return monomials_; }
  std::size_t index_of(const Exponents& e) const;

 private:
  int degree_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> index_;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const RingSpec& ring) : field_(ring.field), nvars_(ring.nvars()) {}
  Polynomial(PrimeField field, int nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(const RingSpec& ring, Scalar c);
  static Polynomial variable(const RingSpec& ring, int index);
  static Polynomial monomial(const RingSpec& ring, Exponents e, Scalar c = 1);

  int nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }

  bool is_zero() const { return terms_.empty(); }
  // Keyed by exponent vector; coefficients are nonzero.
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  void add_term(const Exponents& e, Scalar c);

  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous polynomial; max term degree otherwise; -1 for zero.
  int degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Scalar s) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Terms in lex-descending order, e.g. "x^2 - 3*x*y + 5".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  PrimeField field_{};
  int nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

/// Product of the given polynomials (1 for an empty list).
Polynomial product(const RingSpec& ring, const std::vector<Polynomial>& factors);

}  // namespace gradus
