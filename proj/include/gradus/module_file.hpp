#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gradus/errors.hpp"
#include "gradus/presented_module.hpp"

namespace gradus {

/// Parse failure with a 1-based source location.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Module description grammar (line oriented, '#' starts a comment):
///
///   prime <int>;            optional, defaults to 32003
///   vars <ident>+;
///   gens <int>+;            generator twists a_i
///   rels <rel>(, <rel>)*;   may be empty
///
/// A relation is a polynomial (one generator) or a bracketed vector
/// [p_1, ..., p_s] with one entry per generator. Polynomials use + - * ^ and
/// parentheses; multiplication is always written explicitly.
PresentedModule parse_module_file(std::string_view text);
std::string print_module_file(const PresentedModule& m);

Polynomial parse_polynomial(const RingSpec& ring, std::string_view text);
/// Comma-separated polynomials, e.g. "x^2, x*y + y^2".
std::vector<Polynomial> parse_sequence(const RingSpec& ring, std::string_view text);

}  // namespace gradus
