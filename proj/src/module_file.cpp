#include "gradus/module_file.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace gradus {

ParseError::ParseError(const std::string& what, int line, int column)
    : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

namespace {

struct Token {
  enum Kind { kIdent, kInt, kSymbol, kEnd } kind = kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  bool accept(const std::string& symbol) {
    if (current_.kind == Token::kSymbol && current_.text == symbol) {
      advance();
      return true;
    }
    return false;
  }
  void expect(const std::string& symbol) {
    if (!accept(symbol)) fail("expected '" + symbol + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    const std::string got = current_.kind == Token::kEnd ? "end of input" : "'" + current_.text + "'";
    throw ParseError(what + ", got " + got, current_.line, current_.column);
  }

 private:
  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }
  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void advance() {
    skip_space();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      current_.kind = Token::kIdent;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        current_.text.push_back(src_[pos_]);
        bump();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Token::kInt;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        current_.text.push_back(src_[pos_]);
        bump();
      }
    } else {
      current_.kind = Token::kSymbol;
      current_.text = std::string(1, c);
      bump();
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

long long to_integer(const Token& t) {
  try {
    return std::stoll(t.text);
  } catch (const std::exception&) {
    throw ParseError("integer out of range", t.line, t.column);
  }
}

class PolyParser {
 public:
  PolyParser(const RingSpec& ring, Lexer& lex) : ring_(ring), lex_(lex) {}

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (lex_.accept("-")) negate = true;
    else lex_.accept("+");
    Polynomial t = term();
    acc = negate ? acc - t : acc + t;
    while (true) {
      if (lex_.accept("+")) acc = acc + term();
      else if (lex_.accept("-")) acc = acc - term();
      else break;
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.accept("*")) acc = acc * factor();
    const Token& next = lex_.peek();
    if (next.kind == Token::kIdent || next.kind == Token::kInt || (next.kind == Token::kSymbol && next.text == "("))
      lex_.fail("implicit multiplication is not allowed; write '*'");
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lex_.accept("^")) {
      const Token t = lex_.take();
      if (t.kind != Token::kInt) throw ParseError("exponent must be a nonnegative integer", t.line, t.column);
      base = base.pow(static_cast<int>(to_integer(t)));
    }
    return base;
  }

  Polynomial atom() {
    const Token t = lex_.peek();
    if (t.kind == Token::kInt) {
      lex_.take();
      return Polynomial::constant(ring_, ring_.field.reduce(to_integer(t) % ring_.field.modulus()));
    }
    if (t.kind == Token::kIdent) {
      lex_.take();
      for (int i = 0; i < ring_.nvars(); ++i)
        if (ring_.variables[i] == t.text) return Polynomial::variable(ring_, i);
      throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
    }
    if (lex_.accept("(")) {
      Polynomial inner = expression();
      lex_.expect(")");
      return inner;
    }
    lex_.fail("expected a number, variable or '('");
  }

  const RingSpec& ring_;
  Lexer& lex_;
};

struct RawRelation {
  std::vector<Polynomial> entries;
  int line;
  int column;
};

}  // namespace

PresentedModule parse_module_file(std::string_view text) {
  Lexer lex(text);
  std::optional<Scalar> prime;
  std::optional<std::vector<std::string>> vars;
  std::optional<std::vector<int>> gens;
  std::optional<RingSpec> ring;
  std::vector<RawRelation> rels;
  bool saw_rels = false;

  auto ensure_ring = [&](const Token& at) -> const RingSpec& {
    if (!ring) {
      if (!vars) throw ParseError("'vars' must come before relations", at.line, at.column);
      try {
        ring = RingSpec(PrimeField(prime.value_or(kDefaultPrime)), *vars);
      } catch (const InputError& e) {
        throw ParseError(e.what(), at.line, at.column);
      }
    }
    return *ring;
  };

  while (lex.peek().kind != Token::kEnd) {
    const Token kw = lex.take();
    if (kw.kind != Token::kIdent) throw ParseError("expected a statement keyword", kw.line, kw.column);
    if (kw.text == "prime") {
      if (ring) throw ParseError("'prime' must come before relations", kw.line, kw.column);
      const Token t = lex.take();
      if (t.kind != Token::kInt) throw ParseError("expected the prime", t.line, t.column);
      const long long p = to_integer(t);
      if (p < 2 || p >= (1ll << 31) || !is_prime(static_cast<std::uint64_t>(p)))
        throw ParseError("bad prime " + t.text, t.line, t.column);
      prime = static_cast<Scalar>(p);
    } else if (kw.text == "vars") {
      std::vector<std::string> names;
      while (lex.peek().kind == Token::kIdent) names.push_back(lex.take().text);
      if (names.empty()) lex.fail("expected variable names");
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t k = 0; k < i; ++k)
          if (names[i] == names[k]) throw ParseError("duplicate variable " + names[i], kw.line, kw.column);
      vars = std::move(names);
    } else if (kw.text == "gens") {
      std::vector<int> twists;
      while (true) {
        bool negative = lex.accept("-");
        const Token t = lex.peek();
        if (t.kind != Token::kInt) {
          if (negative) lex.fail("expected a twist");
          break;
        }
        lex.take();
        twists.push_back(static_cast<int>(negative ? -to_integer(t) : to_integer(t)));
      }
      if (twists.empty()) lex.fail("expected generator twists");
      gens = std::move(twists);
    } else if (kw.text == "rels") {
      saw_rels = true;
      const RingSpec& r = ensure_ring(kw);
      PolyParser parser(r, lex);
      if (!(lex.peek().kind == Token::kSymbol && lex.peek().text == ";")) {
        do {
          const Token at = lex.peek();
          RawRelation raw{{}, at.line, at.column};
          if (lex.accept("[")) {
            do raw.entries.push_back(parser.expression());
            while (lex.accept(","));
            lex.expect("]");
          } else {
            raw.entries.push_back(parser.expression());
          }
          rels.push_back(std::move(raw));
        } while (lex.accept(","));
      }
    } else {
      throw ParseError("unknown statement '" + kw.text + "'", kw.line, kw.column);
    }
    lex.expect(";");
  }
  if (!vars) throw ParseError("missing 'vars' statement", 1, 1);
  if (!gens) throw ParseError("missing 'gens' statement", 1, 1);
  (void)saw_rels;
  const RingSpec& r = ensure_ring(Token{});

  std::vector<RelationColumn> cols;
  for (auto& raw : rels) {
    if (raw.entries.size() != gens->size())
      throw ParseError("relation has " + std::to_string(raw.entries.size()) + " entries but there are " +
                           std::to_string(gens->size()) + " generators",
                       raw.line, raw.column);
    std::optional<int> degree;
    for (std::size_t i = 0; i < raw.entries.size(); ++i) {
      const Polynomial& e = raw.entries[i];
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) throw ParseError("relation entry is not homogeneous", raw.line, raw.column);
      const int d = e.degree() + (*gens)[i];
      if (degree && *degree != d)
        throw ParseError("relation entries have inconsistent degrees", raw.line, raw.column);
      degree = d;
    }
    if (!degree) continue;
    cols.push_back({*degree, std::move(raw.entries)});
  }
  return PresentedModule(r, *gens, std::move(cols));
}

std::string print_module_file(const PresentedModule& m) {
  std::ostringstream os;
  const auto& names = m.ring().variables;
  os << "prime " << m.ring().field.modulus() << ";\n";
  os << "vars";
  for (const auto& v : names) os << " " << v;
  os << ";\ngens";
  for (int a : m.twists()) os << " " << a;
  os << ";\nrels";
  for (std::size_t c = 0; c < m.relations().size(); ++c) {
    const auto& col = m.relations()[c];
    os << (c ? ",\n  " : " ");
    if (col.entries.size() == 1) {
      os << col.entries[0].to_string(names);
    } else {
      os << "[";
      for (std::size_t i = 0; i < col.entries.size(); ++i) os << (i ? ", " : "") << col.entries[i].to_string(names);
      os << "]";
    }
  }
  os << ";\n";
  return os.str();
}

Polynomial parse_polynomial(const RingSpec& ring, std::string_view text) {
  Lexer lex(text);
  PolyParser parser(ring, lex);
  Polynomial p = parser.expression();
  if (lex.peek().kind != Token::kEnd) lex.fail("unexpected trailing input");
  return p;
}

std::vector<Polynomial> parse_sequence(const RingSpec& ring, std::string_view text) {
  Lexer lex(text);
  PolyParser parser(ring, lex);
  std::vector<Polynomial> out;
  if (lex.peek().kind == Token::kEnd) return out;
  do out.push_back(parser.expression());
  while (lex.accept(","));
  if (lex.peek().kind != Token::kEnd) lex.fail("unexpected trailing input");
  return out;
}

}  // namespace gradus
