#include "polyinv/text.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "polyinv/errors.hpp"

namespace polyinv {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tok_line = line;
    const int tok_col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), tok_line, tok_col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), tok_line, tok_col});
      advance(j - i);
    } else if (src.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 MINUS SIGN
      out.push_back({Tok::Symbol, "-", tok_line, tok_col});
      i += 3;
      ++col;
    } else if (std::string_view("+-*/^()[],").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), tok_line, tok_col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", tok_line, tok_col,
                       "");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Number:
      return "number " + t.text;
    case Tok::Ident:
      return "identifier '" + t.text + "'";
    case Tok::Symbol:
      return "'" + t.text + "'";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::span<const Token> tokens, const Domain* domain,
         std::span<const std::string> names)
      : tokens_(tokens), domain_(domain), names_(names) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at_symbol(std::string_view s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }
  bool at_end() const { return peek().kind == Tok::End; }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& message, const std::string& expected) const {
    throw ParseError(message + ", found " + describe(peek()), peek().line, peek().column,
                     expected);
  }

  void expect_symbol(std::string_view s) {
    if (!at_symbol(s)) fail("syntax error", "'" + std::string(s) + "'");
    take();
  }

  std::string expect_ident() {
    if (peek().kind != Tok::Ident) fail("syntax error", "identifier");
    return take().text;
  }

  Domain domain() {
    if (peek().kind != Tok::Ident) fail("syntax error", "QQ, ZZ or GF(p)");
    const Token& t = peek();
    if (t.text == "QQ") {
      take();
      return Domain::rationals();
    }
    if (t.text == "ZZ") {
      take();
      return Domain::integers();
    }
    if (t.text == "GF") {
      take();
      expect_symbol("(");
      if (peek().kind != Tok::Number) fail("syntax error", "prime modulus");
      const Token& num = peek();
      mpz_class p(num.text);
      if (!is_prime(p)) {
        throw ParseError("GF modulus " + num.text + " is not prime", num.line, num.column,
                         "prime modulus");
      }
      take();
      expect_symbol(")");
      return Domain::prime_field(p);
    }
    fail("unknown coefficient domain", "QQ, ZZ or GF(p)");
  }

  // poly ::= term (('+'|'-') term)*, with an optional leading sign handled
  // by factor.
  Polynomial poly() {
    Polynomial acc = term();
    while (at_symbol("+") || at_symbol("-")) {
      const bool minus = take().text == "-";
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

 private:
  bool starts_factor() const {
    return peek().kind == Tok::Ident || peek().kind == Tok::Number || at_symbol("(");
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (at_symbol("*")) {
        take();
        acc *= factor();
      } else if (at_symbol("/")) {
        const Token& slash = take();
        Polynomial divisor = factor();
        if (!divisor.is_constant() || divisor.is_zero() ||
            !domain_->is_unit(divisor.constant_term())) {
          throw ParseError("division by a non-unit", slash.line, slash.column,
                           "a nonzero constant divisor that is a unit in " + domain_->name());
        }
        acc = acc.scaled(domain_->inv(divisor.constant_term()));
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    if (at_symbol("-")) {
      take();
      return -factor();
    }
    if (at_symbol("+")) {
      take();
      return factor();
    }
    Polynomial base = atom();
    if (at_symbol("^")) {
      take();
      if (peek().kind != Tok::Number) fail("syntax error", "non-negative integer exponent");
      const Token& e = take();
      if (e.text.size() > 9) {
        throw ParseError("exponent too large", e.line, e.column, "exponent below 10^9");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Polynomial atom() {
    const std::size_t n = names_.size();
    if (peek().kind == Tok::Number) {
      const Token& t = take();
      return Polynomial::constant(*domain_, n, domain_->make(mpq_class(mpz_class(t.text))));
    }
    if (peek().kind == Tok::Ident) {
      const Token& t = peek();
      auto it = std::find(names_.begin(), names_.end(), t.text);
      if (it == names_.end()) {
        std::string known;
        for (const auto& name : names_) known += (known.empty() ? "" : ", ") + name;
        throw ParseError("unknown variable '" + t.text + "'", t.line, t.column,
                         "one of " + known);
      }
      take();
      return Polynomial::variable(*domain_, n, static_cast<std::size_t>(it - names_.begin()));
    }
    if (at_symbol("(")) {
      take();
      Polynomial inner = poly();
      expect_symbol(")");
      return inner;
    }
    fail("syntax error", "number, variable or '('");
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  const Domain* domain_;
  std::span<const std::string> names_;
};

struct MapLiteral {
  std::vector<Polynomial> polys;
  std::vector<std::string> names;
};

MapLiteral parse_literal(std::string_view text) {
  const auto tokens = lex(text);

  std::optional<std::size_t> over;
  int depth = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t.kind == Tok::Symbol && (t.text == "[" || t.text == "(")) ++depth;
    if (t.kind == Tok::Symbol && (t.text == "]" || t.text == ")")) --depth;
    if (t.kind == Tok::Ident && t.text == "over" && depth == 0) {
      over = i;
      break;
    }
  }
  if (!over) {
    const auto& end = tokens.back();
    throw ParseError("missing coefficient domain", end.line, end.column,
                     "'over' followed by QQ[...], ZZ[...] or GF(p)[...]");
  }

  // Header: over D [names]
  std::span<const Token> header(tokens.begin() + static_cast<long>(*over) + 1, tokens.end());
  Parser hp(header, nullptr, {});
  Domain domain = hp.domain();
  hp.expect_symbol("[");
  std::vector<std::string> names{hp.expect_ident()};
  while (hp.at_symbol(",")) {
    hp.take();
    const Token& t = hp.peek();
    std::string name = hp.expect_ident();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw ParseError("duplicate variable '" + name + "'", t.line, t.column, "a fresh name");
    }
    names.push_back(std::move(name));
  }
  hp.expect_symbol("]");
  if (!hp.at_end()) hp.fail("trailing input", "end of input");

  // Body: [p_1, ..., p_k]
  std::vector<Token> body(tokens.begin(), tokens.begin() + static_cast<long>(*over));
  const Token& over_tok = tokens[*over];
  body.push_back({Tok::End, "", over_tok.line, over_tok.column});
  Parser bp(body, &domain, names);
  bp.expect_symbol("[");
  std::vector<Polynomial> polys{bp.poly()};
  while (bp.at_symbol(",")) {
    bp.take();
    polys.push_back(bp.poly());
  }
  bp.expect_symbol("]");
  if (!bp.at_end()) bp.fail("syntax error", "'over'");
  return {std::move(polys), std::move(names)};
}

}  // namespace

Domain parse_domain(std::string_view text) {
  const auto tokens = lex(text);
  Parser p(tokens, nullptr, {});
  Domain d = p.domain();
  if (!p.at_end()) p.fail("trailing input", "end of input");
  return d;
}

PolyMap parse_map(std::string_view text) {
  auto lit = parse_literal(text);
  if (lit.polys.size() != lit.names.size()) {
    throw ParseError("map has " + std::to_string(lit.polys.size()) + " components but " +
                         std::to_string(lit.names.size()) + " variables",
                     1, 1, std::to_string(lit.names.size()) + " components");
  }
  return PolyMap(std::move(lit.polys), std::move(lit.names));
}

Curve parse_curve(std::string_view text) {
  auto lit = parse_literal(text);
  if (lit.names.size() != 1) {
    throw ParseError("a curve is parametrized by exactly one variable", 1, 1,
                     "one variable, e.g. QQ[t]");
  }
  return Curve(std::move(lit.polys), lit.names.front());
}

Curve parse_curve(std::string_view text, const Domain& domain) {
  const auto tokens = lex(text);
  for (const auto& t : tokens) {
    if (t.kind == Tok::Ident && t.text == "over") {
      Curve g = parse_curve(text);
      if (!(g.domain() == domain)) {
        throw ParseError("curve is over " + g.domain().name() + " but the map is over " +
                             domain.name(),
                         t.line, t.column, domain.name());
      }
      return g;
    }
  }
  // Bare list: the parameter is the one identifier that occurs, "t" if none.
  std::vector<std::string> names;
  for (const auto& t : tokens) {
    if (t.kind != Tok::Ident || std::find(names.begin(), names.end(), t.text) != names.end()) {
      continue;
    }
    if (!names.empty()) {
      throw ParseError("a curve is parametrized by exactly one variable", t.line, t.column,
                       "'" + names.front() + "'");
    }
    names.push_back(t.text);
  }
  if (names.empty()) names.push_back("t");
  Parser p(tokens, &domain, names);
  p.expect_symbol("[");
  std::vector<Polynomial> polys{p.poly()};
  while (p.at_symbol(",")) {
    p.take();
    polys.push_back(p.poly());
  }
  p.expect_symbol("]");
  if (!p.at_end()) p.fail("syntax error", "end of input");
  return Curve(std::move(polys), names.front());
}

Polynomial parse_polynomial(std::string_view text, const Domain& domain,
                            std::span<const std::string> names) {
  const auto tokens = lex(text);
  Parser p(tokens, &domain, names);
  Polynomial f = p.poly();
  if (!p.at_end()) p.fail("syntax error", "'+', '-', '*' or end of input");
  return f;
}

std::vector<Coefficient> parse_point(std::string_view text, const Domain& domain) {
  const auto tokens = lex(text);
  Parser p(tokens, &domain, {});
  std::string close;
  if (p.at_symbol("(")) close = ")";
  if (p.at_symbol("[")) close = "]";
  if (!close.empty()) p.take();
  std::vector<Coefficient> out;
  while (true) {
    bool negative = false;
    while (p.at_symbol("-") || p.at_symbol("+")) negative ^= p.take().text == "-";
    if (p.peek().kind != Tok::Number) p.fail("syntax error", "number");
    mpq_class v{mpz_class(p.take().text)};
    if (p.at_symbol("/")) {
      p.take();
      if (p.peek().kind != Tok::Number) p.fail("syntax error", "denominator");
      const Token& den_tok = p.peek();
      mpz_class den(den_tok.text);
      if (den == 0) {
        throw ParseError("zero denominator", den_tok.line, den_tok.column, "nonzero denominator");
      }
      p.take();
      v /= den;
    }
    if (negative) v = -v;
    out.push_back(domain.make(v));
    if (!p.at_symbol(",")) break;
    p.take();
  }
  if (!close.empty()) p.expect_symbol(close);
  if (!p.at_end()) p.fail("syntax error", "',' or end of input");
  return out;
}

std::string format_map(const PolyMap& f) {
  std::ostringstream os;
  os << f << " over " << f.domain().name() << "[";
  for (std::size_t i = 0; i < f.dim(); ++i) os << (i ? "," : "") << f.names()[i];
  os << "]";
  return os.str();
}

std::string format_curve(const Curve& g) {
  std::ostringstream os;
  os << g << " over " << g.domain().name() << "[" << g.param() << "]";
  return os.str();
}

std::string format_point(std::span<const Coefficient> point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ", ";
    out += point[i].to_string();
  }
  return out + ")";
}

}  // namespace polyinv
