#include "sopkit/parser.hpp"

#include <cctype>

namespace sopkit {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

BigInt parse_int(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  BigInt v = 0;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
    v = v * 10 + (c.text[c.pos] - '0');
    ++c.pos;
  }
  if (c.pos == start) throw ParseError("expected an integer", c.pos);
  return v;
}

std::uint32_t parse_exponent(Cursor& c) {
  std::size_t at = c.pos;
  BigInt v = parse_int(c);
  if (v >= kExponentCap) throw ParseError("exponent overflow", at);
  return static_cast<std::uint32_t>(v);
}

std::string parse_ident(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  auto head = [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; };
  auto body = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
  if (c.pos < c.text.size() && head(c.text[c.pos])) {
    ++c.pos;
    while (c.pos < c.text.size() && body(c.text[c.pos])) ++c.pos;
  }
  if (c.pos == start) throw ParseError("expected a variable or integer", c.pos);
  return std::string(c.text.substr(start, c.pos - start));
}

Polynomial parse_factor(Cursor& c, const RingPtr& ring) {
  char ch = c.peek();
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    BigInt num = parse_int(c);
    if (c.eat('/')) {
      std::size_t at = c.pos;
      BigInt den = parse_int(c);
      if (den == 0) throw ParseError("zero denominator", at);
      Coeff q = ring->field().from_rational(Rational(num, den));
      return Polynomial::constant(ring, std::move(q));
    }
    return Polynomial::constant(ring, ring->field().from_bigint(num));
  }
  std::size_t at = c.pos;
  std::string name = parse_ident(c);
  int idx = ring->var_index(name);
  if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
  std::uint32_t e = 1;
  if (c.eat('^')) e = parse_exponent(c);
  return Polynomial::variable(ring, static_cast<std::size_t>(idx), e);
}

Polynomial parse_term(Cursor& c, const RingPtr& ring) {
  Polynomial p = parse_factor(c, ring);
  while (c.peek() == '*') {
    c.eat('*');
    p = p * parse_factor(c, ring);
  }
  return p;
}

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  Cursor c{text};
  bool negate = false;
  if (c.peek() == '-') {
    c.eat('-');
    negate = true;
  } else if (c.peek() == '+') {
    c.eat('+');
  }
  Polynomial p = parse_term(c, ring);
  if (negate) p = -p;
  while (!c.done()) {
    char op = c.peek();
    if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", c.pos);
    c.eat(op);
    Polynomial t = parse_term(c, ring);
    p = (op == '+') ? p + t : p - t;
  }
  return p;
}

}  // namespace sopkit
