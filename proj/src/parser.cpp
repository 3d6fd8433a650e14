#include <cctype>
#include <limits>
#include <optional>

#include "poz/errors.hpp"
#include "poz/io.hpp"

namespace poz {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) {
      if (starts_operand()) fail("implicit multiplication is not allowed");
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return p;
  }

private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          fail("division is only allowed by an integer literal");
        const auto [line, column] = position();
        Integer d = integer();
        if (d == 0) throw ParseError("zero denominator", line, column);
        acc = acc.scaled(Rational(Integer(1), d));
      } else {
        skip_space();
        if (starts_operand()) fail("implicit multiplication is not allowed");
        return acc;
      }
    }
  }

  Polynomial unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    const auto [line, column] = position();
    Integer e = integer();
    if (e > std::numeric_limits<unsigned>::max() / 2) throw ParseError("exponent too large", line, column);
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(Rational(integer()));
    if (accept('(')) {
      Polynomial inner = expr();
      skip_space();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return Polynomial::variable(variable());
    fail(std::string("unexpected character '") + c + "'");
  }

  Variable variable() {
    std::string ident;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ident += next();
    skip_space();
    expect('[');
    skip_space();
    const auto first = small_integer();
    skip_space();
    std::optional<std::uint32_t> second;
    if (accept(',')) {
      skip_space();
      second = small_integer();
      skip_space();
    }
    expect(']');
    if (ident == "z") {
      if (first == 0) fail(second ? "particle weight must be >= 1" : "particle index must be >= 1");
      if (!second) return Variable::particle(1, first);
      if (*second == 0) fail("particle index must be >= 1");
      return Variable::particle(first, *second);
    }
    if (second) fail("'" + ident + "[...]' takes a single index");
    if (ident == "xi") return Variable::offset(first);
    if (ident == "t") return Variable::scratch(first);
    fail("unknown variable '" + ident + "'");
  }

  std::uint32_t small_integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    const auto [line, column] = position();
    Integer v = integer();
    if (v > Variable::kMaxIndex) throw ParseError("integer out of range", line, column);
    return static_cast<std::uint32_t>(v.get_ui());
  }

  Integer integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += next();
    return Integer(digits);
  }

  bool starts_operand() const {
    if (at_end()) return false;
    const char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) next();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char next() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      line_start_ = pos_;
    }
    return c;
  }
  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    next();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::pair<std::size_t, std::size_t> position() const { return {line_, pos_ - line_start_ + 1}; }
  [[noreturn]] void fail(const std::string& msg) const {
    const auto [line, column] = position();
    throw ParseError(msg, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

} // namespace

Polynomial parse(std::string_view text) { return Parser(text).parse_all(); }

} // namespace poz
