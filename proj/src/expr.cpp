#include "bernalg/expr.hpp"

#include <cctype>

#include "bernalg/reduction.hpp"
#include "bernalg/weyl.hpp"

namespace bernalg {

namespace {

BElement atom_inverse(const Atom& at, const Rational& c) {
  // B^{-n}(bT) = (bT)^{-n} (e^{bT} - 1)^n
  BElement r;
  const int n = at.n();
  const Rational lead = Rational(1) / (c * at.b().pow(n));
  for (int j = 0; j <= n; ++j) {
    const Rational sign((n - j) % 2 == 0 ? 1 : -1);
    r.add_term(Atom::make(-at.m() - n, 0, Rational(1), Rational(j) * at.b() - at.a()), lead * sign * binomial(n, j));
  }
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  BElement parse() {
    BElement v = expression();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < s_.size() ? "expected '" + std::string(1, c) + "' but found '" + std::string(1, s_[pos_]) + "'"
                            : "expected '" + std::string(1, c) + "' at end of input");
    }
  }

  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer integer() {
    if (!digit_next()) fail("expected a number");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  // p or p/q, no sign.
  Rational literal() {
    const std::size_t start = pos_;
    Integer p = integer();
    if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      Integer q = integer();
      if (q == 0) fail_at("zero denominator", start);
      return Rational(p, q);
    }
    return Rational(p);
  }

  int small_int() {
    const std::size_t start = pos_;
    Integer v = integer();
    if (!v.fits_sint_p() || v > 100000) fail_at("exponent too large", start);
    return static_cast<int>(v.get_si());
  }

  // [sign] [rational [*]] T [/ integer]
  Rational scale() {
    const std::size_t start = pos_;
    Rational sign(1);
    if (accept('-')) {
      sign = Rational(-1);
    } else {
      accept('+');
    }
    Rational c(1);
    if (digit_next()) {
      c = literal();
      accept('*');
    }
    if (!accept('T')) fail("expected a scaled argument such as 2T or T/2");
    if (accept('/')) {
      const std::size_t at = pos_;
      Integer q = integer();
      if (q == 0) fail_at("zero denominator", at);
      c /= Rational(q);
    }
    c *= sign;
    if (c.is_zero()) fail_at("scale must be nonzero", start);
    return c;
  }

  int exponent() {
    if (accept('{')) {
      const bool neg = accept('-');
      const int k = small_int();
      expect('}');
      return neg ? -k : k;
    }
    if (accept('(')) {
      const bool neg = accept('-');
      const int k = small_int();
      expect(')');
      return neg ? -k : k;
    }
    const bool neg = accept('-');
    const int k = small_int();
    return neg ? -k : k;
  }

  BElement expression() {
    BElement v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  bool starts_factor() {
    const char c = peek();
    return c == 'T' || c == 'B' || c == 'e' || c == 'd' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  BElement term() {
    BElement v = unary();
    for (;;) {
      if (accept('*')) {
        v = product_reduce(v, unary());
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        const BElement d = unary();
        const auto& terms = d.terms();
        if (terms.size() != 1 || terms.begin()->first != Atom::make(0, 0, Rational(1), Rational(0))) {
          fail_at("division only by a nonzero constant", at);
        }
        v *= Rational(1) / terms.begin()->second;
      } else if (starts_factor()) {
        v = product_reduce(v, unary());
      } else {
        return v;
      }
    }
  }

  BElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BElement power() {
    const std::size_t base_at = pos_;
    BElement base = primary();
    if (!accept('^')) return base;
    const int k = exponent();
    if (k >= 0) {
      BElement r = BElement::constant(Rational(1));
      for (int i = 0; i < k; ++i) r = product_reduce(r, base);
      return r;
    }
    if (base.size() != 1) fail_at("negative powers apply only to a single atom", base_at);
    const auto& [at, c] = *base.terms().begin();
    const BElement inv = atom_inverse(at, c);
    BElement r = BElement::constant(Rational(1));
    for (int i = 0; i < -k; ++i) r = product_reduce(r, inv);
    return r;
  }

  BElement primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return BElement::constant(literal());
    if (accept('(')) {
      BElement v = expression();
      expect(')');
      return v;
    }
    if (accept('T')) return BElement(Atom::make(1, 0, Rational(1), Rational(0)));
    if (accept('B')) {
      if (!accept('(')) return BElement(Atom::B());
      const Rational b = scale();
      expect(')');
      return atom_normalize(0, 1, b, Rational(0));
    }
    if (accept('e')) {
      expect('^');
      Rational a;
      if (accept('{')) {
        a = scale();
        expect('}');
      } else if (accept('(')) {
        a = scale();
        expect(')');
      } else if (accept('T')) {
        a = Rational(1);
      } else {
        fail("expected T, {aT} or (aT) after e^");
      }
      return BElement(Atom::make(0, 0, Rational(1), a));
    }
    if (accept('d')) {
      int k = 1;
      if (accept('^')) k = exponent();
      if (k < 0) fail("derivative order must be nonnegative");
      expect('[');
      BElement v = expression();
      expect(']');
      for (int i = 0; i < k; ++i) v = derivative(v);
      return v;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BElement parse_element(std::string_view text) { return Parser(text).parse(); }

std::string format_parse_error(std::string_view text, const ParseError& e) {
  std::string out = "parse error: ";
  out += e.what();
  out += "\n  ";
  out += text;
  out += "\n  ";
  out += std::string(std::min(e.position(), text.size()), ' ');
  out += '^';
  return out;
}

}  // namespace bernalg
