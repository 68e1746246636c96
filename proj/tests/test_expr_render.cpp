#include "doctest.h"

#include "bernalg/expr.hpp"
#include "bernalg/render.hpp"
#include "oracles.hpp"

using namespace bernalg;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }
Rational from(const mpq_class& v) { return Rational(v.get_num(), v.get_den()); }

std::size_t error_position(std::string_view text) {
  try {
    parse_element(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string_view::npos;
}

BElement random_element(oracle::Rng& rng) {
  BElement x;
  const int terms = rng.uniform(1, 4);
  for (int i = 0; i < terms; ++i) {
    const int n = rng.uniform(0, 3);
    const Rational b = n == 0 ? Rational(1) : Rational(Integer(rng.uniform(1, 5)), Integer(rng.uniform(1, 3)));
    const Rational a(Integer(rng.uniform(-3, 3)), Integer(rng.uniform(1, 2)));
    x.add_term(Atom::make(rng.uniform(-2, 3), n, b, a), from(rng.rational(7, 4)));
  }
  return x;
}

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("atoms and literals") {
    CHECK(parse_element("B") == BElement(Atom::B()));
    CHECK(parse_element("B(2T)^3") == BElement(Atom::make(0, 3, Rational(2), Rational(0))));
    CHECK(parse_element("B(3/2*T)") == BElement(Atom::make(0, 1, q(3, 2), Rational(0))));
    CHECK(parse_element("B(T/2)") == BElement(Atom::make(0, 1, q(1, 2), Rational(0))));
    CHECK(parse_element("T^-2*e^{-T/3}") == BElement(Atom::make(-2, 0, Rational(1), q(-1, 3))));
    CHECK(parse_element("e^(2T)") == BElement(Atom::make(0, 0, Rational(1), Rational(2))));
    CHECK(parse_element("-3/4") == BElement::constant(q(-3, 4)));
    CHECK(parse_element("2T B") == BElement(Atom::make(1, 1, Rational(1), Rational(0)), Rational(2)));
  }

  TEST_CASE("arithmetic and derivatives") {
    CHECK(elem_equal(parse_element("(e^T - 1)*B"), parse_element("T")));
    CHECK(elem_equal(parse_element("B(-T)"), parse_element("B + T")));
    CHECK(elem_equal(parse_element("B^-1"), parse_element("T^-1*(e^T - 1)")));
    CHECK(elem_equal(parse_element("d[B]"), parse_element("T^-1*B - B - T^-1*B^2")));
    CHECK(elem_equal(parse_element("d^2[T^3]"), parse_element("6T")));
    CHECK(elem_equal(parse_element("B/2"), parse_element("1/2*B")));
    CHECK(elem_equal(parse_element("-B^2"), parse_element("-(B^2)")));
  }

  TEST_CASE("errors point at the offending character") {
    CHECK(error_position("B +") == 3);
    CHECK(error_position("B(0T)") != std::string_view::npos);
    CHECK(error_position("B / B") == 2);
    CHECK(error_position("(B+1)^-1") != std::string_view::npos);
    CHECK(error_position("B # 2") == 2);
    CHECK(error_position("(B") == 2);
    try {
      parse_element("B + x");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      const std::string msg = format_parse_error("B + x", e);
      CHECK(msg.find("  B + x\n      ^") != std::string::npos);
    }
  }

  TEST_CASE("text output parses back to the same element") {
    oracle::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
      const BElement x = random_element(rng);
      const std::string text = render_text(x);
      CAPTURE(text);
      const BElement y = parse_element(text);
      CHECK(y == x);
    }
  }
}

TEST_SUITE("render") {
  TEST_CASE("text forms") {
    CHECK(render_text(BElement{}) == "0");
    CHECK(render_text(parse_element("B^2 - 3/2*T*B(2T)")) == "B^2 - 3/2*T*B(2T)");
    CHECK(render_generator(Atom::make(-1, 1, Rational(3), Rational(0))) == "T^-1*B(3T)");
    DCombination d;
    d.add(Atom::B(), WeylOp(Poly{Rational(1), Rational(-1)}) - WeylOp::term(Rational(1), 1, 1));
    CHECK(render_text(d) == "(1 - T)*B + (-T)*d[B]");
  }

  TEST_CASE("LaTeX forms") {
    CHECK(render_latex(q(-3, 4)) == "-\\frac{3}{4}");
    CHECK(render_latex(parse_element("B(2T)^2")).find("\\mathbf{B}^{2}(2T)") != std::string::npos);
    CHECK(render_latex(WeylOp::term(Rational(1), 2, 1)) == "T^{2}\\frac{d}{dT}");
  }

  TEST_CASE("JSON shapes") {
    const auto r = to_json(q(2, 6));
    CHECK(r.get<std::string>() == "1/3");
    const auto p = to_json(Poly{Rational(1), q(-1, 2)});
    CHECK(p["coeffs"].size() == 2);
    CHECK(p["coeffs"][1] == "-1/2");
    const auto x = to_json(parse_element("2*T*B(3T)*e^T"));
    REQUIRE(x["terms"].size() == 1);
    CHECK(x["terms"][0]["coefficient"] == "2");
    CHECK(x["terms"][0]["m"] == 1);
    CHECK(x["terms"][0]["b"] == "3");
    CHECK(x["terms"][0]["a"] == "1");
    const auto rep = to_json(verify_euler(4));
    std::vector<std::string> keys;
    for (auto it = rep.begin(); it != rep.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"name", "params", "lhs", "rhs", "verified", "latex"});
    CHECK(rep["verified"] == true);
    CHECK(to_json(verify_rademacher(3))["degenerate"] == true);
  }
}
