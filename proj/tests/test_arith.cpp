#include "doctest.h"

#include <sstream>

#include "bernalg/bipoly.hpp"
#include "bernalg/poly.hpp"
#include "bernalg/rational.hpp"
#include "oracles.hpp"

using namespace bernalg;

namespace {

Rational from(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }

Poly random_poly(oracle::Rng& rng, int max_degree) {
  std::vector<Rational> c;
  const int d = rng.uniform(-1, max_degree);
  for (int i = 0; i <= d; ++i) c.push_back(from(rng.rational(6, 4)));
  return Poly(std::move(c));
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    CHECK(Rational(Integer(6), Integer(-4)).str() == "-3/2");
    CHECK(Rational(Integer(0), Integer(5)) == Rational(0));
    CHECK(Rational(Integer(4), Integer(2)).is_integer());
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
  }

  TEST_CASE("parsing") {
    CHECK(Rational::parse("-1/30") == Rational(Integer(-1), Integer(30)));
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("12") == Rational(12));
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/2/3", " 1"}) {
      CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
  }

  TEST_CASE("powers and inverses") {
    const Rational x(Integer(-2), Integer(3));
    CHECK(x.pow(3) == Rational(Integer(-8), Integer(27)));
    CHECK(x.pow(-2) == Rational(Integer(9), Integer(4)));
    CHECK(x.pow(0) == Rational(1));
    CHECK(x.inverse() == Rational(Integer(-3), Integer(2)));
    CHECK_THROWS(Rational(0).inverse());
    CHECK_THROWS(Rational(0).pow(-1));
  }

  TEST_CASE("combinatorial helpers against oracles") {
    for (int n = 0; n <= 25; ++n) {
      CHECK(factorial(static_cast<unsigned long>(n)) == oracle::factorial(n));
      for (int k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == Rational(oracle::binomial(n, k)));
    }
    CHECK(harmonic(0) == Rational(0));
    CHECK(harmonic(4) == Rational(Integer(25), Integer(12)));
    CHECK(gcd(12, 18) == 6);
    CHECK(lcm(4, 6) == 12);
  }

  TEST_CASE("field axioms on random values") {
    oracle::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      const mpq_class a = rng.rational(50, 20), b = rng.rational(50, 20), c = rng.rational(50, 20);
      const Rational x = from(a), y = from(b), z = from(c);
      CHECK((x + y) == from(a + b));
      CHECK((x * y) == from(a * b));
      CHECK((x - y) == from(a - b));
      CHECK((x * (y + z)) == (x * y + x * z));
      CHECK(((x + y) + z) == (x + (y + z)));
      if (!y.is_zero()) CHECK(((x / y) * y) == x);
      CHECK(Rational::parse(x.str()) == x);
      CHECK(((x < y) == (a < b)));
    }
  }

  TEST_CASE("stream output") {
    std::ostringstream os;
    os << Rational(Integer(-5), Integer(6));
    CHECK(os.str() == "-5/6");
  }
}

TEST_SUITE("poly") {
  TEST_CASE("text form") {
    CHECK(Poly{Rational(Integer(-1), Integer(3)), Rational(Integer(1), Integer(3))}.str() == "-1/3 + 1/3*X");
    CHECK(Poly{}.str() == "0");
    CHECK(Poly::monomial(Rational(-1), 2).str("T") == "-T^2");
  }

  TEST_CASE("division with remainder") {
    oracle::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
      const Poly p = random_poly(rng, 7);
      Poly d = random_poly(rng, 4);
      if (d.is_zero()) d = Poly(Rational(3));
      const auto [q, r] = poly_divrem(p, d);
      CHECK(q * d + r == p);
      CHECK(r.degree() < d.degree());
    }
    CHECK_THROWS_AS(poly_divrem(Poly::x(), Poly{}), std::domain_error);
    CHECK_THROWS_AS(poly_exact_div(Poly::x(), Poly{Rational(1), Rational(1)}), std::logic_error);
  }

  TEST_CASE("extended gcd") {
    oracle::Rng rng(7);
    for (int i = 0; i < 150; ++i) {
      const Poly p = random_poly(rng, 5);
      const Poly q = random_poly(rng, 5);
      if (p.is_zero() && q.is_zero()) continue;
      const GcdExt e = poly_gcd_ext(p, q);
      CHECK(e.u * p + e.v * q == e.g);
      CHECK(e.g.leading() == Rational(1));
      CHECK(poly_divrem(p, e.g).second.is_zero());
      CHECK(poly_divrem(q, e.g).second.is_zero());
    }
    const Poly common{Rational(-1), Rational(1)};
    CHECK(poly_gcd_ext(common * repunit(3), common * Poly{Rational(2), Rational(1)}).g == common);
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    oracle::Rng rng(9);
    for (int i = 0; i < 150; ++i) {
      const Poly p = random_poly(rng, 5), q = random_poly(rng, 5);
      const Rational x = from(rng.rational(5, 3));
      CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
      CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
      CHECK(p.eval(q).eval(x) == p.eval(q.eval(x)));
    }
  }

  TEST_CASE("repunits and powers of X") {
    CHECK(repunit(4) == Poly{Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(x_pow_minus_one(3) == Poly{Rational(-1), Rational(0), Rational(0), Rational(1)});
    CHECK(x_pow_minus_one(5) == Poly{Rational(-1), Rational(1)} * repunit(5));
    CHECK(poly_compose_power(repunit(2), 3) == Poly{Rational(1), Rational(0), Rational(0), Rational(1)});
  }

  TEST_CASE("inverse modulo") {
    const Poly m = repunit(5);
    const Poly inv = poly_inverse_mod(repunit(3), m);
    CHECK(poly_divrem(inv * repunit(3) - Poly(Rational(1)), m).second.is_zero());
  }

  TEST_CASE("derivative and lcm") {
    const Poly p{Rational(1), Rational(2), Rational(3)};
    CHECK(p.derivative() == Poly{Rational(2), Rational(6)});
    const Poly a{Rational(-1), Rational(1)};
    CHECK(poly_lcm(a * repunit(2), a * repunit(3)).degree() == 4);
  }
}

TEST_SUITE("bipoly") {
  TEST_CASE("arithmetic and operators") {
    const BiPoly u = BiPoly::monomial(Rational(1), 1, 0);
    const BiPoly v = BiPoly::monomial(Rational(1), 0, 1);
    const BiPoly p = u * v + v * v * Rational(3);
    CHECK(p.coeff(1, 1) == Rational(1));
    CHECK(p.coeff(0, 2) == Rational(3));
    CHECK(p.d_v() == u + v * Rational(6));
    CHECK(p.d_u() == v);
    CHECK(p.shift(1, 1).coeff(2, 2) == Rational(1));
    CHECK(p.has_integer_coefficients());
    CHECK_FALSE((p * Rational(Integer(1), Integer(2))).has_integer_coefficients());
    CHECK((p - p).is_zero());
  }
}
