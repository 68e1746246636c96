#include "doctest.h"

#include "bernalg/bfrak.hpp"
#include "oracles.hpp"

using namespace bernalg;

namespace {

Rational from(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }
Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

// c T^m B^n(bT) e^{aT} coefficients from the oracle, shifted by m.
void check_atom_expansion(int m, int n, const mpq_class& b, const mpq_class& a, int bound) {
  const Atom at = Atom::make(m, n, from(b), from(a));
  const RSeries s = expand_atom(at, bound);
  const auto c = oracle::atom_series(n, b, a, bound - m);
  for (int i = m; i <= bound; ++i) CHECK(s.coeff(i) == from(c[static_cast<std::size_t>(i - m)]));
}

}  // namespace

TEST_SUITE("bfrak") {
  TEST_CASE("atom construction") {
    CHECK_THROWS_AS(Atom::make(0, 1, Rational(0), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(Atom::make(0, -1, Rational(1), Rational(0)), std::invalid_argument);
    const Atom e = Atom::make(2, 0, Rational(7), Rational(1));
    CHECK(e.b() == Rational(1));  // scale is irrelevant without a B factor
    CHECK(Atom::B().shifted(1, Rational(2)) == Atom::make(1, 1, Rational(1), Rational(2)));
  }

  TEST_CASE("ordering is by scale, power, T exponent, shift") {
    const Atom a = Atom::make(5, 2, Rational(1), Rational(0));
    const Atom b = Atom::make(0, 1, Rational(2), Rational(0));
    const Atom c = Atom::make(0, 1, Rational(1), Rational(3));
    CHECK(c < a);
    CHECK(a < b);
    CHECK(Atom::make(0, 1, Rational(1), Rational(-1)) < c);
  }

  TEST_CASE("expansion against the oracle") {
    check_atom_expansion(0, 1, 1, 0, 12);
    check_atom_expansion(-2, 3, mpq_class(3, 2), mpq_class(-1, 3), 10);
    check_atom_expansion(1, 2, 5, 2, 9);
    check_atom_expansion(0, 0, 1, mpq_class(7, 4), 8);
  }

  TEST_CASE("negative scale via B(-T) = B(T) + T") {
    const BElement x = atom_normalize(0, 1, Rational(-1), Rational(0));
    BElement expected(Atom::B());
    expected.add_term(Atom::make(1, 0, Rational(1), Rational(0)), Rational(1));
    CHECK(x == expected);
    const BElement y = atom_normalize(1, 3, Rational(-2), q(1, 2));
    const auto c = oracle::atom_series(3, -2, mpq_class(1, 2), 9);
    const RSeries s = expand(y, 10);
    for (int i = 1; i <= 10; ++i) CHECK(s.coeff(i) == from(c[static_cast<std::size_t>(i - 1)]));
    CHECK_THROWS(atom_normalize(0, 1, Rational(0), Rational(0)));
  }

  TEST_CASE("exact zero test on known relations") {
    // (e^T - 1) B = T
    BElement x;
    x.add_term(Atom::make(0, 1, Rational(1), Rational(1)), Rational(1));
    x.add_term(Atom::B(), Rational(-1));
    x.add_term(Atom::make(1, 0, Rational(1), Rational(0)), Rational(-1));
    CHECK(is_zero_exact(x));
    // B(2T)(e^T + 1) = 2B
    BElement y;
    y.add_term(Atom::make(0, 1, Rational(2), Rational(1)), Rational(1));
    y.add_term(Atom::make(0, 1, Rational(2), Rational(0)), Rational(1));
    y.add_term(Atom::B(), Rational(-2));
    CHECK(is_zero_exact(y));
    // perturbing any coefficient breaks it
    y.add_term(Atom::B(), q(1, 1000));
    CHECK_FALSE(is_zero_exact(y));
    CHECK(is_zero_exact(BElement{}));
  }

  TEST_CASE("exponential polynomial form") {
    const ExpPolyForm f = to_exp_poly(BElement(Atom::make(0, 2, Rational(3), Rational(0))));
    CHECK(f.multiplier.powers.at(Rational(3)) == 2);
    CHECK(f.numerator.terms.size() == 1);
    CHECK(f.numerator.terms.at(Rational(0)).at(2) == Rational(9));
  }

  TEST_CASE("element arithmetic") {
    const BElement b(Atom::B());
    CHECK((b - b).is_empty());
    CHECK(elem_scale(Rational(2), b) == b + b);
    CHECK(elem_mul_monomial(b, 2, Rational(1)) == BElement(Atom::make(2, 1, Rational(1), Rational(1))));
    CHECK(elem_add(b, -b).is_empty());
    CHECK(elem_equal(b + b, b * Rational(2)));
  }
}
