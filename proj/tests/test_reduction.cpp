#include "doctest.h"

#include "bernalg/bernoulli.hpp"
#include "bernalg/expr.hpp"
#include "bernalg/reduction.hpp"
#include "oracles.hpp"

using namespace bernalg;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }
Rational from(const mpq_class& v) { return Rational(v.get_num(), v.get_den()); }

BElement b_at(int n, const Rational& b, const Rational& a = Rational(0)) { return BElement(Atom::make(0, n, b, a)); }

// Coefficients of the product of two atoms, from the oracle.
oracle::Coeffs product_oracle(int n1, const mpq_class& b1, int n2, const mpq_class& b2, int bound) {
  return oracle::mul(oracle::atom_series(n1, b1, 0, bound), oracle::atom_series(n2, b2, 0, bound));
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("order lowering step") {
    const Lowered step = lower_order(Atom::make(0, 2, Rational(1), Rational(0)));
    CHECK(step.generator == Atom::B());
    CHECK(step.op == WeylOp(Poly{Rational(1), Rational(-1)}) - WeylOp::term(Rational(1), 1, 1));
    CHECK_THROWS_AS(lower_order(Atom::B()), std::invalid_argument);
    for (int n = 2; n <= 5; ++n) {
      for (int m = -2; m <= 2; ++m) {
        const Atom at = Atom::make(m, n, q(3, 2), q(1, 2));
        const Lowered l = lower_order(at);
        CHECK(l.generator.n() == n - 1);
        CHECK(l.generator.m() <= 0);
        CHECK(elem_equal(weyl_apply_element(l.op, BElement(l.generator)), BElement(at)));
      }
    }
  }

  TEST_CASE("first-order reduction keeps the value") {
    BElement x(Atom::make(0, 4, Rational(2), Rational(1)), q(3, 7));
    x.add_term(Atom::make(-3, 3, Rational(1), Rational(0)), Rational(2));
    x.add_term(Atom::make(2, 2, q(1, 3), Rational(-1)), Rational(-1));
    const DCombination d = reduce_to_first_order(x);
    for (const auto& [g, op] : d.terms()) {
      CHECK(g.n() <= 1);
      CHECK(g.m() <= 0);
    }
    CHECK(semantically_equal(d, x));
    DCombination bad;
    CHECK_THROWS_AS(bad.add(Atom::make(0, 2, Rational(1), Rational(0)), WeylOp::identity()), std::invalid_argument);
    CHECK_THROWS_AS(bad.add(Atom::make(1, 1, Rational(1), Rational(0)), WeylOp::identity()), std::invalid_argument);
  }

  TEST_CASE("two-factor products match the oracle") {
    const std::vector<std::tuple<int, mpq_class, int, mpq_class>> cases = {
        {1, 2, 1, 3}, {1, 2, 1, 5}, {1, 3, 1, 5}, {2, 1, 1, 5}, {1, 2, 2, 3}, {2, mpq_class(1, 2), 1, mpq_class(1, 3)},
        {3, 2, 1, 4}, {1, mpq_class(3, 2), 2, 1}, {2, 4, 2, 6}};
    for (const auto& [n1, b1, n2, b2] : cases) {
      const BElement z = product_reduce(b_at(n1, from(b1)), b_at(n2, from(b2)));
      const RSeries s = expand(z, 14);
      const auto c = product_oracle(n1, b1, n2, b2, 14);
      for (int i = 0; i <= 14; ++i) CHECK(s.coeff(i) == from(c[static_cast<std::size_t>(i)]));
      for (const auto& [a, coef] : z.terms()) CHECK(a.n() + a.m() >= 0);
    }
  }

  TEST_CASE("reference product relations") {
    CHECK(elem_equal(product_reduce(b_at(1, Rational(2)), b_at(1, Rational(3))),
                     parse_element("B^2 + 2/3*T*(e^T - 1)*B(3T) - 3/2*T*B(2T)")));
    CHECK(elem_equal(product_reduce(b_at(2, Rational(1)), b_at(1, Rational(5))),
                     parse_element("1/5*T^2*(2e^{3T} + 3e^{2T} + 3e^T + 2)*B(5T) + (-2e^T + 3)*B^3")));
  }

  TEST_CASE("products with B-free factors only shift") {
    const BElement e = BElement(Atom::make(2, 0, Rational(1), q(1, 2)));
    CHECK(product_reduce(e, b_at(2, Rational(3))) == BElement(Atom::make(2, 2, Rational(3), q(1, 2))));
    CHECK(product_reduce(BElement::constant(Rational(1)), b_at(1, Rational(1))) == b_at(1, Rational(1)));
  }

  TEST_CASE("Stirling numbers against the explicit sum") {
    for (int n = 0; n <= 25; ++n) {
      for (int k = 0; k <= n; ++k) CHECK(stirling(n, k) == oracle::stirling2(n, k));
    }
    CHECK(stirling(4, 2) == 7);
    CHECK(stirling(3, 5) == 0);
  }

  TEST_CASE("negative powers of B") {
    for (int k = 1; k <= 4; ++k) {
      BElement bk = BElement::constant(Rational(1));
      for (int i = 0; i < k; ++i) bk = product_reduce(bk, b_at(1, Rational(1)));
      const RSeries prod = expand(negative_power_expand(k), 10) * expand(bk, 10 + k);
      CHECK(prod.coeff(0) == Rational(1));
      for (int i = 1; i <= prod.bound(); ++i) CHECK(prod.coeff(i) == Rational(0));
    }
    CHECK_THROWS(negative_power_expand(0));
  }

  TEST_CASE("f_n: closed form, recursion and derivatives") {
    CHECK(f_n_closed(0) == BiPoly::monomial(Rational(1), 0, 1));
    // f_1 = V - UV - V^2
    CHECK(f_n_closed(1) == BiPoly::monomial(Rational(1), 0, 1) - BiPoly::monomial(Rational(1), 1, 1) -
                               BiPoly::monomial(Rational(1), 0, 2));
    for (int n = 0; n <= 9; ++n) {
      CHECK(f_n_closed(n) == f_n_inductive(n));
      CHECK(f_n_closed(n).has_integer_coefficients());
      RSeries d = bernoulli_series(20 + n);
      for (int i = 0; i < n; ++i) d = d.derivative();
      CHECK(agree(expand(substitute_t_b(f_n_closed(n)).mul_monomial(-n, Rational(0)), 20), d));
    }
  }

  TEST_CASE("(B')^2 operator") {
    const DCombination d = agoh_dilcher_reduce(1, 1);
    const WeylOp expected = WeylOp::term(q(-1, 6), 1, 3) - WeylOp::term(q(1, 2), 0, 2) +
                           WeylOp::term(q(1, 6), 1, 1) - WeylOp::term(Rational(1), 0, 1) -
                           WeylOp::term(q(1, 6), 0, 0);
    CHECK(d.op(Atom::B()).divide_left_t(2) == expected);
    CHECK(semantically_equal(d, substitute_t_b(f_n_closed(1) * f_n_closed(1))));
    CHECK(semantically_equal(agoh_dilcher_reduce(2, 3), substitute_t_b(f_n_closed(2) * f_n_closed(3))));
  }
}
