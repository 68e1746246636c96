#include "doctest.h"

#include "bernalg/bernoulli.hpp"
#include "bernalg/series.hpp"
#include "oracles.hpp"

using namespace bernalg;

namespace {

Rational from(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }

RSeries random_series(oracle::Rng& rng, int low, int bound) {
  std::vector<Rational> c;
  for (int i = low; i <= bound; ++i) c.push_back(from(rng.rational(5, 3)));
  return RSeries::from_coeffs(low, std::move(c), bound);
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("bounds follow the exactness rules") {
    const RSeries x = RSeries::from_coeffs(-1, {Rational(1), Rational(2), Rational(3)}, 1);  // T^-1 + 2 + 3T
    const RSeries y = RSeries::from_coeffs(2, {Rational(1)}, 5);                            // T^2 + O(T^6)
    CHECK((x + y).bound() == 1);
    CHECK((x * y).bound() == 3);  // min(1 + 2, 5 - 1)
    CHECK((x * y).valuation() == 1);
    CHECK(x.inverse().valuation() == 1);
    CHECK(x.inverse().bound() == 3);
    CHECK(x.derivative().bound() == 0);
    CHECK_THROWS_AS(x.coeff(2), InsufficientOrder);
    CHECK(x.coeff(-5) == Rational(0));
  }

  TEST_CASE("zero series carries its bound") {
    const RSeries z = RSeries::zero(7);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 8);
    CHECK(z.coeff(7) == Rational(0));
    CHECK((RSeries::monomial(Rational(1), 2, 9) - RSeries::monomial(Rational(1), 2, 9)).is_zero());
  }

  TEST_CASE("ring laws on random series") {
    oracle::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
      const RSeries a = random_series(rng, rng.uniform(-2, 1), 8);
      const RSeries b = random_series(rng, rng.uniform(-2, 1), 8);
      const RSeries c = random_series(rng, rng.uniform(-2, 1), 8);
      CHECK(agree(a * (b + c), a * b + a * c));
      CHECK(agree((a * b) * c, a * (b * c)));
      CHECK(agree((a * b).derivative(), a.derivative() * b + a * b.derivative()));
      if (!a.is_zero() && a.coeff(a.valuation()) != Rational(0)) {
        const RSeries one = a * a.inverse();
        CHECK(one.coeff(0) == Rational(1));
        for (int k = 1; k <= one.bound(); ++k) CHECK(one.coeff(k) == Rational(0));
      }
    }
  }

  TEST_CASE("products match naive convolution") {
    oracle::Rng rng(4);
    for (int i = 0; i < 50; ++i) {
      oracle::Coeffs p(11), q(11);
      std::vector<Rational> pc, qc;
      for (int k = 0; k <= 10; ++k) {
        p[static_cast<std::size_t>(k)] = rng.rational(9, 5);
        q[static_cast<std::size_t>(k)] = rng.rational(9, 5);
        pc.push_back(from(p[static_cast<std::size_t>(k)]));
        qc.push_back(from(q[static_cast<std::size_t>(k)]));
      }
      const auto expected = oracle::mul(p, q);
      const RSeries got = RSeries::from_coeffs(0, pc, 10) * RSeries::from_coeffs(0, qc, 10);
      for (int k = 0; k <= 10; ++k) CHECK(got.coeff(k) == from(expected[static_cast<std::size_t>(k)]));
    }
  }

  TEST_CASE("argument scaling and powers") {
    const RSeries e = exp_linear(Rational(1), 10);
    const RSeries e3 = e.scale_arg(Rational(3));
    CHECK(agree(e3, exp_linear(Rational(3), 10)));
    CHECK(agree(e.pow(3, 10), e3));
    CHECK(agree(e * exp_linear(Rational(-1), 10), RSeries::monomial(Rational(1), 0, 10)));
  }

  TEST_CASE("coefficients in Q[s]") {
    const Poly s{Rational(0), Rational(1)};
    const SSeries b = bernoulli_series(6).to_poly_coeffs();
    const SSeries bs = b.scale_arg(s);
    CHECK(bs.coeff(2) == Poly::monomial(Rational(Integer(1), Integer(12)), 2));
    CHECK(bs.coeff(1) == Poly::monomial(Rational(Integer(-1), Integer(2)), 1));
  }
}

TEST_SUITE("bernoulli") {
  TEST_CASE("numbers against the Akiyama-Tanigawa oracle") {
    const auto expected = oracle::bernoulli_numbers(60);
    for (int i = 0; i <= 60; ++i) CHECK(bernoulli_number(i) == from(expected[static_cast<std::size_t>(i)]));
    CHECK(bernoulli_number(4) == Rational(Integer(-1), Integer(30)));
    CHECK(bernoulli_number(12) == Rational(Integer(-691), Integer(2730)));
  }

  TEST_CASE("higher order numbers against repeated multiplication") {
    for (int n = 0; n <= 5; ++n) {
      const auto c = oracle::atom_series(n, 1, 0, 14);
      for (int i = 0; i <= 14; ++i) {
        CHECK(bernoulli_number_order(n, i) == from(c[static_cast<std::size_t>(i)] * mpq_class(oracle::factorial(i))));
      }
    }
  }

  TEST_CASE("polynomials") {
    CHECK(bernoulli_poly_value(1, 2, Rational(Integer(1), Integer(2))) == Rational(Integer(-1), Integer(12)));
    const auto bn = oracle::bernoulli_numbers(12);
    for (int n = 0; n <= 12; ++n) {
      const Poly p = bernoulli_polynomial(n);
      for (int k = 0; k <= n; ++k) {
        CHECK(p.coeff(n - k) == from(mpq_class(oracle::binomial(n, k)) * bn[static_cast<std::size_t>(k)]));
      }
    }
    for (int n = 1; n <= 4; ++n) {
      for (const Rational& x : {Rational(0), Rational(Integer(7), Integer(3)), Rational(-2)}) {
        const auto c = oracle::atom_series(n, 1, x.get(), 10);
        for (int i = 0; i <= 10; ++i) {
          CHECK(bernoulli_poly_value(n, i, x) == from(c[static_cast<std::size_t>(i)] * mpq_class(oracle::factorial(i))));
        }
      }
    }
  }

  TEST_CASE("scaled values") {
    const mpq_class b(3, 2), a(1, 3);
    const auto c = oracle::atom_series(2, b, a, 9);
    for (int i = 0; i <= 9; ++i) {
      CHECK(scaled_bernoulli_value(2, i, Rational(a.get_num(), a.get_den()), Rational(b.get_num(), b.get_den())) ==
            from(c[static_cast<std::size_t>(i)] * mpq_class(oracle::factorial(i))));
    }
  }

  TEST_CASE("override is scoped") {
    const Rational before = bernoulli_number(6);
    {
      testing::ScopedBernoulliOverride tamper(6, Rational(5));
      CHECK(bernoulli_number(6) == Rational(5));
    }
    CHECK(bernoulli_number(6) == before);
  }
}
