#pragma once

#include <optional>

#include "bernalg/poly.hpp"
#include "bernalg/rational.hpp"
#include "bernalg/series.hpp"

namespace bernalg {

/// e^{aT} = sum a^i T^i / i!, exact up to T^bound.
RSeries exp_linear(const Rational& a, int bound);

/// B(T) = T/(e^T - 1), exact up to T^bound (bound >= 0).
RSeries bernoulli_series(int bound);

/// B(T)^n, exact up to T^bound.
RSeries bernoulli_power_series(int n, int bound);

/// B_i = i! [T^i] B.
Rational bernoulli_number(int i);

/// B^{(n)}_i = i! [T^i] B^n.
Rational bernoulli_number_order(int n, int i);

/// B^{(n)}_i(x) = i! [T^i] B^n e^{xT}.
Rational bernoulli_poly_value(int n, int i, const Rational& x);

/// B_i(X) as a polynomial in X.
Poly bernoulli_polynomial(int i);

/// b^i B^{(n)}_i(a/b): i! times the coefficient of T^i in B^n(bT) e^{aT}.
Rational scaled_bernoulli_value(int n, int i, const Rational& a, const Rational& b);

namespace testing {

/// Replaces the cached value of B_i for the lifetime of the object. Used by
/// fault-injection tests of the self-test; never used by library code.
class ScopedBernoulliOverride {
 public:
  ScopedBernoulliOverride(int index, Rational value);
  ~ScopedBernoulliOverride();
  ScopedBernoulliOverride(const ScopedBernoulliOverride&) = delete;
  ScopedBernoulliOverride& operator=(const ScopedBernoulliOverride&) = delete;

 private:
  int index_;
};

}  // namespace testing

}  // namespace bernalg
