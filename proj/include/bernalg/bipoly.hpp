#pragma once

#include <map>
#include <string>
#include <utility>

#include "bernalg/rational.hpp"

namespace bernalg {

/// Sparse polynomial in two variables U, V. Keys are (exponent of U,
/// exponent of V); zero coefficients are never stored.
class BiPoly {
 public:
  using Monomial = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly monomial(const Rational& c, int i, int j);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int i, int j) const;
  void add_term(const Rational& c, int i, int j);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly d_u() const;
  BiPoly d_v() const;
  /// Multiplies by U^i V^j.
  BiPoly shift(int i, int j) const;

  bool has_integer_coefficients() const;
  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

}  // namespace bernalg
