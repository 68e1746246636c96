#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bernalg/rational.hpp"

namespace bernalg {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of X^i;
/// the highest stored coefficient is nonzero, so the zero polynomial is empty.
/// The indeterminate is abstract: X in partial fractions, T in operators, s in
/// parameterized series.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;  // stands in for -infinity

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int degree);
  static Poly x() { return monomial(1, 1); }

  std::span<const Rational> coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of X^i (zero outside the stored range).
  Rational coeff(int i) const;
  Rational leading() const;
  /// Lowest exponent with a nonzero coefficient; degree()+1 for zero.
  int low_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly derivative() const;
  Poly monic() const;
  Poly pow(int e) const;
  Rational eval(const Rational& x) const;
  Poly eval(const Poly& x) const;

  /// Ascending-exponent text such as "-1/3 + 1/3*X".
  std::string str(std::string_view var = "X") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);

/// Euclidean division p = q*quot + rem, deg rem < deg q. Throws std::domain_error if q = 0.
std::pair<Poly, Poly> poly_divrem(const Poly& p, const Poly& q);

/// Quotient of a division that must be exact; throws std::logic_error on a
/// nonzero remainder.
Poly poly_exact_div(const Poly& p, const Poly& q);

struct GcdExt {
  Poly g;  // monic gcd
  Poly u;
  Poly v;  // u*p + v*q = g
};
GcdExt poly_gcd_ext(const Poly& p, const Poly& q);

/// Inverse of p modulo m (deg < deg m). Throws std::domain_error when gcd(p, m) != 1.
Poly poly_inverse_mod(const Poly& p, const Poly& m);

Poly poly_lcm(const Poly& p, const Poly& q);

/// p(X^l).
Poly poly_compose_power(const Poly& p, int l);

Rational poly_eval(const Poly& p, const Rational& x);

/// 1 + X + ... + X^(n-1).
Poly repunit(int n);

/// X^n - 1.
Poly x_pow_minus_one(int n);

}  // namespace bernalg
