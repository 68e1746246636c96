#pragma once

#include <map>
#include <string>

#include "bernalg/bfrak.hpp"
#include "bernalg/poly.hpp"
#include "bernalg/series.hpp"

namespace bernalg {

/// Element sum_k f_k(T) (d/dT)^k of the Weyl algebra Q<T, d/dT>, polynomials
/// to the left. Keys are derivative orders; zero polynomials are not stored,
/// so structural equality is equality in the algebra.
class WeylOp {
 public:
  WeylOp() = default;
  WeylOp(const Poly& f);  // NOLINT(google-explicit-constructor)
  static WeylOp identity() { return WeylOp(Poly(Rational(1))); }
  /// c * T^j * (d/dT)^k
  static WeylOp term(const Rational& c, int j, int k);
  static WeylOp d(int k = 1) { return term(Rational(1), 0, k); }
  static WeylOp t(int j = 1) { return term(Rational(1), j, 0); }

  const std::map<int, Poly>& terms() const { return terms_; }
  Poly coeff(int k) const;
  bool is_zero() const { return terms_.empty(); }
  int order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  void add(int k, const Poly& f);

  WeylOp operator-() const;
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  friend WeylOp operator+(WeylOp p, const WeylOp& q) { return p += q; }
  friend WeylOp operator-(WeylOp p, const WeylOp& q) { return p -= q; }
  friend WeylOp operator*(WeylOp p, const Rational& c);
  friend WeylOp operator*(const Rational& c, WeylOp p) { return std::move(p) * c; }
  /// Composition p*q normalized with d/dT * f = f' + f * d/dT.
  friend WeylOp operator*(const WeylOp& p, const WeylOp& q);
  friend bool operator==(const WeylOp&, const WeylOp&) = default;

  /// Removes a left factor T^j when every coefficient is divisible by it.
  /// Throws std::domain_error otherwise.
  WeylOp divide_left_t(int j) const;

  /// "1 - T - T*d" style text: derivative orders ascending, T powers ascending.
  std::string str() const;

 private:
  std::map<int, Poly> terms_;
};

WeylOp weyl_add(const WeylOp& p, const WeylOp& q);
WeylOp weyl_mul(const WeylOp& p, const WeylOp& q);

/// Action on a truncated series; each d/dT costs one order of the bound.
RSeries weyl_apply_series(const WeylOp& p, const RSeries& x);

/// d/dT (B^n(bT) e^{aT}) = ((a + n/T) - nb) B^n(bT) e^{aT} - (n/T) B^{n+1}(bT) e^{aT}.
BElement lucas_derivative(int n, const Rational& b, const Rational& a);

/// d/dT of T^m B^n(bT) e^{aT}, by the product rule around lucas_derivative.
BElement derivative_of_atom(const Atom& at);

BElement derivative(const BElement& x);

/// Action on the ring: stays inside it.
BElement weyl_apply_element(const WeylOp& p, const BElement& x);

}  // namespace bernalg
