#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "bernalg/rational.hpp"
#include "bernalg/series.hpp"

namespace bernalg {

/// The generator T^m B^n(bT) e^{aT}. Always b > 0, and b = 1 when n = 0.
/// Build through Atom::make or atom_normalize.
class Atom {
 public:
  Atom() = default;
  /// Requires b > 0 and n >= 0; throws std::invalid_argument otherwise.
  static Atom make(int m, int n, const Rational& b, const Rational& a);
  static Atom B() { return make(0, 1, Rational(1), Rational(0)); }

  int m() const { return m_; }
  int n() const { return n_; }
  const Rational& b() const { return b_; }
  const Rational& a() const { return a_; }

  /// Multiplied by T^k e^{shift*T}.
  Atom shifted(int k, const Rational& shift) const { return make(m_ + k, n_, b_, a_ + shift); }
  /// Same (n, b, a) with m = 0.
  Atom generator() const { return make(0, n_, b_, a_); }

  friend bool operator==(const Atom&, const Atom&) = default;
  /// Ascending by (b, n, m, a).
  friend std::strong_ordering operator<=>(const Atom& x, const Atom& y);

 private:
  int m_ = 0;
  int n_ = 0;
  Rational b_{1};
  Rational a_{0};
};

/// Finite Q-linear combination of atoms: an element of the ring of
/// Bernoulli-type Laurent series. Equality of values is semantic (see
/// elem_equal); operator== compares representations.
class BElement {
 public:
  BElement() = default;
  BElement(const Atom& atom, const Rational& c = Rational(1));  // NOLINT(google-explicit-constructor)
  static BElement constant(const Rational& c) { return BElement(Atom::make(0, 0, 1, 0), c); }

  const std::map<Atom, Rational>& terms() const { return terms_; }
  bool is_empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Atom& a) const;
  void add_term(const Atom& a, const Rational& c);

  BElement operator-() const;
  BElement& operator+=(const BElement& o);
  BElement& operator-=(const BElement& o);
  BElement& operator*=(const Rational& c);
  friend BElement operator+(BElement x, const BElement& y) { return x += y; }
  friend BElement operator-(BElement x, const BElement& y) { return x -= y; }
  friend BElement operator*(BElement x, const Rational& c) { return x *= c; }
  friend BElement operator*(const Rational& c, BElement x) { return x *= c; }
  friend bool operator==(const BElement&, const BElement&) = default;

  /// Multiplied by T^k e^{shift*T}.
  BElement mul_monomial(int k, const Rational& shift) const;

  int max_n() const;
  int min_m() const;

 private:
  std::map<Atom, Rational> terms_;
};

/// T^m B^n(bT) e^{aT} for any nonzero b. For b < 0 uses B(-T) = B(T) + T
/// to rewrite into atoms with positive scale. Throws on b = 0 or n < 0.
BElement atom_normalize(int m, int n, const Rational& b, const Rational& a);

BElement elem_add(const BElement& x, const BElement& y);
BElement elem_scale(const Rational& c, const BElement& x);
BElement elem_mul_monomial(const BElement& x, int k, const Rational& shift);

/// Laurent expansion exact up to T^bound.
RSeries expand(const BElement& x, int bound);
RSeries expand_atom(const Atom& atom, int bound);

/// Sparse Laurent polynomial in T: exponent -> coefficient.
using LaurentPoly = std::map<int, Rational>;

/// sum_c p_c(T) e^{cT}; zero iff empty since distinct exponentials are
/// linearly independent over Q(T).
struct ExpPoly {
  std::map<Rational, LaurentPoly> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Rational& exponent, int t_power, const Rational& c);
  std::string str() const;
};

/// The nonzero series prod_b (e^{bT} - 1)^{M_b} used to clear B denominators.
struct ClearingMultiplier {
  std::map<Rational, int> powers;  // scale b -> M_b
  std::string str() const;
};

struct ExpPolyForm {
  ExpPoly numerator;
  ClearingMultiplier multiplier;
};

/// x * D as an exponential polynomial, where D clears every B(bT) factor.
ExpPolyForm to_exp_poly(const BElement& x);

/// Exact decision whether x is the zero series.
bool is_zero_exact(const BElement& x);

bool elem_equal(const BElement& x, const BElement& y);

}  // namespace bernalg
