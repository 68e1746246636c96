#pragma once

#include <algorithm>
#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bernalg/poly.hpp"
#include "bernalg/rational.hpp"

namespace bernalg {

/// Raised when a coefficient is requested beyond the exponent up to which a
/// series is known exactly. The caller has to re-expand at a higher bound.
class InsufficientOrder : public std::out_of_range {
 public:
  InsufficientOrder(int requested, int bound)
      : std::out_of_range("coefficient T^" + std::to_string(requested) + " requested, series exact only up to T^" +
                          std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}
  int requested() const { return requested_; }
  int bound() const { return bound_; }

 private:
  int requested_;
  int bound_;
};

/// Coefficient domains a Series can carry: Q itself, or Q[s].
template <class C>
concept SeriesCoeff = std::same_as<C, Rational> || std::same_as<C, Poly>;

/// Truncated Laurent series sum_{i=low}^{bound} c_i T^i whose coefficients
/// are exact for every exponent <= bound. Leading zeros are stripped, so
/// valuation() is the first nonzero exponent; a series known to vanish up to
/// its bound has no stored coefficients and valuation bound+1.
///
/// Every operation derives the bound of its result from the bounds of its
/// inputs; nothing is ever silently truncated.
template <SeriesCoeff C>
class Series {
 public:
  /// Zero, known up to T^bound.
  static Series zero(int bound) { return Series(bound + 1, bound, {}); }

  /// c*T^k, exact up to T^bound.
  static Series monomial(const C& c, int k, int bound) {
    if (k > bound) return zero(bound);
    std::vector<C> v(static_cast<std::size_t>(bound - k + 1));
    v[0] = c;
    return Series(k, bound, std::move(v));
  }

  /// Coefficients for T^low, T^(low+1), ... with the given bound; entries
  /// past the bound are dropped, missing ones are zero.
  static Series from_coeffs(int low, std::vector<C> coeffs, int bound) {
    if (bound < low) return zero(bound);
    coeffs.resize(static_cast<std::size_t>(bound - low + 1));
    return Series(low, bound, std::move(coeffs));
  }

  int valuation() const { return low_; }
  int bound() const { return bound_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Exact coefficient of T^i. Throws InsufficientOrder past the bound.
  C coeff(int i) const {
    if (i > bound_) throw InsufficientOrder(i, bound_);
    if (i < low_) return C{};
    return coeffs_[static_cast<std::size_t>(i - low_)];
  }

  /// Lowers the bound (never raises it).
  Series truncate(int bound) const {
    if (bound >= bound_) return *this;
    if (bound < low_) return zero(bound);
    std::vector<C> v(coeffs_.begin(), coeffs_.begin() + (bound - low_ + 1));
    return Series(low_, bound, std::move(v));
  }

  /// Multiplication by T^k.
  Series shift(int k) const { return Series(low_ + k, bound_ + k, coeffs_); }

  Series operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Series operator+(const Series& x, const Series& y) { return add(x, y, false); }
  friend Series operator-(const Series& x, const Series& y) { return add(x, y, true); }

  friend Series operator*(const Series& x, const Series& y) {
    const int low = x.low_ + y.low_;
    const int bound = std::min(x.bound_ + y.low_, y.bound_ + x.low_);
    if (x.is_zero() || y.is_zero() || bound < low) return zero(bound);
    const std::size_t len = static_cast<std::size_t>(bound - low + 1);
    std::vector<C> r(len);
    for (std::size_t i = 0; i < len && i < x.coeffs_.size(); ++i) {
      if (is_zero_coeff(x.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < len && j < y.coeffs_.size(); ++j) r[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return Series(low, bound, std::move(r));
  }

  friend Series operator*(const Series& x, const Rational& c) {
    if (c.is_zero()) return zero(x.bound_);
    Series r = x;
    for (auto& v : r.coeffs_) v = v * c;
    return r;
  }
  friend Series operator*(const Rational& c, const Series& x) { return x * c; }

  /// Multiplication by an exact polynomial in T (coefficients in Q).
  Series mul_poly(const Poly& p) const {
    if (p.is_zero()) return zero(bound_ + 0);
    Series r = zero(bound_ + p.low_degree());
    for (int j = 0; j <= p.degree(); ++j) {
      if (p.coeff(j).is_zero()) continue;
      r = r + shift(j) * p.coeff(j);
    }
    return r;
  }

  /// Termwise d/dT; the bound drops by one.
  Series derivative() const {
    std::vector<C> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      v[i] = coeffs_[i] * Rational(low_ + static_cast<int>(i));
    }
    // Exponent low_ - 1 + i holds the derivative of T^(low_ + i).
    if (bound_ - 1 < low_ - 1) return zero(bound_ - 1);
    v.resize(static_cast<std::size_t>(bound_ - low_ + 1));
    return Series(low_ - 1, bound_ - 1, std::move(v));
  }

  /// Argument scaling T -> b*T: coefficient of T^i gets multiplied by b^i.
  Series scale_arg(const C& b) const {
    if (is_zero_coeff(b)) throw std::invalid_argument("argument scale must be nonzero");
    Series r = *this;
    C power = pow_coeff(b, low_);
    for (auto& c : r.coeffs_) {
      c = c * power;
      power = power * b;
    }
    r.normalize();
    return r;
  }

  /// n-th power by repeated squaring (n >= 0).
  Series pow(int n, int bound_if_empty) const {
    if (n < 0) throw std::invalid_argument("negative series power");
    Series r = monomial(one(), 0, bound_if_empty);
    Series base = *this;
    while (n > 0) {
      if (n & 1) r = r * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return r;
  }

  /// Multiplicative inverse over Q. Valuation becomes -v, bound N - 2v.
  Series inverse() const
    requires std::same_as<C, Rational>
  {
    if (is_zero()) throw std::domain_error("inverse of a series that vanishes up to its bound");
    const std::size_t len = coeffs_.size();
    std::vector<Rational> w(len);
    const Rational lead_inv = coeffs_[0].inverse();
    w[0] = lead_inv;
    for (std::size_t t = 1; t < len; ++t) {
      Rational acc;
      for (std::size_t i = 1; i <= t; ++i) {
        if (!coeffs_[i].is_zero()) acc += coeffs_[i] * w[t - i];
      }
      w[t] = -acc * lead_inv;
    }
    return Series(-low_, bound_ - 2 * low_, std::move(w));
  }

  /// True when both series agree at every exponent up to min(bound).
  friend bool agree(const Series& x, const Series& y) {
    const int n = std::min(x.bound_, y.bound_);
    for (int i = std::min(x.low_, y.low_); i <= n; ++i) {
      if (!(x.coeff(i) == y.coeff(i))) return false;
    }
    return true;
  }

  /// Lifts a rational series into Q[s] coefficients.
  Series<Poly> to_poly_coeffs() const
    requires std::same_as<C, Rational>
  {
    std::vector<Poly> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.emplace_back(c);
    return Series<Poly>::from_coeffs(low_, std::move(v), bound_);
  }

  const std::vector<C>& raw_coeffs() const { return coeffs_; }

 private:
  template <SeriesCoeff>
  friend class Series;

  Series(int low, int bound, std::vector<C> coeffs) : low_(low), bound_(bound), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static bool is_zero_coeff(const C& c) { return c.is_zero(); }
  static C one() { return C(Rational(1)); }
  static C pow_coeff(const C& b, int e) {
    if constexpr (std::same_as<C, Rational>) {
      return b.pow(e);
    } else {
      if (e < 0) throw std::invalid_argument("negative power of a polynomial coefficient");
      return b.pow(e);
    }
  }

  static Series add(const Series& x, const Series& y, bool subtract) {
    const int bound = std::min(x.bound_, y.bound_);
    const int low = std::min(x.low_, y.low_);
    if (bound < low) return zero(bound);
    std::vector<C> r(static_cast<std::size_t>(bound - low + 1));
    for (int i = x.low_; i <= bound && i - x.low_ < static_cast<int>(x.coeffs_.size()); ++i) {
      r[static_cast<std::size_t>(i - low)] += x.coeffs_[static_cast<std::size_t>(i - x.low_)];
    }
    for (int i = y.low_; i <= bound && i - y.low_ < static_cast<int>(y.coeffs_.size()); ++i) {
      if (subtract) {
        r[static_cast<std::size_t>(i - low)] -= y.coeffs_[static_cast<std::size_t>(i - y.low_)];
      } else {
        r[static_cast<std::size_t>(i - low)] += y.coeffs_[static_cast<std::size_t>(i - y.low_)];
      }
    }
    return Series(low, bound, std::move(r));
  }

  void normalize() {
    std::size_t skip = 0;
    while (skip < coeffs_.size() && is_zero_coeff(coeffs_[skip])) ++skip;
    if (skip == coeffs_.size()) {
      coeffs_.clear();
      low_ = bound_ + 1;
      return;
    }
    if (skip > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(skip));
      low_ += static_cast<int>(skip);
    }
  }

  int low_ = 1;
  int bound_ = 0;
  std::vector<C> coeffs_;
};

using RSeries = Series<Rational>;
using SSeries = Series<Poly>;

}  // namespace bernalg
