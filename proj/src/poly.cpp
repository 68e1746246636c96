#include "bernalg/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace bernalg {

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (c.is_zero()) return {};
  if (degree < 0) throw std::invalid_argument("negative polynomial exponent");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return is_zero() ? Rational{} : coeffs_.back(); }

int Poly::low_degree() const {
  for (int i = 0; i <= degree(); ++i) {
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return i;
  }
  return degree() + 1;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly r(Rational(1)), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::eval(const Poly& x) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Poly(*it);
  return acc;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

std::pair<Poly, Poly> poly_divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < q.degree()) return {Poly{}, p};
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1);
  const Rational lead_inv = q.leading().inverse();
  const int dq = q.degree();
  for (int i = p.degree(); i >= dq; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dq)] = c;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(i - dq + j)] -= c * q.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_exact_div(const Poly& p, const Poly& q) {
  auto [quot, rem] = poly_divrem(p, q);
  if (!rem.is_zero()) throw std::logic_error("inexact polynomial division, remainder " + rem.str());
  return quot;
}

GcdExt poly_gcd_ext(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  // Invariant: r0 = s0*p + t0*q, r1 = s1*p + t1*q.
  Poly r0 = p, r1 = q;
  Poly s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [quot, rem] = poly_divrem(r0, r1);
    r0 = std::exchange(r1, rem);
    s0 = std::exchange(s1, s0 - quot * s1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  Rational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly poly_inverse_mod(const Poly& p, const Poly& m) {
  if (m.degree() < 1) return {};
  auto [g, u, v] = poly_gcd_ext(poly_divrem(p, m).second, m);
  if (g.degree() != 0) throw std::domain_error("polynomial not invertible modulo " + m.str());
  return poly_divrem(u, m).second;
}

Poly poly_lcm(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  return poly_exact_div(p * q, poly_gcd_ext(p, q).g);
}

Poly poly_compose_power(const Poly& p, int l) {
  if (l < 1) throw std::invalid_argument("compose power needs l >= 1");
  if (p.is_zero() || l == 1) return p;
  std::vector<Rational> r(static_cast<std::size_t>(p.degree()) * static_cast<std::size_t>(l) + 1);
  for (int i = 0; i <= p.degree(); ++i) r[static_cast<std::size_t>(i) * static_cast<std::size_t>(l)] = p.coeff(i);
  return Poly(std::move(r));
}

Rational poly_eval(const Poly& p, const Rational& x) { return p.eval(x); }

Poly repunit(int n) { return Poly(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))); }

Poly x_pow_minus_one(int n) { return Poly::monomial(1, n) - Poly(Rational(1)); }

}  // namespace bernalg
