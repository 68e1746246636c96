#include "bernalg/weyl.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace bernalg {

WeylOp::WeylOp(const Poly& f) { add(0, f); }

WeylOp WeylOp::term(const Rational& c, int j, int k) {
  WeylOp op;
  op.add(k, Poly::monomial(c, j));
  return op;
}

Poly WeylOp::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Poly{} : it->second;
}

void WeylOp::add(int k, const Poly& f) {
  if (k < 0) throw std::invalid_argument("negative derivative order");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylOp WeylOp::operator-() const {
  WeylOp r = *this;
  for (auto& [k, f] : r.terms_) f = -f;
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  for (const auto& [k, f] : o.terms_) add(k, f);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  for (const auto& [k, f] : o.terms_) add(k, -f);
  return *this;
}

WeylOp operator*(WeylOp p, const Rational& c) {
  if (c.is_zero()) return {};
  for (auto& [k, f] : p.terms_) f *= c;
  return p;
}

WeylOp operator*(const WeylOp& p, const WeylOp& q) {
  // (f d^i)(g d^j) = f * sum_r C(i,r) g^{(r)} d^{i-r+j}
  WeylOp r;
  for (const auto& [i, f] : p.terms_) {
    for (const auto& [j, g] : q.terms_) {
      Poly gr = g;
      for (int s = 0; s <= i && !gr.is_zero(); ++s) {
        r.add(i - s + j, f * gr * binomial(i, s));
        gr = gr.derivative();
      }
    }
  }
  return r;
}

WeylOp WeylOp::divide_left_t(int j) const {
  const Poly tj = Poly::monomial(1, j);
  WeylOp r;
  for (const auto& [k, f] : terms_) {
    auto [q, rem] = poly_divrem(f, tj);
    if (!rem.is_zero()) throw std::domain_error("operator coefficient " + f.str("T") + " not divisible by T^" + std::to_string(j));
    r.add(k, q);
  }
  return r;
}

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, f] : terms_) {
    for (int j = 0; j <= f.degree(); ++j) {
      const Rational c = f.coeff(j);
      if (c.is_zero()) continue;
      const Rational mag = c.abs();
      os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
      first = false;
      bool any = false;
      if (!mag.is_one() || (j == 0 && k == 0)) {
        os << mag;
        any = true;
      }
      if (j > 0) {
        os << (any ? "*" : "") << 'T';
        if (j > 1) os << '^' << j;
        any = true;
      }
      if (k > 0) {
        os << (any ? "*" : "") << 'd';
        if (k > 1) os << '^' << k;
      }
    }
  }
  return os.str();
}

WeylOp weyl_add(const WeylOp& p, const WeylOp& q) { return p + q; }
WeylOp weyl_mul(const WeylOp& p, const WeylOp& q) { return p * q; }

RSeries weyl_apply_series(const WeylOp& p, const RSeries& x) {
  if (p.is_zero()) return RSeries::zero(x.bound());
  std::optional<RSeries> acc;
  RSeries dx = x;
  int current = 0;
  for (const auto& [k, f] : p.terms()) {
    for (; current < k; ++current) dx = dx.derivative();
    RSeries term = dx.mul_poly(f);
    acc = acc ? *acc + term : term;
  }
  return *acc;
}

BElement lucas_derivative(int n, const Rational& b, const Rational& a) {
  BElement r;
  r.add_term(Atom::make(0, n, b, a), a - Rational(n) * b);
  if (n > 0) {
    r.add_term(Atom::make(-1, n, b, a), Rational(n));
    r.add_term(Atom::make(-1, n + 1, b, a), Rational(-n));
  }
  return r;
}

BElement derivative_of_atom(const Atom& at) {
  BElement r;
  if (at.m() != 0) r.add_term(at.shifted(-1, Rational(0)), Rational(at.m()));
  r += lucas_derivative(at.n(), at.b(), at.a()).mul_monomial(at.m(), Rational(0));
  return r;
}

BElement derivative(const BElement& x) {
  BElement r;
  for (const auto& [a, c] : x.terms()) r += derivative_of_atom(a) * c;
  return r;
}

BElement weyl_apply_element(const WeylOp& p, const BElement& x) {
  BElement acc;
  BElement dx = x;
  int current = 0;
  for (const auto& [k, f] : p.terms()) {
    for (; current < k; ++current) dx = derivative(dx);
    for (int j = 0; j <= f.degree(); ++j) {
      if (!f.coeff(j).is_zero()) acc += dx.mul_monomial(j, Rational(0)) * f.coeff(j);
    }
  }
  return acc;
}

}  // namespace bernalg
