#include "bernalg/bfrak.hpp"

#include <sstream>
#include <stdexcept>

#include "bernalg/bernoulli.hpp"

namespace bernalg {

Atom Atom::make(int m, int n, const Rational& b, const Rational& a) {
  if (n < 0) throw std::invalid_argument("atom with negative power of B");
  if (n > 0 && b.sign() <= 0) throw std::invalid_argument("atom scale must be positive, got " + b.str());
  Atom at;
  at.m_ = m;
  at.n_ = n;
  at.b_ = n == 0 ? Rational(1) : b;
  at.a_ = a;
  return at;
}

std::strong_ordering operator<=>(const Atom& x, const Atom& y) {
  if (auto c = x.b_ <=> y.b_; c != 0) return c;
  if (auto c = x.n_ <=> y.n_; c != 0) return c;
  if (auto c = x.m_ <=> y.m_; c != 0) return c;
  return x.a_ <=> y.a_;
}

BElement::BElement(const Atom& atom, const Rational& c) { add_term(atom, c); }

Rational BElement::coeff(const Atom& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational{} : it->second;
}

void BElement::add_term(const Atom& a, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BElement BElement::operator-() const {
  BElement r = *this;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

BElement& BElement::operator+=(const BElement& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

BElement& BElement::operator-=(const BElement& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

BElement& BElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, x] : terms_) x *= c;
  return *this;
}

BElement BElement::mul_monomial(int k, const Rational& shift) const {
  BElement r;
  for (const auto& [a, c] : terms_) r.add_term(a.shifted(k, shift), c);
  return r;
}

int BElement::max_n() const {
  int n = 0;
  for (const auto& [a, c] : terms_) n = std::max(n, a.n());
  return n;
}

int BElement::min_m() const {
  int m = 0;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    m = first ? a.m() : std::min(m, a.m());
    first = false;
  }
  return m;
}

BElement atom_normalize(int m, int n, const Rational& b, const Rational& a) {
  if (b.is_zero()) throw std::invalid_argument("atom scale must be nonzero");
  if (n < 0) throw std::invalid_argument("atom with negative power of B");
  if (b.sign() > 0 || n == 0) return BElement(Atom::make(m, n, b, a));
  // B(-cT) = B(cT) + cT, so B^n(-cT) = sum_j C(n,j) (cT)^j B^{n-j}(cT).
  const Rational c = -b;
  BElement r;
  for (int j = 0; j <= n; ++j) r.add_term(Atom::make(m + j, n - j, c, a), binomial(n, j) * c.pow(j));
  return r;
}

BElement elem_add(const BElement& x, const BElement& y) { return x + y; }
BElement elem_scale(const Rational& c, const BElement& x) { return c * x; }
BElement elem_mul_monomial(const BElement& x, int k, const Rational& shift) { return x.mul_monomial(k, shift); }

RSeries expand_atom(const Atom& atom, int bound) {
  const int inner = bound - atom.m();
  if (inner < 0) return RSeries::zero(bound);
  RSeries e = exp_linear(atom.a(), inner);
  if (atom.n() == 0) return e.shift(atom.m());
  RSeries p = bernoulli_power_series(atom.n(), inner);
  if (!atom.b().is_one()) p = p.scale_arg(atom.b());
  return (p * e).shift(atom.m());
}

RSeries expand(const BElement& x, int bound) {
  RSeries r = RSeries::zero(bound);
  for (const auto& [a, c] : x.terms()) r = r + expand_atom(a, bound) * c;
  return r;
}

void ExpPoly::add_term(const Rational& exponent, int t_power, const Rational& c) {
  if (c.is_zero()) return;
  auto& poly = terms[exponent];
  auto [it, inserted] = poly.try_emplace(t_power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) poly.erase(it);
  }
  if (poly.empty()) terms.erase(exponent);
}

std::string ExpPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, poly] : terms) {
    if (!first) os << " + ";
    first = false;
    os << '(';
    bool inner_first = true;
    for (const auto& [k, c] : poly) {
      if (!inner_first) os << " + ";
      inner_first = false;
      os << c << "*T^" << k;
    }
    os << ")*e^{" << e << "T}";
  }
  return os.str();
}

std::string ClearingMultiplier::str() const {
  if (powers.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, k] : powers) {
    if (!first) os << '*';
    first = false;
    os << "(e^{" << b << "T}-1)";
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

namespace {

// exponent -> coefficient, a sum of pure exponentials.
using ExpSum = std::map<Rational, Rational>;

ExpSum exp_sum_mul(const ExpSum& x, const ExpSum& y) {
  ExpSum r;
  for (const auto& [ex, cx] : x) {
    for (const auto& [ey, cy] : y) {
      auto& slot = r[ex + ey];
      slot += cx * cy;
    }
  }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

// (e^{bT} - 1)^k
ExpSum exp_minus_one_pow(const Rational& b, int k) {
  ExpSum r;
  for (int j = 0; j <= k; ++j) r[b * Rational(j)] = binomial(k, j) * Rational((k - j) % 2 == 0 ? 1 : -1);
  return r;
}

}  // namespace

ExpPolyForm to_exp_poly(const BElement& x) {
  ExpPolyForm out;
  auto& powers = out.multiplier.powers;
  for (const auto& [a, c] : x.terms()) {
    if (a.n() > 0) powers[a.b()] = std::max(powers[a.b()], a.n());
  }

  // Cofactor of an atom with scale b and power n: (e^{bT}-1)^{M_b-n} times the
  // full factors for every other scale. n = 0 atoms take the whole product.
  std::map<std::pair<Rational, int>, ExpSum> cofactors;
  auto cofactor = [&](const Rational& b, int n) -> const ExpSum& {
    auto key = std::make_pair(n == 0 ? Rational(0) : b, n);
    auto it = cofactors.find(key);
    if (it != cofactors.end()) return it->second;
    ExpSum acc{{Rational(0), Rational(1)}};
    for (const auto& [scale, mb] : powers) {
      const int e = (n > 0 && scale == b) ? mb - n : mb;
      if (e > 0) acc = exp_sum_mul(acc, exp_minus_one_pow(scale, e));
    }
    return cofactors.emplace(key, std::move(acc)).first->second;
  };

  for (const auto& [a, c] : x.terms()) {
    const ExpSum& cf = cofactor(a.b(), a.n());
    const Rational lead = c * a.b().pow(a.n());
    for (const auto& [e, k] : cf) out.numerator.add_term(a.a() + e, a.m() + a.n(), lead * k);
  }
  return out;
}

bool is_zero_exact(const BElement& x) { return to_exp_poly(x).numerator.is_zero(); }

bool elem_equal(const BElement& x, const BElement& y) { return is_zero_exact(x - y); }

}  // namespace bernalg
