#include "bernalg/bipoly.hpp"

#include <sstream>

namespace bernalg {

BiPoly BiPoly::monomial(const Rational& c, int i, int j) {
  BiPoly p;
  p.add_term(c, i, j);
  return p;
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational{} : it->second;
}

void BiPoly::add_term(const Rational& c, int i, int j) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(c, mono.first, mono.second);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(-c, mono.first, mono.second);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, x] : terms_) x *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma.first + mb.first, ma.second + mb.second);
  }
  return r;
}

BiPoly BiPoly::d_u() const {
  BiPoly r;
  for (const auto& [mono, c] : terms_) {
    if (mono.first != 0) r.add_term(c * Rational(mono.first), mono.first - 1, mono.second);
  }
  return r;
}

BiPoly BiPoly::d_v() const {
  BiPoly r;
  for (const auto& [mono, c] : terms_) {
    if (mono.second != 0) r.add_term(c * Rational(mono.second), mono.first, mono.second - 1);
  }
  return r;
}

BiPoly BiPoly::shift(int i, int j) const {
  BiPoly r;
  for (const auto& [mono, c] : terms_) r.add_term(c, mono.first + i, mono.second + j);
  return r;
}

bool BiPoly::has_integer_coefficients() const {
  for (const auto& [mono, c] : terms_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rational mag = c.abs();
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    bool any = false;
    if (!mag.is_one() || (mono.first == 0 && mono.second == 0)) {
      os << mag;
      any = true;
    }
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      os << (any ? "*" : "") << name;
      if (e != 1) os << '^' << e;
      any = true;
    };
    var("U", mono.first);
    var("V", mono.second);
  }
  return os.str();
}

}  // namespace bernalg
