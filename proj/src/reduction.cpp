#include "bernalg/reduction.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bernalg/partial_fractions.hpp"

namespace bernalg {

WeylOp DCombination::op(const Atom& generator) const {
  auto it = terms_.find(generator);
  return it == terms_.end() ? WeylOp{} : it->second;
}

void DCombination::add(const Atom& generator, const WeylOp& op) {
  if (generator.n() > 1 || generator.m() > 0) {
    throw std::invalid_argument("D-combination generators need B-power <= 1 and no positive T power");
  }
  if (op.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(generator, op);
  if (inserted) return;
  it->second += op;
  if (it->second.is_zero()) terms_.erase(it);
}

BElement to_element(const DCombination& d) {
  BElement r;
  for (const auto& [g, op] : d.terms()) r += weyl_apply_element(op, BElement(g));
  return r;
}

bool semantically_equal(const DCombination& d, const BElement& x) { return elem_equal(to_element(d), x); }

Lowered lower_order(const Atom& at) {
  if (at.n() < 2) throw std::invalid_argument("lower_order needs B-power >= 2");
  const int k = at.n() - 1;
  const Rational inv_k(1, k);
  // T^m B^{k+1} e^{aT} = T^m (1 - bT + aT/k - (T/k) d)(B^k e^{aT}). For m < 0 the
  // T^m is kept in the generator and the operator is conjugated by T^m, which
  // turns -(T/k) d into m/k - (T/k) d.
  const int outer = std::max(at.m(), 0);
  const int inner = std::min(at.m(), 0);
  WeylOp op = WeylOp(Poly{Rational(1) + Rational(inner) * inv_k, at.a() * inv_k - at.b()}) -
              WeylOp::term(inv_k, 1, 1);
  if (outer > 0) op = WeylOp::t(outer) * op;
  return {Atom::make(inner, k, at.b(), at.a()), op};
}

DCombination reduce_to_first_order(const BElement& x) {
  DCombination out;
  for (const auto& [atom, c] : x.terms()) {
    Atom gen = atom.m() >= 0 ? atom.generator() : atom;
    WeylOp op = atom.m() >= 0 ? WeylOp::term(c, atom.m(), 0) : WeylOp(Poly(c));
    while (gen.n() >= 2) {
      Lowered step = lower_order(gen);
      op = op * step.op;
      gen = step.generator;
    }
    out.add(gen, op);
  }
  return out;
}

namespace {

Atom b_atom(int n, const Rational& b) { return Atom::make(0, n, b, Rational(0)); }

BElement mul_atoms(const Atom& x, const Atom& y, const std::optional<Rational>& measure_limit);

// B^{n1}(b1 T) B^{n2}(b2 T) for distinct scales. Every recursive call carries
// the measure n1*b1 + n2*b2 of its parent, which must strictly decrease.
BElement core_product(int n1, const Rational& b1, int n2, const Rational& b2,
                      const std::optional<Rational>& measure_limit) {
  const Rational measure = Rational(n1) * b1 + Rational(n2) * b2;
  if (measure_limit && !(measure < *measure_limit)) {
    throw std::logic_error("product reduction measure failed to decrease");
  }
  const Integer q_big = lcm(b1.den().get_si(), b2.den().get_si());
  const long q = q_big.get_si();
  const long p1 = (b1 * Rational(q)).to_long();
  const long p2 = (b2 * Rational(q)).to_long();
  const Rational inv_q(1, q);

  auto check_outputs = [&](const BElement& r) {
    for (const auto& [a, c] : r.terms()) {
      if (!(Rational(a.n()) * a.b() < measure)) throw std::logic_error("relation step did not lower the measure");
    }
    return r;
  };

  // B^k(l U) B(n U) with l | n, U = T/q, X = e^U:
  //   = l^k U^k B(nU) f(X) + (n/l) B^{k+1}(lU) h(X)
  auto divisor_case = [&](int k, long l, const Rational& bl, long n, const Rational& bn) {
    const HFPair hf = h_f(k, static_cast<int>(l), static_cast<int>(n));
    BElement r;
    const Rational lead = bl.pow(k);
    for (int j = 0; j <= hf.f.degree(); ++j) r.add_term(Atom::make(k, 1, bn, Rational(j) * inv_q), lead * hf.f.coeff(j));
    const Rational ratio(n, l);
    for (int j = 0; j <= hf.h.degree(); ++j) r.add_term(Atom::make(0, k + 1, bl, Rational(j) * inv_q), ratio * hf.h.coeff(j));
    return check_outputs(r);
  };

  // B(p1 U) B(p2 U) = B^2(lU) + p1 U B(p2 U) g_{p2,p1}(X) + p2 U B(p1 U) g_{p1,p2}(X)
  auto coprime_case = [&]() {
    const GPair g = g_pair(static_cast<int>(p1), static_cast<int>(p2));
    BElement r;
    r.add_term(b_atom(2, Rational(g.l) * inv_q), Rational(1));
    for (int j = 0; j <= g.g_nm.degree(); ++j) r.add_term(Atom::make(1, 1, b2, Rational(j) * inv_q), b1 * g.g_nm.coeff(j));
    for (int j = 0; j <= g.g_mn.degree(); ++j) r.add_term(Atom::make(1, 1, b1, Rational(j) * inv_q), b2 * g.g_mn.coeff(j));
    return check_outputs(r);
  };

  // Multiplies each atom of `partial` by B^{power}(scale T).
  auto times_power = [&](const BElement& partial, int power, const Rational& scale) {
    BElement r;
    const Atom extra = b_atom(power, scale);
    for (const auto& [a, c] : partial.terms()) r += mul_atoms(a, extra, measure) * c;
    return r;
  };

  if (p2 % p1 == 0) {
    if (n2 == 1) return divisor_case(n1, p1, b1, p2, b2);
    return times_power(core_product(n1, b1, 1, b2, measure), n2 - 1, b2);
  }
  if (p1 % p2 == 0) {
    if (n1 == 1) return divisor_case(n2, p2, b2, p1, b1);
    return times_power(core_product(1, b1, n2, b2, measure), n1 - 1, b1);
  }
  if (n1 == 1 && n2 == 1) return coprime_case();
  if (n2 >= 2) return times_power(core_product(n1, b1, 1, b2, measure), n2 - 1, b2);
  return times_power(core_product(1, b1, n2, b2, measure), n1 - 1, b1);
}

BElement mul_atoms(const Atom& x, const Atom& y, const std::optional<Rational>& measure_limit) {
  const int m = x.m() + y.m();
  const Rational a = x.a() + y.a();
  if (x.n() == 0) return BElement(Atom::make(m, y.n(), y.b(), a));
  if (y.n() == 0) return BElement(Atom::make(m, x.n(), x.b(), a));
  if (x.b() == y.b()) return BElement(Atom::make(m, x.n() + y.n(), x.b(), a));
  return core_product(x.n(), x.b(), y.n(), y.b(), measure_limit).mul_monomial(m, a);
}

}  // namespace

BElement product_reduce(const BElement& x, const BElement& y) {
  BElement r;
  for (const auto& [ax, cx] : x.terms()) {
    for (const auto& [ay, cy] : y.terms()) r += mul_atoms(ax, ay, std::nullopt) * (cx * cy);
  }
  return r;
}

BElement negative_power_expand(int k) {
  if (k < 1) throw std::invalid_argument("negative_power_expand needs k >= 1");
  BElement r;
  for (int j = 0; j <= k; ++j) {
    r.add_term(Atom::make(-k, 0, Rational(1), Rational(j)), binomial(k, j) * Rational((k - j) % 2 == 0 ? 1 : -1));
  }
  return r;
}

namespace {

class StirlingTable {
 public:
  static StirlingTable& instance() {
    static StirlingTable t;
    return t;
  }

  Integer get(int n, int j) {
    if (n < 0 || j < 0 || j > n) return 0;
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      const std::size_t r = rows_.size();
      std::vector<Integer> row(r + 1);
      if (r == 0) {
        row[0] = 1;
      } else {
        const auto& prev = rows_[r - 1];
        for (std::size_t i = 1; i <= r; ++i) {
          Integer left = prev[i - 1];
          Integer stay = i < prev.size() ? prev[i] * static_cast<unsigned long>(i) : Integer(0);
          row[i] = left + stay;
        }
      }
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

}  // namespace

Integer stirling(int n, int j) { return StirlingTable::instance().get(n, j); }

BiPoly f_n_closed(int n) {
  if (n < 0) throw std::invalid_argument("f_n needs n >= 0");
  BiPoly r;
  const Rational sign(n % 2 == 0 ? 1 : -1);
  for (int j = 1; j <= n + 1; ++j) {
    const Rational fact(factorial(static_cast<unsigned long>(j - 1)));
    r.add_term(sign * fact * Rational(stirling(n + 1, j)), n - j + 1, j);
    const Integer s = stirling(n, j);
    if (s != 0) r.add_term(-sign * fact * Rational(n) * Rational(s), n - j, j);
  }
  return r;
}

BiPoly f_n_inductive(int n) {
  if (n < 0) throw std::invalid_argument("f_n needs n >= 0");
  BiPoly f = BiPoly::monomial(Rational(1), 0, 1);
  for (int k = 1; k <= n; ++k) {
    const BiPoly dv = f.d_v();
    f = f * Rational(1 - k) + f.d_u().shift(1, 0) + dv.shift(0, 1) - dv.shift(1, 1) - dv.shift(0, 2);
  }
  return f;
}

BElement substitute_t_b(const BiPoly& p) {
  BElement r;
  for (const auto& [mono, c] : p.terms()) r.add_term(Atom::make(mono.first, mono.second, Rational(1), Rational(0)), c);
  return r;
}

DCombination agoh_dilcher_reduce(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("derivative orders must be nonnegative");
  return reduce_to_first_order(substitute_t_b(f_n_closed(m) * f_n_closed(n)));
}

}  // namespace bernalg
