#include "bernalg/partial_fractions.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace bernalg {

namespace {

const Poly& x_minus_one() {
  static const Poly p{Rational(-1), Rational(1)};
  return p;
}

Poly mod(const Poly& p, const Poly& m) { return poly_divrem(p, m).second; }

}  // namespace

GPair g_pair(int m, int n) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("g_pair needs positive integers");
  if (m == n) throw std::invalid_argument("g_pair needs distinct integers, got m = n = " + std::to_string(m));
  const int l = static_cast<int>(gcd(m, n));
  const int mh = m / l;
  const int nh = n / l;
  const Poly rep_m = repunit(mh);
  const Poly rep_n = repunit(nh);

  // (X-1)*rep_m*rep_n times the defining identity, with the 1/(mn(X-1)) term
  // moved left:  (1 - rep_m*rep_n/(mn)) / (X-1) = g_nm*rep_m + g_mn*rep_n.
  const Poly rest = poly_exact_div(Poly(Rational(1)) - rep_m * rep_n * Rational(1, mh * nh), x_minus_one());
  Poly g_mn = mh == 1 ? Poly{} : mod(rest * poly_inverse_mod(rep_n, rep_m), rep_m);
  Poly g_nm = poly_exact_div(rest - g_mn * rep_n, rep_m);
  if (g_nm.degree() > nh - 2) throw std::logic_error("g_pair degree bound violated");
  return {m, n, l, poly_compose_power(g_mn, l), poly_compose_power(g_nm, l)};
}

Poly h_by_bezout(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("h_by_bezout needs positive k, n");
  return poly_inverse_mod(repunit(n), x_minus_one().pow(k));
}

HFPair h_f(int k, int l, int n) {
  if (k < 1 || l < 1 || n < 1) throw std::invalid_argument("h_f needs positive k, l, n");
  if (n % l != 0) throw std::invalid_argument("h_f needs l | n, got l = " + std::to_string(l) + ", n = " + std::to_string(n));
  if (l == n) throw std::invalid_argument("h_f needs l < n");
  const int nh = n / l;

  // h = sum_{t<k} a_t (X-1)^t with a_0 = 1/nh and
  // sum_{i<=t} a_i C(nh, t+1-i) = 0 for t >= 1.
  std::vector<Rational> a(static_cast<std::size_t>(k));
  const Rational inv_n = Rational(1, nh);
  a[0] = inv_n;
  for (int t = 1; t < k; ++t) {
    Rational acc;
    for (int i = 0; i < t; ++i) acc += a[static_cast<std::size_t>(i)] * binomial(nh, t + 1 - i);
    a[static_cast<std::size_t>(t)] = -acc * inv_n;
  }
  Poly h;
  Poly power(Rational(1));
  for (int t = 0; t < k; ++t) {
    h += power * a[static_cast<std::size_t>(t)];
    power = power * x_minus_one();
  }
  // f = (1 - rep*h)/(X-1)^k must divide exactly.
  Poly f = poly_exact_div(Poly(Rational(1)) - repunit(nh) * h, x_minus_one().pow(k));
  return {k, l, n, poly_compose_power(h, l), poly_compose_power(f, l)};
}

bool recombines(const GPair& p) {
  const Poly rep = repunit(p.m / p.l) * repunit(p.n / p.l);
  const Poly lhs = poly_compose_power(rep, p.l) * Rational(p.l * p.l, p.m * p.n) + p.g_nm * x_pow_minus_one(p.m) +
                   p.g_mn * x_pow_minus_one(p.n);
  return lhs == Poly(Rational(1));
}

bool recombines(const HFPair& p) {
  const Poly lhs = p.h * poly_compose_power(repunit(p.n / p.l), p.l) + p.f * x_pow_minus_one(p.l).pow(p.k);
  return lhs == Poly(Rational(1));
}

namespace {

// 1/((X^k1-1)^n1 (X^k2-1)^n2) for k1 != k2 as three fractions.
std::vector<FractionTerm> decompose_pair(int k1, int n1, int k2, int n2) {
  const int d = static_cast<int>(gcd(k1, k2));
  const Poly a = x_minus_one().pow(n1 + n2);
  const Poly p = repunit(k1 / d).pow(n1);
  const Poly q = repunit(k2 / d).pow(n2);
  // 1 = g0*p*q + g1*a*q + g2*a*p
  const Poly pq = p * q;
  const Poly g0 = poly_inverse_mod(pq, a);
  const Poly rest = poly_exact_div(Poly(Rational(1)) - g0 * pq, a);
  const Poly g1 = p.degree() < 1 ? Poly{} : mod(rest * poly_inverse_mod(q, p), p);
  const Poly g2 = poly_exact_div(rest - g1 * q, p);

  std::vector<FractionTerm> out;
  auto push = [&](Poly g, int m, int l) {
    if (!g.is_zero()) out.push_back({std::move(g), m, l});
  };
  push(poly_compose_power(g0, d), d, n1 + n2);
  push(x_pow_minus_one(d).pow(n1) * poly_compose_power(g1, d), k1, n1);
  push(x_pow_minus_one(d).pow(n2) * poly_compose_power(g2, d), k2, n2);
  return out;
}

Poly denominator(int m, int l) { return x_pow_minus_one(m).pow(l); }

}  // namespace

std::vector<FractionTerm> decompose_power_product(const std::vector<PowerFactor>& factors) {
  if (factors.empty()) throw std::invalid_argument("decompose_power_product needs at least one factor");
  std::map<int, int> merged;
  for (const auto& f : factors) {
    if (f.k < 1 || f.power < 1) throw std::invalid_argument("factor exponents must be positive");
    merged[f.k] += f.power;
  }

  auto it = merged.begin();
  std::map<std::pair<int, int>, Poly> acc{{{it->first, it->second}, Poly(Rational(1))}};
  for (++it; it != merged.end(); ++it) {
    const auto [k, power] = *it;
    std::map<std::pair<int, int>, Poly> next;
    for (const auto& [key, g] : acc) {
      const auto [m, l] = key;
      if (m == k) {
        next[{m, l + power}] += g;
        continue;
      }
      for (auto& t : decompose_pair(m, l, k, power)) next[{t.m, t.l}] += g * t.g;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    acc = std::move(next);
  }

  std::vector<FractionTerm> out;
  for (auto& [key, g] : acc) out.push_back({g, key.first, key.second});
  if (!recombines(factors, out)) throw std::logic_error("partial fraction decomposition failed to recombine");
  return out;
}

bool recombines(const std::vector<PowerFactor>& factors, const std::vector<FractionTerm>& terms) {
  Poly den(Rational(1));
  for (const auto& f : factors) den = den * denominator(f.k, f.power);
  Poly common = den;
  for (const auto& t : terms) common = poly_lcm(common, denominator(t.m, t.l)).monic();
  Poly sum;
  for (const auto& t : terms) sum += t.g * poly_exact_div(common, denominator(t.m, t.l));
  return sum == poly_exact_div(common, den);
}

}  // namespace bernalg
