#include "bernalg/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "bernalg/bernoulli.hpp"

namespace bernalg {

namespace {

Rational B(int i) { return bernoulli_number(i); }
Rational Bx(int i, const Rational& x) { return bernoulli_poly_value(1, i, x); }
Rational fact(int n) { return Rational(factorial(static_cast<unsigned long>(n))); }
Rational R(long v) { return Rational(v); }

std::string tex(const Rational& r) {
  if (r.is_integer()) return r.str();
  std::string s = r.sign() < 0 ? "-" : "";
  return s + "\\frac{" + r.num().get_str().substr(r.sign() < 0 ? 1 : 0) + "}{" + r.den().get_str() + "}";
}

std::string num(long v) { return std::to_string(v); }

IdentityReport report(std::string name, std::vector<IdentityParam> params, Rational lhs, Rational rhs,
                      std::string latex) {
  IdentityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.verified = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.latex = std::move(latex);
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Rational BernSymbol::value() const {
  if (order == 0) return argument.pow(index) * scale.pow(index);
  return scaled_bernoulli_value(order, index, argument * scale, scale);
}

std::string BernSymbol::latex() const {
  std::string s;
  if (!scale.is_one()) s += tex(scale) + "^{" + num(index) + "}";
  if (order == 0) return s + "(" + tex(argument) + ")^{" + num(index) + "}";
  s += "B";
  if (order != 1) s += "^{(" + num(order) + ")}";
  s += "_{" + num(index) + "}";
  if (!argument.is_zero()) s += "(" + tex(argument) + ")";
  return s;
}

namespace {

Rational side_value(const std::vector<IdentityTerm>& side) {
  Rational acc;
  for (const auto& t : side) {
    Rational v = t.coefficient;
    for (const auto& f : t.factors) v *= f.value();
    acc += v;
  }
  return acc;
}

std::string side_latex(const std::vector<IdentityTerm>& side) {
  if (side.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : side) {
    const Rational mag = t.coefficient.abs();
    s += first ? (t.coefficient.sign() < 0 ? "-" : "") : (t.coefficient.sign() < 0 ? "-" : "+");
    first = false;
    if (!mag.is_one() || t.factors.empty()) s += tex(mag);
    for (const auto& f : t.factors) s += f.latex();
  }
  return s;
}

BernSymbol symbol_for(const Atom& g, int index) {
  return g.n() == 0 ? BernSymbol{0, index, g.a(), Rational(1)} : BernSymbol{g.n(), index, g.a() / g.b(), g.b()};
}

// Falling factorial x (x-1) ... (x-k+1).
Rational falling(long x, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(x - i);
  return r;
}

void compositions(int total, std::size_t parts, std::vector<int>& current, const std::function<void()>& visit) {
  if (current.size() + 1 == parts) {
    current.push_back(total);
    visit();
    current.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    current.push_back(k);
    compositions(total - k, parts, current, visit);
    current.pop_back();
  }
}

}  // namespace

Rational CoefficientIdentity::lhs_value() const { return side_value(lhs); }
Rational CoefficientIdentity::rhs_value() const { return side_value(rhs); }
std::string CoefficientIdentity::latex() const { return side_latex(lhs) + "=" + side_latex(rhs); }

CoefficientIdentity coefficient_identity(const std::vector<ProductTerm>& lhs, const DCombination& rhs, int m,
                                         std::string source) {
  BElement lhs_elem;
  for (const auto& term : lhs) {
    BElement prod = BElement::constant(Rational(1));
    for (const auto& f : term.factors) prod = product_reduce(prod, BElement(f));
    lhs_elem += prod * term.coefficient;
  }
  if (!semantically_equal(rhs, lhs_elem)) throw std::invalid_argument("coefficient_identity: sides differ as series");

  CoefficientIdentity id;
  id.order = m;
  id.source = std::move(source);
  const Rational mfact = m >= 0 ? fact(m) : Rational(1);

  for (const auto& term : lhs) {
    int shift = 0;
    for (const auto& f : term.factors) shift += f.m();
    const int rest = m - shift;
    if (rest < 0) continue;
    if (term.factors.empty()) {
      if (rest == 0) id.lhs.push_back({term.coefficient * mfact, {}});
      continue;
    }
    std::vector<int> ks;
    compositions(rest, term.factors.size(), ks, [&] {
      IdentityTerm t{term.coefficient * mfact, {}};
      for (std::size_t i = 0; i < ks.size(); ++i) {
        t.coefficient /= fact(ks[i]);
        t.factors.push_back(symbol_for(term.factors[i], ks[i]));
      }
      id.lhs.push_back(std::move(t));
    });
  }

  // c T^j d^k (T^{m_g} G), G = sum gamma_i T^i/i!: the T^m coefficient is
  // c gamma_i (i+m_g)_k / i! with i = m - m_g + k - j.
  for (const auto& [g, op] : rhs.terms()) {
    for (const auto& [k, f] : op.terms()) {
      for (int j = 0; j <= f.degree(); ++j) {
        if (f.coeff(j).is_zero()) continue;
        const int i = m - g.m() + k - j;
        if (i < 0) continue;
        const Rational c = f.coeff(j) * mfact * falling(i + g.m(), k) / fact(i);
        if (c.is_zero()) continue;
        id.rhs.push_back({c, {symbol_for(g.generator(), i)}});
      }
    }
  }
  if (id.lhs_value() != id.rhs_value()) throw std::logic_error("coefficient identity does not balance");
  return id;
}

int working_bound(int highest_order) { return 2 * highest_order + 8; }

Rational beta_integral(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("beta_integral needs i, j >= 1");
  return fact(i - 1) * fact(j - 1) / fact(i + j - 1);
}

Rational integrate_unit(const Poly& p) {
  Rational acc;
  for (int i = 0; i <= p.degree(); ++i) acc += p.coeff(i) / Rational(i + 1);
  return acc;
}

IdentityReport verify_euler(int m) {
  require(m >= 2, "euler needs m >= 2");
  Rational lhs;
  for (int i = 1; i <= m - 1; ++i) lhs += binomial(2 * m, 2 * i) * B(2 * i) * B(2 * m - 2 * i);
  Rational rhs = -R(2 * m + 1) * B(2 * m);
  return report("euler", {{"m", m}}, lhs, rhs,
                "\\sum_{i=1}^{" + num(m - 1) + "}\\binom{" + num(2 * m) + "}{2i}B_{2i}B_{" + num(2 * m) +
                    "-2i}=-" + num(2 * m + 1) + "B_{" + num(2 * m) + "}");
}

IdentityReport verify_recurrence(int n) {
  require(n >= 0, "recurrence needs n >= 0");
  Rational lhs;
  for (int i = 0; i <= n; ++i) lhs += binomial(n, i) * B(i);
  Rational rhs = (n % 2 == 0 ? R(1) : R(-1)) * B(n);
  IdentityReport r = report("recurrence", {{"n", n}}, lhs, rhs,
                            "\\sum_{i=0}^{" + num(n) + "}\\binom{" + num(n) + "}{i}B_i=(-1)^{" + num(n) + "}B_{" +
                                num(n) + "}");
  // The second form, valid for n >= 2.
  if (n >= 2) r.verified = r.verified && lhs == B(n);
  return r;
}

IdentityReport verify_multiplication(int m, int n, const Rational& a) {
  require(m >= 0 && n >= 1, "multiplication needs m >= 0, n >= 1");
  const Poly bm = bernoulli_polynomial(m);
  Rational lhs;
  for (int i = 0; i < n; ++i) lhs += bm.eval(a + Rational(i, n));
  Rational rhs = R(n).pow(1 - m) * bm.eval(R(n) * a);
  return report("multiplication", {{"m", m}, {"n", n}, {"a", a}}, lhs, rhs,
                "\\sum_{i=0}^{" + num(n - 1) + "}B_{" + num(m) + "}(" + tex(a) + "+\\frac{i}{" + num(n) + "})=" +
                    num(n) + "^{" + num(1 - m) + "}B_{" + num(m) + "}(" + tex(R(n) * a) + ")");
}

IdentityReport verify_lowering(int n, int i, const Rational& a) {
  require(n >= 1 && i >= 1, "lowering needs n >= 1, i >= 1");
  const Rational lhs = bernoulli_poly_value(n + 1, i, a);
  const Rational ratio(i, n);
  const Rational rhs =
      (R(1) - ratio) * bernoulli_poly_value(n, i, a) + (a - R(n)) * ratio * bernoulli_poly_value(n, i - 1, a);
  return report("lowering", {{"n", n}, {"i", i}, {"a", a}}, lhs, rhs,
                "B^{(" + num(n + 1) + ")}_{" + num(i) + "}(" + tex(a) + ")=(1-" + tex(ratio) + ")B^{(" + num(n) +
                    ")}_{" + num(i) + "}(" + tex(a) + ")+(" + tex(a - R(n)) + ")" + tex(ratio) + "B^{(" + num(n) +
                    ")}_{" + num(i - 1) + "}(" + tex(a) + ")");
}

IdentityReport verify_euler_polynomial(int n, const Rational& a, const Rational& b) {
  require(n >= 1, "euler-poly needs n >= 1");
  Rational lhs;
  for (int i = 0; i <= n; ++i) lhs += binomial(n, i) * Bx(i, a) * Bx(n - i, b);
  const Rational s = a + b;
  Rational rhs = R(1 - n) * Bx(n, s) + R(n) * (s - R(1)) * Bx(n - 1, s);
  return report("euler-poly", {{"n", n}, {"a", a}, {"b", b}}, lhs, rhs,
                "\\sum_{i=0}^{" + num(n) + "}\\binom{" + num(n) + "}{i}B_i(" + tex(a) + ")B_{" + num(n) + "-i}(" +
                    tex(b) + ")=" + num(1 - n) + "B_{" + num(n) + "}(" + tex(s) + ")+" + num(n) + "(" +
                    tex(s - R(1)) + ")B_{" + num(n - 1) + "}(" + tex(s) + ")");
}

IdentityReport verify_agoh_dilcher_example(int n) {
  require(n >= 0, "agoh-dilcher needs n >= 0");
  Rational lhs;
  for (int i = 0; i <= n; ++i) lhs += binomial(n, i) * B(1 + i) * B(1 + n - i);
  Rational rhs = Rational(n - 1, 6) * B(n) - B(n + 1) - Rational(n + 3, 6) * B(n + 2);
  return report("agoh-dilcher", {{"n", n}}, lhs, rhs,
                "\\sum_{i=0}^{" + num(n) + "}\\binom{" + num(n) + "}{i}B_{1+i}B_{" + num(1 + n) + "-i}=" +
                    tex(Rational(n - 1, 6)) + "B_{" + num(n) + "}-B_{" + num(n + 1) + "}-" +
                    tex(Rational(n + 3, 6)) + "B_{" + num(n + 2) + "}");
}

IdentityReport verify_rademacher(int n) {
  require(n >= 3, "rademacher needs n >= 3");
  Rational lhs;
  for (int i = 2; i <= n - 2; ++i) {
    lhs += fact(2 * n - 2) / (fact(2 * i - 2) * fact(2 * n - 2 * i - 2)) * (B(2 * i) / R(2 * i)) *
           (B(2 * n - 2 * i) / R(2 * n - 2 * i));
  }
  const Rational coeff = -Rational((2 * n + 1) * (n - 3), 6 * n);
  IdentityReport r = report("rademacher", {{"n", n}}, lhs, coeff * B(2 * n),
                            "\\sum_{i=2}^{" + num(n - 2) + "}\\frac{" + num(2 * n - 2) + "!}{(2i-2)!(" +
                                num(2 * n - 2) + "-2i)!}\\frac{B_{2i}}{2i}\\frac{B_{" + num(2 * n) + "-2i}}{" +
                                num(2 * n) + "-2i}=" + tex(coeff) + "B_{" + num(2 * n) + "}");
  r.degenerate = n == 3;
  return r;
}

namespace {

// -(1/6) T d^3 - (1/2) d^2 + (1/6) T d - d - 1/6: the operator with (B')^2 = psi B.
WeylOp derivative_square_operator() {
  return WeylOp::term(Rational(-1, 6), 1, 3) + WeylOp::term(Rational(-1, 2), 0, 2) +
         WeylOp::term(Rational(1, 6), 1, 1) + WeylOp::term(R(-1), 0, 1) + WeylOp::term(Rational(-1, 6), 0, 0);
}

WeylOp euler_square_operator() { return WeylOp(Poly{R(1), R(-1)}) - WeylOp::term(R(1), 1, 1); }

}  // namespace

IdentityReport verify_rademacher_relation(int n) {
  require(n >= 1, "rademacher-relation needs n >= 1");
  const Rational c(2 * n - 1);
  const WeylOp phi = WeylOp::t(2) * derivative_square_operator() - euler_square_operator() * c;
  const BElement b2 = BElement(Atom::make(0, 2, R(1), R(0)));
  const BElement lhs = substitute_t_b(f_n_closed(1) * f_n_closed(1)) - b2 * c;
  const BElement rhs = weyl_apply_element(phi, BElement(Atom::B()));
  const int order = 2 * n;
  const Rational lv = expand(lhs, order).coeff(order) * fact(order);
  const Rational rv = expand(rhs, order).coeff(order) * fact(order);
  IdentityReport r = report("rademacher-relation", {{"n", n}}, lv, rv,
                            "T^2\\left(\\frac{dB}{dT}\\right)^2-" + num(2 * n - 1) + "B^2=\\varphi B");
  r.verified = r.verified && elem_equal(lhs, rhs);
  return r;
}

IdentityReport verify_23(int n) {
  require(n >= 1, "b23 needs n >= 1");
  Rational lhs;
  for (int i = 0; i <= n; ++i) lhs += R(3).pow(i) * R(2).pow(n - i) * binomial(n, i) * B(i) * B(n - i);
  const Rational c3 = R(2 * n) * R(3).pow(n - 2);
  const Rational c2 = R(3 * n) * R(2).pow(n - 2);
  Rational rhs = c3 * Bx(n - 1, Rational(1, 3)) - (c3 + c2 + R(n)) * B(n - 1) + R(1 - n) * B(n);
  return report("b23", {{"n", n}}, lhs, rhs,
                "\\sum_{i=0}^{" + num(n) + "}3^i2^{" + num(n) + "-i}\\binom{" + num(n) + "}{i}B_iB_{" + num(n) +
                    "-i}=" + tex(c3) + "B_{" + num(n - 1) + "}(\\frac{1}{3})-" + tex(c3 + c2 + R(n)) + "B_{" +
                    num(n - 1) + "}+" + tex(R(1 - n)) + "B_{" + num(n) + "}");
}

IdentityReport verify_23_even(int n) {
  require(n >= 2, "b23-even needs n >= 2");
  Rational lhs;
  for (int i = 0; i <= n; ++i) {
    lhs += R(3).pow(2 * i) * R(2).pow(2 * n - 2 * i) * binomial(2 * n, 2 * i) * B(2 * i) * B(2 * n - 2 * i);
  }
  const Rational c = R(4 * n) * R(3).pow(2 * n - 2);
  Rational rhs = c * Bx(2 * n - 1, Rational(1, 3)) + R(1 - 2 * n) * B(2 * n);
  return report("b23-even", {{"n", n}}, lhs, rhs,
                "\\sum_{i=0}^{" + num(n) + "}3^{2i}2^{" + num(2 * n) + "-2i}\\binom{" + num(2 * n) +
                    "}{2i}B_{2i}B_{" + num(2 * n) + "-2i}=" + tex(c) + "B_{" + num(2 * n - 1) + "}(\\frac{1}{3})" +
                    tex(R(1 - 2 * n)) + "B_{" + num(2 * n) + "}");
}

IdentityReport verify_235(int n) {
  require(n >= 2, "b235 needs n >= 2");
  Rational lhs;
  const Rational nf = fact(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const int k = n - i - j;
      lhs += nf / (fact(i) * fact(j) * fact(k)) * R(2).pow(i) * R(3).pow(j) * R(5).pow(k) * B(i) * B(j) * B(k);
    }
  }
  const Rational nn1 = R(n) * R(n - 1);
  Rational rhs = Rational((n - 1) * (n - 2), 2) * B(n) + R(5 * n * (n - 2)) * B(n - 1) +
                 (Rational(9, 2) + Rational(15, 4) * R(2).pow(n - 2) + Rational(18, 5) * R(5).pow(n - 2)) * nn1 *
                     B(n - 2) -
                 Rational(10, 3) * nn1 * R(3).pow(n - 2) * Bx(n - 2, Rational(1, 3)) +
                 Rational(6, 5) * nn1 * R(5).pow(n - 2) * (Bx(n - 2, Rational(2, 5)) + Bx(n - 2, Rational(3, 5)));
  return report("b235", {{"n", n}}, lhs, rhs,
                "\\sum_{i+j+k=" + num(n) + "}\\binom{" + num(n) +
                    "}{i,j,k}2^i3^j5^kB_iB_jB_k=\\text{(B(2T)B(3T)B(5T) reduction at }T^{" + num(n) + "})");
}

IdentityReport verify_miki(int n) {
  require(n >= 4, "miki needs n >= 4");
  auto beta = [](int i) { return B(i) / R(i); };
  Rational lhs, sum;
  for (int i = 2; i <= n - 2; ++i) {
    lhs += beta(i) * beta(n - i);
    sum += binomial(n, i) * beta(i) * beta(n - i);
  }
  Rational rhs = Rational(2, n) * harmonic(n) * B(n) + sum;
  return report("miki", {{"n", n}}, lhs, rhs,
                "\\sum_{i=2}^{" + num(n - 2) + "}\\frac{B_i}{i}\\frac{B_{" + num(n) + "-i}}{" + num(n) +
                    "-i}=\\frac{2}{" + num(n) + "}H_{" + num(n) + "}B_{" + num(n) + "}+\\sum_{k=2}^{" + num(n - 2) +
                    "}\\binom{" + num(n) + "}{k}\\frac{B_k}{k}\\frac{B_{" + num(n) + "-k}}{" + num(n) + "-k}");
}

IdentityReport verify_miki_s_relation(int bound) {
  require(bound >= 1, "miki-s needs bound >= 1");
  const Poly s{R(0), R(1)};
  const Poly one_minus_s{R(1), R(-1)};
  const SSeries b = bernoulli_series(bound).to_poly_coeffs();
  const SSeries bs = b.scale_arg(s);
  const SSeries b1s = b.scale_arg(one_minus_s);
  auto constant = [&](const Poly& p) { return SSeries::monomial(p, 0, bound); };
  const SSeries half_s_t = SSeries::monomial(s * Rational(1, 2), 1, bound);
  const SSeries half_1s_t = SSeries::monomial(one_minus_s * Rational(1, 2), 1, bound);

  const SSeries lhs = bs * b1s;
  const SSeries rhs = constant(one_minus_s) * (bs + half_s_t) * b + constant(s) * (b1s + half_1s_t) * b;

  bool match = lhs.bound() >= bound && rhs.bound() >= bound;
  Rational lv, rv;
  for (int i = 0; i <= bound && match; ++i) {
    match = lhs.coeff(i) == rhs.coeff(i);
    lv += integrate_unit(lhs.coeff(i));
    rv += integrate_unit(rhs.coeff(i));
  }
  IdentityReport r = report("miki-s", {{"bound", bound}}, lv, rv,
                            "B(sT)B((1-s)T)=(1-s)\\left(B(sT)+\\frac{sT}{2}\\right)B+s\\left(B((1-s)T)+\\frac{(1-s)T}{2}"
                            "\\right)B\\quad(T^{\\le " +
                                num(bound) + "})");
  r.verified = r.verified && match;
  return r;
}

IdentityReport verify_miki_s_coefficient(int n) {
  require(n >= 2, "miki-coeff needs n >= 2");
  const Poly s{R(0), R(1)};
  const Poly t{R(1), R(-1)};
  auto bf = [](int i) { return B(i) / fact(i); };

  Poly lhs, rhs;
  for (int i = 1; i < n; ++i) lhs += s.pow(i) * t.pow(n - i) * (bf(i) * bf(n - i));
  for (int k = 1; 2 * k <= n; ++k) rhs += (t * s.pow(2 * k) + s * t.pow(2 * k)) * (bf(n - 2 * k) * bf(2 * k));
  rhs += (Poly(R(1)) - s.pow(n) - t.pow(n)) * bf(n);

  const Poly weight = s * t;
  const Rational lhs_int = integrate_unit(poly_exact_div(lhs, weight));
  const Rational rhs_int = integrate_unit(poly_exact_div(rhs, weight));

  Rational shown_lhs, shown_rhs;
  for (int i = 1; i < n; ++i) shown_lhs += (B(i) / R(i)) * (B(n - i) / R(n - i)) / fact(n - 1);
  for (int k = 1; 2 * k <= n; ++k) shown_rhs += Rational(1, k) * bf(n - 2 * k) * bf(2 * k);
  shown_rhs += R(2) * harmonic(n - 1) * bf(n);

  IdentityReport r = report("miki-coeff", {{"n", n}}, shown_lhs, shown_rhs,
                            "\\sum_{i+j=" + num(n) + "}\\frac{1}{" + num(n - 1) +
                                "!}\\frac{B_i}{i}\\frac{B_j}{j}=\\sum_{\\ell+2k=" + num(n) +
                                "}\\frac{1}{k}\\frac{B_\\ell}{\\ell!}\\frac{B_{2k}}{(2k)!}+2H_{" + num(n - 1) +
                                "}\\frac{B_{" + num(n) + "}}{" + num(n) + "!}");
  r.verified = r.verified && lhs == rhs && lhs_int == shown_lhs && rhs_int == shown_rhs;
  return r;
}

namespace {

Rational kaneko_sum(int k) {
  Rational sum;
  for (int j = 0; j <= k + 1; ++j) sum += binomial(k + 1, j) * R(k + j + 1) * B(k + j);
  return sum;
}

// (k+1)! [T^power] e^T phi(B)
Rational exp_image_coefficient(const WeylOp& phi, int k, int power, int bound) {
  const RSeries image = exp_linear(R(1), bound) * weyl_apply_series(phi, bernoulli_series(bound));
  return image.coeff(power) * fact(k + 1);
}

std::string kaneko_latex(int k) {
  return "\\sum_{j=0}^{" + num(k + 1) + "}\\binom{" + num(k + 1) + "}{j}(" + num(k + 1) + "+j)B_{" + num(k) +
         "+j}=0";
}

}  // namespace

IdentityReport verify_kaneko(int k, std::optional<int> bound) {
  require(k >= 1, "kaneko needs k >= 1");
  const Rational sum = kaneko_sum(k);
  const WeylOp phi = WeylOp::term(R(2 * k + 1), k, k) + WeylOp::term(R(1), k + 1, k + 1);
  const Rational coeff = exp_image_coefficient(phi, k, k + 1, bound.value_or(working_bound(k + 1)));
  IdentityReport r = report("kaneko", {{"k", k}}, coeff, sum, kaneko_latex(k));
  r.verified = r.verified && sum.is_zero() && coeff.is_zero();
  return r;
}

IdentityReport verify_kaneko_shifted(int k, std::optional<int> bound) {
  require(k >= 1, "kaneko-shifted needs k >= 1");
  const Rational sum = kaneko_sum(k);
  const WeylOp phi = WeylOp::d(1) * WeylOp::t(k + 1) * WeylOp::d(k);
  const int n = std::max(bound.value_or(working_bound(k + 1)), 2 * k + 1);
  const Rational coeff = exp_image_coefficient(phi, k, 2 * k + 1, n);
  IdentityReport r = report("kaneko-shifted", {{"k", k}}, coeff, sum, kaneko_latex(k));
  r.verified = r.verified && sum.is_zero() && coeff.is_zero();
  return r;
}

IdentityReport verify_stirling_gf(int n, int k) {
  require(n >= 0 && k >= 1, "stirling-gf needs n >= 0, k >= 1");
  const Rational lhs = Rational(stirling(n, k)) / fact(n);
  const BElement gf = negative_power_expand(k).mul_monomial(k, R(0)) * (R(1) / fact(k));
  const Rational rhs = expand(gf, n).coeff(n);
  IdentityReport r = report("stirling-gf", {{"n", n}, {"k", k}}, lhs, rhs,
                            "\\frac{S(" + num(n) + "," + num(k) + ")}{" + num(n) + "!}=[T^{" + num(n) +
                                "}]\\frac{T^{" + num(k) + "}}{" + num(k) + "!}B^{-" + num(k) + "}");
  r.degenerate = n < k;
  return r;
}

IdentityReport verify_f_derivative(int n, int bound) {
  require(n >= 0 && bound >= 0, "f-derivative needs n >= 0");
  RSeries direct = bernoulli_series(bound + n);
  for (int i = 0; i < n; ++i) direct = direct.derivative();
  const BElement via_f = substitute_t_b(f_n_closed(n)).mul_monomial(-n, R(0));
  const RSeries closed = expand(via_f, bound);
  IdentityReport r = report("f-derivative", {{"n", n}, {"bound", bound}}, direct.coeff(bound) * fact(bound),
                            closed.coeff(bound) * fact(bound),
                            "\\frac{d^{" + num(n) + "}B}{dT^{" + num(n) + "}}=T^{-" + num(n) + "}f_{" + num(n) +
                                "}(T,B)");
  r.verified = r.verified && direct.bound() >= bound && closed.bound() >= bound && agree(direct, closed);
  return r;
}

IdentityReport verify_beta(int i, int j) {
  require(i >= 1 && j >= 1, "beta needs i, j >= 1");
  const Poly s{R(0), R(1)};
  const Poly t{R(1), R(-1)};
  const Rational direct = integrate_unit(poly_exact_div(s.pow(i) * t.pow(j), s * t));
  return report("beta", {{"i", i}, {"j", j}}, direct, beta_integral(i, j),
                "\\int_0^1 s^{" + num(i) + "}(1-s)^{" + num(j) + "}\\frac{ds}{s(1-s)}=\\frac{" + num(i - 1) + "!" +
                    num(j - 1) + "!}{" + num(i + j - 1) + "!}");
}

IdentityReport verify_harmonic_integral(int n) {
  require(n >= 1, "harmonic-integral needs n >= 1");
  const Poly s{R(0), R(1)};
  const Poly t{R(1), R(-1)};
  const Rational direct = integrate_unit(poly_exact_div(Poly(R(1)) - s.pow(n) - t.pow(n), s * t));
  return report("harmonic-integral", {{"n", n}}, direct, R(2) * harmonic(n - 1),
                "\\int_0^1(1-s^{" + num(n) + "}-(1-s)^{" + num(n) + "})\\frac{ds}{s(1-s)}=2H_{" + num(n - 1) + "}");
}

namespace {

int as_int(const Rational& r, const std::string& name) {
  if (!r.is_integer()) throw std::invalid_argument("parameter " + name + " must be an integer, got " + r.str());
  return static_cast<int>(r.to_long());
}

IdentityEntry entry_int(std::string name, std::string summary, std::vector<std::string> params,
                      std::function<IdentityReport(const std::vector<int>&, std::optional<int>)> fn) {
  std::vector<ParamInfo> ps;
  for (auto& p : params) ps.push_back({p, false});
  auto names = params;
  return {std::move(name), std::move(summary), std::move(ps),
          [names, fn = std::move(fn)](const std::vector<Rational>& v, std::optional<int> order) {
            std::vector<int> ints;
            for (std::size_t i = 0; i < v.size(); ++i) ints.push_back(as_int(v[i], names[i]));
            return fn(ints, order);
          }};
}

}  // namespace

const std::vector<IdentityEntry>& identity_catalog() {
  static const std::vector<IdentityEntry> catalog = [] {
    std::vector<IdentityEntry> c;
    c.push_back(entry_int("euler", "sum C(2m,2i) B_2i B_2m-2i = -(2m+1) B_2m", {"m"},
                         [](const auto& v, auto) { return verify_euler(v[0]); }));
    c.push_back(entry_int("recurrence", "sum C(n,i) B_i = (-1)^n B_n", {"n"},
                         [](const auto& v, auto) { return verify_recurrence(v[0]); }));
    c.push_back({"multiplication",
                 "sum_i B_m(a + i/n) = n^(1-m) B_m(na)",
                 {{"m", false}, {"n", false}, {"a", true}},
                 [](const std::vector<Rational>& v, std::optional<int>) {
                   return verify_multiplication(as_int(v[0], "m"), as_int(v[1], "n"), v[2]);
                 }});
    c.push_back({"lowering",
                 "B^(n+1)_i(a) from B^(n)_i(a) and B^(n)_(i-1)(a)",
                 {{"n", false}, {"i", false}, {"a", true}},
                 [](const std::vector<Rational>& v, std::optional<int>) {
                   return verify_lowering(as_int(v[0], "n"), as_int(v[1], "i"), v[2]);
                 }});
    c.push_back({"euler-poly",
                 "sum C(n,i) B_i(a) B_n-i(b) = (1-n) B_n(a+b) + n(a+b-1) B_n-1(a+b)",
                 {{"n", false}, {"a", true}, {"b", true}},
                 [](const std::vector<Rational>& v, std::optional<int>) { return verify_euler_polynomial(as_int(v[0], "n"), v[1], v[2]); }});
    c.push_back(entry_int("agoh-dilcher", "sum C(n,i) B_1+i B_1+n-i", {"n"},
                         [](const auto& v, auto) { return verify_agoh_dilcher_example(v[0]); }));
    c.push_back(entry_int("rademacher", "weighted sum of B_2i B_2n-2i", {"n"},
                         [](const auto& v, auto) { return verify_rademacher(v[0]); }));
    c.push_back(entry_int("rademacher-relation", "T^2 (B')^2 - (2n-1) B^2 = phi B", {"n"},
                         [](const auto& v, auto) { return verify_rademacher_relation(v[0]); }));
    c.push_back(entry_int("b23", "B(2T)B(3T) coefficient identity", {"n"},
                         [](const auto& v, auto) { return verify_23(v[0]); }));
    c.push_back(entry_int("b23-even", "B(2T)B(3T) identity for even indices", {"n"},
                         [](const auto& v, auto) { return verify_23_even(v[0]); }));
    c.push_back(entry_int("b235", "B(2T)B(3T)B(5T) multinomial identity", {"n"},
                         [](const auto& v, auto) { return verify_235(v[0]); }));
    c.push_back(entry_int("miki", "Miki's identity", {"n"}, [](const auto& v, auto) { return verify_miki(v[0]); }));
    c.push_back(entry_int("miki-s", "B(sT)B((1-s)T) relation over Q[s]", {"bound"},
                         [](const auto& v, auto) { return verify_miki_s_relation(v[0]); }));
    c.push_back(entry_int("miki-coeff", "T^n coefficient of the s-relation, integrated over s", {"n"},
                         [](const auto& v, auto) { return verify_miki_s_coefficient(v[0]); }));
    c.push_back(entry_int("kaneko", "sum C(k+1,j)(k+j+1) B_k+j = 0", {"k"},
                         [](const auto& v, auto order) { return verify_kaneko(v[0], order); }));
    c.push_back(entry_int("kaneko-shifted", "(k+1)! [T^(2k+1)] e^T (d T^(k+1) d^k) B = 0", {"k"},
                         [](const auto& v, auto order) { return verify_kaneko_shifted(v[0], order); }));
    c.push_back(entry_int("stirling-gf", "S(n,k)/n! = [T^n] T^k B^-k / k!", {"n", "k"},
                         [](const auto& v, auto) { return verify_stirling_gf(v[0], v[1]); }));
    c.push_back(entry_int("f-derivative", "d^n B/dT^n = T^-n f_n(T,B)", {"n"},
                         [](const auto& v, auto order) { return verify_f_derivative(v[0], order.value_or(30)); }));
    c.push_back(entry_int("beta", "beta integral", {"i", "j"}, [](const auto& v, auto) { return verify_beta(v[0], v[1]); }));
    c.push_back(entry_int("harmonic-integral", "int (1-s^n-(1-s)^n)/(s(1-s)) = 2 H_n-1", {"n"},
                         [](const auto& v, auto) { return verify_harmonic_integral(v[0]); }));
    return c;
  }();
  return catalog;
}

const IdentityEntry* find_identity(std::string_view name) {
  for (const auto& s : identity_catalog()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace bernalg
