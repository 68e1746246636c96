// Independent reference computations for the unit tests. Nothing here calls
// into the library; values are computed from first principles with raw GMP.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// B_0..B_n with B_1 = -1/2, by the Akiyama-Tanigawa algorithm.
inline std::vector<mpq_class> bernoulli_numbers(int n) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
    for (int j = m; j >= 1; --j) {
      auto& aj = a[static_cast<std::size_t>(j - 1)];
      aj = j * (aj - a[static_cast<std::size_t>(j)]);
      aj.canonicalize();
    }
    out.push_back(a[0]);
  }
  if (n >= 1) out[1] = mpq_class(-1, 2);
  return out;
}

inline mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Truncated power series as a coefficient vector c[0..n].
using Coeffs = std::vector<mpq_class>;

inline Coeffs mul(const Coeffs& x, const Coeffs& y) {
  Coeffs r(std::min(x.size(), y.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) r[i] += x[j] * y[i - j];
  }
  return r;
}

/// e^{aT} to T^n.
inline Coeffs exp_series(const mpq_class& a, int n) {
  Coeffs r(static_cast<std::size_t>(n + 1));
  mpq_class term = 1;
  for (int i = 0; i <= n; ++i) {
    r[static_cast<std::size_t>(i)] = term;
    term *= a;
    term /= i + 1;
  }
  return r;
}

/// B(bT) = sum B_i b^i T^i / i! to T^n.
inline Coeffs bernoulli_series(const mpq_class& b, int n) {
  const auto bn = bernoulli_numbers(n);
  Coeffs r(static_cast<std::size_t>(n + 1));
  mpq_class bp = 1;
  for (int i = 0; i <= n; ++i) {
    r[static_cast<std::size_t>(i)] = bn[static_cast<std::size_t>(i)] * bp / mpq_class(factorial(i));
    bp *= b;
  }
  return r;
}

/// B^k(bT) e^{aT} to T^n, by repeated multiplication.
inline Coeffs atom_series(int k, const mpq_class& b, const mpq_class& a, int n) {
  Coeffs r = exp_series(a, n);
  const Coeffs base = bernoulli_series(b, n);
  for (int i = 0; i < k; ++i) r = mul(r, base);
  return r;
}

/// S(n, k) by the explicit alternating sum k! S(n,k) = sum (-1)^{k-j} C(k,j) j^n.
inline mpz_class stirling2(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class acc = 0;
  for (int j = 0; j <= k; ++j) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
    if ((k - j) % 2 == 0) {
      acc += binomial(k, j) * p;
    } else {
      acc -= binomial(k, j) * p;
    }
  }
  return acc / factorial(k);
}

/// Deterministic generator shared by the property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  mpq_class rational(int num_bound, int den_bound) {
    mpq_class q(uniform(-num_bound, num_bound), uniform(1, den_bound));
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracle
