#include "bernalg/bernoulli.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace bernalg {

namespace {

// Memoized B and its powers. Results are always recomputable from scratch;
// the cache only grows.
class BernoulliCache {
 public:
  static BernoulliCache& instance() {
    static BernoulliCache cache;
    return cache;
  }

  RSeries power(int n, int bound) {
    std::lock_guard lock(mutex_);
    auto it = powers_.find(n);
    if (it == powers_.end() || it->second.bound() < bound) {
      const int target = std::max(bound, 2 * (it == powers_.end() ? 0 : it->second.bound()));
      RSeries p = n == 0 ? RSeries::monomial(Rational(1), 0, target) : base_locked(target).pow(n, target);
      it = powers_.insert_or_assign(n, std::move(p)).first;
    }
    return it->second.truncate(bound);
  }

  Rational number(int i) {
    std::lock_guard lock(mutex_);
    if (auto it = overrides_.find(i); it != overrides_.end()) return it->second;
    if (static_cast<int>(numbers_.size()) <= i) {
      RSeries b = base_locked(std::max(i, 2 * static_cast<int>(numbers_.size())));
      const int old = static_cast<int>(numbers_.size());
      numbers_.resize(static_cast<std::size_t>(b.bound()) + 1);
      for (int k = old; k <= b.bound(); ++k) numbers_[static_cast<std::size_t>(k)] = b.coeff(k) * Rational(factorial(static_cast<unsigned long>(k)));
    }
    return numbers_[static_cast<std::size_t>(i)];
  }

  void set_override(int i, Rational v) {
    std::lock_guard lock(mutex_);
    overrides_[i] = std::move(v);
  }
  void clear_override(int i) {
    std::lock_guard lock(mutex_);
    overrides_.erase(i);
  }

 private:
  const RSeries& base_locked(int bound) {
    if (!base_ || base_->bound() < bound) {
      const int target = std::max(bound, 32);
      // (e^T - 1)/T = sum T^i/(i+1)!
      std::vector<Rational> v(static_cast<std::size_t>(target) + 1);
      for (int i = 0; i <= target; ++i) v[static_cast<std::size_t>(i)] = Rational(Integer(1), factorial(static_cast<unsigned long>(i + 1)));
      base_ = RSeries::from_coeffs(0, std::move(v), target).inverse();
    }
    return *base_;
  }

  std::mutex mutex_;
  std::optional<RSeries> base_;
  std::map<int, RSeries> powers_;
  std::vector<Rational> numbers_;
  std::map<int, Rational> overrides_;
};

void check_nonneg(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

}  // namespace

RSeries exp_linear(const Rational& a, int bound) {
  if (bound < 0) return RSeries::zero(bound);
  std::vector<Rational> v(static_cast<std::size_t>(bound) + 1);
  Rational term(1);
  for (int i = 0; i <= bound; ++i) {
    v[static_cast<std::size_t>(i)] = term;
    term = term * a / Rational(i + 1);
  }
  return RSeries::from_coeffs(0, std::move(v), bound);
}

RSeries bernoulli_series(int bound) { return bernoulli_power_series(1, bound); }

RSeries bernoulli_power_series(int n, int bound) {
  check_nonneg(n, "power of B");
  if (bound < 0) return RSeries::zero(bound);
  return BernoulliCache::instance().power(n, bound);
}

Rational bernoulli_number(int i) {
  check_nonneg(i, "Bernoulli index");
  return BernoulliCache::instance().number(i);
}

Rational bernoulli_number_order(int n, int i) {
  check_nonneg(i, "Bernoulli index");
  return bernoulli_power_series(n, i).coeff(i) * Rational(factorial(static_cast<unsigned long>(i)));
}

Rational scaled_bernoulli_value(int n, int i, const Rational& a, const Rational& b) {
  check_nonneg(i, "Bernoulli index");
  if (b.is_zero()) throw std::invalid_argument("argument scale must be nonzero");
  RSeries p = bernoulli_power_series(n, i);
  // i! sum_j b^j [T^j]B^n * a^(i-j)/(i-j)!
  Rational acc;
  Rational bj(1);
  for (int j = 0; j <= i; ++j) {
    const Rational c = p.coeff(j);
    if (!c.is_zero()) {
      acc += c * bj * a.pow(i - j) * Rational(Integer(binomial_int(i, j) * factorial(static_cast<unsigned long>(j))));
    }
    bj *= b;
  }
  return acc;
}

Rational bernoulli_poly_value(int n, int i, const Rational& x) { return scaled_bernoulli_value(n, i, x, Rational(1)); }

Poly bernoulli_polynomial(int i) {
  check_nonneg(i, "Bernoulli index");
  std::vector<Rational> c(static_cast<std::size_t>(i) + 1);
  for (int k = 0; k <= i; ++k) c[static_cast<std::size_t>(i - k)] = binomial(i, k) * bernoulli_number(k);
  return Poly(std::move(c));
}

namespace testing {

ScopedBernoulliOverride::ScopedBernoulliOverride(int index, Rational value) : index_(index) {
  BernoulliCache::instance().set_override(index, std::move(value));
}

ScopedBernoulliOverride::~ScopedBernoulliOverride() { BernoulliCache::instance().clear_override(index_); }

}  // namespace testing

}  // namespace bernalg
