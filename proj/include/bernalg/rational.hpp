#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bernalg {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1, so equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = static_cast<long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }
  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on anything else
  /// (including a zero denominator).
  static Rational parse(std::string_view text);

  const mpq_class& get() const { return value_; }
  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational inverse() const;
  Rational abs() const { return Rational(::abs(value_)); }
  Rational pow(long e) const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const { return value_.get_str(); }

  /// Fits-in-long conversion for integer values; throws std::overflow_error.
  long to_long() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

Integer factorial(unsigned long n);
Integer binomial_int(long n, long k);

/// Binomial coefficient with the convention C(n,k) = 0 for k < 0 or k > n.
Rational binomial(long n, long k);

/// H_n = 1 + 1/2 + ... + 1/n (H_0 = 0).
Rational harmonic(long n);

long gcd(long a, long b);
long lcm(long a, long b);

}  // namespace bernalg

template <>
struct std::hash<bernalg::Rational> {
  std::size_t operator()(const bernalg::Rational& r) const noexcept;
};
