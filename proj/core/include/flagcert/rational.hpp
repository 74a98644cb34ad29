#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace flagcert {

using BigInt = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0,
/// and zero is 0/1. GMP keeps the canonical form after every arithmetic op.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}            // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}           // NOLINT(google-explicit-constructor)
  Rational(long long value) : value_(BigInt(std::to_string(value))) {}  // NOLINT
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Builds numerator/denominator in lowest terms with the sign on the
  /// numerator. Throws std::domain_error on a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "a", "-a", or "a/b" (decimal integers, no spaces).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "a" for integers, otherwise "a/b".
  std::string to_string() const;

  /// Lossy conversion for display and statistics only.
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n * (n-1) * ... * (n-k+1); 1 when k == 0, 0 when k > n.
BigInt falling_factorial(int n, int k);
BigInt binomial(int n, int k);

}  // namespace flagcert
