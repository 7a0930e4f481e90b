#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace vlp {

using Integer = mpz_class;

// Exact rational number in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Rational(T value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT

  Rational(const Integer& value) : q_(value) {}  // NOLINT(implicit)

  // Throws ArithmeticError("division by zero") when den == 0.
  Rational(const Integer& num, const Integer& den);

  // Accepts "p", "-p", "p/q", "-p/q" with decimal digits; q must be nonzero.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

Rational rat_normalize(const Integer& num, const Integer& den);

Rational abs(const Rational& r);

}  // namespace vlp
