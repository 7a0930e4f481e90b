#include "vlp/rational.hpp"

#include <cctype>

#include "vlp/error.hpp"

namespace vlp {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("division by zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_part = body.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw ParseError("", "malformed rational \"" + std::string(text) + "\"");
  }
  Integer num(std::string(num_part), 10);
  Integer den(std::string(den_part), 10);
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational rat_normalize(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace vlp
