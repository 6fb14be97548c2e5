#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "exhyp/error.hpp"
#include "exhyp/natural.hpp"

namespace exhyp {

/// Exact rational scalar, always kept canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, so equality is structural equality.
/// Text form is "p/q" with the "/q" dropped when q = 1 ("15/8", "-3", "0").
class Rational {
 public:
  Rational() = default;
  Rational(int n) : q_(n) {}
  Rational(unsigned int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(unsigned long n) : q_(n) {}
  Rational(const Natural& n) : q_(n.value()) {}
  Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  // Strict "p/q" parser: optional leading '-', decimal digits, optional
  // "/digits". Anything else (including a zero denominator) is an InputError.
  static Rational parse(std::string_view text);

  // Exact conversion of a finite binary64 value.
  static Rational from_double(double v);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) {
    a += b;
    return a;
  }
  friend Rational operator-(Rational a, const Rational& b) {
    a -= b;
    return a;
  }
  friend Rational operator*(Rational a, const Rational& b) {
    a *= b;
    return a;
  }
  friend Rational operator/(Rational a, const Rational& b) {
    a /= b;
    return a;
  }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

  friend Rational abs(const Rational& a) {
    Rational r;
    r.q_ = abs(a.q_);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

 private:
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned long e);

}  // namespace exhyp
