#include <cctype>
#include <cmath>
#include <string>

#include "exhyp/natural.hpp"
#include "exhyp/rational.hpp"

namespace exhyp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Natural Natural::parse(std::string_view text) {
  if (!all_digits(text)) throw InputError("malformed natural number '" + std::string(text) + "'");
  return Natural(mpz_class(std::string(text), 10));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw InputError("zero denominator");
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
  std::string_view num_part = body;
  std::string_view den_part = "1";
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (sgn(den) == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw InputError("cannot convert a non-finite double");
  Rational r;
  r.q_ = mpq_class(v);
  r.q_.canonicalize();
  return r;
}

Rational pow(const Rational& base, unsigned long e) {
  // Coprime powers stay coprime, so no canonicalization is needed.
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
  return Rational(num, den);
}

}  // namespace exhyp
