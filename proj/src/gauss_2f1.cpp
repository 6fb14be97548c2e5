#include "exhyp/gauss_2f1.hpp"

#include "exhyp/pochhammer.hpp"

namespace exhyp {

std::optional<unsigned long> degenerate_pochhammer_index(const Rational& c, const Natural& n) {
  if (n.is_zero()) return std::nullopt;
  if (!c.is_integer() || c.sign() > 0) return std::nullopt;
  const mpz_class m = -c.num();  // c = -m with m >= 0
  if (m >= n.value()) return std::nullopt;
  return m.get_ui() + 1;  // (c)_{m+1} is the first vanishing factor
}

void validate(const Gauss2F1Spec& spec) {
  if (const auto k = degenerate_pochhammer_index(spec.c, spec.n)) {
    throw DegeneracyError("denominator parameter degenerate: (c)_k vanishes at k = " +
                          std::to_string(*k) + " for c = " + spec.c.str());
  }
}

Rational eval_2f1(const Gauss2F1Spec& spec) {
  validate(spec);
  const unsigned long n = spec.n.as_ulong();
  Rational sum = 1;
  Rational term = 1;
  for (unsigned long k = 0; k < n; ++k) {
    term = term * Rational(static_cast<long>(k) - static_cast<long>(n)) * (spec.b + Rational(k)) *
           spec.x / (Rational(k + 1) * (spec.c + Rational(k)));
    if (term.is_zero()) break;  // the recurrence keeps every later term zero
    sum += term;
  }
  return sum;
}

TransformedGauss transform_2f1(const Gauss2F1Spec& spec) {
  validate(spec);
  const Rational c_flip = spec.b + Rational(1) - Rational(spec.n) - spec.c;
  if (degenerate_pochhammer_index(c_flip, spec.n)) {
    throw DegeneracyError("transformation undefined for these parameters");
  }
  const Rational factor =
      rising_factorial(spec.c - spec.b, spec.n) / rising_factorial(spec.c, spec.n);
  return {factor, Gauss2F1Spec{spec.n, spec.b, c_flip, Rational(1) - spec.x}};
}

Rational gauss_sum(const Natural& n, const Rational& b, const Rational& c) {
  if (const auto k = degenerate_pochhammer_index(c, n)) {
    throw DegeneracyError("denominator parameter degenerate: (c)_k vanishes at k = " +
                          std::to_string(*k) + " for c = " + c.str());
  }
  return rising_factorial(c - b, n) / rising_factorial(c, n);
}

ChuVandermondePair chu_vandermonde_pair(const Rational& alpha, const Rational& beta,
                                        const Rational& w, const Rational& z, const Natural& n) {
  const unsigned long nn = n.as_ulong();
  // Each term from scratch: total for every input, no factor ever divided out.
  Rational lhs = 0;
  for (unsigned long k = 0; k <= nn; ++k) {
    lhs += Rational(binomial(n, k)) * rising_factorial(alpha, k) * pow(w, k) *
           rising_factorial(beta, nn - k) * pow(z, nn - k);
  }
  ChuVandermondePair out{lhs, std::nullopt, ""};
  if (z.is_zero()) {
    out.rhs_note = "closed form needs z != 0";
    return out;
  }
  const Rational ab = alpha + beta;
  if (degenerate_pochhammer_index(ab, n)) {
    out.rhs_note = "closed form needs a non-degenerate alpha+beta";
    return out;
  }
  const Gauss2F1Spec flip{n, alpha, ab, Rational(1) - w / z};
  out.rhs = pow(z, nn) * rising_factorial(ab, n) * eval_2f1(flip);
  return out;
}

}  // namespace exhyp
