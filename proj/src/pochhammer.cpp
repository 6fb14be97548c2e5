#include "exhyp/pochhammer.hpp"

namespace exhyp {

Natural factorial(const Natural& n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n.as_ulong());
  return Natural(r);
}

Rational rising_factorial(const Rational& x, const Natural& n) {
  const unsigned long count = n.as_ulong();
  // (p/q)_n = prod_k (p + k q) / q^n; every factor is coprime to q.
  mpz_class factor = x.num();
  const mpz_class& q = x.den();
  mpz_class num = 1;
  for (unsigned long k = 0; k < count; ++k) {
    if (sgn(factor) == 0) return Rational(0);
    num *= factor;
    factor += q;
  }
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), count);
  return Rational(num, den);
}

Natural binomial(const Natural& n, const Natural& k) {
  if (k > n) throw InputError("binomial requires k <= n");
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.value().get_mpz_t(), k.as_ulong());
  return Natural(r);
}

Natural multinomial(const Natural& n, std::span<const Natural> parts) {
  Natural total;
  for (const Natural& p : parts) total += p;
  if (total != n) throw InputError("multinomial parts must sum to n");
  // Product of binomials over the running remainder.
  Natural remaining = n;
  mpz_class acc = 1;
  for (const Natural& p : parts) {
    acc *= binomial(remaining, p).value();
    remaining = remaining - p;
  }
  return Natural(acc);
}

Rational tail_pochhammer(const Rational& x, const Natural& n, const Natural& k) {
  if (k > n) throw InputError("tail_pochhammer requires k <= n");
  return rising_factorial(x, n - k);
}

Rational neg_n_pochhammer_ratio(const Natural& n, const Natural& k) {
  if (k > n) throw InputError("neg_n_pochhammer_ratio requires k <= n");
  const unsigned long count = k.as_ulong();
  mpz_class acc = 1;
  mpz_class factor = n.value();
  for (unsigned long i = 0; i < count; ++i) {
    acc *= factor;
    factor -= 1;
  }
  return Rational(acc);
}

}  // namespace exhyp
