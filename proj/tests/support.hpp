// Shared test plumbing: a deterministic generator for random rational
// parameter sets and brute-force reference evaluators that avoid the
// library's incremental kernels.
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "exhyp/compositions.hpp"
#include "exhyp/gauss_2f1.hpp"
#include "exhyp/identity.hpp"
#include "exhyp/lauricella.hpp"
#include "exhyp/pochhammer.hpp"

namespace testsupport {

using exhyp::Gauss2F1Spec;
using exhyp::IdentityCase;
using exhyp::LauricellaSpec;
using exhyp::Natural;
using exhyp::Rational;

struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  long integer(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  Rational rational(long magnitude, bool nonzero = false) {
    long num;
    do {
      num = integer(-magnitude, magnitude);
    } while (nonzero && num == 0);
    return Rational(num, integer(1, magnitude));
  }

  // A denominator parameter with no vanishing (c)_k for k <= n.
  Rational denominator_param(const Natural& n, long magnitude) {
    for (;;) {
      const Rational c = rational(magnitude);
      if (!exhyp::degenerate_pochhammer_index(c, n)) return c;
    }
  }

  Gauss2F1Spec gauss_spec(unsigned long n_max, long magnitude) {
    const Natural n(below(n_max + 1));
    return Gauss2F1Spec{n, rational(magnitude), denominator_param(n, magnitude),
                        rational(magnitude)};
  }

  LauricellaSpec fd_spec(unsigned long r_min, unsigned long r_max, unsigned long n_max,
                         long magnitude) {
    LauricellaSpec spec;
    spec.n = Natural(below(n_max + 1));
    const unsigned long r = r_min + below(r_max - r_min + 1);
    for (unsigned long j = 0; j < r; ++j) {
      spec.b.push_back(rational(magnitude));
      spec.x.push_back(rational(magnitude));
    }
    spec.c = denominator_param(spec.n, magnitude);
    return spec;
  }

  IdentityCase identity_case(unsigned long r_min, unsigned long r_max, unsigned long n_max,
                             long magnitude) {
    IdentityCase c;
    c.n = Natural(below(n_max + 1));
    const unsigned long r = r_min + below(r_max - r_min + 1);
    for (unsigned long j = 0; j < r; ++j) {
      c.a.push_back(rational(magnitude));
      c.w.push_back(rational(magnitude, /*nonzero=*/true));
    }
    c.pivot = exhyp::default_pivot(c.w);
    return c;
  }
};

// (x)_n as a plain product of Rational factors.
inline Rational poch_product(const Rational& x, unsigned long n) {
  Rational acc = 1;
  for (unsigned long i = 0; i < n; ++i) acc *= x + Rational(i);
  return acc;
}

// Gauss polynomial with every term built from scratch.
inline Rational gauss_per_term(const Gauss2F1Spec& spec) {
  const unsigned long n = spec.n.as_ulong();
  Rational sum = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    sum += poch_product(-Rational(spec.n), k) * poch_product(spec.b, k) *
           exhyp::pow(spec.x, k) /
           (Rational(exhyp::factorial(Natural(k))) * poch_product(spec.c, k));
  }
  return sum;
}

// Lauricella polynomial as a plain sum of from-scratch terms over the
// public composition stream.
inline Rational fd_bruteforce(const LauricellaSpec& spec) {
  Rational sum = 0;
  const exhyp::WeakCompositions comps(Natural(spec.b.size()), spec.n, exhyp::SumMode::at_most);
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    const exhyp::WeakComposition& parts = *it;
    const unsigned long total = std::accumulate(parts.begin(), parts.end(), 0ul);
    Rational term = poch_product(-Rational(spec.n), total) / poch_product(spec.c, total);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      term *= poch_product(spec.b[j], parts[j]) * exhyp::pow(spec.x[j], parts[j]) /
              Rational(exhyp::factorial(Natural(parts[j])));
    }
    sum += term;
  }
  return sum;
}

// Defining sum of the weighted multinomial identity, term by term from
// multinomial coefficients and rising-factorial products.
inline Rational identity_lhs_bruteforce(const IdentityCase& c) {
  Rational sum = 0;
  const exhyp::WeakCompositions comps(Natural(c.a.size()), c.n, exhyp::SumMode::exactly);
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    const exhyp::WeakComposition& parts = *it;
    std::vector<Natural> nat_parts(parts.begin(), parts.end());
    Rational term = Rational(exhyp::multinomial(c.n, nat_parts));
    for (std::size_t j = 0; j < parts.size(); ++j) {
      term *= exhyp::pow(c.w[j], parts[j]) * poch_product(c.a[j], parts[j]);
    }
    sum += term;
  }
  return sum;
}

// Binomial convolution of two rising factorials, summed directly.
inline Rational cv_lhs_bruteforce(const Rational& alpha, const Rational& beta, const Rational& w,
                                  const Rational& z, unsigned long n) {
  Rational sum = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    sum += Rational(exhyp::binomial(Natural(n), Natural(k))) * poch_product(alpha, k) *
           exhyp::pow(w, k) * poch_product(beta, n - k) * exhyp::pow(z, n - k);
  }
  return sum;
}

}  // namespace testsupport
