#include "exhyp/lauricella.hpp"

#include <cfloat>
#include <cmath>

#include "exhyp/pochhammer.hpp"
#include "term_scan.hpp"

namespace exhyp {

namespace {

void throw_degenerate(const Rational& c, unsigned long k) {
  throw DegeneracyError("denominator parameter degenerate: (c)_k vanishes at k = " +
                        std::to_string(k) + " for c = " + c.str());
}

// Integer pieces of the exact term ratio along the composition stream:
// stepping part j from k to k+1 with running sum `total` multiplies by
//   (total - n)(b_j + k) x_j / ((k+1)(c + total)).
struct FdRatio {
  long n;
  std::vector<mpz_class> b_num, b_den, x_num, x_den;
  mpz_class c_num, c_den;
  mpz_class scratch;

  explicit FdRatio(const LauricellaSpec& spec) : n(static_cast<long>(spec.n.as_ulong())) {
    for (const Rational& v : spec.b) {
      b_num.push_back(v.num());
      b_den.push_back(v.den());
    }
    for (const Rational& v : spec.x) {
      x_num.push_back(v.num());
      x_den.push_back(v.den());
    }
    c_num = spec.c.num();
    c_den = spec.c.den();
  }

  void num(unsigned long j, unsigned long k, unsigned long total, mpz_class& out) {
    mpz_mul_ui(scratch.get_mpz_t(), b_den[j].get_mpz_t(), k);
    scratch += b_num[j];
    mpz_mul(out.get_mpz_t(), scratch.get_mpz_t(), x_num[j].get_mpz_t());
    out *= c_den;
    mpz_mul_si(out.get_mpz_t(), out.get_mpz_t(), static_cast<long>(total) - n);
  }

  void den(unsigned long j, unsigned long k, unsigned long total, mpz_class& out) {
    mpz_mul_ui(scratch.get_mpz_t(), c_den.get_mpz_t(), total);
    scratch += c_num;
    mpz_mul(out.get_mpz_t(), scratch.get_mpz_t(), b_den[j].get_mpz_t());
    out *= x_den[j];
    mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), k + 1);
  }
};

// Common multiple of every term's denominator, so the scan can carry
// integer-scaled terms: 1/(c)_N contributes prod_{i<n} (c_num + i c_den),
// each (b_j)_{n_j} x_j^{n_j} at most lcm_j(den b_j den x_j)^n, and the
// 1/n_j! at most n! (their product divides n!).
mpz_class fd_scale(const LauricellaSpec& spec, unsigned long n) {
  mpz_class scale = 1;
  mpz_class factor = spec.c.num();
  for (unsigned long i = 0; i < n; ++i) {
    scale *= factor;
    factor += spec.c.den();
  }
  scale = abs(scale);
  mpz_class m = 1, tmp;
  for (std::size_t j = 0; j < spec.b.size(); ++j) {
    mpz_mul(tmp.get_mpz_t(), spec.b[j].den().get_mpz_t(), spec.x[j].den().get_mpz_t());
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), tmp.get_mpz_t());
  }
  mpz_pow_ui(tmp.get_mpz_t(), m.get_mpz_t(), n);
  scale *= tmp;
  mpz_fac_ui(tmp.get_mpz_t(), n);
  scale *= tmp;
  return scale;
}

void neumaier_add(double& sum, double& comp, double v) {
  const double t = sum + v;
  if (std::abs(sum) >= std::abs(v)) {
    comp += (sum - t) + v;
  } else {
    comp += (v - t) + sum;
  }
  sum = t;
}

}  // namespace

void validate(const LauricellaSpec& spec) {
  if (spec.b.empty() || spec.b.size() != spec.x.size()) {
    throw InputError("parameter vectors b and x must have equal nonzero length");
  }
  if (const auto k = degenerate_pochhammer_index(spec.c, spec.n)) throw_degenerate(spec.c, *k);
}

Rational eval_fd_exact(const LauricellaSpec& spec, TermStats* stats) {
  validate(spec);
  const unsigned long n = spec.n.as_ulong();
  const unsigned long r = spec.b.size();
  FdRatio ratio(spec);
  const mpz_class scale = fd_scale(spec, n);
  mpz_class sum = 0;
  std::uint64_t terms = 0;
  detail::scan_terms(
      r, n, scale,
      [&](unsigned long j, unsigned long k, unsigned long total, mpz_class& out) {
        ratio.num(j, k, total, out);
      },
      [&](unsigned long j, unsigned long k, unsigned long total, mpz_class& out) {
        ratio.den(j, k, total, out);
      },
      [&](const WeakComposition&, unsigned long, const mpz_class& scaled) {
        sum += scaled;
        ++terms;
      });
  if (stats) stats->terms = terms;
  return Rational(sum, scale);
}

Rational fd_term_at(const LauricellaSpec& spec, std::span<const unsigned long> parts) {
  validate(spec);
  if (parts.size() != spec.b.size()) throw InputError("composition length must match r");
  unsigned long total = 0;
  for (unsigned long p : parts) total += p;
  const unsigned long n = spec.n.as_ulong();
  if (total > n) throw InputError("composition exceeds the degree");
  Rational term =
      rising_factorial(-Rational(spec.n), total) / rising_factorial(spec.c, total);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    term *= rising_factorial(spec.b[j], parts[j]) * pow(spec.x[j], parts[j]) /
            Rational(factorial(parts[j]));
  }
  return term;
}

void scan_fd_terms(const LauricellaSpec& spec,
                   const std::function<void(const WeakComposition&, const Rational&)>& emit) {
  validate(spec);
  FdRatio ratio(spec);
  const mpz_class scale = fd_scale(spec, spec.n.as_ulong());
  detail::scan_terms(
      spec.b.size(), spec.n.as_ulong(), scale,
      [&](unsigned long j, unsigned long k, unsigned long total, mpz_class& out) {
        ratio.num(j, k, total, out);
      },
      [&](unsigned long j, unsigned long k, unsigned long total, mpz_class& out) {
        ratio.den(j, k, total, out);
      },
      [&](const WeakComposition& parts, unsigned long, const mpz_class& scaled) {
        emit(parts, Rational(scaled, scale));
      });
}

FdFloatResult eval_fd_float(unsigned long n, std::span<const double> b, double c,
                            std::span<const double> x) {
  if (b.empty() || b.size() != x.size()) {
    throw InputError("parameter vectors b and x must have equal nonzero length");
  }
  if (n > 0) {
    const double nearest = std::nearbyint(c);
    if (std::abs(c - nearest) < fd_float_degeneracy_tol && nearest <= 0.0 &&
        nearest >= -static_cast<double>(n - 1)) {
      throw DegeneracyError("denominator parameter within 1e-12 of degenerate integer " +
                            std::to_string(static_cast<long>(nearest)));
    }
  }
  double sum = 0, sum_comp = 0;
  double abs_sum = 0, abs_comp = 0;
  auto walk = [&](auto&& self, std::size_t level, unsigned long total, double base) -> void {
    if (level == 0) {
      neumaier_add(sum, sum_comp, base);
      neumaier_add(abs_sum, abs_comp, std::abs(base));
      return;
    }
    const std::size_t j = level - 1;
    double cur = base;
    for (unsigned long k = 0;; ++k) {
      self(self, level - 1, total + k, cur);
      if (total + k == n) break;
      const double t = static_cast<double>(total + k);
      cur *= (t - static_cast<double>(n)) * (b[j] + static_cast<double>(k)) * x[j] /
             ((static_cast<double>(k) + 1.0) * (c + t));
    }
  };
  walk(walk, b.size(), 0, 1.0);
  const double value = sum + sum_comp;
  const double magnitude = abs_sum + abs_comp;
  const double condition = std::abs(value) < DBL_MIN ? INFINITY : magnitude / std::abs(value);
  return {value, condition};
}

ToscanoTransformed toscano_transform(const LauricellaSpec& spec) {
  validate(spec);
  Rational b_total = 0;
  for (const Rational& v : spec.b) b_total += v;
  const Rational c_flip = Rational(1) + b_total - Rational(spec.n) - spec.c;
  if (degenerate_pochhammer_index(c_flip, spec.n)) {
    throw DegeneracyError("transformation undefined for these parameters");
  }
  const Rational factor =
      rising_factorial(spec.c - b_total, spec.n) / rising_factorial(spec.c, spec.n);
  LauricellaSpec flipped{spec.n, spec.b, c_flip, {}};
  flipped.x.reserve(spec.x.size());
  for (const Rational& v : spec.x) flipped.x.push_back(Rational(1) - v);
  return {factor, std::move(flipped)};
}

Gauss2F1Spec reduce_to_2f1(const LauricellaSpec& spec) {
  if (spec.b.size() != 1 || spec.x.size() != 1) {
    throw InputError("reduction to a Gauss polynomial needs r = 1");
  }
  return Gauss2F1Spec{spec.n, spec.b[0], spec.c, spec.x[0]};
}

}  // namespace exhyp
