#include "exhyp/identity.hpp"

#include <chrono>
#include <utility>

#include <json.hpp>

#include "exhyp/pochhammer.hpp"
#include "term_scan.hpp"

namespace exhyp {

namespace {

std::int64_t elapsed_ns(const std::chrono::steady_clock::time_point& from) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                              from)
      .count();
}

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), rejection sampled.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform in [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  Rational rational(unsigned long magnitude, bool nonzero) {
    long num;
    do {
      num = static_cast<long>(below(2 * magnitude + 1)) - static_cast<long>(magnitude);
    } while (nonzero && num == 0);
    const long den = static_cast<long>(range(1, magnitude));
    return Rational(num, den);
  }
};

// The sum over the non-pivot indices in both rewritten forms is itself a
// Lauricella polynomial; only the denominator parameter and the arguments
// differ.
LauricellaSpec non_pivot_fd(const IdentityCase& c, const Rational& denom_param,
                            bool flip_arguments) {
  LauricellaSpec fd{c.n, {}, denom_param, {}};
  fd.b.reserve(c.a.size() - 1);
  fd.x.reserve(c.a.size() - 1);
  const Rational& w_pivot = c.w[c.pivot];
  for (std::size_t j = 0; j < c.a.size(); ++j) {
    if (j == c.pivot) continue;
    fd.b.push_back(c.a[j]);
    const Rational arg = c.w[j] / w_pivot;
    fd.x.push_back(flip_arguments ? Rational(1) - arg : arg);
  }
  return fd;
}

}  // namespace

std::size_t default_pivot(std::span<const Rational> w) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (abs(w[j]) > abs(w[best])) best = j;
  }
  return best;
}

void validate(const IdentityCase& c) {
  if (c.a.size() < 2) throw InputError("need at least two parameter pairs");
  if (c.a.size() != c.w.size()) {
    throw InputError("parameter vectors a and w must have equal length");
  }
  if (c.pivot >= c.w.size()) throw InputError("pivot out of range");
  if (c.w[c.pivot].is_zero()) throw InputError("pivot weight must be nonzero");
}

Rational multinomial_lhs(const IdentityCase& c, TermStats* stats) {
  validate(c);
  const unsigned long n = c.n.as_ulong();
  const std::size_t r = c.a.size();

  // Compositions are walked over indices 1..r-1 (sum <= n) with index 0 the
  // remainder t = n - sum. The coefficient and the index-0 factors fold into
  // an integer lookup
  //   U[t] = n! w_0^t (a_0)_t / t! * P^n,  P = den(a_0) den(w_0),
  // and the walk carries the scaled tail prod_{j>0} w_j^{n_j} (a_j)_{n_j}/n_j!.
  std::vector<Rational> u(n + 1);
  u[0] = Rational(factorial(c.n));
  for (unsigned long t = 0; t < n; ++t) {
    u[t + 1] = u[t] * c.w[0] * (c.a[0] + Rational(t)) / Rational(t + 1);
  }
  mpz_class head_den;
  mpz_mul(head_den.get_mpz_t(), c.a[0].den().get_mpz_t(), c.w[0].den().get_mpz_t());
  mpz_class head_scale;
  mpz_pow_ui(head_scale.get_mpz_t(), head_den.get_mpz_t(), n);
  std::vector<mpz_class> u_int(n + 1);
  mpz_class tmp;
  for (unsigned long t = 0; t <= n; ++t) {
    mpz_divexact(tmp.get_mpz_t(), head_scale.get_mpz_t(), u[t].den().get_mpz_t());
    mpz_mul(u_int[t].get_mpz_t(), u[t].num().get_mpz_t(), tmp.get_mpz_t());
  }

  // Tail scale: lcm_{j>0}(den a_j den w_j)^n * n!.
  mpz_class m = 1;
  std::vector<mpz_class> a_num, a_den, w_num, w_den;
  for (std::size_t j = 1; j < r; ++j) {
    a_num.push_back(c.a[j].num());
    a_den.push_back(c.a[j].den());
    w_num.push_back(c.w[j].num());
    w_den.push_back(c.w[j].den());
    mpz_mul(tmp.get_mpz_t(), c.a[j].den().get_mpz_t(), c.w[j].den().get_mpz_t());
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), tmp.get_mpz_t());
  }
  mpz_class tail_scale;
  mpz_pow_ui(tail_scale.get_mpz_t(), m.get_mpz_t(), n);
  mpz_fac_ui(tmp.get_mpz_t(), n);
  tail_scale *= tmp;

  mpz_class scratch;
  mpz_class sum = 0;
  std::uint64_t terms = 0;
  detail::scan_terms(
      r - 1, n, tail_scale,
      [&](unsigned long j, unsigned long k, unsigned long, mpz_class& out) {
        // w_j (a_j + k)
        mpz_mul_ui(scratch.get_mpz_t(), a_den[j].get_mpz_t(), k);
        scratch += a_num[j];
        mpz_mul(out.get_mpz_t(), scratch.get_mpz_t(), w_num[j].get_mpz_t());
      },
      [&](unsigned long j, unsigned long k, unsigned long, mpz_class& out) {
        // (k+1) den(a_j) den(w_j)
        mpz_mul(out.get_mpz_t(), a_den[j].get_mpz_t(), w_den[j].get_mpz_t());
        mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), k + 1);
      },
      [&](const WeakComposition&, unsigned long total, const mpz_class& tail) {
        mpz_addmul(sum.get_mpz_t(), u_int[n - total].get_mpz_t(), tail.get_mpz_t());
        ++terms;
      });
  if (stats) stats->terms = terms;
  mpz_class full_scale;
  mpz_mul(full_scale.get_mpz_t(), head_scale.get_mpz_t(), tail_scale.get_mpz_t());
  return Rational(sum, full_scale);
}

Rational multinomial_intermediate(const IdentityCase& c) {
  validate(c);
  const Rational& a_pivot = c.a[c.pivot];
  const Rational shift = Rational(1) - a_pivot - Rational(c.n);
  if (degenerate_pochhammer_index(shift, c.n)) {
    throw DegeneracyError("intermediate form undefined: (1-a-n)_k vanishes for the pivot");
  }
  const LauricellaSpec inner = non_pivot_fd(c, shift, /*flip_arguments=*/false);
  return rising_factorial(a_pivot, c.n) * pow(c.w[c.pivot], c.n.as_ulong()) *
         eval_fd_exact(inner);
}

Rational multinomial_rhs(const IdentityCase& c, TermStats* stats) {
  validate(c);
  Rational a_total = 0;
  for (const Rational& v : c.a) a_total += v;
  if (degenerate_pochhammer_index(a_total, c.n)) {
    throw DegeneracyError("closed form undefined: sum of the a_j is a degenerate parameter");
  }
  const LauricellaSpec fd = non_pivot_fd(c, a_total, /*flip_arguments=*/true);
  return pow(c.w[c.pivot], c.n.as_ulong()) * rising_factorial(a_total, c.n) *
         eval_fd_exact(fd, stats);
}

VerificationReport verify_identity(const IdentityCase& c) {
  validate(c);
  VerificationReport report;

  TermStats lhs_stats;
  auto t0 = std::chrono::steady_clock::now();
  report.lhs = multinomial_lhs(c, &lhs_stats);
  report.lhs_elapsed_ns = elapsed_ns(t0);
  report.lhs_terms = lhs_stats.terms;

  t0 = std::chrono::steady_clock::now();
  try {
    report.intermediate = multinomial_intermediate(c);
  } catch (const DegeneracyError& e) {
    report.note = e.what();
  }
  report.intermediate_elapsed_ns = elapsed_ns(t0);

  TermStats rhs_stats;
  t0 = std::chrono::steady_clock::now();
  try {
    report.rhs = multinomial_rhs(c, &rhs_stats);
    report.rhs_terms = rhs_stats.terms;
  } catch (const DegeneracyError& e) {
    if (!report.note.empty()) report.note += "; ";
    report.note += e.what();
  }
  report.rhs_elapsed_ns = elapsed_ns(t0);

  if (report.intermediate || report.rhs) {
    report.equal = (!report.intermediate || *report.intermediate == report.lhs) &&
                   (!report.rhs || *report.rhs == report.lhs);
  }
  return report;
}

std::vector<IdentityCase> generate_cases(std::uint64_t seed, std::size_t count,
                                         const CaseBounds& bounds) {
  if (bounds.r_max < 2) throw InputError("r_max must be at least 2");
  if (bounds.magnitude == 0) throw InputError("magnitude must be positive");
  if (bounds.n_max == UINT64_MAX) throw InputError("n_max out of range");
  SplitMix64 rng(seed);
  std::vector<IdentityCase> cases;
  cases.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    IdentityCase c;
    const std::size_t r = rng.range(2, bounds.r_max);
    c.n = Natural(static_cast<unsigned long>(rng.below(bounds.n_max + 1)));
    c.a.reserve(r);
    c.w.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
      c.a.push_back(rng.rational(bounds.magnitude, false));
      c.w.push_back(rng.rational(bounds.magnitude, true));
    }
    c.pivot = default_pivot(c.w);
    cases.push_back(std::move(c));
  }
  return cases;
}

std::string report_json(const IdentityCase& c, const VerificationReport& report) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json case_obj;
  case_obj["n"] = c.n.as_ulong();
  case_obj["a"] = nlohmann::ordered_json::array();
  case_obj["w"] = nlohmann::ordered_json::array();
  for (const Rational& v : c.a) case_obj["a"].push_back(v.str());
  for (const Rational& v : c.w) case_obj["w"].push_back(v.str());
  case_obj["pivot"] = c.pivot + 1;  // 1-based outside
  j["case"] = std::move(case_obj);
  j["lhs"] = report.lhs.str();
  j["rhs"] =
      report.rhs ? nlohmann::ordered_json(report.rhs->str()) : nlohmann::ordered_json(nullptr);
  j["intermediate"] = report.intermediate ? nlohmann::ordered_json(report.intermediate->str())
                                          : nlohmann::ordered_json(nullptr);
  j["equal"] =
      report.equal ? nlohmann::ordered_json(*report.equal) : nlohmann::ordered_json(nullptr);
  j["lhs_terms"] = report.lhs_terms;
  j["rhs_terms"] = report.rhs_terms;
  j["elapsed_ns"] = {{"lhs", report.lhs_elapsed_ns},
                     {"intermediate", report.intermediate_elapsed_ns},
                     {"rhs", report.rhs_elapsed_ns}};
  if (!report.note.empty()) j["note"] = report.note;
  return j.dump();
}

}  // namespace exhyp
