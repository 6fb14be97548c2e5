#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exhyp/lauricella.hpp"
#include "exhyp/natural.hpp"
#include "exhyp/rational.hpp"

namespace exhyp {

/// A weighted multinomial convolution of rising factorials:
///   sum over compositions n_1+...+n_r = n of
///   C(n; n_1..n_r) prod_j w_j^{n_j} (a_j)_{n_j}
/// together with the pivot index whose weight anchors the closed form
/// (the closed form's arguments are 1 - w_j/w_pivot).
struct IdentityCase {
  Natural n;
  std::vector<Rational> a;
  std::vector<Rational> w;
  std::size_t pivot = 0;  // 0-based
};

/// Index of the largest |w_j| (ties to the first), which keeps the closed
/// form's arguments small.
std::size_t default_pivot(std::span<const Rational> w);

/// Throws InputError unless r >= 2, |a| = |w|, pivot < r, w[pivot] != 0.
void validate(const IdentityCase& c);

/// The defining sum, term by term over the composition stream.
Rational multinomial_lhs(const IdentityCase& c, TermStats* stats = nullptr);

/// The half-rewritten form: pivot factors pulled out front,
///   (a_p)_n w_p^n * sum over the other r-1 indices (sum <= n) of
///   (-n)_S / (1-a_p-n)_S * prod (a_j)_{n_j}/n_j! (w_j/w_p)^{n_j}.
/// Throws DegeneracyError ("intermediate form undefined") when a_pivot is an
/// integer in [1-n, 0], where (1-a_p-n)_S vanishes for some reachable S.
Rational multinomial_intermediate(const IdentityCase& c);

/// The closed form: w_p^n (sum_j a_j)_n * F_D of the non-pivot parameters at
/// arguments 1 - w_j/w_p. Throws DegeneracyError ("closed form undefined")
/// when sum_j a_j is a degenerate denominator parameter.
Rational multinomial_rhs(const IdentityCase& c, TermStats* stats = nullptr);

struct VerificationReport {
  Rational lhs;
  std::optional<Rational> intermediate;  // absent where undefined
  std::optional<Rational> rhs;           // absent where undefined
  std::optional<bool> equal;             // absent when nothing was comparable
  std::uint64_t lhs_terms = 0;
  std::uint64_t rhs_terms = 0;
  std::int64_t lhs_elapsed_ns = 0;
  std::int64_t intermediate_elapsed_ns = 0;
  std::int64_t rhs_elapsed_ns = 0;
  std::string note;  // reason a side is absent, empty otherwise
};

/// Evaluates every side that is defined and reports; degeneracies become
/// absent fields, never exceptions.
VerificationReport verify_identity(const IdentityCase& c);

struct CaseBounds {
  unsigned long r_max = 5;
  unsigned long n_max = 12;
  unsigned long magnitude = 8;  // bound on |numerator| and denominator
};

/// Deterministic pseudo-random cases: r in 2..r_max, n in 0..n_max, each a_j
/// and w_j a rational with numerator/denominator magnitudes <= magnitude and
/// w_j != 0. Same seed, same sequence.
std::vector<IdentityCase> generate_cases(std::uint64_t seed, std::size_t count,
                                         const CaseBounds& bounds);

/// One-line JSON object with keys case, lhs, rhs, intermediate, equal,
/// lhs_terms, rhs_terms, elapsed_ns (undefined sides serialize as null).
std::string report_json(const IdentityCase& c, const VerificationReport& report);

}  // namespace exhyp
