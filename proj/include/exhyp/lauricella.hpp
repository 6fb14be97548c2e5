#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "exhyp/compositions.hpp"
#include "exhyp/gauss_2f1.hpp"
#include "exhyp/natural.hpp"
#include "exhyp/rational.hpp"

namespace exhyp {

/// Terminating fourth Lauricella polynomial of degree n in r variables:
///   sum over weak compositions (n_1..n_r), sum <= n, of
///   (-n)_N (b_1)_{n_1}...(b_r)_{n_r} / (c)_N * prod_j x_j^{n_j}/n_j!
/// with N = sum n_j. Well defined when c is not in {0, -1, ..., -(n-1)}.
struct LauricellaSpec {
  Natural n;
  std::vector<Rational> b;
  Rational c;
  std::vector<Rational> x;
};

/// Throws InputError on mismatched or empty parameter vectors,
/// DegeneracyError on a degenerate c.
void validate(const LauricellaSpec& spec);

struct TermStats {
  std::uint64_t terms = 0;
};

/// Exact value by one pass over the composition stream in colexicographic
/// order; the running term is updated with O(1) factor multiplications per
/// index increment.
Rational eval_fd_exact(const LauricellaSpec& spec, TermStats* stats = nullptr);

/// The term belonging to one composition, built from scratch out of rising
/// factorials. Oracle for the incremental kernel.
Rational fd_term_at(const LauricellaSpec& spec, std::span<const unsigned long> parts);

/// Streams (composition, incrementally-updated term) pairs in the exact
/// order eval_fd_exact consumes them.
void scan_fd_terms(const LauricellaSpec& spec,
                   const std::function<void(const WeakComposition&, const Rational&)>& emit);

/// Absolute distance from a degenerate integer below which the binary64
/// evaluator refuses the denominator parameter.
inline constexpr double fd_float_degeneracy_tol = 1e-12;

struct FdFloatResult {
  double value;
  double condition;  // sum|term| / |sum term|; infinity when the sum is 0
};

/// Binary64 fast path over the same terms, compensated (Neumaier) summation.
/// The reported condition number bounds the achievable relative accuracy.
FdFloatResult eval_fd_float(unsigned long n, std::span<const double> b, double c,
                            std::span<const double> x);

struct ToscanoTransformed {
  Rational factor;
  LauricellaSpec spec;
};

/// Argument flip x_j -> 1-x_j: returns factor (c - sum b_j)_n / (c)_n and the
/// spec (n, b, 1 + sum b_j - n - c, 1-x) whose value times the factor
/// reproduces the input's. Throws DegeneracyError when the new denominator
/// parameter is degenerate.
ToscanoTransformed toscano_transform(const LauricellaSpec& spec);

/// The r = 1 case is a Gauss polynomial: (n, b_1, c, x_1). Requires r = 1.
Gauss2F1Spec reduce_to_2f1(const LauricellaSpec& spec);

}  // namespace exhyp
