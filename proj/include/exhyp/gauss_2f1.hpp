#pragma once

#include <optional>
#include <string>

#include "exhyp/natural.hpp"
#include "exhyp/rational.hpp"

namespace exhyp {

/// Terminating Gauss hypergeometric polynomial of degree n:
///   sum_{k=0}^{n} (-n)_k (b)_k x^k / (k! (c)_k).
/// Well defined when c is not one of 0, -1, ..., -(n-1).
struct Gauss2F1Spec {
  Natural n;
  Rational b;
  Rational c;
  Rational x;
};

/// Smallest k <= n with (c)_k = 0, if any. Exists exactly when c is an
/// integer in {0, -1, ..., -(n-1)}; the vanishing index is 1 - c.
std::optional<unsigned long> degenerate_pochhammer_index(const Rational& c, const Natural& n);

/// Throws DegeneracyError if some (c)_k with k <= n vanishes.
void validate(const Gauss2F1Spec& spec);

Rational eval_2f1(const Gauss2F1Spec& spec);

struct TransformedGauss {
  Rational factor;
  Gauss2F1Spec spec;
};

/// Argument flip x -> 1-x: returns factor (c-b)_n/(c)_n and the spec
/// (n, b, b+1-n-c, 1-x) whose value times the factor reproduces the input's.
/// Throws DegeneracyError when the new denominator parameter is degenerate.
TransformedGauss transform_2f1(const Gauss2F1Spec& spec);

/// Closed form of the degree-n polynomial at x = 1: (c-b)_n / (c)_n.
Rational gauss_sum(const Natural& n, const Rational& b, const Rational& c);

struct ChuVandermondePair {
  Rational lhs;
  std::optional<Rational> rhs;  // absent when z = 0 or alpha+beta degenerate
  std::string rhs_note;         // why rhs is absent, empty otherwise
};

/// Weighted binomial convolution of two rising factorials, both ways:
///   lhs = sum_k C(n,k) (alpha)_k w^k (beta)_{n-k} z^{n-k}  (direct sum)
///   rhs = z^n (alpha+beta)_n 2F1(-n, alpha, alpha+beta; 1 - w/z)
/// Equal whenever rhs exists.
ChuVandermondePair chu_vandermonde_pair(const Rational& alpha, const Rational& beta,
                                        const Rational& w, const Rational& z, const Natural& n);

}  // namespace exhyp
