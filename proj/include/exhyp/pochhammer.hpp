#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "exhyp/natural.hpp"
#include "exhyp/rational.hpp"

namespace exhyp {

Natural factorial(const Natural& n);

/// Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.
/// Total for every rational x, including the non-positive integers.
Rational rising_factorial(const Rational& x, const Natural& n);

/// n! / (k! (n-k)!). Requires k <= n.
Natural binomial(const Natural& n, const Natural& k);

/// n! / (parts_1! ... parts_r!). Requires sum(parts) = n.
Natural multinomial(const Natural& n, std::span<const Natural> parts);

inline Natural multinomial(const Natural& n, std::initializer_list<Natural> parts) {
  return multinomial(n, std::span<const Natural>(parts.begin(), parts.size()));
}

/// (x)_{n-k} for k <= n, computed as a direct product. Where the rewrite
/// (-1)^k (x)_n / (1-x-n)_k has a nonzero denominator the two agree; the
/// direct product is total.
Rational tail_pochhammer(const Rational& x, const Natural& n, const Natural& k);

/// n!/(n-k)! = n(n-1)...(n-k+1) as an integer-valued Rational. Requires k <= n.
/// Equals (-1)^k (-n)_k.
Rational neg_n_pochhammer_ratio(const Natural& n, const Natural& k);

}  // namespace exhyp
