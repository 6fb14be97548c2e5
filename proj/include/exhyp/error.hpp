#pragma once

#include <stdexcept>

namespace exhyp {

// Malformed or out-of-contract arguments: bad literals, k > n,
// mismatched vector lengths, and the like.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Pochhammer factor in a denominator vanishes (or, in floating-point
// mode, nearly vanishes), so the requested value does not exist.
class DegeneracyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace exhyp
