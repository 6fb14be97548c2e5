#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "exhyp/error.hpp"

namespace exhyp {

/// Unbounded non-negative integer. Degrees, summation indices and counting
/// values (binomial and multinomial coefficients) all live here.
class Natural {
 public:
  Natural() = default;
  Natural(unsigned int v) : v_(static_cast<unsigned long>(v)) {}
  Natural(unsigned long v) : v_(v) {}
  Natural(int v) : v_(v) {
    if (v < 0) throw InputError("Natural cannot be negative");
  }
  explicit Natural(mpz_class v) : v_(std::move(v)) {
    if (sgn(v_) < 0) throw InputError("Natural cannot be negative");
  }

  // Accepts a plain digit string, e.g. "42".
  static Natural parse(std::string_view text);

  const mpz_class& value() const noexcept { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }

  // Narrows to a machine word for use as a loop bound or table size.
  unsigned long as_ulong() const {
    if (!v_.fits_ulong_p()) throw InputError("value too large for a machine word");
    return v_.get_ui();
  }

  std::string str() const { return v_.get_str(); }

  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
  }
  friend Natural operator+(Natural a, const Natural& b) {
    a += b;
    return a;
  }
  friend Natural operator*(Natural a, const Natural& b) {
    a *= b;
    return a;
  }
  friend Natural operator-(const Natural& a, const Natural& b) {
    if (a.v_ < b.v_) throw InputError("Natural subtraction would go negative");
    Natural r;
    r.v_ = a.v_ - b.v_;
    return r;
  }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& v) { return os << v.str(); }

 private:
  mpz_class v_{0ul};
};

}  // namespace exhyp
