#include "exhyp/compositions.hpp"

#include "exhyp/pochhammer.hpp"

namespace exhyp {

WeakCompositions::WeakCompositions(const Natural& r, const Natural& n, SumMode mode)
    : r_(r.as_ulong()), n_(n.as_ulong()), mode_(mode) {
  if (r_ == 0) throw InputError("compositions need at least one part");
}

WeakCompositions::iterator::iterator(unsigned long r, unsigned long n, SumMode mode)
    : parts_(r, 0), budget_(n), mode_(mode) {
  if (mode_ == SumMode::exactly) {
    parts_[0] = n;
    sum_ = n;
  }
}

WeakCompositions::iterator& WeakCompositions::iterator::operator++() {
  const std::size_t r = parts_.size();
  if (mode_ == SumMode::at_most) {
    if (sum_ < budget_) {
      ++parts_[0];
      ++sum_;
      return *this;
    }
    // Sum is saturated: zero the first nonzero part and carry one unit right.
    for (std::size_t j = 0; j < r; ++j) {
      if (parts_[j] == 0) continue;
      if (j + 1 == r) break;
      sum_ -= parts_[j] - 1;
      parts_[j] = 0;
      ++parts_[j + 1];
      return *this;
    }
    done_ = true;
    return *this;
  }
  // exactly mode: the first part is the remainder of the others.
  if (r > 1 && parts_[0] > 0) {
    --parts_[0];
    ++parts_[1];
    return *this;
  }
  for (std::size_t j = 1; j < r; ++j) {
    if (parts_[j] == 0) continue;
    if (j + 1 == r) break;
    parts_[0] = parts_[j] - 1;
    parts_[j] = 0;
    ++parts_[j + 1];
    return *this;
  }
  done_ = true;
  return *this;
}

Natural WeakCompositions::count() const {
  if (mode_ == SumMode::exactly) return binomial(Natural(n_ + r_ - 1), Natural(r_ - 1));
  return binomial(Natural(n_ + r_), Natural(r_));
}

}  // namespace exhyp
