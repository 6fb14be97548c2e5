#pragma once

#include <cstddef>
#include <iterator>
#include <vector>

#include "exhyp/natural.hpp"

namespace exhyp {

/// One index tuple of a multivariate hypergeometric sum.
using WeakComposition = std::vector<unsigned long>;

enum class SumMode {
  exactly,  // parts sum to n
  at_most,  // parts sum to at most n
};

/// All weak compositions of n into r parts, in colexicographic order: the
/// first part varies fastest, the last slowest. Single-pass input iterators;
/// each begin() starts an independent walk.
class WeakCompositions {
 public:
  WeakCompositions(const Natural& r, const Natural& n, SumMode mode);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = WeakComposition;
    using difference_type = std::ptrdiff_t;
    using pointer = const WeakComposition*;
    using reference = const WeakComposition&;

    const WeakComposition& operator*() const { return parts_; }
    const WeakComposition* operator->() const { return &parts_; }
    iterator& operator++();
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class WeakCompositions;
    iterator(unsigned long r, unsigned long n, SumMode mode);

    WeakComposition parts_;
    unsigned long budget_;
    unsigned long sum_ = 0;
    SumMode mode_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(r_, n_, mode_); }
  std::default_sentinel_t end() const { return {}; }

  /// C(n+r-1, r-1) in exactly mode, C(n+r, r) in at_most mode.
  Natural count() const;

  unsigned long parts() const { return r_; }
  unsigned long budget() const { return n_; }
  SumMode mode() const { return mode_; }

 private:
  unsigned long r_;
  unsigned long n_;
  SumMode mode_;
};

}  // namespace exhyp
