#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "core.hpp"

namespace rcong {

/// The permutation of the labels {0..m-1} sending i to (i + shift) mod m.
/// Every power of such a map is again a shift, so composition stays O(1)
/// and group closure is structural.
template <integer_like I>
class shift_permutation {
 public:
  shift_permutation(modulus<I> m, const I& r)
      : m_(std::move(m)), shift_(detail::mod_floor(r, m_.value())) {}

  static shift_permutation identity(modulus<I> m) {
    return shift_permutation(std::move(m), I(0));
  }

  const modulus<I>& mod() const { return m_; }
  const I& shift() const { return shift_; }
  bool is_identity() const { return shift_ == I(0); }

  I apply(const I& label) const {
    return detail::mod_floor(I(label + shift_), m_.value());
  }

  friend bool operator==(const shift_permutation&,
                         const shift_permutation&) = default;

 private:
  modulus<I> m_;
  I shift_;
};

template <integer_like I>
std::ostream& operator<<(std::ostream& os, const shift_permutation<I>& f) {
  return os << "shift " << f.shift() << " (mod " << f.mod().value() << ")";
}

template <integer_like I>
shift_permutation<I> compose(const shift_permutation<I>& f,
                             const shift_permutation<I>& g) {
  if (f.mod() != g.mod())
    throw std::invalid_argument("compose: modulus mismatch");
  return shift_permutation<I>(f.mod(), I(f.shift() + g.shift()));
}

template <integer_like I>
shift_permutation<I> operator*(const shift_permutation<I>& f,
                               const shift_permutation<I>& g) {
  return compose(f, g);
}

/// k-fold self-composition, k >= 0.
template <integer_like I>
shift_permutation<I> pow(const shift_permutation<I>& f, const I& k) {
  if (k < I(0)) throw std::invalid_argument("pow: negative exponent");
  return shift_permutation<I>(f.mod(), I(f.shift() * k));
}

/// Smallest k >= 1 whose k-fold self-composition is the identity:
/// m / gcd(shift, m).
template <integer_like I>
I order(const shift_permutation<I>& f) {
  return I(f.mod().value() / detail::int_gcd(f.shift(), f.mod().value()));
}

/// Canonical cycle decomposition. The orbit of a label under repeated
/// shifting is its residue class mod gcd(shift, m), so there are exactly
/// gcd(shift, m) cycles and their minima are 0..gcd-1. Each cycle is
/// listed from its minimum; cycles are sorted by minimum.
template <integer_like I>
std::vector<std::vector<I>> cycle_decomposition(
    const shift_permutation<I>& f) {
  const I& m = f.mod().value();
  I g = detail::int_gcd(f.shift(), m);
  I len(m / g);
  std::vector<std::vector<I>> cycles;
  for (I start(0); start < g; start = I(start + 1)) {
    std::vector<I> cycle;
    I label = start;
    for (I i(0); i < len; i = I(i + 1)) {
      cycle.push_back(label);
      label = f.apply(label);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

/// The distinct powers f^0 (identity), f^1, ... of f, in that order.
/// The list length equals order(f).
template <integer_like I>
std::vector<shift_permutation<I>> generated_subgroup(
    const shift_permutation<I>& f) {
  std::vector<shift_permutation<I>> elems;
  shift_permutation<I> cur = shift_permutation<I>::identity(f.mod());
  do {
    elems.push_back(cur);
    cur = compose(cur, f);
  } while (!cur.is_identity());
  return elems;
}

}  // namespace rcong
