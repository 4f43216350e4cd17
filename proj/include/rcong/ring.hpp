#pragma once

#include <stdexcept>
#include <utility>

#include "classes.hpp"
#include "core.hpp"

namespace rcong {

/// An element of the ring of r-shifted classes over one (m, base) pair,
/// identified by its integer index r. Addition and multiplication act on
/// the indices exactly (r1 + r2, r1 * r2), with no reduction mod m:
/// the ring laws hold on indices, while the underlying sets collide for
/// indices congruent mod m. to_class exposes the set-level view.
template <integer_like I>
class formal_ring_element {
 public:
  formal_ring_element(modulus<I> m, I base, I index)
      : m_(std::move(m)), base_(std::move(base)), index_(std::move(index)) {}

  const modulus<I>& mod() const { return m_; }
  const I& base() const { return base_; }
  const I& index() const { return index_; }

  /// Formal equality: same ring instance and equal indices. Elements of
  /// distinct instances are never equal.
  friend bool operator==(const formal_ring_element&,
                         const formal_ring_element&) = default;

 private:
  modulus<I> m_;
  I base_;
  I index_;
};

namespace detail {

template <integer_like I>
void require_same_ring(const formal_ring_element<I>& x,
                       const formal_ring_element<I>& y, const char* who) {
  if (x.mod() != y.mod() || x.base() != y.base())
    throw std::invalid_argument(std::string(who) +
                                ": elements belong to different rings");
}

}  // namespace detail

template <integer_like I>
formal_ring_element<I> operator+(const formal_ring_element<I>& x,
                                 const formal_ring_element<I>& y) {
  detail::require_same_ring(x, y, "ring add");
  return {x.mod(), x.base(), I(x.index() + y.index())};
}

template <integer_like I>
formal_ring_element<I> operator*(const formal_ring_element<I>& x,
                                 const formal_ring_element<I>& y) {
  detail::require_same_ring(x, y, "ring mul");
  return {x.mod(), x.base(), I(x.index() * y.index())};
}

template <integer_like I>
formal_ring_element<I> operator-(const formal_ring_element<I>& x) {
  return {x.mod(), x.base(), I(-x.index())};
}

/// The index map: psi(element with index r) = r. Additive and
/// multiplicative by construction of the two ring laws.
template <integer_like I>
const I& psi(const formal_ring_element<I>& x) {
  return x.index();
}

/// The set-level view of a formal element: the class of base shifted by
/// the element's index. Formally distinct elements with indices congruent
/// mod m land on the same class.
template <integer_like I>
residue_class<I> to_class(const formal_ring_element<I>& x) {
  return make_class(x.base(), x.mod(), x.index());
}

/// One ring instance: the modulus and the fixed base point. Mixing
/// elements across instances is an error, not a re-interpretation.
template <integer_like I>
class formal_ring {
 public:
  formal_ring(modulus<I> m, I base)
      : m_(std::move(m)), base_(std::move(base)) {}

  const modulus<I>& mod() const { return m_; }
  const I& base() const { return base_; }

  formal_ring_element<I> element(const I& index) const {
    return {m_, base_, index};
  }
  formal_ring_element<I> zero() const { return element(I(0)); }
  formal_ring_element<I> one() const { return element(I(1)); }

 private:
  modulus<I> m_;
  I base_;
};

}  // namespace rcong
