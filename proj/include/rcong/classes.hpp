#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "core.hpp"

namespace rcong {

/// The set { rho + m*n : n in Z }, stored by its reduced label rho in
/// [0, m). An r-residue class built from base point a is the plain
/// residue class of a + r, so the stored label is (a + r) mod m.
template <integer_like I>
class residue_class {
 public:
  residue_class(modulus<I> m, const I& label)
      : m_(std::move(m)), rho_(detail::mod_floor(label, m_.value())) {}

  const modulus<I>& mod() const { return m_; }
  const I& rho() const { return rho_; }

  /// Set equality: same modulus and same reduced label. Classes over
  /// different moduli compare unequal rather than erroring.
  friend bool operator==(const residue_class&,
                         const residue_class&) = default;

 private:
  modulus<I> m_;
  I rho_;
};

/// The class of a shifted by r, i.e. all x with x ≡_r a (mod m).
template <integer_like I>
residue_class<I> make_class(const I& a, const modulus<I>& m, const I& r) {
  return residue_class<I>(m, I(a + r));
}

template <integer_like I>
bool class_eq(const residue_class<I>& x, const residue_class<I>& y) {
  return x == y;
}

template <integer_like I>
std::ostream& operator<<(std::ostream& os, const residue_class<I>& c) {
  return os << c.rho() << " + " << c.mod().value() << "Z";
}

template <integer_like I>
bool contains(const residue_class<I>& c, const I& x) {
  return detail::mod_floor(x, c.mod().value()) == c.rho();
}

/// Ascending list of the members of c inside [lo, hi].
template <integer_like I>
std::vector<I> members_in_range(const residue_class<I>& c, const I& lo,
                                const I& hi) {
  if (lo > hi)
    throw std::invalid_argument("members_in_range: lo exceeds hi");
  const I& m = c.mod().value();
  std::vector<I> out;
  I x(lo + detail::mod_floor(I(c.rho() - lo), m));
  while (x <= hi) {
    out.push_back(x);
    x = I(x + m);
  }
  return out;
}

/// One row per input label a = 0..m-1, pairing a with the class of a
/// shifted by r. The row classes are a permutation of the m plain
/// residue classes.
template <integer_like I>
struct class_table {
  struct row {
    I label;
    residue_class<I> cls;
  };

  modulus<I> m;
  I r;
  std::vector<row> rows;
};

template <integer_like I>
class_table<I> make_class_table(const modulus<I>& m, const I& r) {
  class_table<I> t{m, r, {}};
  for (I a(0); a < m.value(); a = I(a + 1))
    t.rows.push_back({a, make_class(a, m, r)});
  return t;
}

}  // namespace rcong
