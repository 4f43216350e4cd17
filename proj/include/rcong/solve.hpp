#pragma once

#include <vector>

#include "classes.hpp"
#include "core.hpp"

namespace rcong {

/// All solutions of a linear congruence, as representatives in [0, m).
/// solvable iff the list is nonempty; when solvable there are exactly
/// gcd(a, m) representatives.
template <integer_like I>
struct solution_set {
  modulus<I> m;
  std::vector<I> solutions;
  bool solvable;
};

/// Solves ax ≡_r b (mod m) for x. Via the bridge to the plain congruence
/// ax ≡ b + r (mod m): solvable iff gcd(a, m) | (b + r), in which case
/// the solutions are x0 + t*(m/g) for t = 0..g-1, with x0 from a Bezout
/// pair. a = 0 is fine: gcd(0, m) = m, and every x solves when m | (b+r).
template <integer_like I>
solution_set<I> solve_linear(const I& a, const I& b, const I& r,
                             const modulus<I>& m) {
  const I& mv = m.value();
  I target(b + r);
  I g = detail::int_gcd(a, mv);
  if (!detail::int_divides(g, target)) return {m, {}, false};
  bezout<I> e = gcd_ext(a, mv);
  I step(mv / g);
  I x0 = detail::mod_floor(I(e.x * I(target / g)), step);
  std::vector<I> xs;
  for (I t(0); t < g; t = I(t + 1)) {
    xs.push_back(I(x0 + I(t * step)));
  }
  return {m, xs, true};
}

/// The class of every r making a ≡_r b (mod m) true: (a - b) + mZ.
template <integer_like I>
residue_class<I> find_r(const I& a, const I& b, const modulus<I>& m) {
  return make_class(I(a - b), m, I(0));
}

}  // namespace rcong
