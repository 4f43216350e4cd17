#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace rcong {

/// Which remainder range the division algorithm produces:
/// least_nonnegative forces 0 <= r < m, balanced forces -m/2 < r <= m/2.
enum class remainder_convention { least_nonnegative, balanced };

inline const char* to_string(remainder_convention c) {
  return c == remainder_convention::least_nonnegative ? "least-nonnegative"
                                                      : "balanced";
}

/// A positive modulus. Any nonzero integer is accepted and normalized to
/// its absolute value; zero is rejected at construction.
template <integer_like I>
class modulus {
 public:
  explicit modulus(I m) : value_(detail::int_abs(m)) {
    if (value_ == I(0))
      throw std::invalid_argument("modulus: zero is not a valid modulus");
  }

  const I& value() const { return value_; }

  friend bool operator==(const modulus&, const modulus&) = default;

 private:
  I value_;
};

/// Result of the division algorithm: b = a*q + r.
template <integer_like I>
struct div_result {
  I q;
  I r;
};

/// Unique (q, r) with b = a*q + r and r in the convention's range.
template <integer_like I>
div_result<I> div_rem(const I& b, const modulus<I>& a,
                      remainder_convention conv =
                          remainder_convention::least_nonnegative) {
  const I& m = a.value();
  I r = detail::mod_floor(b, m);
  I q((b - r) / m);
  if (conv == remainder_convention::balanced && I(r + r) > m) {
    r = I(r - m);
    q = I(q + 1);
  }
  return {q, r};
}

/// The quadruple (a, b, r, m) asserting a - b = m*q + r for some integer q.
/// The claim may be false; is_r_congruent tests it. r is deliberately not
/// normalized to any range here.
template <integer_like I>
struct congruence_claim {
  I a;
  I b;
  I r;
  modulus<I> m;

  friend bool operator==(const congruence_claim&,
                         const congruence_claim&) = default;
};

template <integer_like I>
bool is_r_congruent(const I& a, const I& b, const I& r, const modulus<I>& m) {
  return detail::int_divides(m.value(), I(I(a - b) - r));
}

template <integer_like I>
bool is_r_congruent(const congruence_claim<I>& c) {
  return is_r_congruent(c.a, c.b, c.r, c.m);
}

/// The unique r in the convention's range making a and b r-congruent mod m.
template <integer_like I>
I canonical_r(const I& a, const I& b, const modulus<I>& m,
              remainder_convention conv =
                  remainder_convention::least_nonnegative) {
  return div_rem(I(a - b), m, conv).r;
}

/// A congruence index r is trivial mod m when m | r; such an r-congruence
/// carries exactly the same information as the r = 0 relation.
enum class triviality { trivial, non_trivial };

inline const char* to_string(triviality t) {
  return t == triviality::trivial ? "trivial" : "non-trivial";
}

template <integer_like I>
triviality classify(const I& r, const modulus<I>& m) {
  return detail::int_divides(m.value(), r) ? triviality::trivial
                                           : triviality::non_trivial;
}

/// Least common multiple of a nonempty list of moduli.
template <integer_like I>
modulus<I> lcm_many(std::span<const modulus<I>> ms) {
  if (ms.empty()) throw std::invalid_argument("lcm_many: empty modulus list");
  I acc = ms.front().value();
  for (std::size_t i = 1; i < ms.size(); ++i)
    acc = detail::int_lcm(acc, ms[i].value());
  return modulus<I>(acc);
}

template <integer_like I>
modulus<I> lcm_many(const std::vector<modulus<I>>& ms) {
  return lcm_many(std::span<const modulus<I>>(ms));
}

/// Renders "a ≡_r b (mod m)".
template <integer_like I>
std::string to_string(const congruence_claim<I>& c) {
  return detail::to_dec(c.a) + " ≡_" + detail::to_dec(c.r) + " " +
         detail::to_dec(c.b) + " (mod " + detail::to_dec(c.m.value()) + ")";
}

template <integer_like I>
std::ostream& operator<<(std::ostream& os, const modulus<I>& m) {
  return os << m.value();
}

template <integer_like I>
std::ostream& operator<<(std::ostream& os, const congruence_claim<I>& c) {
  return os << to_string(c);
}

}  // namespace rcong
