#pragma once

#include <concepts>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rcong {

/// Value types usable as the ambient integers: closed under the five
/// arithmetic operators, totally ordered, streamable, and constructible
/// from machine integers. Satisfied by the built-in signed integer types
/// and by boost::multiprecision::cpp_int. Division and remainder must
/// truncate toward zero (the built-in rule).
template <typename T>
concept integer_like =
    std::regular<T> && std::totally_ordered<T> &&
    std::constructible_from<T, int> && std::constructible_from<T, long long> &&
    requires(T a, T b, std::ostream& os) {
      { a + b } -> std::convertible_to<T>;
      { a - b } -> std::convertible_to<T>;
      { a * b } -> std::convertible_to<T>;
      { a / b } -> std::convertible_to<T>;
      { a % b } -> std::convertible_to<T>;
      { -a } -> std::convertible_to<T>;
      { os << a } -> std::same_as<std::ostream&>;
    };

namespace detail {

// Helper names carry an int_ prefix so unqualified calls never collide
// with ADL-found abs/gcd/lcm overloads of multiprecision types.

template <integer_like I>
I int_abs(const I& x) {
  return x < I(0) ? I(-x) : x;
}

/// Remainder of x modulo m in [0, m); requires m > 0. The % operator
/// truncates toward zero, so a negative left operand needs one fixup.
template <integer_like I>
I mod_floor(const I& x, const I& m) {
  I r(x % m);
  if (r < I(0)) r = I(r + m);
  return r;
}

/// d | n, with the convention 0 | n only for n = 0.
template <integer_like I>
bool int_divides(const I& d, const I& n) {
  if (d == I(0)) return n == I(0);
  return I(n % d) == I(0);
}

template <integer_like I>
I int_gcd(const I& a, const I& b) {
  I x = int_abs(a);
  I y = int_abs(b);
  while (y != I(0)) {
    I t(x % y);
    x = y;
    y = t;
  }
  return x;
}

template <integer_like I>
I int_lcm(const I& a, const I& b) {
  if (a == I(0) || b == I(0)) return I(0);
  return I(int_abs(I(a * b)) / int_gcd(a, b));
}

/// base^exp for exp >= 0, by binary exponentiation.
template <integer_like I>
I int_pow(I base, I exp) {
  if (exp < I(0)) throw std::invalid_argument("int_pow: negative exponent");
  I result(1);
  while (exp > I(0)) {
    if (I(exp % I(2)) != I(0)) result = I(result * base);
    base = I(base * base);
    exp = I(exp / I(2));
  }
  return result;
}

template <integer_like I>
std::string to_dec(const I& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace detail

/// gcd together with a Bezout pair: g = a*x + b*y with g >= 1.
template <integer_like I>
struct bezout {
  I g;
  I x;
  I y;
};

/// Extended Euclidean algorithm for arbitrary-sign inputs.
/// Rejects (0, 0), where no positive gcd exists.
template <integer_like I>
bezout<I> gcd_ext(const I& a, const I& b) {
  if (a == I(0) && b == I(0))
    throw std::invalid_argument("gcd_ext: gcd(0, 0) is undefined");
  I old_r = a, r = b;
  I old_x(1), x(0);
  I old_y(0), y(1);
  while (r != I(0)) {
    I q(old_r / r);
    I t(old_r - I(q * r));
    old_r = r;
    r = t;
    t = I(old_x - I(q * x));
    old_x = x;
    x = t;
    t = I(old_y - I(q * y));
    old_y = y;
    y = t;
  }
  if (old_r < I(0)) {
    old_r = I(-old_r);
    old_x = I(-old_x);
    old_y = I(-old_y);
  }
  return {old_r, old_x, old_y};
}

}  // namespace rcong
