#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace rcong {

enum class derivation_rule {
  sum,
  difference,
  product,
  scale,
  restrict_modulus,
  power,
  combine_lcm,
  cancel,
};

inline const char* to_string(derivation_rule r) {
  switch (r) {
    case derivation_rule::sum: return "sum";
    case derivation_rule::difference: return "difference";
    case derivation_rule::product: return "product";
    case derivation_rule::scale: return "scale";
    case derivation_rule::restrict_modulus: return "restrict-modulus";
    case derivation_rule::power: return "power";
    case derivation_rule::combine_lcm: return "combine-lcm";
    case derivation_rule::cancel: return "cancel";
  }
  return "?";
}

/// A claim produced by one of the combinators below, tagged with the rule
/// applied, the input claims it came from, and the scalar parameter where
/// the rule takes one (scale factor, exponent, cancel factor). The
/// combinators verify their inputs eagerly, so a derived_claim never wraps
/// a conclusion drawn from a false premise.
template <integer_like I>
struct derived_claim {
  congruence_claim<I> claim;
  derivation_rule rule;
  std::vector<congruence_claim<I>> inputs;
  std::optional<I> param;

  /// Human-readable derivation, e.g. "(10 ≡_4 1 (mod 5)) + (8 ≡_3 0 (mod 5))".
  std::string describe() const {
    auto wrap = [](const congruence_claim<I>& c) {
      return "(" + to_string(c) + ")";
    };
    switch (rule) {
      case derivation_rule::sum:
        return wrap(inputs[0]) + " + " + wrap(inputs[1]);
      case derivation_rule::difference:
        return wrap(inputs[0]) + " - " + wrap(inputs[1]);
      case derivation_rule::product:
        return wrap(inputs[0]) + " * " + wrap(inputs[1]);
      case derivation_rule::scale:
        return detail::to_dec(*param) + " * " + wrap(inputs[0]);
      case derivation_rule::restrict_modulus:
        return wrap(inputs[0]) + " at modulus " +
               detail::to_dec(claim.m.value());
      case derivation_rule::power:
        return wrap(inputs[0]) + "^" + detail::to_dec(*param);
      case derivation_rule::combine_lcm: {
        std::string out;
        for (const congruence_claim<I>& c : inputs) {
          if (!out.empty()) out += ", ";
          out += wrap(c);
        }
        return out;
      }
      case derivation_rule::cancel:
        return wrap(inputs[0]) + " / " + detail::to_dec(*param);
    }
    return "?";
  }
};

enum class claim_sign { plus, minus };

namespace detail {

template <integer_like I>
void require_holds(const congruence_claim<I>& c, const char* who) {
  if (!is_r_congruent(c))
    throw std::invalid_argument(std::string(who) + ": input claim " +
                                rcong::to_string(c) + " does not hold");
}

template <integer_like I>
void require_same_modulus(const congruence_claim<I>& c1,
                          const congruence_claim<I>& c2, const char* who) {
  if (c1.m != c2.m)
    throw std::invalid_argument(std::string(who) + ": modulus mismatch");
}

}  // namespace detail

/// From a ≡_r1 b and c ≡_r2 d (same m): a±c ≡_(r1±r2) b±d (mod m).
template <integer_like I>
derived_claim<I> add_claims(const congruence_claim<I>& c1,
                            const congruence_claim<I>& c2, claim_sign sign) {
  detail::require_same_modulus(c1, c2, "add_claims");
  detail::require_holds(c1, "add_claims");
  detail::require_holds(c2, "add_claims");
  const bool plus = sign == claim_sign::plus;
  congruence_claim<I> out{
      plus ? I(c1.a + c2.a) : I(c1.a - c2.a),
      plus ? I(c1.b + c2.b) : I(c1.b - c2.b),
      plus ? I(c1.r + c2.r) : I(c1.r - c2.r),
      c1.m,
  };
  return {out, plus ? derivation_rule::sum : derivation_rule::difference,
          {c1, c2}, std::nullopt};
}

/// From a ≡_r1 b and c ≡_r2 d (same m): ac ≡_(r1*d + r2*b + r1*r2) bd.
/// The derived index is returned as-is, not reduced mod m.
template <integer_like I>
derived_claim<I> mul_claims(const congruence_claim<I>& c1,
                            const congruence_claim<I>& c2) {
  detail::require_same_modulus(c1, c2, "mul_claims");
  detail::require_holds(c1, "mul_claims");
  detail::require_holds(c2, "mul_claims");
  I index(I(c1.r * c2.b) + I(c2.r * c1.b) + I(c1.r * c2.r));
  congruence_claim<I> out{I(c1.a * c2.a), I(c1.b * c2.b), index, c1.m};
  return {out, derivation_rule::product, {c1, c2}, std::nullopt};
}

/// From a ≡_r b: ka ≡_kr kb (mod m), for k >= 1.
template <integer_like I>
derived_claim<I> scale_claim(const congruence_claim<I>& c, const I& k) {
  if (k < I(1))
    throw std::invalid_argument("scale_claim: scale factor must be positive");
  detail::require_holds(c, "scale_claim");
  congruence_claim<I> out{I(k * c.a), I(k * c.b), I(k * c.r), c.m};
  return {out, derivation_rule::scale, {c}, k};
}

/// From a ≡_r b (mod m) and d | m: a ≡_r b (mod d).
template <integer_like I>
derived_claim<I> restrict_modulus(const congruence_claim<I>& c,
                                  const modulus<I>& d) {
  if (!detail::int_divides(d.value(), c.m.value()))
    throw std::invalid_argument(
        "restrict_modulus: divisor does not divide the modulus");
  detail::require_holds(c, "restrict_modulus");
  congruence_claim<I> out{c.a, c.b, c.r, d};
  return {out, derivation_rule::restrict_modulus, {c}, std::nullopt};
}

/// From a ≡_r b: a^k ≡_((r+b)^k - b^k) b^k (mod m), for k >= 1.
template <integer_like I>
derived_claim<I> power_claim(const congruence_claim<I>& c, const I& k) {
  if (k < I(1))
    throw std::invalid_argument("power_claim: exponent must be positive");
  detail::require_holds(c, "power_claim");
  I index(detail::int_pow(I(c.r + c.b), k) - detail::int_pow(c.b, k));
  congruence_claim<I> out{detail::int_pow(c.a, k), detail::int_pow(c.b, k),
                          index, c.m};
  return {out, derivation_rule::power, {c}, k};
}

/// From a ≡_r b mod each m_i (same a, b, r): a ≡_r b mod lcm(m_1..m_n).
template <integer_like I>
derived_claim<I> combine_lcm(std::span<const congruence_claim<I>> claims) {
  if (claims.empty())
    throw std::invalid_argument("combine_lcm: empty claim list");
  std::vector<modulus<I>> ms;
  for (const congruence_claim<I>& c : claims) {
    if (c.a != claims.front().a || c.b != claims.front().b ||
        c.r != claims.front().r)
      throw std::invalid_argument(
          "combine_lcm: claims must share (a, b, r) and differ only in "
          "modulus");
    detail::require_holds(c, "combine_lcm");
    ms.push_back(c.m);
  }
  congruence_claim<I> out{claims.front().a, claims.front().b,
                          claims.front().r, lcm_many<I>(ms)};
  return {out, derivation_rule::combine_lcm,
          std::vector<congruence_claim<I>>(claims.begin(), claims.end()),
          std::nullopt};
}

template <integer_like I>
derived_claim<I> combine_lcm(const std::vector<congruence_claim<I>>& claims) {
  return combine_lcm(std::span<const congruence_claim<I>>(claims));
}

/// From ca ≡_r cb (mod m) with c | r (and c dividing both terms):
/// a ≡_(r/c) b (mod m/gcd(c, m)). The divisibility of r by c is a real
/// hypothesis, not an optimization; it is enforced strictly.
template <integer_like I>
derived_claim<I> cancel(const congruence_claim<I>& c, const I& cfactor) {
  if (cfactor == I(0))
    throw std::invalid_argument("cancel: zero cancel factor");
  detail::require_holds(c, "cancel");
  if (!detail::int_divides(cfactor, c.r))
    throw std::invalid_argument(
        "cancel: factor does not divide the congruence index r");
  if (!detail::int_divides(cfactor, c.a) ||
      !detail::int_divides(cfactor, c.b))
    throw std::invalid_argument(
        "cancel: factor does not divide both sides of the claim");
  modulus<I> reduced(I(c.m.value() / detail::int_gcd(cfactor, c.m.value())));
  congruence_claim<I> out{I(c.a / cfactor), I(c.b / cfactor),
                          I(c.r / cfactor), reduced};
  return {out, derivation_rule::cancel, {c}, cfactor};
}

}  // namespace rcong
