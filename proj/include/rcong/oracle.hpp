#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "classes.hpp"
#include "core.hpp"
#include "ring.hpp"
#include "shift.hpp"
#include "solve.hpp"

// Exhaustive finite verification of the claims about r-congruences over
// bounded parameter grids. Every claim is evaluated at every grid point;
// grids are swept in the lexicographic order given in each report's grid
// string (leftmost variable outermost, each range ascending), so the first
// counterexample of a falsified claim is stable. For claims of implication
// shape, only points satisfying the hypotheses count as checked cases;
// claims with several named sub-checks evaluate them in the documented
// order at each point. Where a claim admits two readings, both are encoded
// as separate sub-checks.

namespace rcong {

enum class lemma_id {
  l2_3,
  l2_4,
  l2_5,
  l2_7i,
  l2_7ii,
  t2_8,
  t2_9_order,
  l2_10i,
  l2_10ii,
  l2_10iii,
  l2_10iv,
  l2_10v,
  l2_11,
  l2_12,
  l2_13,
  t2_14_psi,
};

/// Fixed report order for verify_all.
inline constexpr std::array<lemma_id, 16> all_lemma_ids{
    lemma_id::l2_3,   lemma_id::l2_4,    lemma_id::l2_5,   lemma_id::l2_7i,
    lemma_id::l2_7ii, lemma_id::t2_8,    lemma_id::t2_9_order,
    lemma_id::l2_10i, lemma_id::l2_10ii, lemma_id::l2_10iii,
    lemma_id::l2_10iv, lemma_id::l2_10v, lemma_id::l2_11,  lemma_id::l2_12,
    lemma_id::l2_13,  lemma_id::t2_14_psi,
};

inline const char* to_string(lemma_id id) {
  switch (id) {
    case lemma_id::l2_3: return "L2.3";
    case lemma_id::l2_4: return "L2.4";
    case lemma_id::l2_5: return "L2.5";
    case lemma_id::l2_7i: return "L2.7i";
    case lemma_id::l2_7ii: return "L2.7ii";
    case lemma_id::t2_8: return "T2.8";
    case lemma_id::t2_9_order: return "T2.9-order";
    case lemma_id::l2_10i: return "L2.10i";
    case lemma_id::l2_10ii: return "L2.10ii";
    case lemma_id::l2_10iii: return "L2.10iii";
    case lemma_id::l2_10iv: return "L2.10iv";
    case lemma_id::l2_10v: return "L2.10v";
    case lemma_id::l2_11: return "L2.11";
    case lemma_id::l2_12: return "L2.12";
    case lemma_id::l2_13: return "L2.13";
    case lemma_id::t2_14_psi: return "T2.14-psi";
  }
  return "?";
}

inline std::optional<lemma_id> parse_lemma_id(std::string_view s) {
  for (lemma_id id : all_lemma_ids)
    if (s == to_string(id)) return id;
  return std::nullopt;
}

/// Grid bounds for one verification run. Moduli sweep [1, max_modulus];
/// free values sweep [-max_abs, max_abs]; exponents sweep [1, max_power];
/// combined-modulus sweeps use tuples of up to max_moduli moduli. The
/// defaults finish the whole suite in well under a minute.
struct grid_bounds {
  long long max_modulus = 8;
  long long max_abs = 8;
  long long max_power = 4;
  long long max_moduli = 3;
  std::size_t counterexample_cap = 10;
};

inline void validate(const grid_bounds& b) {
  if (b.max_modulus < 1 || b.max_abs < 0 || b.max_power < 1 ||
      b.max_moduli < 1)
    throw std::invalid_argument("grid_bounds: empty or negative grid");
  // a falsified report must be able to show at least one counterexample
  if (b.counterexample_cap < 1)
    throw std::invalid_argument("grid_bounds: counterexample cap must be "
                                "at least 1");
}

template <integer_like I>
struct named_value {
  std::string name;
  I value;

  friend bool operator==(const named_value&, const named_value&) = default;
};

/// One falsifying grid point: the sub-check it fails plus the named
/// parameter values needed to re-evaluate the predicate standalone.
template <integer_like I>
struct counterexample {
  std::string part;
  std::vector<named_value<I>> values;

  friend bool operator==(const counterexample&,
                         const counterexample&) = default;
};

enum class verdict { confirmed, falsified };

inline const char* to_string(verdict v) {
  return v == verdict::confirmed ? "Confirmed" : "Falsified";
}

template <integer_like I>
struct verification_report {
  lemma_id lemma{};
  std::string grid;
  std::uint64_t cases_checked = 0;
  verdict result = verdict::confirmed;
  std::vector<counterexample<I>> counterexamples;  // capped list
  std::uint64_t counterexamples_total = 0;         // exact count

  friend bool operator==(const verification_report&,
                         const verification_report&) = default;
};

namespace detail {

template <integer_like I>
class case_collector {
 public:
  explicit case_collector(std::size_t cap) : cap_(cap) {}

  // make_values is invoked only when a failing point must be stored.
  template <typename MakeValues>
  void record(bool ok, const char* part, MakeValues&& make_values) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (list_.size() < cap_)
      list_.push_back(counterexample<I>{part, make_values()});
  }

  std::uint64_t cases() const { return cases_; }
  std::uint64_t failures() const { return failures_; }
  std::vector<counterexample<I>> take() { return std::move(list_); }

 private:
  std::size_t cap_;
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<counterexample<I>> list_;
};

template <integer_like I, typename Fn>
void for_each_int(long long lo, long long hi, Fn&& fn) {
  for (long long v = lo; v <= hi; ++v) fn(I(v));
}

/// Ascending values in [-vmax, vmax] congruent to target mod m. These are
/// exactly the r-indices for which the corresponding claim holds, so
/// implication grids can skip hypothesis-failing points without changing
/// which cases get checked.
template <integer_like I, typename Fn>
void for_each_congruent(const I& target, const I& m, long long vmax,
                        Fn&& fn) {
  I lo(-vmax);
  I hi(vmax);
  I r(lo + mod_floor(I(target - lo), m));
  while (r <= hi) {
    fn(r);
    r = I(r + m);
  }
}

inline std::string rng(long long lo, long long hi) {
  return "[" + std::to_string(lo) + ".." + std::to_string(hi) + "]";
}

// ---- point predicates, shared by the sweeps and by recheck ----

// trivial index <=> same relation as the index-0 congruence; non-trivial
// index => the two relations never hold together.
template <integer_like I>
bool l2_3_holds(const I& mv, const I& r, const I& a, const I& b) {
  modulus<I> m(mv);
  bool with_r = is_r_congruent(a, b, r, m);
  bool gaussian = is_r_congruent(a, b, I(0), m);
  if (classify(r, m) == triviality::trivial) return with_r == gaussian;
  return !(with_r && gaussian);
}

template <integer_like I>
bool l2_4_reflexive(const I& mv, const I& a) {
  return is_r_congruent(a, a, I(0), modulus<I>(mv));
}

template <integer_like I>
bool l2_4_symmetry(const I& mv, const I& a, const I& b, const I& r) {
  modulus<I> m(mv);
  return is_r_congruent(a, b, r, m) == is_r_congruent(b, a, I(-r), m);
}

template <integer_like I>
bool l2_4_transitivity(const I& mv, const I& a, const I& b, const I& c,
                       const I& r1, const I& r2) {
  modulus<I> m(mv);
  if (!is_r_congruent(a, b, r1, m) || !is_r_congruent(b, c, r2, m))
    return true;
  return is_r_congruent(a, c, I(r1 + r2), m);
}

// the class of a with shift r is the plain class of a shifted by r
template <integer_like I>
bool l2_5_class_shift(const I& mv, const I& r, const I& a) {
  modulus<I> m(mv);
  I shifted = mod_floor(I(make_class(a, m, I(0)).rho() + r), mv);
  return make_class(a, m, r).rho() == shifted;
}

template <integer_like I>
bool l2_5_membership(const I& mv, const I& r, const I& a, const I& x) {
  modulus<I> m(mv);
  return contains(make_class(a, m, r), x) == is_r_congruent(x, a, r, m);
}

// literal reading: equality iff one index divides the other
template <integer_like I>
bool l2_7i_literal(const I& mv, const I& a, const I& r1, const I& r2) {
  modulus<I> m(mv);
  bool eq = make_class(a, m, r1) == make_class(a, m, r2);
  bool div = int_divides(r1, r2) || int_divides(r2, r1);
  return eq == div;
}

// set-level reading: equality iff the indices are congruent mod m
template <integer_like I>
bool l2_7i_mod_m(const I& mv, const I& a, const I& r1, const I& r2) {
  modulus<I> m(mv);
  bool eq = make_class(a, m, r1) == make_class(a, m, r2);
  return eq == (mod_floor(I(r1 - r2), mv) == I(0));
}

template <integer_like I>
bool l2_7ii_holds(const I& mv, const I& r, const I& a, const I& b) {
  modulus<I> m(mv);
  bool eq = make_class(a, m, r) == make_class(b, m, r);
  return eq == (mod_floor(I(a - b), mv) == I(0));
}

template <integer_like I>
bool t2_8_holds(const I& mv, const I& r) {
  modulus<I> m(mv);
  class_table<I> t = make_class_table(m, r);
  if (I(static_cast<long long>(t.rows.size())) != mv) return false;
  std::vector<I> rhos;
  rhos.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    if (row.cls.rho() < I(0) || row.cls.rho() >= mv) return false;
    rhos.push_back(row.cls.rho());
  }
  std::sort(rhos.begin(), rhos.end());
  for (std::size_t i = 0; i + 1 < rhos.size(); ++i)
    if (rhos[i] == rhos[i + 1]) return false;
  return true;
}

template <integer_like I>
bool t2_9_identity_when_trivial(const I& mv, const I& r) {
  modulus<I> m(mv);
  shift_permutation<I> f(m, r);
  return f.is_identity() && order(f) == I(1) &&
         generated_subgroup(f).size() == 1;
}

// the order-m claim for a shift index that is not a multiple of m
template <integer_like I>
bool t2_9_order_m(const I& mv, const I& r) {
  modulus<I> m(mv);
  return order(shift_permutation<I>(m, r)) == mv;
}

template <integer_like I>
bool l2_10i_holds(bool plus, const I& mv, const I& a, const I& b,
                  const I& r1, const I& c, const I& d, const I& r2) {
  modulus<I> m(mv);
  if (!is_r_congruent(a, b, r1, m) || !is_r_congruent(c, d, r2, m))
    return true;
  if (plus) return is_r_congruent(I(a + c), I(b + d), I(r1 + r2), m);
  return is_r_congruent(I(a - c), I(b - d), I(r1 - r2), m);
}

template <integer_like I>
bool l2_10ii_holds(const I& mv, const I& a, const I& b, const I& r1,
                   const I& c, const I& d, const I& r2) {
  modulus<I> m(mv);
  if (!is_r_congruent(a, b, r1, m) || !is_r_congruent(c, d, r2, m))
    return true;
  I index(I(r1 * d) + I(r2 * b) + I(r1 * r2));
  return is_r_congruent(I(a * c), I(b * d), index, m);
}

template <integer_like I>
bool l2_10iii_holds(const I& mv, const I& a, const I& b, const I& r,
                    const I& c) {
  modulus<I> m(mv);
  if (!is_r_congruent(a, b, r, m)) return true;
  return is_r_congruent(I(c * a), I(c * b), I(c * r), m);
}

template <integer_like I>
bool l2_10iv_holds(const I& mv, const I& d, const I& a, const I& b,
                   const I& r) {
  modulus<I> m(mv);
  if (!int_divides(d, mv) || !is_r_congruent(a, b, r, m)) return true;
  return is_r_congruent(a, b, r, modulus<I>(d));
}

template <integer_like I>
bool l2_10v_holds(const I& mv, const I& a, const I& b, const I& r,
                  const I& k) {
  modulus<I> m(mv);
  if (!is_r_congruent(a, b, r, m)) return true;
  I index(int_pow(I(r + b), k) - int_pow(b, k));
  return is_r_congruent(int_pow(a, k), int_pow(b, k), index, m);
}

// congruence mod every listed modulus <=> congruence mod their lcm
template <integer_like I>
bool l2_11_holds(const std::vector<I>& ms, const I& a, const I& b,
                 const I& r) {
  bool at_each = true;
  I acc(1);
  for (const I& mi : ms) {
    if (!is_r_congruent(a, b, r, modulus<I>(mi))) at_each = false;
    acc = int_lcm(acc, mi);
  }
  return at_each == is_r_congruent(a, b, r, modulus<I>(acc));
}

template <integer_like I>
bool l2_12_holds(const I& mv, const I& c, const I& a, const I& b,
                 const I& s) {
  modulus<I> m(mv);
  if (!is_r_congruent(I(c * a), I(c * b), I(c * s), m)) return true;
  modulus<I> reduced(I(mv / int_gcd(c, mv)));
  return is_r_congruent(a, b, s, reduced);
}

template <integer_like I>
bool l2_13_holds(const I& mv, const I& a, const I& b, const I& r) {
  modulus<I> m(mv);
  bool criterion = int_divides(int_gcd(a, mv), I(b + r));
  bool brute = false;
  for (I x(0); x < mv; x = I(x + 1)) {
    if (is_r_congruent(I(a * x), b, r, m)) {
      brute = true;
      break;
    }
  }
  return brute == criterion;
}

template <integer_like I>
bool t2_14_ring_laws(const I& mv, const I& a, const I& r1, const I& r2,
                     const I& r3) {
  formal_ring<I> ring{modulus<I>(mv), a};
  formal_ring_element<I> x = ring.element(r1);
  formal_ring_element<I> y = ring.element(r2);
  formal_ring_element<I> z = ring.element(r3);
  return (x + y) + z == x + (y + z) && x + y == y + x &&
         (x * y) * z == x * (y * z) && x * y == y * x &&
         x * (y + z) == x * y + x * z && x + ring.zero() == x &&
         x * ring.one() == x && x + (-x) == ring.zero() &&
         x * ring.zero() == ring.zero();
}

template <integer_like I>
bool t2_14_psi_hom(const I& mv, const I& a, const I& r1, const I& r2) {
  formal_ring<I> ring{modulus<I>(mv), a};
  formal_ring_element<I> x = ring.element(r1);
  formal_ring_element<I> y = ring.element(r2);
  return psi(x + y) == I(psi(x) + psi(y)) &&
         psi(x * y) == I(psi(x) * psi(y));
}

// set-level reading: the index map is injective on the underlying classes
template <integer_like I>
bool t2_14_set_level(const I& mv, const I& a, const I& r1, const I& r2) {
  formal_ring<I> ring{modulus<I>(mv), a};
  if (to_class(ring.element(r1)) != to_class(ring.element(r2))) return true;
  return r1 == r2;
}

// ---- grid sweeps (lexicographic, outermost variable first) ----
//
// Implication-shaped claims enumerate only hypothesis-satisfying points
// (for_each_congruent yields exactly the r-indices whose claim holds), so
// the sweeps record the conclusion directly; the *_holds predicates above
// evaluate the full implication and are what recheck uses. test coverage
// pins the two forms to agree.

template <integer_like I>
std::string run_l2_3(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& r) {
      for_each_int<I>(-V, V, [&](const I& a) {
        for_each_int<I>(-V, V, [&](const I& bb) {
          col.record(l2_3_holds(m, r, a, bb), "", [&] {
            return std::vector<named_value<I>>{
                {"m", m}, {"r", r}, {"a", a}, {"b", bb}};
          });
        });
      });
    });
  });
  return "m in " + rng(1, b.max_modulus) + "; r, a, b in " + rng(-V, V) +
         "; order (m, r, a, b)";
}

template <integer_like I>
std::string run_l2_4(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& a) {
      col.record(l2_4_reflexive(m, a), "reflexive", [&] {
        return std::vector<named_value<I>>{{"m", m}, {"a", a}};
      });
    });
  });
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& a) {
      for_each_int<I>(-V, V, [&](const I& bb) {
        for_each_int<I>(-V, V, [&](const I& r) {
          col.record(l2_4_symmetry(m, a, bb, r), "symmetry", [&] {
            return std::vector<named_value<I>>{
                {"m", m}, {"a", a}, {"b", bb}, {"r", r}};
          });
        });
      });
    });
  });
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    modulus<I> mm(m);
    for_each_int<I>(-V, V, [&](const I& a) {
      for_each_int<I>(-V, V, [&](const I& bb) {
        I ab(a - bb);
        for_each_int<I>(-V, V, [&](const I& c) {
          I bc(bb - c);
          for_each_congruent(ab, m, V, [&](const I& r1) {
            for_each_congruent(bc, m, V, [&](const I& r2) {
              col.record(is_r_congruent(a, c, I(r1 + r2), mm),
                         "transitivity", [&] {
                           return std::vector<named_value<I>>{
                               {"m", m},   {"a", a},   {"b", bb},
                               {"c", c},   {"r1", r1}, {"r2", r2}};
                         });
            });
          });
        });
      });
    });
  });
  return "reflexive: m in " + rng(1, b.max_modulus) + ", a in " +
         rng(-V, V) + ", order (m, a); symmetry: + b, r, order (m, a, b, "
         "r); transitivity: + c and hypothesis-satisfying r1, r2, order "
         "(m, a, b, c, r1, r2)";
}

template <integer_like I>
std::string run_l2_5(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& r) {
      for_each_int<I>(-V, V, [&](const I& a) {
        col.record(l2_5_class_shift(m, r, a), "class-shift", [&] {
          return std::vector<named_value<I>>{{"m", m}, {"r", r}, {"a", a}};
        });
      });
    });
  });
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& r) {
      for_each_int<I>(-V, V, [&](const I& a) {
        for_each_int<I>(-V, V, [&](const I& x) {
          col.record(l2_5_membership(m, r, a, x), "membership", [&] {
            return std::vector<named_value<I>>{
                {"m", m}, {"r", r}, {"a", a}, {"x", x}};
          });
        });
      });
    });
  });
  return "class-shift: m in " + rng(1, b.max_modulus) + ", r, a in " +
         rng(-V, V) + ", order (m, r, a); membership: + x, order (m, r, "
         "a, x)";
}

template <integer_like I>
std::string run_l2_7i(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& a) {
      for_each_int<I>(-V, V, [&](const I& r1) {
        for_each_int<I>(-V, V, [&](const I& r2) {
          col.record(l2_7i_literal(m, a, r1, r2), "literal", [&] {
            return std::vector<named_value<I>>{
                {"m", m}, {"a", a}, {"r1", r1}, {"r2", r2}};
          });
          col.record(l2_7i_mod_m(m, a, r1, r2), "mod-m", [&] {
            return std::vector<named_value<I>>{
                {"m", m}, {"a", a}, {"r1", r1}, {"r2", r2}};
          });
        });
      });
    });
  });
  return "m in " + rng(1, b.max_modulus) + "; a, r1, r2 in " + rng(-V, V) +
         "; order (m, a, r1, r2); sub-checks literal, mod-m at each point";
}

template <integer_like I>
std::string run_l2_7ii(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& r) {
      for_each_int<I>(-V, V, [&](const I& a) {
        for_each_int<I>(-V, V, [&](const I& bb) {
          col.record(l2_7ii_holds(m, r, a, bb), "", [&] {
            return std::vector<named_value<I>>{
                {"m", m}, {"r", r}, {"a", a}, {"b", bb}};
          });
        });
      });
    });
  });
  return "m in " + rng(1, b.max_modulus) + "; r, a, b in " + rng(-V, V) +
         "; order (m, r, a, b)";
}

template <integer_like I>
std::string run_t2_8(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& r) {
      col.record(t2_8_holds(m, r), "", [&] {
        return std::vector<named_value<I>>{{"m", m}, {"r", r}};
      });
    });
  });
  return "m in " + rng(1, b.max_modulus) + "; r in " + rng(-V, V) +
         "; order (m, r)";
}

template <integer_like I>
std::string run_t2_9(const grid_bounds& b, case_collector<I>& col) {
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for (I r(0); r < m; r = I(r + 1)) {
      if (r == I(0)) {
        col.record(t2_9_identity_when_trivial(m, r), "identity-when-trivial",
                   [&] {
                     return std::vector<named_value<I>>{{"m", m}, {"r", r}};
                   });
      } else {
        col.record(t2_9_order_m(m, r), "order-m", [&] {
          return std::vector<named_value<I>>{
              {"m", m},
              {"r", r},
              {"true_order", order(shift_permutation<I>(modulus<I>(m), r))}};
        });
      }
    }
  });
  return "m in " + rng(1, b.max_modulus) +
         "; r in [0..m-1]; order (m, r); sub-check identity-when-trivial "
         "at r = 0, order-m otherwise";
}

template <integer_like I>
std::string run_l2_10i(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    modulus<I> mm(m);
    for_each_int<I>(-V, V, [&](const I& a) {
      for_each_int<I>(-V, V, [&](const I& bb) {
        I ab(a - bb);
        for_each_congruent(ab, m, V, [&](const I& r1) {
          for_each_int<I>(-V, V, [&](const I& c) {
            I sum_a(a + c), dif_a(a - c);
            for_each_int<I>(-V, V, [&](const I& d) {
              I cd(c - d);
              I sum_b(bb + d), dif_b(bb - d);
              for_each_congruent(cd, m, V, [&](const I& r2) {
                auto vals = [&] {
                  return std::vector<named_value<I>>{
                      {"m", m}, {"a", a}, {"b", bb},  {"r1", r1},
                      {"c", c}, {"d", d}, {"r2", r2}};
                };
                col.record(is_r_congruent(sum_a, sum_b, I(r1 + r2), mm),
                           "sum", vals);
                col.record(is_r_congruent(dif_a, dif_b, I(r1 - r2), mm),
                           "difference", vals);
              });
            });
          });
        });
      });
    });
  });
  return "m in " + rng(1, b.max_modulus) + "; a, b, c, d in " + rng(-V, V) +
         "; hypothesis-satisfying r1, r2 in " + rng(-V, V) +
         "; order (m, a, b, r1, c, d, r2); sub-checks sum, difference at "
         "each point";
}

template <integer_like I>
std::string run_l2_10ii(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    modulus<I> mm(m);
    for_each_int<I>(-V, V, [&](const I& a) {
      for_each_int<I>(-V, V, [&](const I& bb) {
        I ab(a - bb);
        for_each_congruent(ab, m, V, [&](const I& r1) {
          for_each_int<I>(-V, V, [&](const I& c) {
            I ac(a * c);
            for_each_int<I>(-V, V, [&](const I& d) {
              I cd(c - d);
              I bd(bb * d), r1d(r1 * d);
              for_each_congruent(cd, m, V, [&](const I& r2) {
                I index(r1d + I(r2 * bb) + I(r1 * r2));
                col.record(is_r_congruent(ac, bd, index, mm), "", [&] {
                  return std::vector<named_value<I>>{
                      {"m", m}, {"a", a}, {"b", bb},  {"r1", r1},
                      {"c", c}, {"d", d}, {"r2", r2}};
                });
              });
            });
          });
        });
      });
    });
  });
  return "m in " + rng(1, b.max_modulus) + "; a, b, c, d in " + rng(-V, V) +
         "; hypothesis-satisfying r1, r2 in " + rng(-V, V) +
         "; order (m, a, b, r1, c, d, r2)";
}

template <integer_like I>
std::string run_l2_10iii(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    modulus<I> mm(m);
    for_each_int<I>(-V, V, [&](const I& a) {
      for_each_int<I>(-V, V, [&](const I& bb) {
        for_each_congruent(I(a - bb), m, V, [&](const I& r) {
          for_each_int<I>(1, V > 0 ? V : 1, [&](const I& c) {
            col.record(
                is_r_congruent(I(c * a), I(c * bb), I(c * r), mm), "", [&] {
                  return std::vector<named_value<I>>{
                      {"m", m}, {"a", a}, {"b", bb}, {"r", r}, {"c", c}};
                });
          });
        });
      });
    });
  });
  return "m in " + rng(1, b.max_modulus) + "; a, b in " + rng(-V, V) +
         "; hypothesis-satisfying r in " + rng(-V, V) + "; c in " +
         rng(1, V > 0 ? V : 1) + "; order (m, a, b, r, c)";
}

template <integer_like I>
std::string run_l2_10iv(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for (I d(1); d <= m; d = I(d + 1)) {
      if (!int_divides(d, m)) continue;
      modulus<I> dd(d);
      for_each_int<I>(-V, V, [&](const I& a) {
        for_each_int<I>(-V, V, [&](const I& bb) {
          for_each_congruent(I(a - bb), m, V, [&](const I& r) {
            col.record(is_r_congruent(a, bb, r, dd), "", [&] {
              return std::vector<named_value<I>>{
                  {"m", m}, {"d", d}, {"a", a}, {"b", bb}, {"r", r}};
            });
          });
        });
      });
    }
  });
  return "m in " + rng(1, b.max_modulus) +
         "; d over positive divisors of m; a, b in " + rng(-V, V) +
         "; hypothesis-satisfying r in " + rng(-V, V) +
         "; order (m, d, a, b, r)";
}

template <integer_like I>
std::string run_l2_10v(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    modulus<I> mm(m);
    for_each_int<I>(-V, V, [&](const I& a) {
      for_each_int<I>(-V, V, [&](const I& bb) {
        for_each_congruent(I(a - bb), m, V, [&](const I& r) {
          for_each_int<I>(1, b.max_power, [&](const I& k) {
            I index(int_pow(I(r + bb), k) - int_pow(bb, k));
            col.record(
                is_r_congruent(int_pow(a, k), int_pow(bb, k), index, mm),
                "", [&] {
                  return std::vector<named_value<I>>{
                      {"m", m}, {"a", a}, {"b", bb}, {"r", r}, {"k", k}};
                });
          });
        });
      });
    });
  });
  return "m in " + rng(1, b.max_modulus) + "; a, b in " + rng(-V, V) +
         "; hypothesis-satisfying r in " + rng(-V, V) + "; k in " +
         rng(1, b.max_power) + "; order (m, a, b, r, k)";
}

template <integer_like I>
std::string run_l2_11(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  std::vector<I> ms;
  // odometer over modulus tuples of each length, lexicographic
  auto sweep_tuples = [&](auto&& self, long long depth) -> void {
    if (depth == 0) {
      std::vector<modulus<I>> mods;
      I acc(1);
      for (const I& mi : ms) {
        mods.emplace_back(mi);
        acc = int_lcm(acc, mi);
      }
      modulus<I> lcm_mod(acc);
      for_each_int<I>(-V, V, [&](const I& a) {
        for_each_int<I>(-V, V, [&](const I& bb) {
          for_each_int<I>(-V, V, [&](const I& r) {
            bool at_each = true;
            for (const modulus<I>& mi : mods)
              if (!is_r_congruent(a, bb, r, mi)) {
                at_each = false;
                break;
              }
            bool at_lcm = is_r_congruent(a, bb, r, lcm_mod);
            col.record(at_each == at_lcm, "", [&] {
              std::vector<named_value<I>> vals;
              for (std::size_t i = 0; i < ms.size(); ++i)
                vals.push_back({"m" + std::to_string(i + 1), ms[i]});
              vals.push_back({"a", a});
              vals.push_back({"b", bb});
              vals.push_back({"r", r});
              return vals;
            });
          });
        });
      });
      return;
    }
    for (long long mi = 1; mi <= b.max_modulus; ++mi) {
      ms.push_back(I(mi));
      self(self, depth - 1);
      ms.pop_back();
    }
  };
  for (long long n = 1; n <= b.max_moduli; ++n)
    sweep_tuples(sweep_tuples, n);
  return "n in " + rng(1, b.max_moduli) + "; each of m1..mn in " +
         rng(1, b.max_modulus) + "; a, b, r in " + rng(-V, V) +
         "; order (n, m1..mn, a, b, r)";
}

template <integer_like I>
std::string run_l2_12(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    modulus<I> mm(m);
    for_each_int<I>(-V, V, [&](const I& c) {
      if (c == I(0)) return;
      modulus<I> reduced(I(m / int_gcd(c, m)));
      for_each_int<I>(-V, V, [&](const I& a) {
        I ca(c * a);
        for_each_int<I>(-V, V, [&](const I& bb) {
          I cb(c * bb);
          for_each_int<I>(-V, V, [&](const I& s) {
            if (!is_r_congruent(ca, cb, I(c * s), mm)) return;
            col.record(is_r_congruent(a, bb, s, reduced), "", [&] {
              return std::vector<named_value<I>>{
                  {"m", m}, {"c", c}, {"a", a}, {"b", bb}, {"s", s}};
            });
          });
        });
      });
    });
  });
  return "m in " + rng(1, b.max_modulus) + "; nonzero c, a, b, s in " +
         rng(-V, V) +
         "; hypothesis ca = cb + cs (mod m) required; order (m, c, a, b, "
         "s); the cancelled index is r = c*s";
}

template <integer_like I>
std::string run_l2_13(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& a) {
      for_each_int<I>(-V, V, [&](const I& bb) {
        for_each_int<I>(-V, V, [&](const I& r) {
          col.record(l2_13_holds(m, a, bb, r), "", [&] {
            return std::vector<named_value<I>>{
                {"m", m}, {"a", a}, {"b", bb}, {"r", r}};
          });
        });
      });
    });
  });
  return "m in " + rng(1, b.max_modulus) + "; a, b, r in " + rng(-V, V) +
         "; order (m, a, b, r)";
}

template <integer_like I>
std::string run_t2_14(const grid_bounds& b, case_collector<I>& col) {
  const long long V = b.max_abs;
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& a) {
      for_each_int<I>(-V, V, [&](const I& r1) {
        for_each_int<I>(-V, V, [&](const I& r2) {
          for_each_int<I>(-V, V, [&](const I& r3) {
            col.record(t2_14_ring_laws(m, a, r1, r2, r3), "ring-laws", [&] {
              return std::vector<named_value<I>>{
                  {"m", m}, {"a", a}, {"r1", r1}, {"r2", r2}, {"r3", r3}};
            });
          });
        });
      });
    });
  });
  for_each_int<I>(1, b.max_modulus, [&](const I& m) {
    for_each_int<I>(-V, V, [&](const I& a) {
      for_each_int<I>(-V, V, [&](const I& r1) {
        for_each_int<I>(-V, V, [&](const I& r2) {
          auto vals = [&] {
            return std::vector<named_value<I>>{
                {"m", m}, {"a", a}, {"r1", r1}, {"r2", r2}};
          };
          col.record(t2_14_psi_hom(m, a, r1, r2), "psi-homomorphism", vals);
          col.record(t2_14_set_level(m, a, r1, r2), "set-level", vals);
        });
      });
    });
  });
  return "ring-laws: m in " + rng(1, b.max_modulus) + ", a, r1, r2, r3 in " +
         rng(-V, V) + ", order (m, a, r1, r2, r3); psi-homomorphism and "
         "set-level: same without r3, order (m, a, r1, r2)";
}

}  // namespace detail

/// Sweeps one claim's grid at the given bounds. Deterministic: identical
/// bounds produce identical reports, including counts and the capped
/// counterexample list.
template <integer_like I>
verification_report<I> verify(lemma_id id, const grid_bounds& bounds = {}) {
  validate(bounds);
  detail::case_collector<I> col(bounds.counterexample_cap);
  std::string grid;
  switch (id) {
    case lemma_id::l2_3: grid = detail::run_l2_3<I>(bounds, col); break;
    case lemma_id::l2_4: grid = detail::run_l2_4<I>(bounds, col); break;
    case lemma_id::l2_5: grid = detail::run_l2_5<I>(bounds, col); break;
    case lemma_id::l2_7i: grid = detail::run_l2_7i<I>(bounds, col); break;
    case lemma_id::l2_7ii: grid = detail::run_l2_7ii<I>(bounds, col); break;
    case lemma_id::t2_8: grid = detail::run_t2_8<I>(bounds, col); break;
    case lemma_id::t2_9_order: grid = detail::run_t2_9<I>(bounds, col); break;
    case lemma_id::l2_10i: grid = detail::run_l2_10i<I>(bounds, col); break;
    case lemma_id::l2_10ii: grid = detail::run_l2_10ii<I>(bounds, col); break;
    case lemma_id::l2_10iii:
      grid = detail::run_l2_10iii<I>(bounds, col);
      break;
    case lemma_id::l2_10iv: grid = detail::run_l2_10iv<I>(bounds, col); break;
    case lemma_id::l2_10v: grid = detail::run_l2_10v<I>(bounds, col); break;
    case lemma_id::l2_11: grid = detail::run_l2_11<I>(bounds, col); break;
    case lemma_id::l2_12: grid = detail::run_l2_12<I>(bounds, col); break;
    case lemma_id::l2_13: grid = detail::run_l2_13<I>(bounds, col); break;
    case lemma_id::t2_14_psi: grid = detail::run_t2_14<I>(bounds, col); break;
  }
  verification_report<I> rep;
  rep.lemma = id;
  rep.grid = std::move(grid);
  rep.cases_checked = col.cases();
  rep.result =
      col.failures() == 0 ? verdict::confirmed : verdict::falsified;
  rep.counterexamples = col.take();
  rep.counterexamples_total = col.failures();
  return rep;
}

/// Reports for every claim id, in the order of all_lemma_ids.
template <integer_like I>
std::vector<verification_report<I>> verify_all(
    const grid_bounds& bounds = {}) {
  validate(bounds);
  std::vector<verification_report<I>> reports;
  reports.reserve(all_lemma_ids.size());
  for (lemma_id id : all_lemma_ids) reports.push_back(verify<I>(id, bounds));
  return reports;
}

/// Re-evaluates a claim's predicate at one stored counterexample point.
/// Returns the predicate's value there; a valid counterexample yields
/// false. Throws if the part name or required values are missing.
template <integer_like I>
bool recheck(lemma_id id, const counterexample<I>& ce) {
  auto get = [&](const char* name) -> const I& {
    for (const named_value<I>& v : ce.values)
      if (v.name == name) return v.value;
    throw std::invalid_argument(std::string("recheck: missing value ") +
                                name);
  };
  auto bad_part = [&]() -> std::invalid_argument {
    return std::invalid_argument("recheck: unknown sub-check '" + ce.part +
                                 "' for " + to_string(id));
  };
  switch (id) {
    case lemma_id::l2_3:
      return detail::l2_3_holds(get("m"), get("r"), get("a"), get("b"));
    case lemma_id::l2_4:
      if (ce.part == "reflexive")
        return detail::l2_4_reflexive(get("m"), get("a"));
      if (ce.part == "symmetry")
        return detail::l2_4_symmetry(get("m"), get("a"), get("b"), get("r"));
      if (ce.part == "transitivity")
        return detail::l2_4_transitivity(get("m"), get("a"), get("b"),
                                         get("c"), get("r1"), get("r2"));
      throw bad_part();
    case lemma_id::l2_5:
      if (ce.part == "class-shift")
        return detail::l2_5_class_shift(get("m"), get("r"), get("a"));
      if (ce.part == "membership")
        return detail::l2_5_membership(get("m"), get("r"), get("a"),
                                       get("x"));
      throw bad_part();
    case lemma_id::l2_7i:
      if (ce.part == "literal")
        return detail::l2_7i_literal(get("m"), get("a"), get("r1"),
                                     get("r2"));
      if (ce.part == "mod-m")
        return detail::l2_7i_mod_m(get("m"), get("a"), get("r1"), get("r2"));
      throw bad_part();
    case lemma_id::l2_7ii:
      return detail::l2_7ii_holds(get("m"), get("r"), get("a"), get("b"));
    case lemma_id::t2_8:
      return detail::t2_8_holds(get("m"), get("r"));
    case lemma_id::t2_9_order:
      if (ce.part == "identity-when-trivial")
        return detail::t2_9_identity_when_trivial(get("m"), get("r"));
      if (ce.part == "order-m")
        return detail::t2_9_order_m(get("m"), get("r"));
      throw bad_part();
    case lemma_id::l2_10i:
      if (ce.part == "sum" || ce.part == "difference")
        return detail::l2_10i_holds(ce.part == "sum", get("m"), get("a"),
                                    get("b"), get("r1"), get("c"), get("d"),
                                    get("r2"));
      throw bad_part();
    case lemma_id::l2_10ii:
      return detail::l2_10ii_holds(get("m"), get("a"), get("b"), get("r1"),
                                   get("c"), get("d"), get("r2"));
    case lemma_id::l2_10iii:
      return detail::l2_10iii_holds(get("m"), get("a"), get("b"), get("r"),
                                    get("c"));
    case lemma_id::l2_10iv:
      return detail::l2_10iv_holds(get("m"), get("d"), get("a"), get("b"),
                                   get("r"));
    case lemma_id::l2_10v:
      return detail::l2_10v_holds(get("m"), get("a"), get("b"), get("r"),
                                  get("k"));
    case lemma_id::l2_11: {
      std::vector<I> ms;
      for (std::size_t i = 1;; ++i) {
        std::string name = "m" + std::to_string(i);
        bool found = false;
        for (const named_value<I>& v : ce.values)
          if (v.name == name) {
            ms.push_back(v.value);
            found = true;
            break;
          }
        if (!found) break;
      }
      if (ms.empty())
        throw std::invalid_argument("recheck: missing moduli m1..mn");
      return detail::l2_11_holds(ms, get("a"), get("b"), get("r"));
    }
    case lemma_id::l2_12:
      return detail::l2_12_holds(get("m"), get("c"), get("a"), get("b"),
                                 get("s"));
    case lemma_id::l2_13:
      return detail::l2_13_holds(get("m"), get("a"), get("b"), get("r"));
    case lemma_id::t2_14_psi:
      if (ce.part == "ring-laws")
        return detail::t2_14_ring_laws(get("m"), get("a"), get("r1"),
                                       get("r2"), get("r3"));
      if (ce.part == "psi-homomorphism")
        return detail::t2_14_psi_hom(get("m"), get("a"), get("r1"),
                                     get("r2"));
      if (ce.part == "set-level")
        return detail::t2_14_set_level(get("m"), get("a"), get("r1"),
                                       get("r2"));
      throw bad_part();
  }
  throw std::invalid_argument("recheck: unknown lemma id");
}

}  // namespace rcong
