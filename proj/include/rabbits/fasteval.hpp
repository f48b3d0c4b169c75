#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "core.hpp"
#include "recurrence.hpp"

namespace rabbits {

/// Monic characteristic polynomial of the order-D linear recurrence the
/// sequence satisfies once past its seed window. Coefficients are stored in
/// ascending degree order, coeffs[D] == 1, with D = d+1 for finite d and
/// D = f for d absent.
struct CharPoly {
  std::vector<std::int64_t> coeffs;

  std::size_t degree() const noexcept { return coeffs.size() - 1; }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Finite d:  c(x) = x^{d+1} - x^d - x^{d+1-f} + 1
/// Absent d:  c(x) = x^f - x^{f-1} - 1
/// Colliding exponents merge by summing (f = 1 gives x^{d+1} - 2x^d + 1).
inline CharPoly char_poly(const Params& p) {
  detail::require_not_degenerate(p);
  const std::uint64_t f = p.fertile_age();
  CharPoly cp;
  if (p.death_finite()) {
    const std::uint64_t d = *p.death_age();
    cp.coeffs.assign(static_cast<std::size_t>(d) + 2, 0);
    cp.coeffs[static_cast<std::size_t>(d) + 1] += 1;
    cp.coeffs[static_cast<std::size_t>(d)] -= 1;
    cp.coeffs[static_cast<std::size_t>(d + 1 - f)] -= 1;
    cp.coeffs[0] += 1;
  } else {
    cp.coeffs.assign(static_cast<std::size_t>(f) + 1, 0);
    cp.coeffs[static_cast<std::size_t>(f)] += 1;
    cp.coeffs[static_cast<std::size_t>(f) - 1] -= 1;
    cp.coeffs[0] -= 1;
  }
  return cp;
}

namespace detail {

// Schoolbook product followed by top-down reduction: c is monic, so
// x^D == -(c_0 + c_1 x + ... + c_{D-1} x^{D-1}) and each high coefficient
// folds into the D slots below it. Result has degree < D.
template <typename Ops>
std::vector<typename Ops::value_type> poly_mul_mod_impl(
    const std::vector<typename Ops::value_type>& a,
    const std::vector<typename Ops::value_type>& b, const CharPoly& cp,
    const Ops& ops) {
  using V = typename Ops::value_type;
  const std::size_t order = cp.degree();
  assert(order >= 1 && a.size() <= order && b.size() <= order);
  if (a.empty() || b.empty()) return std::vector<V>(order, ops.from_int(0));

  std::vector<V> prod(a.size() + b.size() - 1, ops.from_int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ops.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = ops.add(prod[i + j], ops.mul(a[i], b[j]));
  }

  std::vector<V> low_coeffs;
  low_coeffs.reserve(order);
  for (std::size_t j = 0; j < order; ++j) low_coeffs.push_back(ops.from_int(cp.coeffs[j]));

  for (std::size_t i = prod.size(); i-- > order;) {
    if (ops.is_zero(prod[i])) continue;
    V top = std::move(prod[i]);
    for (std::size_t j = 0; j < order; ++j) {
      if (cp.coeffs[j] == 0) continue;
      prod[i - order + j] = ops.sub(prod[i - order + j], ops.mul(top, low_coeffs[j]));
    }
  }
  prod.resize(order, ops.from_int(0));
  return prod;
}

// F_n via polynomial exponentiation: with r(x) = x^{n-1} mod c(x),
// F_n = sum_i r_i * F_{i+1}. The mapping x^k -> F_{k+1} kills every multiple
// of c(x) because the order-D recurrence holds for every window whose top
// index lies past the seed range, which is all bases k >= 1 here. Seeds
// F_1..F_D come from the pre-recurrence cases, so indices below D+1 are
// answered directly.
template <typename Ops>
typename Ops::value_type fast_term_impl(const Params& p, std::uint64_t n,
                                        const Ops& ops) {
  using V = typename Ops::value_type;
  require_index(n);
  require_not_degenerate(p);

  const std::uint64_t order =
      p.death_finite() ? *p.death_age() + 1 : p.fertile_age();
  const std::uint64_t seed_len = n < order ? n : order;
  const std::vector<V> seeds = collect_terms(p, seed_len, ops, FourCaseValue{});
  if (n <= order) return seeds.back();

  const CharPoly cp = char_poly(p);
  std::vector<V> result{ops.from_int(1)};
  std::vector<V> base;
  if (order == 1) {
    base.push_back(ops.from_int(-cp.coeffs[0]));  // x == -c_0 mod (x + c_0)
  } else {
    base.push_back(ops.from_int(0));
    base.push_back(ops.from_int(1));
  }

  std::uint64_t exponent = n - 1;
  while (exponent > 0) {
    if (exponent & 1) result = poly_mul_mod_impl(result, base, cp, ops);
    exponent >>= 1;
    if (exponent) base = poly_mul_mod_impl(base, base, cp, ops);
  }

  V acc = ops.from_int(0);
  for (std::size_t i = 0; i < result.size(); ++i)
    acc = ops.add(acc, ops.mul(result[i], seeds[i]));
  return acc;
}

}  // namespace detail

/// Exact (a*b) mod c over the integers. Operands must have degree < deg c.
template <IntegerLike Int>
std::vector<Int> poly_mul_mod(const std::vector<Int>& a, const std::vector<Int>& b,
                              const CharPoly& c) {
  return detail::poly_mul_mod_impl(a, b, c, ExactOps<Int>{});
}

/// (a*b) mod c with coefficients reduced mod m.
inline std::vector<std::uint64_t> poly_mul_mod(const std::vector<std::uint64_t>& a,
                                               const std::vector<std::uint64_t>& b,
                                               const CharPoly& c, std::uint64_t m) {
  return detail::poly_mul_mod_impl(a, b, c, ModOps(m));
}

/// Exact F_n in O(D^2 log n) coefficient operations, D = max(f, d+1).
template <IntegerLike Int>
Int fast_term(const Params& p, std::uint64_t n) {
  return detail::fast_term_impl(p, n, ExactOps<Int>{});
}

/// F_n mod m; isolates algorithmic cost from bignum growth.
inline std::uint64_t fast_term_mod(const Params& p, std::uint64_t n, std::uint64_t m) {
  return detail::fast_term_impl(p, n, ModOps(m));
}

}  // namespace rabbits
