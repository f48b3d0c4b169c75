#pragma once

#include <cstdint>
#include <vector>

#include "arith.hpp"
#include "core.hpp"

namespace rabbits {

namespace detail {

// Four-case recurrence, valid for f <= d (d possibly absent), seed F_1 = 1:
//
//   F_n = 1                              2 <= n <= f
//   F_n = F_{n-1} + F_{n-f}              f <  n <= d
//   F_n = F_{n-1} + F_{n-f} - 1          n == d+1
//   F_n = F_{n-1} + F_{n-f} - F_{n-d-1}  n >= d+2
//
// The cases partition the index axis; f = 1 empties the first range, f = d the
// second. With d absent only the first two cases ever apply.
// prev(k) must return F_{i-k} for 1 <= k <= d+1.
struct FourCaseValue {
  template <typename Ops, typename Prev>
  typename Ops::value_type operator()(const Params& p, std::uint64_t i,
                                      const Prev& prev, const Ops& ops) const {
    const std::uint64_t f = p.fertile_age();
    if (i <= f) return ops.from_int(1);
    if (!p.death_finite()) return ops.add(prev(1), prev(f));
    const std::uint64_t d = *p.death_age();
    if (i <= d) return ops.add(prev(1), prev(f));
    if (i == d + 1) return ops.sub(ops.add(prev(1), prev(f)), ops.from_int(1));
    return ops.sub(ops.add(prev(1), prev(f)), prev(d + 1));
  }
};

// Sliding-window form of the same sequence:
//
//   F_n = 1                              1 <= n <= f
//   F_n = F_{n-1} + F_{n-f}              f <  n <= d
//   F_n = F_{n-f} + F_{n-f-1} + ... + F_{n-d}   n > d    (d - f + 1 terms)
//
// The last case needs finite d; with d absent the middle case applies forever.
// Subtraction-free.
struct WindowSumValue {
  template <typename Ops, typename Prev>
  typename Ops::value_type operator()(const Params& p, std::uint64_t i,
                                      const Prev& prev, const Ops& ops) const {
    const std::uint64_t f = p.fertile_age();
    if (i <= f) return ops.from_int(1);
    if (!p.death_finite() || i <= *p.death_age()) return ops.add(prev(1), prev(f));
    const std::uint64_t d = *p.death_age();
    auto sum = prev(f);
    for (std::uint64_t k = f + 1; k <= d; ++k) sum = ops.add(sum, prev(k));
    return sum;
  }
};

// All terms F_1..F_n; each new term reads back into the output, no extra
// memoization.
template <typename Ops, typename CaseFn>
std::vector<typename Ops::value_type> collect_terms(const Params& p, std::uint64_t n,
                                                    const Ops& ops, CaseFn value_at) {
  std::vector<typename Ops::value_type> terms;
  terms.reserve(static_cast<std::size_t>(n));
  terms.push_back(ops.from_int(1));
  const auto prev = [&terms](std::uint64_t k) -> const typename Ops::value_type& {
    return terms[terms.size() - static_cast<std::size_t>(k)];
  };
  for (std::uint64_t i = 2; i <= n; ++i) terms.push_back(value_at(p, i, prev, ops));
  return terms;
}

// F_n alone, keeping only a ring buffer of the last max(f, d+1) terms.
template <typename Ops, typename CaseFn>
typename Ops::value_type rolling_term(const Params& p, std::uint64_t n, const Ops& ops,
                                      CaseFn value_at) {
  const std::uint64_t lookback =
      p.death_finite() ? *p.death_age() + 1 : p.fertile_age();
  const std::uint64_t width = lookback + 1;
  std::vector<typename Ops::value_type> ring(static_cast<std::size_t>(width),
                                             ops.from_int(0));
  ring[1 % width] = ops.from_int(1);
  for (std::uint64_t i = 2; i <= n; ++i) {
    const auto prev = [&](std::uint64_t k) -> const typename Ops::value_type& {
      return ring[static_cast<std::size_t>((i - k) % width)];
    };
    auto v = value_at(p, i, prev, ops);
    ring[static_cast<std::size_t>(i % width)] = std::move(v);
  }
  return ring[static_cast<std::size_t>(n % width)];
}

}  // namespace detail

/// F_1..F_n by the four-case recurrence. Rejects d < f.
template <IntegerLike Int>
SequenceWindow<Int> theorem1_sequence(const Params& p, std::uint64_t n) {
  detail::require_index(n);
  detail::require_not_degenerate(p);
  return SequenceWindow<Int>{
      1, detail::collect_terms(p, n, ExactOps<Int>{}, detail::FourCaseValue{})};
}

/// F_1..F_n by the sliding-window recurrence. Rejects d < f.
template <IntegerLike Int>
SequenceWindow<Int> oller_sequence(const Params& p, std::uint64_t n) {
  detail::require_index(n);
  detail::require_not_degenerate(p);
  return SequenceWindow<Int>{
      1, detail::collect_terms(p, n, ExactOps<Int>{}, detail::WindowSumValue{})};
}

/// F_n alone in O(max(f, d+1)) memory.
template <IntegerLike Int>
Int theorem1_term(const Params& p, std::uint64_t n) {
  detail::require_index(n);
  detail::require_not_degenerate(p);
  return detail::rolling_term(p, n, ExactOps<Int>{}, detail::FourCaseValue{});
}

template <IntegerLike Int>
Int oller_term(const Params& p, std::uint64_t n) {
  detail::require_index(n);
  detail::require_not_degenerate(p);
  return detail::rolling_term(p, n, ExactOps<Int>{}, detail::WindowSumValue{});
}

/// F_n mod m by the iterative four-case recurrence; the baseline the fast
/// evaluator is benchmarked against.
inline std::uint64_t theorem1_term_mod(const Params& p, std::uint64_t n,
                                       std::uint64_t m) {
  detail::require_index(n);
  detail::require_not_degenerate(p);
  return detail::rolling_term(p, n, ModOps(m), detail::FourCaseValue{});
}

inline std::uint64_t oller_term_mod(const Params& p, std::uint64_t n, std::uint64_t m) {
  detail::require_index(n);
  detail::require_not_degenerate(p);
  return detail::rolling_term(p, n, ModOps(m), detail::WindowSumValue{});
}

/// Residues of F_1..F_n mod m, four-case recurrence.
inline std::vector<std::uint64_t> theorem1_sequence_mod(const Params& p,
                                                        std::uint64_t n,
                                                        std::uint64_t m) {
  detail::require_index(n);
  detail::require_not_degenerate(p);
  return detail::collect_terms(p, n, ModOps(m), detail::FourCaseValue{});
}

inline std::vector<std::uint64_t> oller_sequence_mod(const Params& p, std::uint64_t n,
                                                     std::uint64_t m) {
  detail::require_index(n);
  detail::require_not_degenerate(p);
  return detail::collect_terms(p, n, ModOps(m), detail::WindowSumValue{});
}

}  // namespace rabbits
