#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>

#include "core.hpp"

namespace rabbits {

/// Births and removals produced by one evolution step.
template <typename Int>
struct StepStats {
  Int newborns;
  Int deaths;

  friend bool operator==(const StepStats&, const StepStats&) = default;
};

/// Guard against runaway jobs; the simulator is a desk-scale reference, not a
/// fast path.
inline constexpr std::uint64_t kDefaultStepLimit = 1'000'000;

/// Generation 1: a single newborn pair. Degenerate parameters seed the same way.
template <IntegerLike Int>
CohortState<Int> initial_cohort(const Params&) {
  CohortState<Int> c;
  c.generation = 1;
  c.counts.assign(1, Int(1));
  return c;
}

/// One evolution step: every rabbit of age >= f contributes one newborn, every
/// age advances by one, and rabbits that would pass age d drop out (never,
/// when d is absent). Returns the next generation's census plus the step's
/// birth/death counts.
template <IntegerLike Int>
std::pair<CohortState<Int>, StepStats<Int>> step(const Params& p,
                                                 const CohortState<Int>& c) {
  const std::uint64_t fertile = p.fertile_age();
  const std::uint64_t ages = c.max_age();

  Int newborns(0);
  for (std::uint64_t x = fertile; x <= ages; ++x) newborns += c.counts[x - 1];

  Int deaths(0);
  if (p.death_finite() && ages >= *p.death_age()) deaths = c.counts[*p.death_age() - 1];

  CohortState<Int> next;
  next.generation = c.generation + 1;
  const std::uint64_t next_ages =
      p.death_finite() ? std::min<std::uint64_t>(*p.death_age(), next.generation)
                       : next.generation;
  next.counts.resize(next_ages, Int(0));
  next.counts[0] = newborns;
  for (std::uint64_t x = 2; x <= next_ages; ++x) next.counts[x - 1] = c.counts[x - 2];

  return {std::move(next), StepStats<Int>{std::move(newborns), std::move(deaths)}};
}

/// Exact terms F_1..F_n by literal simulation, totaling each census. This is
/// the reference every closed-form method is checked against. Memory is the
/// rolling cohort only, O(min(d, n)).
template <IntegerLike Int>
SequenceWindow<Int> run(const Params& p, std::uint64_t n,
                        std::uint64_t step_limit = kDefaultStepLimit) {
  detail::require_index(n);
  if (n > step_limit)
    throw LimitExceeded("generation " + std::to_string(n) + " exceeds step limit " +
                        std::to_string(step_limit));
  SequenceWindow<Int> window;
  window.start = 1;
  window.terms.reserve(static_cast<std::size_t>(n));
  CohortState<Int> c = initial_cohort<Int>(p);
  window.terms.push_back(c.total());
  while (c.generation < n) {
    c = step(p, c).first;
    window.terms.push_back(c.total());
  }
  return window;
}

/// Full age census at generation n, recomputed from generation 1.
template <IntegerLike Int>
CohortState<Int> cohort_at(const Params& p, std::uint64_t n,
                           std::uint64_t step_limit = kDefaultStepLimit) {
  detail::require_index(n);
  if (n > step_limit)
    throw LimitExceeded("generation " + std::to_string(n) + " exceeds step limit " +
                        std::to_string(step_limit));
  CohortState<Int> c = initial_cohort<Int>(p);
  while (c.generation < n) c = step(p, c).first;
  return c;
}

}  // namespace rabbits
