#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "fasteval.hpp"
#include "recurrence.hpp"
#include "simulator.hpp"

namespace rabbits {

enum class MethodId {
  Simulation,  // literal age-structured evolution
  Theorem1,    // four-case recurrence
  Oller,       // sliding-window recurrence
  FastEval     // polynomial exponentiation mod the characteristic polynomial
};

constexpr std::string_view to_string(MethodId m) noexcept {
  switch (m) {
    case MethodId::Simulation: return "sim";
    case MethodId::Theorem1: return "rec";
    case MethodId::Oller: return "oller";
    case MethodId::FastEval: return "fast";
  }
  return "?";
}

namespace detail {

template <typename Int>
Residue reduce(const Int& value, std::uint64_t m) {
  if (m < 2) throw InvalidModulus("modulus must be >= 2, got " + std::to_string(m));
  return Residue{static_cast<std::uint64_t>(value % Int(m)), m};
}

}  // namespace detail

/// F_n by the chosen method: exact, or a residue when a modulus is given.
/// Theorem1 and FastEval run natively in the modular ring; Simulation and
/// Oller compute exactly and reduce.
template <IntegerLike Int>
TermValue<Int> term(const Params& p, std::uint64_t n, MethodId method,
                    std::optional<std::uint64_t> modulus = std::nullopt) {
  switch (method) {
    case MethodId::Simulation: {
      Int v = cohort_at<Int>(p, n).total();
      if (modulus) return detail::reduce(v, *modulus);
      return v;
    }
    case MethodId::Theorem1: {
      if (modulus) return Residue{theorem1_term_mod(p, n, *modulus), *modulus};
      return theorem1_term<Int>(p, n);
    }
    case MethodId::Oller: {
      Int v = oller_term<Int>(p, n);
      if (modulus) return detail::reduce(v, *modulus);
      return v;
    }
    case MethodId::FastEval: {
      if (modulus) return Residue{fast_term_mod(p, n, *modulus), *modulus};
      return fast_term<Int>(p, n);
    }
  }
  throw Error("unknown method");
}

template <typename Int>
struct CrossVerifyRow {
  std::uint64_t index = 1;
  std::vector<Int> values;  // parallel to CrossVerifyReport::methods
  bool agree = true;
};

/// Per-index agreement of every applicable method. Methods that cannot run
/// for the given parameters are listed, not errored: the degenerate regime is
/// simulator-only.
template <typename Int>
struct CrossVerifyReport {
  Params params;
  std::uint64_t max_index = 1;
  std::vector<MethodId> methods;
  std::vector<MethodId> inapplicable;
  std::vector<CrossVerifyRow<Int>> rows;
  bool all_agree = true;
};

template <IntegerLike Int>
CrossVerifyReport<Int> cross_verify(const Params& p, std::uint64_t n) {
  detail::require_index(n);
  CrossVerifyReport<Int> report{p, n, {}, {}, {}, true};

  std::vector<std::vector<Int>> columns;
  report.methods.push_back(MethodId::Simulation);
  columns.push_back(run<Int>(p, n).terms);

  if (classify(p) == ParamClass::Degenerate) {
    report.inapplicable = {MethodId::Theorem1, MethodId::Oller, MethodId::FastEval};
  } else {
    report.methods.push_back(MethodId::Theorem1);
    columns.push_back(theorem1_sequence<Int>(p, n).terms);
    report.methods.push_back(MethodId::Oller);
    columns.push_back(oller_sequence<Int>(p, n).terms);
    report.methods.push_back(MethodId::FastEval);
    std::vector<Int> fast_terms;
    fast_terms.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t i = 1; i <= n; ++i) fast_terms.push_back(fast_term<Int>(p, i));
    columns.push_back(std::move(fast_terms));
  }

  report.rows.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 1; i <= n; ++i) {
    CrossVerifyRow<Int> row;
    row.index = i;
    for (const auto& column : columns) row.values.push_back(column[i - 1]);
    row.agree = true;
    for (const Int& v : row.values) row.agree = row.agree && v == row.values.front();
    report.all_agree = report.all_agree && row.agree;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace rabbits
