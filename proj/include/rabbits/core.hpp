#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rabbits {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rejected raw input: nonpositive or out-of-range f or d, or index 0.
class InvalidParam : public Error {
  using Error::Error;
};

/// The requested method needs f <= d; the degenerate regime is simulator-only.
class DegenerateParams : public Error {
  using Error::Error;
};

/// Requested generation exceeds the configured iteration cap.
class LimitExceeded : public Error {
  using Error::Error;
};

/// Modulus smaller than 2.
class InvalidModulus : public Error {
  using Error::Error;
};

/// Any integer type usable as a term count. Exact work wants an
/// arbitrary-precision type (terms outgrow 64 bits around n = 90 already in
/// the classical case); fixed-width types are fine for small windows.
template <typename T>
concept IntegerLike = requires(T a, T b) {
  T(0);
  T(1);
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
};

enum class ParamClass {
  Degenerate,  // d < f: the founder dies before it can breed
  Borderline,  // f == d: births exactly replace deaths
  Standard     // f < d, including d absent (rabbits never die)
};

constexpr std::string_view to_string(ParamClass c) noexcept {
  switch (c) {
    case ParamClass::Degenerate: return "degenerate";
    case ParamClass::Borderline: return "borderline";
    case ParamClass::Standard: return "standard";
  }
  return "?";
}

/// Population parameters: rabbits become fertile at age f and die at age d;
/// an absent d means they never die. Built through validate(), immutable after.
class Params {
 public:
  std::uint32_t fertile_age() const noexcept { return fertile_; }
  const std::optional<std::uint32_t>& death_age() const noexcept { return death_; }
  bool death_finite() const noexcept { return death_.has_value(); }

  friend bool operator==(const Params&, const Params&) noexcept = default;

 private:
  Params(std::uint32_t fertile, std::optional<std::uint32_t> death) noexcept
      : fertile_(fertile), death_(death) {}

  friend Params validate(std::int64_t, std::optional<std::int64_t>);

  std::uint32_t fertile_;
  std::optional<std::uint32_t> death_;
};

/// Checks raw user input: f >= 1, and d >= 1 when present. Degenerate
/// parameters (d < f) pass validation; only some methods accept them.
inline Params validate(std::int64_t fertile, std::optional<std::int64_t> death) {
  constexpr auto max_age =
      static_cast<std::int64_t>(std::numeric_limits<std::uint32_t>::max());
  if (fertile < 1)
    throw InvalidParam("fertility age must be >= 1, got " + std::to_string(fertile));
  if (fertile > max_age)
    throw InvalidParam("fertility age out of range: " + std::to_string(fertile));
  std::optional<std::uint32_t> d;
  if (death) {
    if (*death < 1)
      throw InvalidParam("death age must be >= 1, got " + std::to_string(*death));
    if (*death > max_age)
      throw InvalidParam("death age out of range: " + std::to_string(*death));
    d = static_cast<std::uint32_t>(*death);
  }
  return Params(static_cast<std::uint32_t>(fertile), d);
}

/// Infinite-d convenience overload.
inline Params validate(std::int64_t fertile) { return validate(fertile, std::nullopt); }

/// Total and exclusive: exactly one class for every valid Params.
inline ParamClass classify(const Params& p) noexcept {
  if (p.death_finite()) {
    if (*p.death_age() < p.fertile_age()) return ParamClass::Degenerate;
    if (*p.death_age() == p.fertile_age()) return ParamClass::Borderline;
  }
  return ParamClass::Standard;
}

/// Age census of one generation: counts[x-1] rabbits of exact age x.
/// Ages run 1..min(d, generation); ages past d or past the generation number
/// cannot exist and are not stored.
template <typename Int>
struct CohortState {
  std::uint64_t generation = 1;
  std::vector<Int> counts;

  std::uint64_t max_age() const noexcept { return counts.size(); }

  /// Count of rabbits of exact age x (1-based).
  const Int& at_age(std::uint64_t age) const { return counts.at(age - 1); }

  /// Row sum: the generation's population.
  Int total() const {
    Int sum(0);
    for (const Int& c : counts) sum += c;
    return sum;
  }

  friend bool operator==(const CohortState&, const CohortState&) = default;
};

/// Contiguous run of exact terms F_start .. F_{start+terms.size()-1}.
template <typename Int>
struct SequenceWindow {
  std::uint64_t start = 1;
  std::vector<Int> terms;

  std::uint64_t first_index() const noexcept { return start; }
  std::uint64_t last_index() const noexcept { return start + terms.size() - 1; }
  bool covers(std::uint64_t index) const noexcept {
    return !terms.empty() && index >= start && index <= last_index();
  }

  /// Term by absolute 1-based sequence index.
  const Int& at(std::uint64_t index) const {
    if (!covers(index))
      throw std::out_of_range("sequence index " + std::to_string(index) +
                              " outside window");
    return terms[static_cast<std::size_t>(index - start)];
  }

  const Int& last() const { return terms.back(); }

  friend bool operator==(const SequenceWindow&, const SequenceWindow&) = default;
};

/// A term value reduced modulo `modulus`; value always in [0, modulus).
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;

  friend bool operator==(const Residue&, const Residue&) noexcept = default;
};

/// Carrier for a computed term: exact integer or residue, depending on mode.
template <typename Int>
using TermValue = std::variant<Int, Residue>;

namespace detail {

inline void require_index(std::uint64_t n) {
  if (n < 1) throw InvalidParam("generation index must be >= 1");
}

inline void require_not_degenerate(const Params& p) {
  if (classify(p) == ParamClass::Degenerate)
    throw DegenerateParams(
        "death age " + std::to_string(*p.death_age()) + " < fertility age " +
        std::to_string(p.fertile_age()) + "; use the simulator for this regime");
}

}  // namespace detail

}  // namespace rabbits
