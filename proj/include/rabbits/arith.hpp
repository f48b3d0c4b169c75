#pragma once

#include <cstdint>

#include "core.hpp"

namespace rabbits {

// 64-bit residue arithmetic through 128-bit intermediates; valid for any
// modulus 2 <= m <= 2^64-1. Inputs are expected reduced.

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + m - b) % m);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// Plain integer arithmetic over Int; the exact-mode counterpart of ModOps.
/// Every evaluation kernel is written once against this interface and
/// instantiated for both rings.
template <IntegerLike Int>
struct ExactOps {
  using value_type = Int;

  value_type from_int(std::int64_t v) const { return value_type(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a == value_type(0); }
};

/// Arithmetic in Z/mZ with values kept in [0, m). The modulus need not be
/// prime; nothing here divides.
struct ModOps {
  using value_type = std::uint64_t;

  std::uint64_t modulus;

  explicit ModOps(std::uint64_t m) : modulus(m) {
    if (m < 2) throw InvalidModulus("modulus must be >= 2, got " + std::to_string(m));
  }

  value_type from_int(std::int64_t v) const {
    auto r = static_cast<__int128>(v) % static_cast<__int128>(modulus);
    if (r < 0) r += modulus;
    return static_cast<value_type>(r);
  }
  value_type add(value_type a, value_type b) const { return add_mod(a, b, modulus); }
  value_type sub(value_type a, value_type b) const { return sub_mod(a, b, modulus); }
  value_type mul(value_type a, value_type b) const { return mul_mod(a, b, modulus); }
  bool is_zero(value_type a) const { return a == 0; }
};

}  // namespace rabbits
