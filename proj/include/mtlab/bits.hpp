#pragma once

#include <bit>
#include <cstdint>

namespace mtlab {

using Mask = std::uint64_t;

inline constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

/// Index of the lowest set bit; undefined for m == 0.
inline constexpr int lowest_bit(Mask m) noexcept { return std::countr_zero(m); }

inline constexpr Mask bit(int i) noexcept { return Mask{1} << i; }

/// Mask with bits 0..n-1 set; valid for 0 <= n <= 64.
inline constexpr Mask low_mask(int n) noexcept {
  return n >= 64 ? ~Mask{0} : (bit(n) - 1);
}

/// Calls f(i) for every set bit i in ascending order.
template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    const int i = lowest_bit(m);
    m &= m - 1;
    f(i);
  }
}

}  // namespace mtlab
