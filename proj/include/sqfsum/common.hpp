#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqf {

using u8   = std::uint8_t;
using u32  = std::uint32_t;
using u64  = std::uint64_t;
using i64  = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Thrown when a requested computation exceeds its configured enumeration
// budget.  Callers can retry with a smaller input or a larger budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// floor(sqrt(n)), exact for the full u64 range.
inline u64 isqrt64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (u128)r * r > n) --r;
  while ((u128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_perfect_square(u64 n, u64& root) {
  root = isqrt64(n);
  return root * root == n;
}

// floor(cbrt(n)), exact.
inline u64 icbrt64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::cbrt(static_cast<double>(n)));
  while (r > 0 && (u128)r * r * r > n) --r;
  while ((u128)(r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace sqf
