#include "sqfsum/squareful.hpp"

#include <algorithm>
#include <limits>

namespace sqf {

namespace {

constexpr u64 kSafeMax = std::numeric_limits<i64>::max();

// squarefree test by trial division; intended for y <= B^{1/3}
bool squarefree_small(u64 y) {
  if (y % 4 == 0) return false;
  for (u64 d = 2; d * d <= y; ++d) {
    if (y % (d * d) == 0) return false;
  }
  return true;
}

}  // namespace

bool is_squareful(u64 n) {
  if (n == 0) return false;
  for (u64 d = 2; (u128)d * d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      if (e < 2) return false;
    }
  }
  // leftover has no prime factor <= cbrt: it is 1, p, p^2 or pq
  if (n == 1) return true;
  u64 r;
  return is_perfect_square(n, r);
}

std::optional<SquarefulRep> decompose(u64 k) {
  if (k == 0) return std::nullopt;
  SquarefulRep rep;
  rep.k = k;
  u64 n = k;
  for (u64 d = 2; (u128)d * d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      if (e < 2) return std::nullopt;
      if (e & 1) {
        rep.y *= d;
        e -= 3;
      }
      for (int i = 0; i < e / 2; ++i) rep.x *= d;
    }
  }
  if (n > 1) {
    u64 r;
    if (!is_perfect_square(n, r)) return std::nullopt;
    rep.x *= r;
  }
  return rep;
}

std::vector<u64> enumerate_squareful(u64 B) {
  if (B > kSafeMax)
    throw std::out_of_range("enumerate_squareful: bound exceeds 2^63 - 1");
  std::vector<u64> out;
  if (B == 0) return out;
  out.reserve(static_cast<size_t>(2.2 * std::sqrt((double)B)) + 16);
  for (u64 y = 1; (u128)y * y * y <= B; ++y) {
    if (!squarefree_small(y)) continue;
    u64 y3 = y * y * y;
    u64 xmax = isqrt64(B / y3);
    // exact: need x^2 y^3 <= B with 128-bit check at the boundary
    while (xmax > 0 && (u128)xmax * xmax * y3 > B) --xmax;
    for (u64 x = 1; x <= xmax; ++x) out.push_back(x * x * y3);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SquarefulCensus count_squareful(u64 B) {
  if (B > kSafeMax)
    throw std::out_of_range("count_squareful: bound exceeds 2^63 - 1");
  SquarefulCensus census;
  for (u64 y = 1; (u128)y * y * y <= B; ++y) {
    if (!squarefree_small(y)) continue;
    u64 y3 = y * y * y;
    u64 xmax = isqrt64(B / y3);
    while (xmax > 0 && (u128)xmax * xmax * y3 > B) --xmax;
    census.count += xmax;
  }
  census.asymptotic = powerful_density_constant() * std::sqrt((double)B);
  return census;
}

double powerful_density_constant() {
  static const double c2 = std::riemann_zeta(1.5) / std::riemann_zeta(3.0);
  return c2;
}

}  // namespace sqf
