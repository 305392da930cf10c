#include "sqfsum/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "sqfsum/squareful.hpp"

namespace sqf {

namespace {

// Ordered pairs (x, y), x + y = sq[zi], gcd(x, y) = 1, via a two-pointer
// scan of the prefix below zi.  Each unordered hit with x != y counts 2.
u64 pairs_for_target(std::span<const u64> sq, size_t zi) {
  u64 z = sq[zi];
  u64 hits = 0;
  size_t i = 0, j = zi;
  if (j == 0) return 0;
  --j;
  while (i <= j) {
    u64 s = sq[i] + sq[j];
    if (s < z) {
      ++i;
    } else if (s > z) {
      if (j == 0) break;
      --j;
    } else {
      if (std::gcd(sq[i], sq[j]) == 1) hits += (i == j) ? 1 : 2;
      ++i;
      if (j == 0) break;
      --j;
    }
  }
  return hits;
}

}  // namespace

u64 count_triples(std::span<const u64> squareful_sorted, u64 B, int threads) {
  if (B > (u64)std::numeric_limits<i64>::max())
    throw std::out_of_range("count_triples: bound exceeds 2^63 - 1");
  auto end = std::upper_bound(squareful_sorted.begin(), squareful_sorted.end(), B);
  std::span<const u64> sq(squareful_sorted.data(),
                          (size_t)(end - squareful_sorted.begin()));
  size_t n = sq.size();
  if (n < 3) return 0;
  int T = std::max(1, threads);
  if (T == 1 || n < 1024) {
    u64 total = 0;
    for (size_t zi = 2; zi < n; ++zi) total += pairs_for_target(sq, zi);
    return total;
  }
  // strided z-assignment balances the growing per-z scan cost
  std::vector<u64> partial(static_cast<size_t>(T), 0);
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(T));
  for (int w = 0; w < T; ++w) {
    workers.emplace_back([&, w]() {
      u64 local = 0;
      for (size_t zi = 2 + (size_t)w; zi < n; zi += (size_t)T)
        local += pairs_for_target(sq, zi);
      partial[(size_t)w] = local;
    });
  }
  for (auto& t : workers) t.join();
  u64 total = 0;
  for (u64 p : partial) total += p;
  return total;
}

u64 count_triples(u64 B, int threads) {
  auto sq = enumerate_squareful(B);
  return count_triples(sq, B, threads);
}

TripleCountRecord make_record(u64 bound, u64 count, double c_ref) {
  TripleCountRecord rec;
  rec.bound = bound;
  rec.count = count;
  rec.ratio = (double)count / (c_ref * std::sqrt((double)bound));
  return rec;
}

bool DyadicBox::admissible(u64 B) const {
  for (int i = 0; i < 3; ++i) {
    int e = 2 * x_exp[(size_t)i] + 3 * y_exp[(size_t)i];
    if (e <= 0) continue;
    if (e >= 64 || (1ULL << e) > B) return false;
  }
  return true;
}

namespace {

bool squarefree_u64(u64 n) {
  if (n % 4 == 0) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

struct Range {
  u64 lo = 1, hi = 0;   // empty unless lo <= hi
  u64 size() const { return hi < lo ? 0 : hi - lo + 1; }
};

Range dyadic_range(int e) {
  if (e < 0) return {};          // endpoint 1/2: no integers in [1/2, 1)
  return {1ULL << e, (1ULL << (e + 1)) - 1};
}

}  // namespace

u64 count_triples_boxed(const DyadicBox& box, u64 B, u64 budget) {
  if (!box.admissible(B)) return 0;
  Range xr[3], yr[3];
  for (int i = 0; i < 3; ++i) {
    xr[i] = dyadic_range(box.x_exp[(size_t)i]);
    yr[i] = dyadic_range(box.y_exp[(size_t)i]);
    if (xr[i].size() == 0 || yr[i].size() == 0) return 0;
  }
  u128 volume = (u128)yr[0].size() * yr[1].size() * yr[2].size() *
                xr[0].size() * xr[1].size();
  if (volume > budget)
    throw BudgetExceeded("count_triples_boxed: candidate space exceeds budget");

  u64 total = 0;
  for (u64 y0 = yr[0].lo; y0 <= yr[0].hi; ++y0) {
    if (!squarefree_u64(y0)) continue;
    for (u64 y1 = yr[1].lo; y1 <= yr[1].hi; ++y1) {
      if (!squarefree_u64(y1) || std::gcd(y0, y1) != 1) continue;
      for (u64 y2 = yr[2].lo; y2 <= yr[2].hi; ++y2) {
        if (!squarefree_u64(y2) || std::gcd(y0, y2) != 1 || std::gcd(y1, y2) != 1)
          continue;
        u64 c0 = y0 * y0 * y0, c1 = y1 * y1 * y1, c2 = y2 * y2 * y2;
        for (u64 x0 = xr[0].lo; x0 <= xr[0].hi; ++x0) {
          u128 h0 = (u128)x0 * x0 * c0;
          if (h0 > B) break;
          for (u64 x1 = xr[1].lo; x1 <= xr[1].hi; ++x1) {
            u128 s = h0 + (u128)x1 * x1 * c1;
            if ((u128)x1 * x1 * c1 > B || s > B) break;
            if (s % c2 != 0) continue;
            u64 q = (u64)(s / c2);
            u64 x2;
            if (!is_perfect_square(q, x2)) continue;
            if (x2 < xr[2].lo || x2 > xr[2].hi) continue;
            u64 g = std::gcd(std::gcd(x0 * y0, x1 * y1), x2 * y2);
            if (g == 1) ++total;
          }
        }
      }
    }
  }
  return total;
}

std::vector<DyadicBox> admissible_boxes(u64 B) {
  std::vector<std::pair<int, int>> coord;   // feasible (x_exp, y_exp) pairs
  for (int ye = 0;; ++ye) {
    int base = 3 * ye;
    if (base >= 64 || (1ULL << base) > B) break;
    for (int xe = 0;; ++xe) {
      int e = 2 * xe + base;
      if (e >= 64 || (1ULL << e) > B) break;
      coord.emplace_back(xe, ye);
    }
  }
  std::vector<DyadicBox> boxes;
  boxes.reserve(coord.size() * coord.size() * coord.size());
  for (auto [x0, y0] : coord)
    for (auto [x1, y1] : coord)
      for (auto [x2, y2] : coord)
        boxes.push_back(DyadicBox{{x0, x1, x2}, {y0, y1, y2}});
  return boxes;
}

u64 count_ternary_points(std::array<i64, 3> c, int d, std::array<u64, 3> Z,
                         u64 budget) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("count_ternary_points: d must be 2 or 3");
  if (c[0] == 0 || c[1] == 0 || c[2] == 0)
    throw std::invalid_argument("count_ternary_points: coefficients must be nonzero");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::gcd(std::llabs(c[(size_t)i]), std::llabs(c[(size_t)j])) != 1)
        throw std::invalid_argument("count_ternary_points: coefficients must be pairwise coprime");
  if ((u128)Z[0] * 2 * Z[1] > budget)
    throw BudgetExceeded("count_ternary_points: (z1, z2) range exceeds budget");

  auto powd = [d](i64 z) { return d == 2 ? (i128)z * z : (i128)z * z * z; };
  u64 total = 0;
  // count solution classes up to global sign: z1 > 0 picks a representative
  for (i64 z1 = 1; (u64)z1 <= Z[0]; ++z1) {
    i128 a = (i128)c[0] * powd(z1);
    for (i64 z2 = -(i64)Z[1]; z2 <= (i64)Z[1]; ++z2) {
      if (z2 == 0) continue;
      i128 s = a + (i128)c[1] * powd(z2);
      if (s % c[2] != 0) continue;
      i128 t = -(s / c[2]);
      if (d == 2) {
        if (t <= 0) continue;
        if (t > (i128)std::numeric_limits<i64>::max()) continue;
        u64 r;
        if (!is_perfect_square((u64)t, r)) continue;
        if (r == 0 || r > Z[2]) continue;
        if (std::gcd(std::gcd((u64)z1, (u64)std::llabs(z2)), r) != 1) continue;
        total += 2;   // z3 = +-r give distinct classes
      } else {
        if (t == 0) continue;
        u128 at = t > 0 ? (u128)t : (u128)(-t);
        if (at > (u128)std::numeric_limits<u64>::max()) continue;
        u64 r = icbrt64((u64)at);
        if ((u128)r * r * r != at) continue;
        if (r == 0 || r > Z[2]) continue;
        if (std::gcd(std::gcd((u64)z1, (u64)std::llabs(z2)), r) != 1) continue;
        total += 1;   // sign of z3 is forced
      }
    }
  }
  return total;
}

BoundRatioReport bound_ratio_report(std::span<const TernarySample> samples,
                                    u64 budget) {
  BoundRatioReport report;
  report.rows.reserve(samples.size());
  for (const TernarySample& s : samples) {
    BoundRatioRow row;
    row.sample = s;
    row.count = count_ternary_points(s.c, s.d, s.Z, budget);
    u64 cprod = (u64)std::llabs(s.c[0]) * (u64)std::llabs(s.c[1]) *
                (u64)std::llabs(s.c[2]);
    int omega = 0;
    u64 t = cprod;
    for (u64 p = 2; p * p <= t; ++p) {
      if (t % p == 0) {
        ++omega;
        while (t % p == 0) t /= p;
      }
    }
    if (t > 1) ++omega;
    double vol = (double)s.Z[0] * (double)s.Z[1] * (double)s.Z[2];
    double cpow = std::pow((double)cprod, 2.0 / s.d);
    row.normalizer = std::cbrt(1.0 + vol / cpow) * std::pow((double)s.d, omega + 1);
    row.ratio = (double)row.count / row.normalizer;
    report.max_ratio = std::max(report.max_ratio, row.ratio);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace sqf
