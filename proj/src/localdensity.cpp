#include "sqfsum/localdensity.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include <boost/rational.hpp>

namespace sqf {

namespace {

bool squarefree_u64(u64 n) {
  if (n % 4 == 0) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = (u128)r * a % m;
    a = (u128)a * a % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

ConicShape::ConicShape(u64 y0, u64 y1, u64 y2) : y_{y0, y1, y2} {
  if (y0 == 0 || y1 == 0 || y2 == 0)
    throw std::invalid_argument("ConicShape: coordinates must be positive");
  if (!squarefree_u64(y0) || !squarefree_u64(y1) || !squarefree_u64(y2) ||
      std::gcd(y0, y1) != 1 || std::gcd(y0, y2) != 1 || std::gcd(y1, y2) != 1)
    throw std::invalid_argument("ConicShape: y0 y1 y2 must be squarefree");
}

LocalDensityValue local_density(const ConicShape& y, std::optional<u64> place) {
  LocalDensityValue out;
  out.place = place;
  if (!place) {
    out.value = infinite_density(y);
    return out;
  }
  u64 p = *place;
  if (p == 2)
    out.exact = Rat(sigma2(y));
  else if (y.product() % p == 0)
    out.exact = odd_bad_density(p, y);
  else
    out.exact = good_density(p, y);
  out.value = boost::rational_cast<double>(*out.exact);
  return out;
}

int sigma2(const ConicShape& y) {
  u64 y0 = y.y(0), y1 = y.y(1), y2 = y.y(2);
  if ((y0 & 1) && (y1 & 1) && (y2 & 1)) {
    bool forbidden = (y0 % 4 == y1 % 4) && (y1 % 4 == (4 - y2 % 4) % 4);
    return forbidden ? 0 : 1;
  }
  if ((y0 & 1) == 0 && y1 % 8 == y2 % 8) return 2;
  if ((y1 & 1) == 0 && y0 % 8 == y2 % 8) return 2;
  if ((y2 & 1) == 0 && (y0 + y1) % 8 == 0) return 2;
  return 0;
}

Rat odd_bad_density(u64 p, const ConicShape& y) {
  if (p < 3 || (p & 1) == 0 || !is_prime_u64(p))
    throw std::invalid_argument("odd_bad_density: p must be an odd prime");
  i64 s;
  if (y.y(0) % p == 0) {
    if (y.y(1) % p == 0 || y.y(2) % p == 0)
      throw std::invalid_argument("odd_bad_density: p divides two coordinates");
    s = (i64)((u128)y.y(1) * y.y(2) % p);
  } else if (y.y(1) % p == 0) {
    if (y.y(2) % p == 0)
      throw std::invalid_argument("odd_bad_density: p divides two coordinates");
    s = (i64)((u128)y.y(0) * y.y(2) % p);
  } else if (y.y(2) % p == 0) {
    s = -(i64)((u128)y.y(0) * y.y(1) % p);
  } else {
    throw std::invalid_argument("odd_bad_density: p does not divide y0 y1 y2");
  }
  return Rat((long long)p - 1, (long long)p) * Rat(1 + jacobi(s, p));
}

Rat brute_density(u64 p, int r, const ConicShape& y) {
  if (!is_prime_u64(p)) throw std::invalid_argument("brute_density: p must be prime");
  if (r < 1) throw std::invalid_argument("brute_density: r must be >= 1");
  u64 m = 1;
  for (int i = 0; i < r; ++i) {
    m *= p;
    if (m > 512) throw BudgetExceeded("brute_density: p^r exceeds 512");
  }
  std::vector<int> val(m, r);   // v_p capped at r; val[0] stays r
  for (u64 x = 1; x < m; ++x) {
    u64 t = x;
    int v = 0;
    while (t % p == 0) { t /= p; ++v; }
    val[x] = v;
  }
  std::vector<u64> sq(m);
  for (u64 x = 0; x < m; ++x) sq[x] = x * x % m;

  u64 c[3];
  int vy[3];
  for (int i = 0; i < 3; ++i) {
    u64 yi = y.y(i) % m;
    c[i] = (u128)yi * yi % m * yi % m;
    vy[i] = (y.y(i) % p == 0) ? 1 : 0;   // squarefree: v_p(y_i) <= 1
  }

  // histograms over t = c2 * x2^2 mod m, split by whether x2 y2 is a unit
  std::vector<u64> cnt_all(m, 0), cnt_unit(m, 0);
  for (u64 x2 = 0; x2 < m; ++x2) {
    u64 t = (u128)c[2] * sq[x2] % m;
    ++cnt_all[t];
    if (val[x2] + vy[2] == 0) ++cnt_unit[t];
  }
  u64 total = 0;
  for (u64 x0 = 0; x0 < m; ++x0) {
    u64 a = (u128)c[0] * sq[x0] % m;
    bool u0 = (val[x0] + vy[0] == 0);
    for (u64 x1 = 0; x1 < m; ++x1) {
      u64 t = a + (u128)c[1] * sq[x1] % m;
      if (t >= m) t -= m;
      if (u0 || val[x1] + vy[1] == 0)
        total += cnt_all[t];
      else
        total += cnt_unit[t];
    }
  }
  u64 norm = 1;
  for (int i = 0; i < 2 * r; ++i) norm *= p;
  return Rat((long long)total, (long long)norm);
}

Rat good_density(u64 p, const ConicShape& y) {
  if (!is_prime_u64(p)) throw std::invalid_argument("good_density: p must be prime");
  if (p == 2 || y.product() % p == 0)
    throw std::invalid_argument("good_density: p must not divide 2 y0 y1 y2");
  return Rat((long long)p + 1, (long long)p);
}

u64 count_conic_points_mod_p(u64 p, const ConicShape& y) {
  if (!is_prime_u64(p)) throw std::invalid_argument("count_conic_points_mod_p: p must be prime");
  if (p == 2 || y.product() % p == 0)
    throw std::invalid_argument("count_conic_points_mod_p: p must not divide 2 y0 y1 y2");
  if (p > 10000) throw BudgetExceeded("count_conic_points_mod_p: p exceeds 1e4");

  std::vector<u32> scnt(p, 0);   // scnt[t] = #{x in F_p : x^2 = t}
  for (u64 x = 0; x < p; ++x) ++scnt[x * x % p];
  u64 c[3];
  for (int i = 0; i < 3; ++i) {
    u64 yi = y.y(i) % p;
    c[i] = (u128)yi * yi % p * yi % p;
  }
  u64 inv2 = powmod(c[2], p - 2, p);
  u64 total = 0;   // affine solutions in F_p^3, including the origin
  for (u64 x0 = 0; x0 < p; ++x0) {
    u64 a = (u128)c[0] * (x0 * x0 % p) % p;
    for (u64 x1 = 0; x1 < p; ++x1) {
      u64 t = (a + (u128)c[1] * (x1 * x1 % p)) % p;
      total += scnt[(u128)t * inv2 % p];
    }
  }
  return (total - 1) / (p - 1);
}

double infinite_density(const ConicShape& y) {
  double prod = (double)y.product();
  return std::numbers::pi / (prod * std::sqrt(prod));
}

double odd_symbol_product(const ConicShape& y) {
  double acc = 1.0;
  for (int i = 0; i < 3; ++i) {
    FactoredInteger f = factor_trial(y.y(i));
    for (u64 p : f.primes) {
      if (p == 2) continue;
      i64 s;
      if (i == 0)
        s = (i64)((u128)y.y(1) * y.y(2) % p);
      else if (i == 1)
        s = (i64)((u128)y.y(0) * y.y(2) % p);
      else
        s = -(i64)((u128)y.y(0) * y.y(1) % p);
      acc *= (1.0 + jacobi(s, p)) / (1.0 + 1.0 / (double)p);
    }
  }
  return acc;
}

double tamagawa(const ConicShape& y) {
  double prod = (double)y.product();
  return 8.0 / std::numbers::pi * sigma2(y) * odd_symbol_product(y) /
         (prod * std::sqrt(prod));
}

double component_tamagawa(const ConicShape& y, u32 prime_cutoff) {
  if (prime_cutoff < 1000)
    throw std::invalid_argument("component_tamagawa: prime cutoff must be >= 1000");
  u64 prod = y.product();
  FactoredInteger f = factor_trial(prod);

  // L-factor: prod over p | 2 y0 y1 y2 of (1 - 1/p); p = 2 always included
  double L = 0.5;
  for (u64 p : f.primes)
    if (p != 2) L *= 1.0 - 1.0 / (double)p;

  // truncated good-place product with closed-form completion:
  // prod_{p<=P, p good} (1 - 1/p^2) * (8/pi^2) / prod_{2<p<=P} (1 - 1/p^2)
  std::vector<u8> composite(prime_cutoff + 1, 0);
  double good_trunc = 1.0, all_odd_trunc = 1.0;
  for (u64 q = 2; q <= prime_cutoff; ++q) {
    if (composite[q]) continue;
    for (u64 v = q * q; v <= prime_cutoff; v += q) composite[v] = 1;
    if (q == 2) continue;
    double factor = 1.0 - 1.0 / ((double)q * (double)q);
    all_odd_trunc *= factor;
    if (prod % q != 0) good_trunc *= factor;
  }
  double pi2 = std::numbers::pi * std::numbers::pi;
  double good = good_trunc * (8.0 / pi2) / all_odd_trunc;

  // bad places from the brute-force counts: (1 - 1/p)^{-1} N*/p^{2r}
  double bad = boost::rational_cast<double>(brute_density(2, 3, y)) / 0.5;
  for (u64 p : f.primes) {
    if (p == 2) continue;
    bad *= boost::rational_cast<double>(brute_density(p, 1, y)) /
           (1.0 - 1.0 / (double)p);
  }
  return L * good * bad * infinite_density(y);
}

double peyre_constant(const ConicShape& y) { return 0.5 * tamagawa(y); }

u64 conic_count(const ConicShape& y, u64 H, const ConicCountOptions& opt) {
  if (H > 3037000499ULL)
    throw std::invalid_argument("conic_count: height bound too large");
  u64 H2 = H * H;
  u64 c[3], amax[3];
  for (int i = 0; i < 3; ++i) {
    u64 yi = y.y(i);
    if ((u128)yi * yi * yi > H2) {
      c[i] = 0;
      amax[i] = 0;
    } else {
      c[i] = yi * yi * yi;
      amax[i] = isqrt64(H2 / c[i]);
      while (amax[i] > 0 && (u128)amax[i] * amax[i] * c[i] > H2) --amax[i];
    }
  }
  if (c[0] == 0 || c[1] == 0 || c[2] == 0) return 0;
  if ((u128)(amax[0] + 1) * (amax[1] + 1) > opt.budget)
    throw BudgetExceeded("conic_count: candidate pairs exceed budget");

  u64 total = 0;
  for (u64 a0 = 0; a0 <= amax[0]; ++a0) {
    u64 t0 = a0 * a0 * c[0];
    for (u64 a1 = 0; a1 <= amax[1]; ++a1) {
      u64 s = t0 + a1 * a1 * c[1];
      if (s > H2) break;
      if (s == 0) continue;
      if (s % c[2] != 0) continue;
      u64 a2;
      if (!is_perfect_square(s / c[2], a2)) continue;
      int nz = (a0 > 0) + (a1 > 0) + (a2 > 0);
      if (!opt.include_zero_coords && nz < 3) continue;
      if (std::gcd(std::gcd(a0, a1), a2) != 1) continue;
      if (std::gcd(std::gcd(a0 * y.y(0), a1 * y.y(1)), a2 * y.y(2)) != 1) continue;
      total += 1ULL << (nz - 1);
    }
  }
  return total;
}

}  // namespace sqf
