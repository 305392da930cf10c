#include "sqfsum/constant.hpp"

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include <boost/rational.hpp>

#include "sqfsum/localdensity.hpp"

namespace sqf {

namespace {

void validate_odd_squarefree(const FactoredInteger& d, const char* who) {
  if ((d.value & 1) == 0)
    throw std::invalid_argument(std::string(who) + ": d must be odd");
  u128 prod = 1;
  for (u64 p : d.primes) prod *= p;
  if (prod != d.value)
    throw std::invalid_argument(std::string(who) + ": d must be squarefree");
}

struct Kahan {
  double sum = 0, c = 0;
  void add(double t) {
    double y = t - c;
    double s = sum + y;
    c = (s - sum) - y;
    sum = s;
  }
};

// Walks the 3^omega prime-to-slot assignments of d = y0 y1 y2 and evaluates
// the three counters.  Symbol arguments: for a prime p in slot i, the
// product of the other two slots is d / y_i.
DeltaCounts delta_counts_unchecked(const FactoredInteger& d) {
  const size_t k = d.primes.size();
  DeltaCounts out;
  std::vector<int> slot(k, 0);
  while (true) {
    u64 y[3] = {1, 1, 1};
    for (size_t t = 0; t < k; ++t) y[(size_t)slot[t]] *= d.primes[t];

    bool veto_m1 = (y[0] % 4 == y[1] % 4) && (y[1] % 4 == (4 - y[2] % 4) % 4);
    if (!veto_m1) {
      bool ok = true;
      for (size_t t = 0; t < k && ok; ++t) {
        u64 p = d.primes[t];
        i64 m = (i64)((d.value / y[(size_t)slot[t]]) % p);
        ok = jacobi(slot[t] == 2 ? -m : m, p) == 1;
      }
      if (ok) ++out.minus1;
    }
    if (y[1] % 8 == y[2] % 8) {
      bool ok = true;
      for (size_t t = 0; t < k && ok; ++t) {
        u64 p = d.primes[t];
        i64 m = (i64)((d.value / y[(size_t)slot[t]]) % p);
        if (slot[t] == 0)
          ok = jacobi(m, p) == 1;
        else if (slot[t] == 1)
          ok = jacobi(2 * m, p) == 1;
        else
          ok = jacobi(-2 * m, p) == 1;
      }
      if (ok) ++out.zero;
    }
    if ((y[0] + y[1]) % 8 == 0) {
      bool ok = true;
      for (size_t t = 0; t < k && ok; ++t) {
        u64 p = d.primes[t];
        i64 m = (i64)((d.value / y[(size_t)slot[t]]) % p);
        if (slot[t] == 2)
          ok = jacobi(-m, p) == 1;
        else
          ok = jacobi(2 * m, p) == 1;
      }
      if (ok) ++out.two;
    }

    size_t t = 0;
    while (t < k && slot[t] == 2) slot[t++] = 0;
    if (t == k) break;
    ++slot[t];
  }
  return out;
}

}  // namespace

DeltaCounts delta_counts(const FactoredInteger& d) {
  validate_odd_squarefree(d, "delta_counts");
  return delta_counts_unchecked(d);
}

u64 delta_minus1(const FactoredInteger& d) {
  validate_odd_squarefree(d, "delta_minus1");
  return delta_counts_unchecked(d).minus1;
}

u64 delta_0(const FactoredInteger& d) {
  validate_odd_squarefree(d, "delta_0");
  return delta_counts_unchecked(d).zero;
}

u64 delta_2(const FactoredInteger& d) {
  validate_odd_squarefree(d, "delta_2");
  return delta_counts_unchecked(d).two;
}

namespace {

// sum over odd squarefree d in [lo, hi] of the series terms, compensated
double partial_block(const SpfSieve& sieve, u64 lo, u64 hi) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Kahan acc;
  if (lo <= 1 && 1 <= hi) {
    // d = 1: gamma = 1, 2^omega = 1, Delta = (1, 1, 0)
    acc.add(1.0 + 2.0 * inv_sqrt2);
  }
  u64 start = std::max<u64>(3, lo | 1);
  for (u64 d = start; d <= hi; d += 2) {
    FactoredInteger f;
    f.value = d;
    u64 n = d;
    bool squarefree = true;
    while (n > 1) {
      u64 p = sieve.spf(n);
      f.primes.push_back(p);
      n /= p;
      if (n % p == 0) { squarefree = false; break; }
    }
    if (!squarefree) continue;
    DeltaCounts dc = delta_counts_unchecked(f);
    double coef = (double)dc.minus1 + (2.0 * (double)dc.zero + (double)dc.two) * inv_sqrt2;
    if (coef == 0.0) continue;
    double g = boost::rational_cast<double>(gamma_factor(f));
    double dd = (double)d;
    acc.add(g * (double)(1ULL << f.primes.size()) * coef / (dd * std::sqrt(dd)));
  }
  return acc.sum;
}

}  // namespace

ConstantEstimate constant_partial(u32 D, int threads) {
  if (D < 1) throw std::invalid_argument("constant_partial: cutoff must be >= 1");
  SpfSieve sieve(std::max<u32>(D, 2));
  int T = std::max(1, threads);
  Kahan total;
  if (T == 1 || D < 4096) {
    total.add(partial_block(sieve, 1, D));
  } else {
    std::vector<double> part((size_t)T, 0.0);
    std::vector<std::thread> workers;
    u64 width = (D + (u64)T - 1) / (u64)T;
    for (int w = 0; w < T; ++w) {
      u64 lo = 1 + (u64)w * width;
      u64 hi = std::min<u64>(D, lo + width - 1);
      workers.emplace_back([&part, &sieve, lo, hi, w]() {
        part[(size_t)w] = (lo <= hi) ? partial_block(sieve, lo, hi) : 0.0;
      });
    }
    for (auto& t : workers) t.join();
    for (double p : part) total.add(p);
  }
  ConstantEstimate est;
  est.cutoff = D;
  est.partial = total.sum / std::numbers::pi;
  est.tail_bound = tail_bound(D);
  return est;
}

double constant_via_y(u32 D) {
  if (D < 1) throw std::invalid_argument("constant_via_y: cutoff must be >= 1");
  SpfSieve sieve(std::max<u32>(D, 2));
  Kahan acc;
  for (u64 d = 1; d <= D; d += 2) {
    FactoredInteger f;
    f.value = d;
    u64 n = d;
    bool squarefree = true;
    while (n > 1) {
      u64 p = sieve.spf(n);
      f.primes.push_back(p);
      n /= p;
      if (n % p == 0) { squarefree = false; break; }
    }
    if (!squarefree) continue;
    const size_t k = f.primes.size();
    std::vector<int> slot(k, 0);
    while (true) {
      u64 y[3] = {1, 1, 1};
      for (size_t t = 0; t < k; ++t) y[(size_t)slot[t]] *= f.primes[t];
      acc.add(0.25 * peyre_constant(ConicShape(y[0], y[1], y[2])));
      acc.add(0.25 * peyre_constant(ConicShape(2 * y[0], y[1], y[2])));
      acc.add(0.25 * peyre_constant(ConicShape(y[0], 2 * y[1], y[2])));
      acc.add(0.25 * peyre_constant(ConicShape(y[0], y[1], 2 * y[2])));
      size_t t = 0;
      while (t < k && slot[t] == 2) slot[t++] = 0;
      if (t == k) break;
      ++slot[t];
    }
  }
  return acc.sum;
}

double tail_bound(u32 D) {
  if (D < 1) throw std::invalid_argument("tail_bound: cutoff must be >= 1");
  const u64 W = std::max<u64>(10ULL * D, 1'000'000ULL);
  if (W > 100'000'000ULL)
    throw std::invalid_argument("tail_bound: cutoff beyond supported range");

  // exact mass of (D, W]
  SpfSieve sieve((u32)W);
  Kahan s;
  for (u64 d = (u64)D + 1 + ((D + 1) % 2 == 0 ? 1 : 0); d <= W; d += 2) {
    u64 n = d;
    int omega = 0;
    bool squarefree = true;
    while (n > 1) {
      u64 p = sieve.spf(n);
      ++omega;
      n /= p;
      if (n % p == 0) { squarefree = false; break; }
    }
    if (!squarefree && d > 1) continue;
    double dd = (double)d;
    s.add(std::pow(6.0, omega) / (dd * std::sqrt(dd)));
  }

  // Rankin remainder beyond W: W^{-1/4} * prod_{p>2} (1 + 6 p^{-5/4}),
  // the product over p <= 1e7 plus an odd-integer bound on the log tail.
  static const double kLogOddProduct = []() {
    const u64 P0 = 10'000'000ULL;
    std::vector<bool> composite(P0 + 1, false);
    double logsum = 0.0;
    for (u64 q = 2; q <= P0; ++q) {
      if (composite[q]) continue;
      for (u64 v = q * q; v <= P0; v += q) composite[v] = true;
      if (q == 2) continue;
      logsum += std::log1p(6.0 * std::pow((double)q, -1.25));
    }
    return logsum + 12.0 * std::pow((double)P0 - 2.0, -0.25);
  }();
  double remainder = std::exp(kLogOddProduct) * std::pow((double)W, -0.25);

  const double pref = (1.0 + 3.0 / std::sqrt(2.0)) / std::numbers::pi;
  return pref * (s.sum + remainder) * (1.0 + 1e-9);
}

}  // namespace sqf
