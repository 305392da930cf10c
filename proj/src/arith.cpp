#include "sqfsum/arith.hpp"

#include <iostream>

namespace sqf {

SpfSieve::SpfSieve(u32 limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("SpfSieve: limit must be >= 2");
  spf_.assign(static_cast<size_t>(limit) + 1, 0);
  primes_.reserve(static_cast<size_t>(
      limit / std::log(std::max<double>(3.0, limit)) * 1.2));
  for (u32 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (u32 p : primes_) {
      u64 v = (u64)p * i;
      if (p > spf_[i] || v > limit) break;
      spf_[v] = p;
    }
  }
}

u32 SpfSieve::spf(u64 n) const {
  if (n < 2 || n > limit_) throw std::out_of_range("SpfSieve::spf: n outside [2, limit]");
  return spf_[n];
}

FactoredInteger factor(u64 n, const SpfSieve& sieve) {
  if (n < 1) throw std::invalid_argument("factor: n must be positive");
  if (n > sieve.limit()) throw std::out_of_range("factor: n exceeds sieve limit");
  FactoredInteger f;
  f.value = n;
  while (n > 1) {
    u64 p = sieve.spf(n);
    f.primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  return f;
}

FactoredInteger factor_trial(u64 n) {
  if (n < 1) throw std::invalid_argument("factor_trial: n must be positive");
  FactoredInteger f;
  f.value = n;
  for (u64 d = 2; (u128)d * d <= n; ++d) {
    if (n % d == 0) {
      f.primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.primes.push_back(n);
  return f;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

int mobius(const FactoredInteger& n) {
  for (u64 p : n.primes) {
    if ((n.value / p) % p == 0) return 0;
  }
  return (n.primes.size() & 1) ? -1 : 1;
}

int jacobi(i64 a, u64 n) {
  // n odd positive assumed
  u64 ua = (u64)(((i128)a % (i128)n + (i128)n) % (i128)n);
  if (n == 1) return 1;
  if (ua == 0) return 0;
  int result = 1;
  while (ua != 0) {
    while ((ua & 1) == 0) {
      ua >>= 1;
      u64 r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(ua, n);
    if ((ua & 3) == 3 && (n & 3) == 3) result = -result;
    ua %= n;
  }
  return n == 1 ? result : 0;
}

int legendre(i64 a, u64 p) {
  if (p < 3 || (p & 1) == 0 || !is_prime_u64(p))
    throw std::invalid_argument("legendre: p must be an odd prime");
  return jacobi(a, p);
}

int star_symbol(i64 a, const FactoredInteger& b) {
  if ((b.value & 1) == 0)
    throw std::invalid_argument("star_symbol: b must be odd");
  u128 prod = 1;
  for (u64 p : b.primes) prod *= p;
  if (prod != b.value)
    throw std::invalid_argument("star_symbol: b must be squarefree");
  for (u64 p : b.primes) {
    int s = jacobi(a, p);
    if (s == 0) {
      std::cerr << "star_symbol: gcd(a, b) > 1 (a = " << a << ", p = " << p
                << ")\n";
      return 0;
    }
    if (s != 1) return 0;
  }
  return 1;
}

Rat gamma_factor(const FactoredInteger& n) {
  Rat g(1);
  for (u64 p : n.primes) g *= Rat((long long)p, (long long)p + 1);
  return g;
}

}  // namespace sqf
