#pragma once

// Multiplicative-function primitives shared by the other modules: a
// smallest-prime-factor sieve, Mobius and squarefree tests, Legendre/Jacobi
// symbols, the star symbol (a/b)_* and the gamma factor prod_{p|n} p/(p+1).

#include <vector>

#include <boost/rational.hpp>

#include "sqfsum/common.hpp"

namespace sqf {

using Rat = boost::rational<long long>;

// Smallest-prime-factor table for [2, limit].  Linear sieve, O(limit) memory
// (4 bytes/entry; keep limit <= 1e8 unless you have the RAM for more).
// Immutable after construction; safe to share across threads.
class SpfSieve {
 public:
  explicit SpfSieve(u32 limit);

  u32 limit() const { return limit_; }
  u32 spf(u64 n) const;                                // least prime factor
  const std::vector<u32>& primes() const { return primes_; }

 private:
  u32 limit_;
  std::vector<u32> spf_;
  std::vector<u32> primes_;
};

// An integer together with its distinct prime divisors in increasing order.
struct FactoredInteger {
  u64 value = 1;
  std::vector<u64> primes;

  u64 omega() const { return primes.size(); }
};

FactoredInteger factor(u64 n, const SpfSieve& sieve);
FactoredInteger factor_trial(u64 n);   // no sieve; trial division

bool is_prime_u64(u64 n);              // deterministic Miller-Rabin

int mobius(const FactoredInteger& n);

// Jacobi symbol (a/n) for odd n >= 1; no validation of n.
int jacobi(i64 a, u64 n);

// Legendre symbol; throws std::invalid_argument unless p is an odd prime.
int legendre(i64 a, u64 p);

// (a/b)_* = 1 iff (a/p) = 1 for every p | b; 1 when b = 1.  Requires b odd
// and squarefree.  gcd(a, b) > 1 yields 0 with a diagnostic on stderr.
int star_symbol(i64 a, const FactoredInteger& b);

// gamma(n) = prod_{p|n} (1 + 1/p)^{-1}, exact.
Rat gamma_factor(const FactoredInteger& n);

}  // namespace sqf
