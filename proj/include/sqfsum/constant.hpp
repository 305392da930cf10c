#pragma once

// The leading-constant series
//
//   c = (1/pi) * sum over odd squarefree d of
//         gamma(d) 2^{omega(d)} d^{-3/2} (Delta_-1(d) + (2 Delta_0(d) + Delta_2(d)) / sqrt 2)
//
// obtained by grouping the y-sum of quarter Peyre constants by the odd part
// d of y0 y1 y2.  Delta_-1 counts the all-odd factorizations d = y0 y1 y2
// passing the 2-adic and odd-place solubility conditions; Delta_0 the
// factorizations whose even coordinate sits in slot 0 (equal, by the x0/x1
// symmetry of the conic, to the slot-1 count); Delta_2 the slot-2 ones,
// which satisfy a different mod-8 condition because the even coordinate then
// multiplies the isolated side of the equation.  Reference limit:
// 2.677539267.

#include "sqfsum/arith.hpp"
#include "sqfsum/common.hpp"

namespace sqf {

inline constexpr double kReferenceConstant = 2.677539267;

// Ordered factorizations d = y0 y1 y2 with not{y0 = y1 = -y2 mod 4} and
// (y1y2/y0)_* = (y0y2/y1)_* = (-y0y1/y2)_* = 1.  d must be odd squarefree.
u64 delta_minus1(const FactoredInteger& d);

// Factorizations d = y0' y1 y2 with y1 = y2 mod 8 and
// (y1y2/y0')_* = (2y0'y2/y1)_* = (-2y0'y1/y2)_* = 1.
u64 delta_0(const FactoredInteger& d);

// Factorizations d = y0 y1 y2' with y0 = -y1 mod 8 and
// (2y1y2'/y0)_* = (2y0y2'/y1)_* = (-y0y1/y2')_* = 1.
u64 delta_2(const FactoredInteger& d);

struct DeltaCounts {
  u64 minus1 = 0;
  u64 zero = 0;
  u64 two = 0;
};

// All three counters in one pass over the 3^omega prime-to-slot assignments.
DeltaCounts delta_counts(const FactoredInteger& d);

struct ConstantEstimate {
  u64 cutoff = 0;
  double partial = 0;      // sum over odd squarefree d <= cutoff
  double tail_bound = 0;   // rigorous upper bound on the discarded mass
  double bracket_lo() const { return partial; }
  double bracket_hi() const { return partial + tail_bound; }
  bool contains(double c) const { return partial <= c && c <= bracket_hi(); }
};

// Partial sum in increasing d with compensated accumulation, plus the tail
// bound below.  The sieve must cover D (D <= 1e8).
ConstantEstimate constant_partial(u32 D, int threads = 1);

// Independent oracle: the same truncation computed as the direct y-sum
// sum over y with odd part of y0 y1 y2 <= D of (1/4) peyre_constant(y),
// delegating all local data to the localdensity module.  Agrees with
// constant_partial(D).partial to ~1e-13.
double constant_via_y(u32 D);

// Upper bound on the mass discarded at cutoff D.  Chain of over-estimates:
//   per-d coefficient <= (1 + 3/sqrt 2) 3^{omega(d)},  gamma <= 1,
//   exact partial sum of (1+3/sqrt2)/pi * 6^{omega} d^{-3/2} on (D, W],
//     W = max(10 D, 1e6),
//   Rankin beyond W:  d^{-3/2} <= W^{-1/4} d^{-5/4}, so the remainder is at
//     most W^{-1/4} prod_{p>2} (1 + 6 p^{-5/4}); the product is evaluated
//     over p <= 1e7 and completed with exp(12 (1e7-2)^{-1/4}) via an
//     odd-integer comparison of the log tail.
// Every step only over-estimates.
double tail_bound(u32 D);

}  // namespace sqf
