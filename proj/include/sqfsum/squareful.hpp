#pragma once

// Squareful (2-powerful) numbers: recognition, the unique k = x^2 y^3
// decomposition with y squarefree, enumeration and counting up to a bound.

#include <optional>
#include <vector>

#include "sqfsum/common.hpp"

namespace sqf {

struct SquarefulRep {
  u64 x = 1;
  u64 y = 1;   // squarefree
  u64 k = 1;   // k == x^2 * y^3

  bool operator==(const SquarefulRep&) const = default;
};

// Every prime divisor of n divides it at least twice; true for n = 1.
bool is_squareful(u64 n);

// The unique (x, y) with y squarefree and k = x^2 y^3, when k is squareful.
std::optional<SquarefulRep> decompose(u64 k);

// All squareful k <= B, strictly increasing.  Generated from the (y, x)
// double loop, so memory is O(count) ~ O(sqrt B) rather than O(B).
// B above 2^63 - 1 -> std::out_of_range.
std::vector<u64> enumerate_squareful(u64 B);

struct SquarefulCensus {
  u64 count = 0;        // exact number of squareful k <= B
  double asymptotic = 0;  // c2 * sqrt(B), c2 = zeta(3/2)/zeta(3)
};

SquarefulCensus count_squareful(u64 B);

// c2 = zeta(3/2)/zeta(3) = 2.17325431251955414...
double powerful_density_constant();

}  // namespace sqf
