#pragma once

// Exact counts of primitive ordered triples (x, y, z) of squareful numbers
// with x + y = z and x, y, z <= B, their dyadic-box refinement, and uniform
// point counts on diagonal ternary forms.

#include <array>
#include <span>
#include <vector>

#include "sqfsum/common.hpp"

namespace sqf {

inline constexpr u64 kDefaultEnumBudget = 1'000'000'000ULL;

// Ordered primitive triples: (x, y, z) and (y, x, z) count separately.
// Primitivity is gcd(x, y) = 1 (equivalent to gcd(x, y, z) = 1 as z = x + y).
u64 count_triples(u64 B, int threads = 1);

// Same, reusing a prepared sorted squareful list (values > B are ignored).
u64 count_triples(std::span<const u64> squareful_sorted, u64 B,
                  int threads = 1);

struct TripleCountRecord {
  u64 bound = 0;
  u64 count = 0;
  double ratio = 0;   // count / (c_ref * sqrt(bound))
};

TripleCountRecord make_record(u64 bound, u64 count, double c_ref);

// Dyadic box: coordinate ranges [2^e, 2^{e+1}) for x_i and y_i.  Exponent
// -1 encodes the endpoint 1/2 whose integer range is empty.
struct DyadicBox {
  std::array<int, 3> x_exp{0, 0, 0};
  std::array<int, 3> y_exp{0, 0, 0};

  bool admissible(u64 B) const;   // X_i^2 Y_i^3 <= B for all i
};

// Solutions of x0^2 y0^3 + x1^2 y1^3 = x2^2 y2^3 inside the box with
// mu^2(y0 y1 y2) = 1, gcd(x0 y0, x1 y1, x2 y2) = 1 and all x_i^2 y_i^3 <= B.
// Intended for desk-scale boxes; refuses when the candidate space exceeds
// the budget.
u64 count_triples_boxed(const DyadicBox& box, u64 B,
                        u64 budget = kDefaultEnumBudget);

// All admissible boxes with nonempty integer ranges for a given B; summing
// count_triples_boxed over them partitions count_triples(B).
std::vector<DyadicBox> admissible_boxes(u64 B);

// Solutions of c1 z1^d + c2 z2^d + c3 z3^d = 0 with gcd(z1,z2,z3) = 1,
// 0 < |z_i| <= Z_i, counted up to the global sign z ~ -z.  Requires d in
// {2, 3}, c1 c2 c3 != 0 and pairwise coprime c_i.
u64 count_ternary_points(std::array<i64, 3> c, int d, std::array<u64, 3> Z,
                         u64 budget = kDefaultEnumBudget);

struct TernarySample {
  std::array<i64, 3> c{1, 1, -1};
  int d = 2;
  std::array<u64, 3> Z{1, 1, 1};
};

struct BoundRatioRow {
  TernarySample sample;
  u64 count = 0;
  double normalizer = 1;   // (1 + Z1 Z2 Z3 / |c1 c2 c3|^{2/d})^{1/3} * d^{omega+1}
  double ratio = 0;
};

struct BoundRatioReport {
  std::vector<BoundRatioRow> rows;
  double max_ratio = 0;
};

// Diagnostic: the counts above divided by the uniform-bound normalizer.
// The extra power of d in the normalizer absorbs the d-dependent constant
// of the bound; the report calibrates, it does not prove.
BoundRatioReport bound_ratio_report(std::span<const TernarySample> samples,
                                    u64 budget = kDefaultEnumBudget);

}  // namespace sqf
