#pragma once

// Per-conic local computations for C_y: x0^2 y0^3 + x1^2 y1^3 = x2^2 y2^3
// with y = (y0, y1, y2) squarefree-product.  Densities at good, bad and
// infinite places, their brute-force oracles, the assembled Tamagawa volume
// of the min_i v_p(x_i y_i) = 0 adelic subset, and direct point counts.

#include <array>
#include <optional>

#include "sqfsum/arith.hpp"
#include "sqfsum/common.hpp"

namespace sqf {

// A triple y with mu^2(y0 y1 y2) = 1 (each y_i squarefree, pairwise coprime).
class ConicShape {
 public:
  ConicShape(u64 y0, u64 y1, u64 y2);
  explicit ConicShape(const std::array<u64, 3>& y)
      : ConicShape(y[0], y[1], y[2]) {}

  u64 y(int i) const { return y_[static_cast<unsigned>(i)]; }
  const std::array<u64, 3>& ys() const { return y_; }
  u64 product() const { return y_[0] * y_[1] * y_[2]; }

 private:
  std::array<u64, 3> y_;
};

// One place's density: exact rational at finite places, float at infinity.
// Values are the per-place measures; the convergence factors appear only in
// the tamagawa assembly.
struct LocalDensityValue {
  std::optional<u64> place;   // nullopt marks the infinite place
  std::optional<Rat> exact;   // present exactly when place is finite
  double value = 0;
};

// Dispatches to sigma2 / odd_bad_density / good_density / infinite_density.
LocalDensityValue local_density(const ConicShape& y, std::optional<u64> place);

// Stabilized 2-adic density N*_y(2^r)/2^{2r} for r >= 3: 0, 1 or 2 by the
// congruence class of y.
int sigma2(const ConicShape& y);

// (1 - 1/p)(1 + (s/p)) for odd p | y0 y1 y2, with s = y1 y2, y0 y2 or
// -y0 y1 according to which coordinate p divides.
Rat odd_bad_density(u64 p, const ConicShape& y);

// Exact N*_y(p^r)/p^{2r} by exhaustive enumeration modulo p^r; the oracle
// for sigma2 (p = 2, r >= 3) and odd_bad_density (r >= 1).  Requires
// p^r <= 512.
Rat brute_density(u64 p, int r, const ConicShape& y);

// (p + 1)/p for p not dividing 2 y0 y1 y2.
Rat good_density(u64 p, const ConicShape& y);

// #C_y(F_p) by projective enumeration, for good p <= 1e4.
u64 count_conic_points_mod_p(u64 p, const ConicShape& y);

// pi / (y0 y1 y2)^{3/2}.
double infinite_density(const ConicShape& y);

// prod over odd p | y0 y1 y2 of (1 + (s_p/p)) / (1 + 1/p).
double odd_symbol_product(const ConicShape& y);

// Closed form of the Tamagawa volume:
//   (y0 y1 y2)^{-3/2} * (8/pi) * sigma2(y) * odd_symbol_product(y).
double tamagawa(const ConicShape& y);

// Rebuilds the same value from parts -- L-factor prod_{p | 2 y0y1y2}(1-1/p),
// good-place product truncated at prime_cutoff with its 8/pi^2 completion,
// brute-force bad-place factors (1-1/p)^{-1} N*/p^{2r}, and the infinite
// density -- as an independent cross-check.  prime_cutoff >= 1000.
double component_tamagawa(const ConicShape& y, u32 prime_cutoff);

// alpha * tamagawa with alpha = 1/2 (conics in P^2).
double peyre_constant(const ConicShape& y);

struct ConicCountOptions {
  bool include_zero_coords = false;
  u64 budget = 1'000'000'000ULL;   // candidate (x0, x1) pairs
};

// Projective points [x0, x1, x2] on C_y with primitive integer
// representative, max_i |x_i^2 y_i^3| <= H^2 and gcd(x0y0, x1y1, x2y2) = 1.
// Each projective point has exactly two primitive representatives +-x; a
// nonnegative solution with n nonzero coordinates accounts for 2^{n-1}
// points.
u64 conic_count(const ConicShape& y, u64 H, const ConicCountOptions& opt = {});

}  // namespace sqf
