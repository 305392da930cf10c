#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sqfsum/constant.hpp"
#include "sqfsum/localdensity.hpp"

using namespace sqf;

TEST_CASE("delta counters, small d") {
  CHECK(delta_minus1(factor_trial(1)) == 1);
  CHECK(delta_0(factor_trial(1)) == 1);
  CHECK(delta_2(factor_trial(1)) == 0);

  CHECK(delta_minus1(factor_trial(3)) == 2);
  CHECK(delta_0(factor_trial(3)) == 1);
  CHECK(delta_2(factor_trial(3)) == 0);

  CHECK(delta_minus1(factor_trial(5)) == 3);
  CHECK(delta_0(factor_trial(5)) == 1);

  CHECK(delta_minus1(factor_trial(7)) == 2);
  CHECK(delta_2(factor_trial(7)) == 2);
  CHECK(delta_minus1(factor_trial(15)) == 2);
  CHECK(delta_0(factor_trial(15)) == 1);
  CHECK(delta_2(factor_trial(15)) == 2);
  CHECK(delta_minus1(factor_trial(17)) == 3);
  CHECK(delta_0(factor_trial(17)) == 3);
  CHECK(delta_minus1(factor_trial(105)) == 6);
  CHECK(delta_0(factor_trial(105)) == 3);
  CHECK(delta_2(factor_trial(105)) == 0);
  CHECK(delta_minus1(factor_trial(1155)) == 8);
  CHECK(delta_0(factor_trial(1155)) == 3);
  CHECK(delta_2(factor_trial(1155)) == 2);

  CHECK_THROWS_AS(delta_minus1(factor_trial(6)), std::invalid_argument);
  CHECK_THROWS_AS(delta_0(factor_trial(9)), std::invalid_argument);
}

TEST_CASE("delta counters equal the divisor-loop oracles, d <= 2001") {
  for (u64 d = 1; d <= 2001; d += 2) {
    if (!oracle::squarefree(d)) continue;
    auto f = factor_trial(d);
    DeltaCounts dc = delta_counts(f);
    CHECK(dc.minus1 == oracle::delta_minus1(d));
    CHECK(dc.zero == oracle::delta_0(d));
    CHECK(dc.two == oracle::delta_2(d));
    u64 cap = 1;
    for (size_t i = 0; i < f.primes.size(); ++i) cap *= 3;
    CHECK(dc.minus1 <= cap);
    CHECK(dc.zero <= cap);
    CHECK(dc.two <= cap);
  }
}

TEST_CASE("partial sums at frozen checkpoints") {
  CHECK(constant_partial(1).partial ==
        doctest::Approx(0.768468044262343706).epsilon(1e-12));
  CHECK(constant_partial(3).partial ==
        doctest::Approx(1.08219380960855374).epsilon(1e-12));
  CHECK(constant_partial(15).partial ==
        doctest::Approx(1.61330219483129597).epsilon(1e-12));
  CHECK(constant_partial(100).partial ==
        doctest::Approx(2.09377787244627168).epsilon(1e-12));
  CHECK(constant_partial(1000).partial ==
        doctest::Approx(2.42026960617479852).epsilon(1e-12));
}

TEST_CASE("d = 1 group equals quarter Peyre constants over the four shapes") {
  double direct = 0.25 * (peyre_constant(ConicShape(1, 1, 1)) +
                          peyre_constant(ConicShape(2, 1, 1)) +
                          peyre_constant(ConicShape(1, 2, 1)) +
                          peyre_constant(ConicShape(1, 1, 2)));
  CHECK(constant_partial(1).partial == doctest::Approx(direct).epsilon(1e-14));
  // explicit closed form of the group: (1 + 2/sqrt 2)/pi
  CHECK(direct == doctest::Approx((1.0 + std::sqrt(2.0)) / std::numbers::pi)
                      .epsilon(1e-14));
}

TEST_CASE("rearrangement equals the direct y-sum") {
  for (u32 D : {1u, 3u, 15u, 100u, 500u}) {
    double a = constant_partial(D).partial;
    double b = constant_via_y(D);
    CHECK(std::abs(a - b) <= 1e-12);
  }
}

TEST_CASE("partial nondecreasing, below the reference constant") {
  double prev = 0;
  for (u32 D : {10u, 100u, 1000u, 5000u}) {
    double p = constant_partial(D).partial;
    CHECK(p >= prev);
    CHECK(p < 2.677539268);
    prev = p;
  }
}

TEST_CASE("threads do not change the partial beyond 1e-12") {
  double a = constant_partial(5000, 1).partial;
  double b = constant_partial(5000, 4).partial;
  CHECK(std::abs(a - b) <= 1e-12);
}

TEST_CASE("tail bound: nonnegative, monotone, brackets the reference") {
  double t100 = tail_bound(100);
  double t1000 = tail_bound(1000);
  double t10000 = tail_bound(10000);
  CHECK(t100 >= 0);
  CHECK(t100 >= t1000);
  CHECK(t1000 >= t10000);

  for (u32 D : {1000u, 10000u}) {
    ConstantEstimate est = constant_partial(D);
    CHECK(est.contains(kReferenceConstant));
  }
}
