#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "sqfsum/counting.hpp"
#include "sqfsum/squareful.hpp"

using namespace sqf;

TEST_CASE("count_triples small values") {
  CHECK(count_triples(5) == 0);
  CHECK(count_triples(100) == 6);
  CHECK(count_triples(1000) == 38);
  CHECK(count_triples(10000) == 150);
}

TEST_CASE("count_triples equals the factor-everything oracle") {
  for (u32 B : {100u, 1000u, 5000u, 20000u})
    CHECK(count_triples(B) == oracle::brute_count_triples(B));
}

TEST_CASE("oracle equality at every bound up to 2000") {
  // solutions listed once at the top bound; prefix counts give every B
  const u32 top = 2000;
  oracle::SquarefulSieve s(top);
  std::vector<u32> list;
  for (u32 n = 1; n <= top; ++n)
    if (s.squareful[n]) list.push_back(n);
  std::vector<u64> prefix(top + 1, 0);   // prefix[z] = ordered solutions with sum <= z
  for (u32 z : list)
    for (u32 x : list) {
      if (x >= z) break;
      u32 y = z - x;
      if (s.squareful[y] && std::gcd(x, y) == 1) ++prefix[z];
    }
  for (u32 z = 1; z <= top; ++z) prefix[z] += prefix[z - 1];

  auto sq = enumerate_squareful(top);
  bool all_match = true;
  for (u32 B = 1; B <= top; ++B)
    all_match = all_match && (count_triples(sq, B) == prefix[B]);
  CHECK(all_match);
}

TEST_CASE("ordered convention: unordered recount doubled") {
  // every unordered solution {x, y}, x != y, contributes exactly two
  const u64 B = 100000;
  auto sq = enumerate_squareful(B);
  std::vector<char> member(B + 1, 0);
  for (u64 k : sq) member[k] = 1;
  u64 unordered = 0;
  for (u64 z : sq)
    for (u64 x : sq) {
      if (2 * x >= z) break;
      u64 y = z - x;
      if (member[y] && std::gcd(x, y) == 1) ++unordered;
    }
  CHECK(count_triples(sq, B) == 2 * unordered);
}

TEST_CASE("monotone in B and thread-count invariant") {
  u64 prev = 0;
  for (u64 B : {1000ULL, 10000ULL, 100000ULL}) {
    u64 n = count_triples(B);
    CHECK(n >= prev);
    prev = n;
  }
  auto sq = enumerate_squareful(2000000);
  CHECK(count_triples(sq, 2000000, 1) == count_triples(sq, 2000000, 4));
}

TEST_CASE("record format") {
  TripleCountRecord rec = make_record(100, 6, 2.677539267);
  CHECK(rec.ratio == doctest::Approx(0.2240863495).epsilon(1e-9));
}

TEST_CASE("dyadic boxes") {
  // endpoint 1/2: integer range empty
  DyadicBox half{{-1, -1, -1}, {-1, -1, -1}};
  CHECK(count_triples_boxed(half, 100) == 0);

  // X=(1,2,2), Y=(1,1,1): 1 + x1^2 = x2^2 has no solution in {2,3}^2
  DyadicBox b{{0, 1, 1}, {0, 0, 0}};
  CHECK(count_triples_boxed(b, 100) == 0);

  // the box holding 1 + 8 = 9, i.e. x = (1, 1, 3), y = (1, 2, 1)
  DyadicBox hit{{0, 0, 1}, {0, 1, 0}};
  CHECK(count_triples_boxed(hit, 100) == 1);

  CHECK_FALSE(DyadicBox{{30, 0, 0}, {0, 0, 0}}.admissible(100));
  CHECK(DyadicBox{{0, 0, 0}, {0, 0, 0}}.admissible(100));
  CHECK_THROWS_AS(count_triples_boxed(DyadicBox{{10, 10, 10}, {0, 0, 0}},
                                      (u64)1 << 62, 1000),
                  BudgetExceeded);
}

TEST_CASE("partition identity at B = 10^4") {
  const u64 B = 10000;
  u64 sum = 0;
  for (const DyadicBox& box : admissible_boxes(B)) sum += count_triples_boxed(box, B);
  CHECK(sum == count_triples(B));
}

TEST_CASE("bound beyond the 64-bit safe range rejected") {
  CHECK_THROWS_AS(count_triples((u64)1 << 63), std::out_of_range);
}

namespace {

// raw triple loop over sign classes: z1 > 0, z2 and z3 of either sign
u64 ternary_brute(std::array<i64, 3> c, int d, i64 Z) {
  u64 cnt = 0;
  auto powd = [d](i64 z) { return d == 2 ? z * z : z * z * z; };
  for (i64 z1 = 1; z1 <= Z; ++z1)
    for (i64 z2 = -Z; z2 <= Z; ++z2) {
      if (z2 == 0) continue;
      for (i64 z3 = -Z; z3 <= Z; ++z3) {
        if (z3 == 0) continue;
        if (c[0] * powd(z1) + c[1] * powd(z2) + c[2] * powd(z3) != 0) continue;
        if (std::gcd(std::gcd(z1, std::abs(z2)), std::abs(z3)) != 1) continue;
        ++cnt;
      }
    }
  return cnt;   // z1 > 0 picks one representative per sign class
}

}  // namespace

TEST_CASE("ternary point counts") {
  CHECK(count_ternary_points({1, 1, -1}, 2, {5, 5, 5}) == 8);
  CHECK(count_ternary_points({1, 1, 1}, 2, {5, 5, 5}) == 0);
  CHECK(count_ternary_points({1, 2, -3}, 3, {1, 1, 1}) == 1);
  CHECK(count_ternary_points({1, 1, -1}, 2, {25, 25, 25}) ==
        ternary_brute({1, 1, -1}, 2, 25));
  CHECK(count_ternary_points({2, 3, -5}, 2, {20, 20, 20}) ==
        ternary_brute({2, 3, -5}, 2, 20));
  CHECK(count_ternary_points({1, 2, -3}, 3, {8, 8, 8}) ==
        ternary_brute({1, 2, -3}, 3, 8));
  CHECK_THROWS_AS(count_ternary_points({0, 1, 1}, 2, {5, 5, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_ternary_points({2, 4, 1}, 2, {5, 5, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_ternary_points({1, 1, -1}, 4, {5, 5, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_ternary_points({1, 1, -1}, 2, {100000, 100000, 1}, 1000),
                  BudgetExceeded);
}

TEST_CASE("bound ratio report") {
  CHECK(bound_ratio_report({}).rows.empty());

  TernarySample s;
  s.c = {1, 1, -1};
  s.d = 2;
  s.Z = {5, 5, 5};
  auto report = bound_ratio_report(std::vector<TernarySample>{s});
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].count == 8);
  CHECK(report.rows[0].ratio == doctest::Approx(0.7978779741).epsilon(1e-9));
  CHECK(report.max_ratio == doctest::Approx(report.rows[0].ratio));
}
