#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "agcolor/bounds.hpp"
#include "agcolor/coloring.hpp"
#include "support.hpp"

using namespace agcolor;
using testing_support::ipow;

namespace {

using U128 = unsigned __int128;

// Largest t with t^2 - (q^2+1)t - q^2 L (q^{n-1}-q)/(q-1) <= 0, where L is the
// line count. This is the counting inequality before it is solved for t.
std::uint64_t upper_by_search(int n, std::uint64_t q) {
  const U128 lines = U128(ipow(q, n - 1)) * ((ipow(q, n) - 1) / (q - 1));
  const U128 c = U128(q * q) * lines * ((ipow(q, n - 1) - q) / (q - 1));
  auto ok = [&](U128 t) { return t * t <= (q * q + 1) * t + c; };
  std::uint64_t lo = 1, hi = 1;
  while (ok(hi)) hi *= 2;
  while (hi - lo > 1) {
    const auto mid = lo + (hi - lo) / 2;
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

// Largest t with 2t - (q^2+1) <= sqrt(v) r, r = 2(v-1)/(q-1) - (q+1).
std::uint64_t simplified_by_search(int n, std::uint64_t q) {
  const U128 v = ipow(q, n);
  const U128 r = 2 * (v - 1) / (q - 1) - (q + 1);
  auto ok = [&](U128 t) {
    if (2 * t <= q * q + 1) return true;
    const U128 lhs = 2 * t - (q * q + 1);
    return lhs * lhs <= v * r * r;
  };
  std::uint64_t t = 1;
  while (ok(t + 1)) ++t;
  return t;
}

std::uint64_t to_u64(const BigInt& x) { return x.convert_to<std::uint64_t>(); }

}  // namespace

TEST_CASE("integer square root") {
  for (std::uint64_t x = 0; x < 2000; ++x) {
    const auto r = to_u64(isqrt(BigInt(x)));
    REQUIRE(r * r <= x);
    REQUIRE((r + 1) * (r + 1) > x);
  }
  const BigInt big = BigInt(1) << 200;
  CHECK(isqrt(big) == BigInt(1) << 100);
  CHECK(isqrt(big - 1) == (BigInt(1) << 100) - 1);
  CHECK_THROWS_AS(isqrt(BigInt(-1)), std::domain_error);
}

TEST_CASE("chromatic index") {
  CHECK(chromatic_index(2, 3) == 4);
  CHECK(chromatic_index(3, 2) == 7);
  for (std::uint64_t q : {2, 4, 5}) CHECK(chromatic_index(2, q) == q + 1);
  for (int n : {2, 3, 4})
    for (std::uint32_t q : {2u, 3u})
      CHECK(chromatic_index(n, q) == chromatic_parallel(n, field_of_order(q)).classes.size());
  CHECK(line_count(2, 3) == 12);
  CHECK(line_count(4, 3) == 1080);
  CHECK_THROWS_AS(chromatic_index(2, 6), std::invalid_argument);
}

TEST_CASE("upper bound examples") {
  CHECK(psi_upper(3, 2).exact == 17);
  CHECK(psi_upper(4, 2).exact == 56);
  CHECK(psi_upper(2, 3).exact == 8);
  CHECK(psi_upper(2, 2).simplified == 4);
  CHECK_THROWS_AS(psi_upper(1, 2), std::invalid_argument);
}

TEST_CASE("upper bound agrees with the unsolved inequality") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int n = 3; n <= 6; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      const auto up = psi_upper(n, q);
      REQUIRE(to_u64(up.exact) == upper_by_search(n, q));
      REQUIRE(to_u64(up.simplified) == simplified_by_search(n, q));
      CHECK(up.exact <= up.simplified);
    }
  }
}

TEST_CASE("plane values") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto lb = lower_bounds(2, q);
    CHECK(lb.exact);
    CHECK(*lb.psi == (q + 1) * (q + 1) / 2);
    CHECK(*lb.alpha == q + 1);
  }
  CHECK(*lower_bounds(2, 3).psi == 8);
  CHECK(*lower_bounds(2, 3).alpha == 4);
  CHECK(*lower_bounds(2, 2).psi == 4);
}

TEST_CASE("lower bound examples") {
  const auto b42 = lower_bounds(4, 2);
  CHECK(*b42.psi == 29);
  CHECK(*b42.alpha == 24);
  CHECK(*b42.epsilon == 2);
  const auto b32 = lower_bounds(3, 2);
  CHECK(*b32.alpha == 10);
  CHECK(*b32.psi_general == 9);
  CHECK(*b32.psi == 10);
  CHECK(*lower_bounds(5, 2).psi == 81);
  CHECK(*lower_bounds(4, 3).psi == 180);
  CHECK(*lower_bounds(4, 3).alpha == 136);
  CHECK_FALSE(lower_bounds(5, 2).alpha.has_value());
}

TEST_CASE("odd-dimension bound specializes to q^3 + 1 in dimension three") {
  for (std::uint64_t q : {2, 3, 4, 5, 7}) CHECK(*lower_bounds(3, q).psi_general == q * q * q + 1);
  // The achromatic bound only beats q^3 + 1 at q = 2; the larger one is kept.
  CHECK(*lower_bounds(3, 2).psi == 10);
  for (std::uint64_t q : {3, 4, 5, 7}) CHECK(*lower_bounds(3, q).psi == q * q * q + 1);
}

TEST_CASE("bounds match constructed class counts") {
  const Field f2 = field_of_order(2), f3 = field_of_order(3);
  CHECK(*lower_bounds(4, 2).psi_general == even_pseudo(2, f2).classes.size());
  CHECK(*lower_bounds(4, 3).psi_general == even_pseudo(2, f3).classes.size());
  CHECK(*lower_bounds(4, 2).alpha == even_achromatic(2, f2).classes.size());
  CHECK(*lower_bounds(3, 3).psi_general == odd_pseudo(1, f3).classes.size());
  CHECK(*lower_bounds(3, 3).alpha == ag3_achromatic(f3).classes.size());
  CHECK(*lower_bounds(2, 5).psi == plane_pseudo(field_of_order(5)).classes.size());
}

TEST_CASE("table rows are consistent and ordered") {
  const auto rows = bounds_table({2, 3, 4, 5}, {2, 3});
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].q == 2);
  CHECK(rows[0].n == 2);
  CHECK(rows[4].q == 3);
  for (const auto& r : rows) {
    CHECK(r.consistent());
    CHECK(r.plane_exact_psi.has_value() == (r.n == 2));
  }
  CHECK(bounds_csv_line(rows[1]) == "3,2,8,28,7,10,10,17,18,,");
  CHECK(bounds_csv_line(rows[0]) == "2,2,4,6,3,4,3,4,4,4,3");

  // A wider sweep: every lower bound stays below the upper bound.
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
    for (int n = 2; n <= 8; ++n) CHECK(bounds_row(n, q).consistent());
  CHECK_THROWS_AS(bounds_row(3, 10), std::invalid_argument);
}

TEST_CASE("even-dimension ratio falls toward one half") {
  for (std::uint64_t q : {2, 3}) {
    BigInt prev_num = 1, prev_den = 1;
    for (int n = 4; n <= 12; n += 2) {
      const auto row = bounds_row(n, q);
      const BigInt num = *row.psi_lower, den = row.psi_upper_exact;
      CHECK(2 * num > den);
      if (n > 4) CHECK(num * prev_den < prev_num * den);
      prev_num = num;
      prev_den = den;
    }
  }
}

TEST_CASE("csv header names the columns") {
  std::istringstream in(bounds_csv_header());
  std::string cell;
  std::vector<std::string> cols;
  while (std::getline(in, cell, ',')) cols.push_back(cell);
  CHECK(cols.size() == 11);
  CHECK(cols.front() == "n");
  CHECK(cols.back() == "plane_exact_alpha");
}
