#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "agcolor/coloring.hpp"
#include "agcolor/structures.hpp"
#include "agcolor/verify.hpp"
#include "support.hpp"

using namespace agcolor;
using testing_support::brute_complete;
using testing_support::brute_proper;
using testing_support::ipow;

namespace {

std::map<std::size_t, std::size_t> census(const Coloring& c) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& cls : c.classes) ++out[cls.lines.size()];
  return out;
}

void check_partition_and_trace(const Coloring& c) {
  std::vector<int> uses(c.space->line_count(), 0);
  std::set<std::string> ids;
  for (const auto& cls : c.classes) {
    REQUIRE_FALSE(cls.lines.empty());
    ids.insert(cls.id);
    for (auto l : cls.lines) ++uses.at(l);
    REQUIRE(c.trace.at("provenance").contains(cls.id));
  }
  CHECK(ids.size() == c.classes.size());
  CHECK(c.trace.at("provenance").size() == c.classes.size());
  for (auto u : uses) REQUIRE(u == 1);
}

// Closed forms, written out independently of the bounds module.
std::uint64_t even_pseudo_count(int k, std::uint32_t q) {
  const std::uint64_t qk = ipow(q, k), q2k = ipow(q, 2 * k);
  return q % 2 ? qk * (q2k - 1) / (2 * (q - 1)) : qk * (q2k - q) / (2 * (q - 1)) + 1;
}

std::uint64_t odd_pseudo_count(int k, std::uint32_t q) {
  return ipow(q, k + 2) * (ipow(q, 2 * k) - 1) / (q * q - 1) + 1;
}

std::uint64_t even_achromatic_count(int k, std::uint32_t q) {
  const std::uint64_t qk = ipow(q, k), eps = (qk + 1) % 3;
  return ((qk + 1 - eps) / 3 * (qk + 2) + eps) * ((qk - 1) / (q - 1));
}

}  // namespace

TEST_CASE("parallel-class colorings") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto c = plane_achromatic(field_of_order(q));
    CHECK(c.classes.size() == q + 1);
    check_partition_and_trace(c);
    CHECK(brute_proper(c));
    CHECK(brute_complete(c));
  }
  for (int n : {2, 3, 4}) {
    for (std::uint32_t q : {2u, 3u}) {
      const auto c = chromatic_parallel(n, field_of_order(q));
      CHECK(c.classes.size() == (ipow(q, n) - 1) / (q - 1));
      CHECK(census(c) == std::map<std::size_t, std::size_t>{{ipow(q, n - 1), (ipow(q, n) - 1) / (q - 1)}});
      check_partition_and_trace(c);
      CHECK(brute_proper(c));
      CHECK(brute_complete(c));
    }
  }
  const auto c23 = chromatic_parallel(2, field_of_order(3));
  CHECK(census(c23) == std::map<std::size_t, std::size_t>{{3, 4}});
}

TEST_CASE("plane pseudoachromatic coloring") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    CAPTURE(q);
    const auto c = plane_pseudo(field_of_order(q));
    CHECK(c.classes.size() == (q + 1) * (q + 1) / 2);
    check_partition_and_trace(c);
    CHECK(brute_complete(c));
    CHECK(census(c).at(1) == q + 1);
  }
  CHECK(plane_pseudo(field_of_order(2)).classes.size() == 4);
  CHECK(plane_pseudo(field_of_order(3)).classes.size() == 8);
  CHECK(plane_pseudo(field_of_order(4)).classes.size() == 12);
  // Even q: the odd line out joins the last pair.
  CHECK(census(plane_pseudo(field_of_order(4))) == std::map<std::size_t, std::size_t>{{1, 5}, {2, 6}, {3, 1}});
}

TEST_CASE("even-dimensional pseudoachromatic coloring") {
  for (auto [k, q] : {std::pair{2, 2u}, std::pair{2, 3u}, std::pair{2, 4u}, std::pair{3, 2u}}) {
    CAPTURE(k);
    CAPTURE(q);
    const Field f = field_of_order(q);
    const auto c = even_pseudo(k, f);
    CHECK(c.classes.size() == even_pseudo_count(k, q));
    check_partition_and_trace(c);
    if (k == 2 && q <= 3) {
      CHECK(brute_complete(c));
      CHECK_FALSE(brute_proper(c));
    } else {
      CHECK(is_complete(c).complete);
      CHECK_FALSE(is_proper(c).proper);
    }

    // Every pair takes its two points from different spread members.
    const Spread spread = build_spread(k, f);
    const ProjectiveSpace& ps = spread.ambient;
    for (const auto& pair : c.trace.at("pairing")) {
      Vec u, v;
      for (auto x : pair[0]) u.push_back(Element{x.get<std::uint32_t>()});
      for (auto x : pair[1]) v.push_back(Element{x.get<std::uint32_t>()});
      REQUIRE(spread.point_member[ps.index_of(u)] != spread.point_member[ps.index_of(v)]);
    }
    const std::size_t paired = c.trace.at("pairing").size() * 2 + (q % 2 == 0 ? 1 : 0);
    CHECK(paired == ps.point_count());
  }
  CHECK(even_pseudo(2, field_of_order(2)).classes.size() == 29);
  CHECK(even_pseudo(2, field_of_order(3)).classes.size() == 180);
  CHECK_THROWS_AS(even_pseudo(1, field_of_order(2)), std::invalid_argument);
}

TEST_CASE("odd-dimensional pseudoachromatic coloring") {
  for (auto [k, q] : {std::pair{1, 2u}, std::pair{1, 3u}, std::pair{1, 4u}, std::pair{2, 2u}, std::pair{1, 5u}}) {
    CAPTURE(k);
    CAPTURE(q);
    const auto c = odd_pseudo(k, field_of_order(q));
    CHECK(c.classes.size() == odd_pseudo_count(k, q));
    check_partition_and_trace(c);
    CHECK(is_complete(c).complete);
    CHECK_FALSE(is_proper(c).proper);
    const std::size_t big = ipow(q, 2 * k), small = ipow(q, k) + ipow(q, k - 1);
    CHECK(census(c) == std::map<std::size_t, std::size_t>{{small, c.classes.size() - 1}, {big, 1}});
  }
  CHECK(odd_pseudo(1, field_of_order(2)).classes.size() == 9);
  CHECK(odd_pseudo(1, field_of_order(3)).classes.size() == 28);
  CHECK(odd_pseudo(2, field_of_order(2)).classes.size() == 81);
  CHECK(brute_complete(odd_pseudo(1, field_of_order(2))));
  CHECK_THROWS_AS(odd_pseudo(0, field_of_order(2)), std::invalid_argument);
}

TEST_CASE("even-dimensional achromatic coloring") {
  for (auto [k, q] : {std::pair{2, 2u}, std::pair{2, 3u}, std::pair{2, 4u}, std::pair{3, 2u}}) {
    CAPTURE(k);
    CAPTURE(q);
    const auto c = even_achromatic(k, field_of_order(q));
    CHECK(c.classes.size() == even_achromatic_count(k, q));
    check_partition_and_trace(c);
    if (k == 2 && q <= 3) {
      CHECK(brute_proper(c));
      CHECK(brute_complete(c));
    } else {
      CHECK(is_proper(c).proper);
      CHECK(is_complete(c).complete);
    }
    // Star classes carry q^k lines, mixed classes 3q^(k-1) - 2, and leftovers are whole parallel classes.
    for (const auto& cls : c.classes) {
      const auto type = c.trace["provenance"][cls.id]["type"].get<std::string>();
      if (type == "triple mix") REQUIRE(cls.lines.size() == 3 * ipow(q, k - 1) - 2);
      else if (type == "parallel class") REQUIRE(cls.lines.size() == ipow(q, 2 * k - 1));
      else REQUIRE(cls.lines.size() == ipow(q, k));
    }
    CHECK(c.trace["epsilon"] == (ipow(q, k) + 1) % 3);
  }
  CHECK(even_achromatic(2, field_of_order(2)).classes.size() == 24);
  CHECK(even_achromatic(2, field_of_order(3)).classes.size() == 136);
  CHECK_THROWS_AS(even_achromatic(1, field_of_order(3)), std::invalid_argument);
}

TEST_CASE("AG(3,q) achromatic coloring") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    const auto c = ag3_achromatic(field_of_order(q));
    CHECK(c.classes.size() == q * (q + 1) * (q + 1) / 2 + 1);
    check_partition_and_trace(c);
    CHECK(brute_proper(c));
    CHECK(brute_complete(c));
    const std::size_t pairs = (q * q + q) / 2;
    CHECK(census(c) == std::map<std::size_t, std::size_t>{{q, pairs}, {2 * q - 1, pairs * q}, {q * q, 1}});
    CHECK(c.trace.contains("d"));
  }
  const auto c2 = ag3_achromatic(field_of_order(2));
  CHECK(c2.classes.size() == 10);
  CHECK(census(c2) == std::map<std::size_t, std::size_t>{{2, 3}, {3, 6}, {4, 1}});
  CHECK(ag3_achromatic(field_of_order(3)).classes.size() == 25);
}

TEST_CASE("method dispatch and constraints") {
  const Field f = field_of_order(2);
  CHECK(construct(Method::even_pseudo, 4, f).classes.size() == 29);
  CHECK(construct(Method::ag3_achromatic, 3, f).classes.size() == 10);
  CHECK_THROWS_WITH_AS(construct(Method::even_pseudo, 3, f), "even-pseudo requires even n >= 4",
                       std::invalid_argument);
  CHECK_THROWS_AS(construct(Method::odd_pseudo, 4, f), std::invalid_argument);
  CHECK_THROWS_AS(construct(Method::plane_pseudo, 3, f), std::invalid_argument);
  CHECK_THROWS_AS(construct(Method::ag3_achromatic, 5, f), std::invalid_argument);
  CHECK_THROWS_AS(construct(Method::chromatic, 1, f), std::invalid_argument);
  for (auto name : {"chromatic", "plane-achromatic", "plane-pseudo", "even-pseudo", "odd-pseudo", "even-achromatic",
                    "ag3-achromatic"})
    CHECK(method_name(parse_method(name)) == name);
  CHECK_THROWS_AS(parse_method("greedy"), std::invalid_argument);
}

TEST_CASE("serialization is deterministic and round trips") {
  const Field f = field_of_order(3);
  for (auto m : {Method::even_achromatic, Method::odd_pseudo, Method::ag3_achromatic, Method::plane_pseudo}) {
    const int n = m == Method::even_achromatic ? 4 : m == Method::plane_pseudo ? 2 : 3;
    const auto a = coloring_to_json(construct(m, n, f)).dump();
    const auto b = coloring_to_json(construct(m, n, f)).dump();
    CHECK(a == b);
    const auto back = coloring_from_json(Json::parse(a));
    CHECK(coloring_to_json(back).dump() == a);
  }
  Json bad = coloring_to_json(chromatic_parallel(2, f));
  bad["space"]["field"]["modulus"] = {1, 1};
  CHECK_THROWS_AS(coloring_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(coloring_from_json(Json::parse(R"({"classes": []})")), std::invalid_argument);
}
