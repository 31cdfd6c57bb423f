#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "agcolor/oracle.hpp"
#include "agcolor/verify.hpp"

using namespace agcolor;

namespace {

struct Indices {
  std::size_t chi = 0, alpha = 0, psi = 0;
};

// Every set partition by restricted growth strings.
Indices brute_indices(const IntersectionGraph& g) {
  const std::size_t n = g.size();
  Indices out;
  out.chi = n;
  std::vector<std::size_t> label(n, 0);
  while (true) {
    const std::size_t k = *std::max_element(label.begin(), label.end()) + 1;
    bool proper = true;
    std::vector<std::vector<bool>> met(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!g.adjacent(a, b)) continue;
        if (label[a] == label[b]) proper = false;
        met[label[a]][label[b]] = met[label[b]][label[a]] = true;
      }
    bool complete = true;
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = x + 1; y < k; ++y) complete = complete && met[x][y];
    if (proper) out.chi = std::min(out.chi, k);
    if (complete) out.psi = std::max(out.psi, k);
    if (proper && complete) out.alpha = std::max(out.alpha, k);

    // Next restricted growth string.
    std::size_t i = n;
    while (i-- > 1) {
      std::size_t prefix_max = 0;
      for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, label[j]);
      if (label[i] <= prefix_max) {
        ++label[i];
        std::fill(label.begin() + i + 1, label.end(), 0);
        break;
      }
    }
    if (i == 0 || i > n) break;
  }
  return out;
}

IntersectionGraph random_graph(std::size_t lines, std::uint32_t points, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, points - 1);
  std::vector<std::vector<std::uint32_t>> sets(lines);
  for (auto& s : sets) {
    s.push_back(pick(rng));
    s.push_back(pick(rng));
  }
  return IntersectionGraph(sets);
}

Coloring coloring_from_witness(std::shared_ptr<const AffineSpace> space, const OracleResult& r) {
  Coloring c;
  c.space = std::move(space);
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    ColorClass cls{"w" + std::to_string(i), {}};
    for (auto l : r.witness[i]) cls.lines.push_back(static_cast<LineId>(l));
    std::sort(cls.lines.begin(), cls.lines.end());
    c.classes.push_back(cls);
  }
  return c;
}

void check_witness(const IntersectionGraph& g, const OracleResult& r, std::size_t expected_classes) {
  REQUIRE(r.witness.size() == expected_classes);
  std::vector<int> seen(g.size(), 0);
  for (const auto& cls : r.witness)
    for (auto x : cls) ++seen.at(x);
  for (auto s : seen) REQUIRE(s == 1);
}

}  // namespace

TEST_CASE("intersection graph of a plane") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const AffineSpace s(field_of_order(q), 2);
    const auto g = IntersectionGraph::of_space(s);
    CHECK(g.size() == q * (q + 1));
    CHECK(g.max_point_degree() == q + 1);
    for (std::size_t a = 0; a < g.size(); ++a) {
      const LineId one[] = {static_cast<LineId>(a)};
      REQUIRE(g.degree(a) == count_meeting_lines(s, one));
    }
    CHECK(g.edge_count() * 2 == g.size() * q * q);
  }
  const AffineSpace s32(field_of_order(2), 3);
  const auto g32 = IntersectionGraph::of_space(s32);
  for (std::size_t a = 0; a < g32.size(); ++a) CHECK(g32.degree(a) == 12);
}

TEST_CASE("input limits") {
  CHECK_THROWS_AS(IntersectionGraph({{0, 1}, {}}), std::invalid_argument);
  std::vector<std::vector<std::uint32_t>> many(65, {0});
  CHECK_THROWS_AS(IntersectionGraph{many}, std::length_error);
  CHECK_THROWS_AS(IntersectionGraph::of_space(AffineSpace(field_of_order(3), 3)), std::length_error);
  CHECK_NOTHROW(IntersectionGraph(std::vector<std::vector<std::uint32_t>>(64, {0})));
}

TEST_CASE("three pairwise meeting lines") {
  const IntersectionGraph g({{0, 1}, {1, 2}, {2, 0}});
  CHECK(exact_pseudoachromatic(g).lower == 3);
  CHECK(exact_achromatic(g).lower == 3);
  CHECK(exact_chromatic(g).upper == 3);
}

TEST_CASE("disjoint lines") {
  const IntersectionGraph g({{0, 1}, {2, 3}, {4, 5}});
  const auto psi = exact_pseudoachromatic(g);
  CHECK(psi.exact);
  CHECK(psi.lower == 1);
  CHECK(exact_chromatic(g).upper == 1);
}

TEST_CASE("plane values") {
  struct Case {
    std::uint32_t q;
    std::uint64_t chi, alpha, psi;
  };
  for (auto c : {Case{2, 3, 3, 4}, Case{3, 4, 4, 8}}) {
    CAPTURE(c.q);
    auto space = std::make_shared<AffineSpace>(field_of_order(c.q), 2);
    const auto g = IntersectionGraph::of_space(*space);
    const OracleOptions opt{120};

    const auto chi = exact_chromatic(g, opt);
    REQUIRE(chi.exact);
    CHECK(chi.lower == c.chi);
    CHECK(chi.upper == c.chi);
    check_witness(g, chi, c.chi);
    CHECK(is_proper(coloring_from_witness(space, chi)).proper);

    const auto alpha = exact_achromatic(g, opt);
    REQUIRE(alpha.exact);
    CHECK(alpha.lower == c.alpha);
    check_witness(g, alpha, c.alpha);
    const auto ac = coloring_from_witness(space, alpha);
    CHECK(is_proper(ac).proper);
    CHECK(is_complete(ac).complete);

    const auto psi = exact_pseudoachromatic(g, opt);
    REQUIRE(psi.exact);
    CHECK(psi.lower == c.psi);
    CHECK(psi.upper == c.psi);
    check_witness(g, psi, c.psi);
    CHECK(is_complete(coloring_from_witness(space, psi)).complete);
    CHECK(alpha.lower <= psi.lower);
  }
}

TEST_CASE("chromatic index of the order-four plane") {
  const auto g = IntersectionGraph::of_space(AffineSpace(field_of_order(4), 2));
  const auto chi = exact_chromatic(g, OracleOptions{60});
  REQUIRE(chi.exact);
  CHECK(chi.upper == 5);
}

TEST_CASE("budget exhaustion gives an interval") {
  const auto g = IntersectionGraph::of_space(AffineSpace(field_of_order(4), 2));
  const auto psi = exact_pseudoachromatic(g, OracleOptions{0.5});
  CHECK_FALSE(psi.exact);
  CHECK(psi.lower <= 12);
  CHECK(psi.upper >= 12);
  CHECK(psi.lower < psi.upper);
  check_witness(g, psi, psi.lower);
  const auto j = oracle_result_to_json(psi);
  CHECK(j["value"].is_null());
  CHECK(j["exact"] == false);
}

TEST_CASE("oracle agrees with full partition enumeration") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t lines = 3 + trial % 6;
    const auto g = random_graph(lines, 3 + trial % 5, rng);
    const auto expected = brute_indices(g);
    CAPTURE(trial);
    const auto chi = exact_chromatic(g), alpha = exact_achromatic(g), psi = exact_pseudoachromatic(g);
    REQUIRE(chi.exact);
    REQUIRE(alpha.exact);
    REQUIRE(psi.exact);
    CHECK(chi.upper == expected.chi);
    CHECK(alpha.lower == expected.alpha);
    CHECK(psi.lower == expected.psi);
    CHECK(chi.upper <= alpha.lower);
    CHECK(alpha.lower <= psi.lower);
  }
}

TEST_CASE("index names and json input") {
  for (auto i : {Index::chromatic, Index::achromatic, Index::pseudoachromatic}) CHECK(parse_index(index_name(i)) == i);
  CHECK_THROWS_AS(parse_index("omega"), std::invalid_argument);

  const auto bare = graph_from_json(Json::parse("[[0,1],[1,2],[2,0]]"));
  const auto wrapped = graph_from_json(Json::parse(R"({"sets": [[0,1],[1,2],[2,0]]})"));
  CHECK(bare.size() == 3);
  CHECK(wrapped.edge_count() == 3);
  const auto r = run_oracle(Index::pseudoachromatic, bare);
  const auto j = oracle_result_to_json(r);
  CHECK(j["index"] == "psi");
  CHECK(j["value"] == 3);
  CHECK(j["witness"].size() == 3);
  CHECK_THROWS(graph_from_json(Json::parse(R"({"lines": 3})")));
}
