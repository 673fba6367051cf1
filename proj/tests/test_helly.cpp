#include "doctest.h"
#include "hyperchrom/helly.hpp"
#include "hyperchrom/instances.hpp"
#include "hyperchrom/oracles.hpp"

using namespace hyperchrom;

TEST_CASE("families with a common element are Helly") {
  const std::vector<std::vector<int>> sunflower{{1, 2}, {1, 3}, {1, 4}};
  const HellyResult r = helly_check(sunflower);
  CHECK(r.helly);
  CHECK(r.witness.empty());

  const auto cliques = maximal_intersecting_families(sunflower);
  REQUIRE(cliques.size() == 1);
  CHECK(cliques[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("two sets and disjoint families are trivially Helly") {
  CHECK(helly_check({{1, 2}, {2, 3}}).helly);
  CHECK(helly_check({{1, 2}, {3, 4}, {5, 6}}).helly);
  CHECK(helly_check({}).helly);
  CHECK(helly_check({{4, 9}}).helly);
}

TEST_CASE("a pairwise-intersecting family without a common element is not Helly") {
  // The triangle of 2-sets: every two meet, all three do not.
  const std::vector<std::vector<int>> tri{{1, 2}, {2, 3}, {1, 3}};
  const HellyResult r = helly_check(tri);
  CHECK_FALSE(r.helly);
  CHECK(r.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("fano lines form a single non-Helly clique of all seven") {
  const Hypergraph h = fano();
  const HellyResult r = helly_check(h.edges());
  CHECK_FALSE(r.helly);
  CHECK(r.witness == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  const auto cliques = maximal_intersecting_families(h.edges());
  REQUIRE(cliques.size() == 1);
  CHECK(cliques[0].size() == 7);
}

TEST_CASE("the fano gamma family fails Helly with a 4-set witness") {
  // Gamma sets of the four missing colors at the canonical fano pivot.
  const std::vector<std::vector<int>> family{{0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}};
  const HellyResult r = helly_check(family);
  CHECK_FALSE(r.helly);
  CHECK(r.witness == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("witness is the smallest violating maximal clique") {
  // Sets 0..2 form a violating triangle; sets 3..6 a violating 4-clique
  // sharing no element. Universe halves keep the two families apart.
  const std::vector<std::vector<int>> mixed{
      {1, 2}, {2, 3}, {1, 3},                              // triangle
      {10, 11, 12}, {10, 13, 14}, {11, 13, 15}, {12, 14, 15}};  // 4-clique
  const HellyResult r = helly_check(mixed);
  CHECK_FALSE(r.helly);
  CHECK(r.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("maximal cliques of a path-shaped family") {
  const std::vector<std::vector<int>> path{{1, 2}, {2, 3}, {3, 4}};
  const auto cliques = maximal_intersecting_families(path);
  REQUIRE(cliques.size() == 2);
  CHECK(cliques[0] == std::vector<int>{0, 1});
  CHECK(cliques[1] == std::vector<int>{1, 2});
  CHECK(helly_check(path).helly);
}

TEST_CASE("helly verdicts agree with the exhaustive oracle on fixed families") {
  const std::vector<std::vector<std::vector<int>>> cases{
      {{1, 2}, {1, 3}, {1, 4}},
      {{1, 2}, {2, 3}, {1, 3}},
      {{0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}},
      {{1, 2}, {3, 4}},
      {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}},
      fano().edges(),
  };
  for (const auto& family : cases) {
    CHECK(helly_check(family).helly == oracle_helly(family));
  }
}

TEST_CASE("oracle refuses oversized families") {
  std::vector<std::vector<int>> big(13, std::vector<int>{1, 2});
  for (int i = 0; i < 13; ++i) big[i].push_back(10 + i);
  CHECK_THROWS_AS(oracle_helly(big), OracleTooLarge);
}
