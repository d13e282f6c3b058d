#include <catch2/catch_amalgamated.hpp>

#include "fcx/genus.hpp"

using namespace fcx;

TEST_CASE("minimum genus of the usual suspects") {
  REQUIRE(min_genus(complete_graph(4)) == 0);
  REQUIRE(min_genus(complete_graph(5)) == 1);
  REQUIRE(min_genus(complete_bipartite(3, 3)) == 1);
}

TEST_CASE("trees are planar") {
  REQUIRE(min_genus(star_graph(5)) == 0);
  REQUIRE(min_genus(path_graph(7)) == 0);
}

TEST_CASE("genus certificate re-traces") {
  auto [g, rot] = min_genus_with_certificate(complete_graph(5));
  REQUIRE(g == 1);
  REQUIRE(euler_genus(complete_graph(5), rot) == 1);
}

TEST_CASE("budget exceeded raises") {
  REQUIRE_THROWS_AS(min_genus(complete_graph(8), 100), BudgetExceeded);
}
