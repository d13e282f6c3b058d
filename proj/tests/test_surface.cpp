#include <catch2/catch_amalgamated.hpp>

#include "fcx/surface.hpp"

using namespace fcx;

TEST_CASE("planarity obstructions are exactly the two classics") {
  REQUIRE(gamma_s2_membership(complete_graph(5)));
  REQUIRE(gamma_s2_membership(complete_bipartite(3, 3)));
  REQUIRE_FALSE(gamma_s2_membership(complete_graph(6)));
  REQUIRE_FALSE(gamma_s2_membership(complete_graph(4)));
  REQUIRE_FALSE(gamma_s2_membership(star_graph(5)));
}

TEST_CASE("torus membership") {
  REQUIRE_FALSE(omega_membership(complete_graph(5), 1));  // K5 embeds in the torus
  REQUIRE(omega_membership(complete_bipartite(3, 3), 0));
  REQUIRE_FALSE(omega_membership(complete_graph(4), 0));
}

TEST_CASE("genus-0 membership coincides with planarity criticality on a corpus") {
  std::vector<Graph> corpus = {complete_graph(4), complete_graph(5), complete_graph(6),
                               complete_bipartite(3, 3), complete_bipartite(2, 3),
                               cycle_graph(5)};
  for (auto& g : corpus)
    REQUIRE(omega_membership(g, 0) == gamma_s2_membership(g));
}

TEST_CASE("surface verdicts carry certificates that re-trace") {
  SurfaceVerdict v = surface_verdict(complete_graph(5), 1);
  REQUIRE(v.embeds);
  REQUIRE(v.embedding_certificate.has_value());
  REQUIRE(euler_genus(complete_graph(5), *v.embedding_certificate) <= 1);

  SurfaceVerdict v0 = surface_verdict(complete_graph(5), 0);
  REQUIRE_FALSE(v0.embeds);
  REQUIRE(v0.critical);
  REQUIRE(v0.kuratowski.has_value());
  REQUIRE(validate_kuratowski(complete_graph(5), *v0.kuratowski));
}

TEST_CASE("verdict json") {
  json j = surface_verdict(complete_graph(4), 0).to_json();
  REQUIRE(j["embeds"] == true);
  REQUIRE(j["critical"] == false);
  REQUIRE(j["schema"] == "fcx/1");
}
