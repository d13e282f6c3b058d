#include <catch2/catch_amalgamated.hpp>

#include "fcx/graph.hpp"

using namespace fcx;

TEST_CASE("multigraph basics") {
  Graph g;
  g.add_vertex(0);
  g.add_vertex(1);
  g.add_edge(0, 0, 1);
  g.add_edge(1, 0, 1);  // parallel
  g.add_edge(2, 1, 1);  // loop
  REQUIRE(g.degree(0) == 2);
  REQUIRE(g.degree(1) == 4);  // loop counts twice
  REQUIRE(g.edge(2).is_loop());
  REQUIRE(g.neighbors(0) == std::vector<int>{1});
}

TEST_CASE("id uniqueness enforced") {
  Graph g;
  g.add_vertex(0);
  REQUIRE_THROWS_AS(g.add_vertex(0), GraphError);
  g.add_vertex(1);
  g.add_edge(0, 0, 1);
  REQUIRE_THROWS_AS(g.add_edge(0, 1, 0), GraphError);
  REQUIRE_THROWS_AS(g.add_edge(1, 0, 7), GraphError);
}

TEST_CASE("deletion helpers") {
  Graph k4 = complete_graph(4);
  Graph no_edge = k4.without_edge(0);
  REQUIRE(no_edge.edge_count() == 5);
  REQUIRE(no_edge.vertex_count() == 4);
  Graph no_vertex = k4.without_vertex(0);
  REQUIRE(no_vertex.vertex_count() == 3);
  REQUIRE(no_vertex.edge_count() == 3);
}

TEST_CASE("components and connectivity") {
  Graph g;
  for (int i = 0; i < 5; ++i) g.add_vertex(i);
  g.add_edge(0, 0, 1);
  g.add_edge(1, 2, 3);
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  REQUIRE_FALSE(g.connected());
  REQUIRE(complete_graph(4).connected());
}

TEST_CASE("json round trip") {
  Graph g = complete_bipartite(2, 3);
  Graph h = Graph::from_json(g.to_json());
  REQUIRE(g.code() == h.code());
  REQUIRE_THROWS_AS(Graph::from_json(json::parse("{\"vertices\":[0]}")), GraphError);
  REQUIRE_THROWS_AS(Graph::from_json(json::parse("{\"vertices\":[0],\"edges\":[[0,0]]}")),
                    GraphError);
}

TEST_CASE("simplification strips loops and parallels") {
  Graph g;
  g.add_vertex(0);
  g.add_vertex(1);
  g.add_edge(0, 0, 1);
  g.add_edge(1, 1, 0);
  g.add_edge(2, 0, 0);
  Graph s = g.simplified();
  REQUIRE(s.edge_count() == 1);
  REQUIRE(s.vertex_count() == 2);
}

TEST_CASE("dot export mentions every edge") {
  Graph g = complete_graph(3);
  std::string dot = g.to_dot();
  REQUIRE(dot.find("0 -- 1") != std::string::npos);
  REQUIRE(dot.find("1 -- 2") != std::string::npos);
}
