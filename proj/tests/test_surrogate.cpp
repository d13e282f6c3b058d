#include <catch2/catch_amalgamated.hpp>

#include "fcx/surrogate.hpp"

using namespace fcx;

TEST_CASE("punctured annulus leaves a theta spine") {
  MBComplex x = product_complex(complete_graph(4));
  MBComplex y = surrogate_sector_interior(x, SectorRef::annulus(0));  // edge (0,1)
  REQUIRE(y.core.edge_count() == 5);
  REQUIRE(y.hpart.vertices.size() == 2);
  REQUIRE(y.hpart.edges.size() == 2);  // two parallel arcs
  auto& a = y.hpart.vertices[0];
  auto& b = y.hpart.vertices[1];
  REQUIRE(std::get<SiteOnBranch>(a.site).branch == 0);
  REQUIRE(std::get<SiteOnBranch>(b.site).branch == 1);
  REQUIRE(y.hpart.edges[0].u == y.hpart.edges[1].u);
  REQUIRE(y.hpart.edges[0].v == y.hpart.edges[1].v);
}

TEST_CASE("punctured disk leaves a free pendant") {
  MBComplex x = attach_piece(product_complex(complete_graph(3)), SectorKind::Disk, {1});
  MBComplex y = surrogate_sector_interior(x, SectorRef::of_piece(0));
  REQUIRE(y.pieces.empty());
  REQUIRE(y.hpart.vertices.size() == 2);
  REQUIRE(y.hpart.edges.size() == 1);
  bool has_free = false, on_branch = false;
  for (auto& v : y.hpart.vertices) {
    if (std::holds_alternative<SiteFree>(v.site)) has_free = true;
    if (auto* ob = std::get_if<SiteOnBranch>(&v.site)) on_branch = ob->branch == 1;
  }
  REQUIRE(has_free);
  REQUIRE(on_branch);
}

TEST_CASE("punctured sphere leaves a star spine") {
  MBComplex x = attach_piece(product_complex(complete_graph(3)),
                             SectorKind::PuncturedSphere, {0, 1, 2});
  MBComplex y = surrogate_sector_interior(x, SectorRef::of_piece(0));
  REQUIRE(y.pieces.empty());
  REQUIRE(y.hpart.vertices.size() == 4);
  REQUIRE(y.hpart.edges.size() == 3);
}

TEST_CASE("interior H vertices slide to the branch when their sector dies") {
  MBComplex x = attach_piece(product_complex(star_graph(3)), SectorKind::Disk, {1});
  x.hpart.vertices.push_back({0, SiteInSector{SectorRef::of_piece(0)}});
  MBComplex y = surrogate_sector_interior(x, SectorRef::of_piece(0));
  REQUIRE(std::get<SiteOnBranch>(y.hpart.vertex(0).site).branch == 1);
}

TEST_CASE("cut-edge deletion isolates a leaf but keeps its disk") {
  MBComplex x = attach_piece(product_complex(star_graph(3)), SectorKind::Disk, {1});
  MBComplex y = surrogate_sector_interior(x, SectorRef::annulus(0));  // edge (0,1)
  // leaf 1 keeps its branch circle via the disk; the core splits
  REQUIRE(y.core.has_vertex(1));
  REQUIRE(y.core.components().size() == 2);
}

TEST_CASE("a fully detached branch circle moves to the H part") {
  MBComplex x = product_complex(star_graph(1));  // a single edge
  x.hpart.vertices.push_back({5, SiteOnBranch{1}});
  MBComplex y = surrogate_sector_interior(x, SectorRef::annulus(0));
  // branch 1 had only the annulus; its circle becomes a loop at the carried vertex
  REQUIRE_FALSE(y.core.has_vertex(1));
  bool loop_at_5 = false;
  for (auto& e : y.hpart.edges)
    if (e.u == 5 && e.v == 5) loop_at_5 = true;
  REQUIRE(loop_at_5);
  REQUIRE(std::holds_alternative<SiteFree>(y.hpart.vertex(5).site));
}

TEST_CASE("detached circle with several marked points becomes a cycle") {
  MBComplex x = product_complex(star_graph(1));
  for (int i = 0; i < 3; ++i) x.hpart.vertices.push_back({i, SiteOnBranch{1}});
  MBComplex y = surrogate_sector_interior(x, SectorRef::annulus(0));
  // both branch circles detach: branch 0 carries one spine endpoint (a loop),
  // branch 1 carries three marked points plus the other endpoint (a 4-cycle);
  // together with the two theta arcs that is 7 H edges on 5 free vertices
  REQUIRE(y.core.vertex_count() == 0);
  REQUIRE(y.hpart.vertices.size() == 5);
  REQUIRE(y.hpart.edges.size() == 7);
  for (auto& v : y.hpart.vertices)
    REQUIRE(std::holds_alternative<SiteFree>(v.site));
}

TEST_CASE("h deletions remove the open edge or star") {
  MBComplex x = product_complex(complete_graph(3));
  x.hpart.vertices.push_back({0, SiteFree{}});
  x.hpart.vertices.push_back({1, SiteOnBranch{0}});
  x.hpart.vertices.push_back({2, SiteOnBranch{1}});
  x.hpart.edges.push_back({0, 0, 1});
  x.hpart.edges.push_back({1, 0, 2});
  MBComplex e = surrogate_h_edge(x, 0);
  REQUIRE(e.hpart.edges.size() == 1);
  REQUIRE(e.hpart.vertices.size() == 3);  // endpoints survive
  MBComplex v = surrogate_h_vertex(x, 0);
  REQUIRE(v.hpart.edges.empty());
  REQUIRE(v.hpart.vertices.size() == 2);
}

TEST_CASE("surrogate list covers every stratum class") {
  MBComplex x = attach_piece(product_complex(complete_graph(3)), SectorKind::Disk, {0});
  x.hpart.vertices.push_back({0, SiteFree{}});
  x.hpart.vertices.push_back({1, SiteOnBranch{0}});
  x.hpart.edges.push_back({0, 0, 1});
  auto surrs = deletion_surrogates(x);
  // 4 sectors + 3 branches + 1 h-edge + 2 h-vertices
  REQUIRE(surrs.size() == 10);
  int branch_rows = 0;
  for (auto& s : surrs)
    if (s.cls.kind == PointClassKind::BranchPoint) ++branch_rows;
  REQUIRE(branch_rows == 3);
}
