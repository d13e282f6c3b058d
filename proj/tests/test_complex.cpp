#include <catch2/catch_amalgamated.hpp>

#include "fcx/complex.hpp"
#include "fcx/planarity.hpp"

using namespace fcx;

TEST_CASE("product complex counts") {
  MBComplex k5 = product_complex(complete_graph(5));
  REQUIRE(k5.core.vertex_count() == 5);
  REQUIRE(k5.sectors().size() == 10);
  MBComplex k13 = product_complex(star_graph(3));
  REQUIRE(k13.core.vertex_count() == 4);
  REQUIRE(k13.sectors().size() == 3);
  MBComplex empty = product_complex(Graph{});
  REQUIRE(empty.sectors().empty());
}

TEST_CASE("attach piece arity rules") {
  MBComplex k3 = product_complex(complete_graph(3));
  REQUIRE_THROWS_AS(attach_piece(k3, SectorKind::Disk, {0, 1}), ArityMismatch);
  REQUIRE_THROWS_AS(attach_piece(k3, SectorKind::PuncturedSphere, {0}), ArityMismatch);
  REQUIRE_THROWS_AS(attach_piece(k3, SectorKind::Disk, {7}), UnknownBranch);
  MBComplex with = attach_piece(k3, SectorKind::PuncturedSphere, {0, 1, 2});
  REQUIRE(with.pieces.size() == 1);
  REQUIRE(with.branch_degree(0) == 3);
}

TEST_CASE("branch degrees of the disk family") {
  // K4 product with one disk per branch: every branch has degree 4
  MBComplex x = product_complex(complete_graph(4));
  for (int i = 0; i < 4; ++i) x = attach_piece(x, SectorKind::Disk, {i});
  Strata s = strata(x);
  for (auto& [b, d] : s.branch_degrees) REQUIRE(d == 4);
  REQUIRE(s.boundary_components.empty());
}

TEST_CASE("branch degrees of products") {
  MBComplex k5 = product_complex(complete_graph(5));
  for (int v : k5.core.vertices()) REQUIRE(k5.branch_degree(v) == 4);
  MBComplex k13 = product_complex(star_graph(3));
  REQUIRE(k13.branch_degree(0) == 3);
  for (int l = 1; l <= 3; ++l) REQUIRE(k13.branch_degree(l) == 1);
}

TEST_CASE("euler characteristic bookkeeping") {
  for (const Graph& g : {complete_graph(3), complete_graph(5), star_graph(4)})
    REQUIRE(product_complex(g).chi() == 0);
  MBComplex x = attach_piece(product_complex(complete_graph(3)), SectorKind::Disk, {0});
  REQUIRE(x.chi() == 1);
  MBComplex y =
      attach_piece(product_complex(complete_graph(3)), SectorKind::PuncturedSphere, {0, 1, 2});
  REQUIRE(y.chi() == -1);
}

TEST_CASE("links: cone apex carries the cone graph") {
  MBComplex cone5 = cone_complex(complete_graph(5));
  Graph link = link_graph(cone5, PointClass::cone_apex());
  REQUIRE_FALSE(is_planar(link));
  MBComplex cone4 = cone_complex(complete_graph(4));
  REQUIRE(is_planar(link_graph(cone4, PointClass::cone_apex())));
}

TEST_CASE("links of branch points are planar thetas for every degree") {
  MBComplex x = product_complex(complete_graph(5));
  for (int b : x.core.vertices()) {
    Graph link = link_graph(x, PointClass::branch_point(b));
    REQUIRE(is_planar(link));
    REQUIRE(link.edge_count() == static_cast<std::size_t>(x.branch_degree(b)));
  }
  // sector interiors are circles
  Graph circle = link_graph(x, PointClass::sector_interior(SectorRef::annulus(0)));
  REQUIRE(circle.edge_count() == 1);
  REQUIRE(is_planar(circle));
}

TEST_CASE("complex json round trip") {
  MBComplex x = attach_piece(product_complex(complete_bipartite(2, 3)),
                             SectorKind::PuncturedSphere, {2, 3, 4});
  x.hpart.vertices.push_back({0, SiteFree{}});
  x.hpart.vertices.push_back({1, SiteOnBranch{2}});
  x.hpart.vertices.push_back({2, SiteInSector{SectorRef::of_piece(0)}});
  x.hpart.vertices.push_back({3, SiteInSector{SectorRef::annulus(1)}});
  x.hpart.edges.push_back({0, 0, 1});
  x.hpart.edges.push_back({1, 0, 2});
  MBComplex y = MBComplex::from_json(x.to_json());
  REQUIRE(y.core.code() == x.core.code());
  REQUIRE(y.pieces.size() == x.pieces.size());
  REQUIRE(y.hpart.vertices.size() == x.hpart.vertices.size());
  REQUIRE(site_str(y.hpart.vertex(3).site) == site_str(x.hpart.vertex(3).site));
}

TEST_CASE("validation catches dangling references") {
  MBComplex x = product_complex(complete_graph(3));
  x.hpart.vertices.push_back({0, SiteOnBranch{9}});
  REQUIRE_THROWS_AS(x.validate(), UnknownBranch);
  MBComplex y = product_complex(complete_graph(3));
  y.hpart.vertices.push_back({0, SiteFree{}});
  y.hpart.edges.push_back({0, 0, 5});
  REQUIRE_THROWS_AS(y.validate(), ComplexError);
}

TEST_CASE("point classes enumerate every stratum") {
  MBComplex x = attach_piece(product_complex(complete_graph(3)), SectorKind::Disk, {0});
  x.hpart.vertices.push_back({0, SiteFree{}});
  x.hpart.vertices.push_back({1, SiteOnBranch{1}});
  x.hpart.edges.push_back({0, 0, 1});
  auto classes = x.point_classes();
  // 4 sectors (3 annuli + disk) + 3 branches + 1 h-edge + 2 h-vertices
  REQUIRE(classes.size() == 10);
}
