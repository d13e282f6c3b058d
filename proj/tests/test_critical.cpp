#include <catch2/catch_amalgamated.hpp>

#include "fcx/catalog.hpp"

using namespace fcx;

TEST_CASE("the nine listed critical complexes verify as critical") {
  for (int n = 1; n <= 9; ++n) {
    INFO("critical " << n);
    CriticalityReport rep = check_critical_s3(critical_of(n));
    REQUIRE(rep.overall == Criticality::Critical);
    REQUIRE(rep.undecided_rows() == 0);
  }
}

TEST_CASE("the full product over K5 is not critical and names a witness") {
  CriticalityReport rep = check_critical_s3(family(1));
  REQUIRE(rep.overall == Criticality::NotCritical);
  REQUIRE(rep.witness.has_value());
  REQUIRE(rep.witness->kind == PointClassKind::SectorInterior);
}

TEST_CASE("an embeddable complex reports not critical") {
  CriticalityReport rep = check_critical_s3(product_complex(complete_graph(4)));
  REQUIRE(rep.original == VerdictKind::Embeddable);
  REQUIRE(rep.overall == Criticality::NotCritical);
}

TEST_CASE("extraction terminates at the documented types") {
  struct Expect {
    int family;
    TypeTag type;
    std::size_t max_moves;
  };
  std::vector<Expect> expectations = {
      {1, TypeTag::K4Type, 20},   {2, TypeTag::K4Type, 20},
      {4, TypeTag::Theta4Type, 20}, {6, TypeTag::K23Type, 20},
      {7, TypeTag::K23Type, 20},  {8, TypeTag::K23Type, 20},
      {9, TypeTag::K23Type, 20}};
  for (auto& e : expectations) {
    INFO("family " << e.family);
    ExtractionTrace t = extract_critical(family(e.family));
    REQUIRE(t.steps.size() <= e.max_moves);
    REQUIRE(t.final_report.overall == Criticality::Critical);
    REQUIRE(classify_type(t.final_complex) == e.type);
  }
}

TEST_CASE("already-critical inputs extract to themselves") {
  for (int n : {3, 5}) {
    ExtractionTrace t = extract_critical(family(n));
    REQUIRE(t.steps.empty());
    REQUIRE(t.final_report.overall == Criticality::Critical);
    REQUIRE(classify_type(t.final_complex) == TypeTag::Unclassified);
  }
}

TEST_CASE("extraction steps only ever shrink the complex") {
  ExtractionTrace t = extract_critical(family(8));
  const MBComplex* prev = nullptr;
  MBComplex start = family(8);
  prev = &start;
  for (auto& s : t.steps) {
    // each committed move removes a sector or H material
    std::size_t prev_size = prev->sectors().size() + prev->hpart.edges.size();
    std::size_t cur_size = s.complex.sectors().size() + s.complex.hpart.edges.size();
    REQUIRE(cur_size <= prev_size + 4);  // spine replacements may add a few arcs
    REQUIRE(s.complex.sectors().size() <= prev->sectors().size());
    prev = &s.complex;
  }
}

TEST_CASE("extraction requires an obstructed input") {
  REQUIRE_THROWS_AS(extract_critical(product_complex(complete_graph(3))), ComplexError);
}

TEST_CASE("type classification matches the patterns") {
  REQUIRE(classify_type(critical_of(1)) == TypeTag::K4Type);
  REQUIRE(classify_type(critical_of(4)) == TypeTag::Theta4Type);
  REQUIRE(classify_type(critical_of(8)) == TypeTag::K23Type);
  REQUIRE(classify_type(critical_of(6)) == TypeTag::K23Type);
  REQUIRE(classify_type(family(3)) == TypeTag::Unclassified);  // H empty
  // K4 pattern demands genuine branches: legs on degree-2 circles do not count
  MBComplex x = product_complex(star_graph(4));
  x.hpart.vertices.push_back({0, SiteFree{}});
  for (int i = 0; i < 4; ++i) {
    x.hpart.vertices.push_back({i + 1, SiteOnBranch{i + 1}});
    x.hpart.edges.push_back({i, 0, i + 1});
  }
  REQUIRE(classify_type(x) != TypeTag::K4Type);
}

TEST_CASE("reductions of the piece-free criticals are critical for the 2-sphere") {
  for (int n : {1, 2, 6, 7}) {
    INFO("critical " << n);
    REQUIRE(check_reduction_critical_s2(critical_of(n)));
  }
  REQUIRE_FALSE(check_reduction_critical_s2(product_complex(complete_graph(4))));
  REQUIRE_THROWS_AS(check_reduction_critical_s2(family(3)), ComplexError);
}

TEST_CASE("reduction minors match the type classification") {
  REQUIRE(classify_product_minor(critical_of(1)) == ProductMinor::K5_with_K14);
  REQUIRE(classify_product_minor(critical_of(2)) == ProductMinor::K5_with_K14);
  REQUIRE(classify_product_minor(critical_of(6)) == ProductMinor::K33_with_K13);
  REQUIRE(classify_product_minor(critical_of(7)) == ProductMinor::K33_with_K13);
}

TEST_CASE("poset relations on graphs") {
  Graph k5 = complete_graph(5);
  Graph k5sub = k5.without_edge(0);
  k5sub.add_vertex(5);
  k5sub.add_edge(20, 0, 5);
  k5sub.add_edge(21, 5, 1);
  REQUIRE(graph_class_relation(k5, k5sub) == ClassRelation::EqualClass);
  REQUIRE(graph_class_relation(k5, complete_bipartite(3, 3)) == ClassRelation::Incomparable);
  REQUIRE(graph_class_relation(complete_graph(3), complete_graph(4)) ==
          ClassRelation::AStrictlyBelow);
  REQUIRE(graph_class_relation(complete_graph(4), complete_graph(3)) ==
          ClassRelation::BStrictlyBelow);
}

TEST_CASE("poset is an order on classes over a corpus") {
  std::vector<Graph> corpus = {complete_graph(3), complete_graph(4), complete_graph(5),
                               star_graph(3),     cycle_graph(5),    complete_bipartite(2, 3),
                               complete_bipartite(3, 3)};
  auto leq = [&](std::size_t a, std::size_t b) {
    return embeds_topologically(corpus[a], corpus[b]);
  };
  for (std::size_t a = 0; a < corpus.size(); ++a)
    for (std::size_t b = 0; b < corpus.size(); ++b)
      for (std::size_t c = 0; c < corpus.size(); ++c)
        if (leq(a, b) && leq(b, c)) REQUIRE(leq(a, c));
  // antisymmetry on classes: mutual containment is an equivalence
  for (std::size_t a = 0; a < corpus.size(); ++a)
    for (std::size_t b = 0; b < corpus.size(); ++b) {
      if (!(leq(a, b) && leq(b, a))) continue;
      for (std::size_t c = 0; c < corpus.size(); ++c)
        REQUIRE(leq(a, c) == leq(b, c));
    }
}

TEST_CASE("criticality report serializes") {
  CriticalityReport rep = check_critical_s3(critical_of(5));
  json j = rep.to_json();
  REQUIRE(j["overall"] == "critical");
  REQUIRE(j["rows"].size() == rep.rows.size());
}
