// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion pins its tolerances and time limits.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "fcx/catalog.hpp"
#include "fcx/surface.hpp"
#include "../random_complexes.hpp"

using namespace fcx;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  bool passed = false;
  double seconds = 0;
  std::string detail;
};

std::vector<Graph> connected_simple_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g;
      for (int i = 0; i < n; ++i) g.add_vertex(i);
      int id = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask & (std::uint64_t{1} << s)) g.add_edge(id++, slots[s].first, slots[s].second);
      if (g.connected()) out.push_back(std::move(g));
    }
  }
  return out;
}

bool looks_like_k5(const Graph& g) {
  return g.vertex_count() == 5 && g.edge_count() == 10;
}

bool looks_like_k33(const Graph& g) {
  if (g.vertex_count() != 6 || g.edge_count() != 9) return false;
  for (int v : g.vertices())
    if (g.degree(v) != 3) return false;
  // triangle-free 3-regular on six vertices is K33
  for (auto& e : g.edges())
    for (int w : g.vertices()) {
      if (w == e.u || w == e.v) continue;
      bool wu = false, wv = false;
      for (auto& f : g.edges()) {
        if ((f.u == w && f.v == e.u) || (f.v == w && f.u == e.u)) wu = true;
        if ((f.u == w && f.v == e.v) || (f.v == w && f.u == e.v)) wv = true;
      }
      if (wu && wv) return false;
    }
  return true;
}

bool criterion_gamma_s2(std::string& detail) {
  auto corpus = connected_simple_graphs(6);
  std::size_t members = 0;
  for (auto& g : corpus) {
    bool expect = looks_like_k5(g) || looks_like_k33(g);
    bool got = gamma_s2_membership(g);
    if (got != expect) {
      detail = "mismatch on a graph with " + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges";
      return false;
    }
    if (got) ++members;
  }
  detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(members) + " members";
  return members == 11;  // one labeled K5, ten labeled copies of K33
}

bool criterion_family_verdicts(std::string& detail) {
  for (int n = 1; n <= 9; ++n) {
    Verdict v = decide_embeddable_s3(family(n));
    if (v.kind != VerdictKind::NotEmbeddable) {
      detail = "family " + std::to_string(n) + " not obstructed";
      return false;
    }
    if (n == 1 || n == 6) {
      if (v.obstruction->kind != ObstructionKind::NonplanarCore) {
        detail = "family " + std::to_string(n) + " missing the nonplanar-core obstruction";
        return false;
      }
      continue;
    }
    if (v.obstruction->kind != ObstructionKind::ExhaustiveInfeasibility) {
      detail = "family " + std::to_string(n) + " missing exhaustive infeasibility";
      return false;
    }
    auto kinds = v.obstruction->failure_kinds();
    bool ok = (n == 3 || n == 5) ? kinds.count("homology-parity") > 0
                                 : (kinds.count("incidence") > 0 || kinds.count("ball-access") > 0);
    if (!ok) {
      detail = "family " + std::to_string(n) + " lacks the documented failure kind";
      return false;
    }
  }
  detail = "all nine families obstructed with the documented reasons";
  return true;
}

bool criterion_criticality(std::string& detail) {
  for (int n = 1; n <= 9; ++n) {
    CriticalityReport rep = check_critical_s3(critical_of(n));
    if (rep.overall != Criticality::Critical || rep.undecided_rows() != 0) {
      detail = "critical " + std::to_string(n) + " failed (" +
               std::to_string(rep.undecided_rows()) + " undecided rows)";
      return false;
    }
  }
  detail = "nine critical complexes, zero undecided rows";
  return true;
}

bool criterion_extraction(std::string& detail) {
  struct Want {
    int n;
    TypeTag type;
  };
  std::vector<Want> wants = {{1, TypeTag::K4Type},  {2, TypeTag::K4Type},
                             {4, TypeTag::Theta4Type}, {6, TypeTag::K23Type},
                             {7, TypeTag::K23Type}, {8, TypeTag::K23Type},
                             {9, TypeTag::K23Type}};
  for (auto& w : wants) {
    ExtractionTrace t = extract_critical(family(w.n));
    if (t.steps.size() > 20) {
      detail = "family " + std::to_string(w.n) + " took " + std::to_string(t.steps.size()) +
               " moves";
      return false;
    }
    if (t.final_report.overall != Criticality::Critical ||
        classify_type(t.final_complex) != w.type) {
      detail = "family " + std::to_string(w.n) + " terminated at " +
               type_tag_str(classify_type(t.final_complex));
      return false;
    }
  }
  for (int n : {3, 5}) {
    ExtractionTrace t = extract_critical(family(n));
    if (!t.steps.empty() || t.final_report.overall != Criticality::Critical) {
      detail = "family " + std::to_string(n) + " should already be critical";
      return false;
    }
    if (classify_type(t.final_complex) != TypeTag::Unclassified) {
      detail = "family " + std::to_string(n) + " unexpectedly classified";
      return false;
    }
  }
  detail = "all extractions within 20 moves at the assigned types";
  return true;
}

bool criterion_reduction(std::string& detail) {
  for (int n : {1, 2, 6, 7}) {
    if (!check_reduction_critical_s2(critical_of(n))) {
      detail = "critical " + std::to_string(n) + " reduction not critical for the 2-sphere";
      return false;
    }
    ProductMinor m = classify_product_minor(critical_of(n));
    ProductMinor want = (n <= 2) ? ProductMinor::K5_with_K14 : ProductMinor::K33_with_K13;
    if (m != want) {
      detail = "critical " + std::to_string(n) + " minor pattern " + product_minor_str(m);
      return false;
    }
  }
  detail = "reduction criticality and minor patterns match";
  return true;
}

bool criterion_cone(std::string& detail) {
  Verdict v5 = decide_embeddable_s3(cone_complex(complete_graph(5)));
  if (v5.kind != VerdictKind::NotEmbeddable ||
      v5.obstruction->kind != ObstructionKind::NonplanarLink) {
    detail = "cone over K5 not obstructed by its link";
    return false;
  }
  Graph link = link_graph(cone_complex(complete_graph(5)), PointClass::cone_apex());
  if (!validate_kuratowski(link, v5.obstruction->certificate)) {
    detail = "link certificate failed validation";
    return false;
  }
  if (link_planarity_check(cone_complex(complete_graph(4))).has_value()) {
    detail = "link check fired on the cone over K4";
    return false;
  }
  detail = "link obstruction carries a valid K5 witness; K4 cone stays quiet";
  return true;
}

bool criterion_genus(std::string& detail) {
  if (min_genus(complete_graph(4)) != 0 || min_genus(complete_graph(5)) != 1 ||
      min_genus(complete_bipartite(3, 3)) != 1) {
    detail = "fixed genus values wrong";
    return false;
  }
  auto corpus = connected_simple_graphs(5);
  for (auto& g : corpus)
    if ((min_genus(g) == 0) != is_planar(g)) {
      detail = "rotation enumeration disagrees with planarity";
      return false;
    }
  detail = std::to_string(corpus.size()) + " graphs agree with the planarity oracle";
  return true;
}

bool criterion_soundness(std::string& detail) {
  int embeddable = 0, obstructed = 0, undecided = 0, sufficiency_checked = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    MBComplex x = testing::random_complex(seed);
    Verdict v = decide_embeddable_s3(x);
    switch (v.kind) {
      case VerdictKind::Embeddable: {
        ++embeddable;
        if (!v.witness || v.obstruction) {
          detail = "seed " + std::to_string(seed) + ": inconsistent embeddable verdict";
          return false;
        }
        if (!verify_verdict(x, v)) {
          detail = "seed " + std::to_string(seed) + ": witness failed validation";
          return false;
        }
        break;
      }
      case VerdictKind::NotEmbeddable: {
        ++obstructed;
        if (!v.obstruction || v.witness) {
          detail = "seed " + std::to_string(seed) + ": inconsistent obstruction";
          return false;
        }
        if (v.obstruction->kind != ObstructionKind::ExhaustiveInfeasibility &&
            !verify_verdict(x, v)) {
          detail = "seed " + std::to_string(seed) + ": certificate failed validation";
          return false;
        }
        break;
      }
      case VerdictKind::Undecided: ++undecided; break;
    }
    if (x.piece_free()) {
      auto s = sufficiency_by_reduction(x);
      if (s) {
        ++sufficiency_checked;
        EngineOptions opt;
        opt.force_search = true;
        if (decide_embeddable_s3(x, opt).kind != VerdictKind::Embeddable) {
          detail = "seed " + std::to_string(seed) + ": search disagrees with sufficiency";
          return false;
        }
      }
    }
  }
  detail = std::to_string(embeddable) + " embeddable / " + std::to_string(obstructed) +
           " obstructed / " + std::to_string(undecided) + " undecided; " +
           std::to_string(sufficiency_checked) + " sufficiency cross-checks";
  return true;
}

bool criterion_poset(std::string& detail) {
  Graph k5 = complete_graph(5);
  for (int e = 0; e < 10; ++e) {
    Graph sub = k5.without_edge(e);
    sub.add_vertex(5);
    sub.add_edge(20, k5.edge(e).u, 5);
    sub.add_edge(21, 5, k5.edge(e).v);
    if (graph_class_relation(k5, sub) != ClassRelation::EqualClass) {
      detail = "subdividing edge " + std::to_string(e) + " changed the class";
      return false;
    }
  }
  if (graph_class_relation(k5, complete_bipartite(3, 3)) != ClassRelation::Incomparable) {
    detail = "K5 and K33 should be incomparable";
    return false;
  }
  detail = "subdivision invariance and incomparability hold";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "planarity obstruction set over all connected graphs on <= 6 vertices", 60},
      {2, "family verdicts with documented obstruction classes", 120},
      {3, "criticality of the nine listed subcomplexes", 600},
      {4, "extraction terminates at the assigned types within 20 moves", 600},
      {5, "reduction criticality and product-minor patterns", 120},
      {6, "cone obstruction via link planarity", 1},
      {7, "genus oracle against planarity on <= 5 vertices", 300},
      {8, "soundness sweep over 1000 random complexes", 900},
      {9, "poset sanity for subdivision classes", 10},
  };

  bool all = true;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    switch (c.id) {
      case 1: c.passed = criterion_gamma_s2(c.detail); break;
      case 2: c.passed = criterion_family_verdicts(c.detail); break;
      case 3: c.passed = criterion_criticality(c.detail); break;
      case 4: c.passed = criterion_extraction(c.detail); break;
      case 5: c.passed = criterion_reduction(c.detail); break;
      case 6: c.passed = criterion_cone(c.detail); break;
      case 7: c.passed = criterion_genus(c.detail); break;
      case 8: c.passed = criterion_soundness(c.detail); break;
      case 9: c.passed = criterion_poset(c.detail); break;
    }
    auto t1 = std::chrono::steady_clock::now();
    c.seconds = std::chrono::duration<double>(t1 - t0).count();
    if (c.seconds > c.limit_seconds) {
      c.passed = false;
      c.detail += " (time limit " + std::to_string(c.limit_seconds) + "s exceeded)";
    }
    all = all && c.passed;
    std::cout << "criterion " << c.id << ": " << (c.passed ? "PASS" : "FAIL") << "  ["
              << std::fixed << std::setprecision(2) << c.seconds << "s]  " << c.name << " — "
              << c.detail << "\n";
  }
  std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}
