#pragma once

// The S^3-embeddability decision pipeline.
//
//   1. a nonplanar core kills every embedding (the product of a graph with a
//      circle embeds only over a planar graph);
//   2. a nonplanar point link kills every embedding;
//   3. for piece-free complexes a planar reduction G ∪ H lifts to a vertical
//      embedding inside a solid torus;
//   4. otherwise search every standard arrangement for a placement of the
//      pieces and the graph part, with certificates either way.
//
// Verdicts carry machine-checkable certificates: Kuratowski witnesses for 1
// and 2, the placement for Embeddable, and the recorded per-arrangement
// failures for exhaustive infeasibility.

#include <atomic>
#include <cstdlib>
#include <thread>

#include "fcx/placement.hpp"
#include "fcx/planarity.hpp"
#include "fcx/subdivision.hpp"
#include "fcx/surrogate.hpp"

namespace fcx {

enum class VerdictKind { Embeddable, NotEmbeddable, Undecided };

enum class ObstructionKind { NonplanarCore, NonplanarLink, ExhaustiveInfeasibility };

struct ArrangementFailure {
  int arrangement = -1;
  std::string arrangement_code;
  std::vector<FailureRecord> failures;
};

struct Obstruction {
  ObstructionKind kind = ObstructionKind::NonplanarCore;
  KuratowskiCertificate certificate;  // NonplanarCore / NonplanarLink
  PointClass link_point;              // NonplanarLink
  std::vector<ArrangementFailure> infeasibility;

  json to_json() const {
    json j;
    switch (kind) {
      case ObstructionKind::NonplanarCore:
        j["obstruction"] = "nonplanar-core";
        j["kuratowski"] = certificate.to_json();
        break;
      case ObstructionKind::NonplanarLink:
        j["obstruction"] = "nonplanar-link";
        j["point"] = link_point.to_json();
        j["kuratowski"] = certificate.to_json();
        break;
      case ObstructionKind::ExhaustiveInfeasibility: {
        j["obstruction"] = "exhaustive-infeasibility";
        json arr = json::array();
        for (auto& a : infeasibility) {
          json fa = json::array();
          for (auto& f : a.failures) fa.push_back(f.to_json());
          arr.push_back({{"arrangement", a.arrangement},
                         {"code", a.arrangement_code},
                         {"failures", fa}});
        }
        j["arrangements"] = arr;
        break;
      }
    }
    return j;
  }

  // every failure kind recorded anywhere
  std::set<std::string> failure_kinds() const {
    std::set<std::string> out;
    for (auto& a : infeasibility)
      for (auto& f : a.failures) out.insert(f.kind_str());
    return out;
  }
};

enum class WitnessKind { Placement, VerticalReduction, PlanarCone };

struct EmbeddingWitness {
  WitnessKind kind = WitnessKind::Placement;
  PlacementWitness placement;  // Placement
  Graph reduction;             // VerticalReduction: the planar graph
  json to_json() const {
    json j;
    switch (kind) {
      case WitnessKind::Placement:
        j["witness"] = "placement";
        j["placement"] = placement.to_json();
        break;
      case WitnessKind::VerticalReduction:
        j["witness"] = "vertical-reduction";
        j["reduction"] = reduction.to_json();
        break;
      case WitnessKind::PlanarCone:
        j["witness"] = "planar-cone";
        break;
    }
    return j;
  }
};

struct SearchStats {
  std::uint64_t embeddings_searched = 0;
  std::uint64_t nodes = 0;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::optional<EmbeddingWitness> witness;
  std::optional<Obstruction> obstruction;
  std::string reason;  // Undecided
  SearchStats stats;

  bool embeddable() const { return kind == VerdictKind::Embeddable; }
  bool not_embeddable() const { return kind == VerdictKind::NotEmbeddable; }
  bool undecided() const { return kind == VerdictKind::Undecided; }

  json to_json() const {
    json j;
    j["schema"] = "fcx/1";
    j["verdict"] = kind == VerdictKind::Embeddable
                       ? "embeddable"
                       : kind == VerdictKind::NotEmbeddable ? "not-embeddable" : "undecided";
    if (witness) j["certificate"] = witness->to_json();
    if (obstruction) j["certificate"] = obstruction->to_json();
    if (!reason.empty()) j["reason"] = reason;
    j["stats"] = {{"embeddings_searched", stats.embeddings_searched}, {"nodes", stats.nodes}};
    return j;
  }
};

struct EngineOptions {
  std::uint64_t rotation_budget = 100'000'000;
  std::uint64_t node_budget = 10'000'000;
  int threads = 1;
  bool force_search = false;     // run the placement search even when the
                                 // reduction shortcut fires (cross-check mode)
  bool shuffle = false;          // permute arrangement order (determinism test)
  std::uint64_t shuffle_seed = 0;

  static EngineOptions from_env() {
    EngineOptions o;
    if (const char* s = std::getenv("FCX_MAX_NODES")) o.node_budget = std::strtoull(s, nullptr, 10);
    return o;
  }
};

// ---- reduction --------------------------------------------------------------

// Collapse of the circle factor: G ∪ H as a graph. OnBranch vertices merge
// into core vertices, annulus-interior vertices subdivide their core edge,
// pieces become stars (a disk a pendant, a P_k a k-star), and H vertices in
// piece interiors merge into the star center.
struct ReductionResult {
  Graph graph;
  std::set<int> h_edges;       // edge ids of H origin
  std::map<int, int> h_vertex_image;
};

inline ReductionResult reduce_complex(const MBComplex& x) {
  ReductionResult r;
  Graph& g = r.graph;
  for (int v : x.core.vertices()) g.add_vertex(v);
  int next_v = x.core.next_vertex_id();
  int next_e = 0;
  for (auto& e : x.core.edges()) next_e = std::max(next_e, e.id + 1);

  // annulus-interior H vertices subdivide their edge, in id order
  std::map<int, std::vector<int>> subdiv;  // core edge -> H vertex ids
  for (auto& hv : x.hpart.vertices)
    if (auto* is = std::get_if<SiteInSector>(&hv.site))
      if (!is->sector.piece) subdiv[is->sector.id].push_back(hv.id);
  for (auto& [e, vs] : subdiv) std::sort(vs.begin(), vs.end());

  for (auto& e : x.core.edges()) {
    auto it = subdiv.find(e.id);
    if (it == subdiv.end()) {
      g.add_edge(e.id, e.u, e.v);
      continue;
    }
    int prev = e.u;
    for (int hv : it->second) {
      int nv = next_v++;
      r.h_vertex_image[hv] = nv;
      g.add_vertex(nv);
      g.add_edge(next_e++, prev, nv);
      prev = nv;
    }
    g.add_edge(next_e++, prev, e.v);
  }

  // piece stars
  std::map<int, int> piece_center;
  for (auto& p : x.pieces) {
    int c = next_v++;
    g.add_vertex(c);
    piece_center[p.id] = c;
    for (int b : p.branches) g.add_edge(next_e++, c, b);
  }

  for (auto& hv : x.hpart.vertices) {
    if (std::holds_alternative<SiteFree>(hv.site)) {
      int nv = next_v++;
      g.add_vertex(nv);
      r.h_vertex_image[hv.id] = nv;
    } else if (auto* ob = std::get_if<SiteOnBranch>(&hv.site)) {
      r.h_vertex_image[hv.id] = ob->branch;
    } else {
      auto& sec = std::get<SiteInSector>(hv.site).sector;
      if (sec.piece) r.h_vertex_image[hv.id] = piece_center.at(sec.id);
      // annulus case handled above
    }
  }
  for (auto& e : x.hpart.edges) {
    int eu = r.h_vertex_image.at(e.u);
    int ev = r.h_vertex_image.at(e.v);
    int id = next_e++;
    g.add_edge(id, eu, ev);
    r.h_edges.insert(id);
  }
  return r;
}

inline Graph reduction(const MBComplex& x) { return reduce_complex(x).graph; }

inline std::optional<Verdict> sufficiency_by_reduction(const MBComplex& x) {
  if (!x.piece_free() || x.cone_over) return std::nullopt;
  Graph r = reduction(x);
  if (!is_planar(r)) return std::nullopt;
  Verdict v;
  v.kind = VerdictKind::Embeddable;
  EmbeddingWitness w;
  w.kind = WitnessKind::VerticalReduction;
  w.reduction = r;
  v.witness = w;
  return v;
}

inline std::optional<Verdict> link_planarity_check(const MBComplex& x) {
  for (auto& pc : x.point_classes()) {
    Graph link = link_graph(x, pc);
    if (is_planar(link)) continue;
    Verdict v;
    v.kind = VerdictKind::NotEmbeddable;
    Obstruction o;
    o.kind = ObstructionKind::NonplanarLink;
    o.link_point = pc;
    o.certificate = kuratowski_certificate(link);
    v.obstruction = o;
    return v;
  }
  return std::nullopt;
}

// ---- the search --------------------------------------------------------------

inline std::optional<PlacementWitness> placement_feasible(const MBComplex& x,
                                                          const RegionModel& rm,
                                                          const EngineOptions& opt = {}) {
  Arrangement arr;
  ComponentModel cm;
  // rebuild a single-component arrangement from the given region model
  cm.sub = x.core;
  cm.emb = rm.embedding;
  cm.faces = rm.faces;
  cm.outer_walk = face_walk_items(rm.faces.faces[rm.embedding.outer_face]);
  for (int f = 0; f < static_cast<int>(rm.faces.faces.size()); ++f)
    if (f != rm.embedding.outer_face) cm.inner_faces.push_back(f);
  arr.comps.push_back(std::move(cm));
  std::uint64_t nodes = opt.node_budget;
  PlacementSearch s(x, arr, 0, &nodes, /*run_validation=*/false);
  auto out = s.run();
  if (out.status == ArrangementOutcome::Status::Witness) return out.witness;
  return std::nullopt;
}

inline Verdict decide_embeddable_s3(const MBComplex& x, const EngineOptions& opt = {}) {
  x.validate();
  Verdict v;

  // (1) nonplanar core component
  for (auto& comp : x.core.components()) {
    Graph sub = x.core.induced(comp);
    if (!is_planar(sub)) {
      v.kind = VerdictKind::NotEmbeddable;
      Obstruction o;
      o.kind = ObstructionKind::NonplanarCore;
      o.certificate = kuratowski_certificate(sub);
      v.obstruction = o;
      return v;
    }
  }

  // (2) nonplanar point link
  if (auto lv = link_planarity_check(x)) return *lv;

  // cones beyond the link check: a bare cone over a planar graph embeds;
  // mixed cone complexes are outside the supported class
  if (x.cone_over) {
    if (x.core.vertices().empty() && x.pieces.empty() && x.hpart.empty()) {
      v.kind = VerdictKind::Embeddable;
      EmbeddingWitness w;
      w.kind = WitnessKind::PlanarCone;
      v.witness = w;
      return v;
    }
    v.kind = VerdictKind::Undecided;
    v.reason = "cone combined with other material is outside the supported class";
    return v;
  }

  // (3) planar reduction lifts vertically
  std::optional<Verdict> sufficiency = sufficiency_by_reduction(x);
  if (sufficiency && !opt.force_search) return *sufficiency;

  // (4) exhaustive placement search over standard arrangements
  std::vector<Arrangement> arrangements;
  try {
    arrangements = enumerate_arrangements(x.core, opt.rotation_budget);
  } catch (const BudgetExceeded&) {
    v.kind = VerdictKind::Undecided;
    v.reason = "arrangement budget exceeded";
    return v;
  }
  if (opt.shuffle) {
    // deterministic pseudo-shuffle used by the order-independence tests
    std::vector<Arrangement> shuffled;
    std::vector<std::size_t> order(arrangements.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::uint64_t state = opt.shuffle_seed * 2654435761u + 1;
    for (std::size_t i = order.size(); i > 1; --i) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      std::swap(order[i - 1], order[(state >> 33) % i]);
    }
    for (std::size_t i : order) shuffled.push_back(arrangements[i]);
    arrangements = std::move(shuffled);
  }
  v.stats.embeddings_searched = arrangements.size();

  bool connected_core = x.core.components().size() <= 1;
  std::vector<ArrangementOutcome> outcomes(arrangements.size());
  std::atomic<std::uint64_t> nodes_used{0};
  std::atomic<bool> budget_hit{false};

  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi && !budget_hit.load(); ++i) {
      std::uint64_t nodes = opt.node_budget;
      PlacementSearch s(x, arrangements[i], static_cast<int>(i), &nodes, true);
      try {
        outcomes[i] = s.run();
      } catch (const BudgetExceeded&) {
        budget_hit.store(true);
      }
      nodes_used += opt.node_budget - nodes;
    }
  };
  int nthreads = std::max(1, opt.threads);
  if (nthreads == 1 || arrangements.size() <= 1) {
    run_range(0, arrangements.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (arrangements.size() + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      std::size_t lo = t * chunk;
      std::size_t hi = std::min(arrangements.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  v.stats.nodes = nodes_used.load();

  if (budget_hit.load()) {
    v.kind = VerdictKind::Undecided;
    v.reason = "node budget exceeded";
    return v;
  }

  // deterministic merge: lowest-index witness wins
  bool gap = false;
  bool unsupported = false;
  std::vector<ArrangementFailure> failures;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& oc = outcomes[i];
    if (oc.status == ArrangementOutcome::Status::Witness) {
      Verdict w;
      w.kind = VerdictKind::Embeddable;
      EmbeddingWitness ew;
      ew.kind = WitnessKind::Placement;
      ew.placement = *oc.witness;
      w.witness = ew;
      w.stats = v.stats;
      return w;
    }
    if (oc.status == ArrangementOutcome::Status::Gap) gap = true;
    if (oc.status == ArrangementOutcome::Status::Unsupported) unsupported = true;
    if (oc.status == ArrangementOutcome::Status::Infeasible)
      failures.push_back({static_cast<int>(i), arrangements[i].code(), oc.failures});
  }

  if (sufficiency) return *sufficiency;  // force_search mode fell through

  if (!gap && !unsupported && connected_core) {
    v.kind = VerdictKind::NotEmbeddable;
    Obstruction o;
    o.kind = ObstructionKind::ExhaustiveInfeasibility;
    o.infeasibility = std::move(failures);
    v.obstruction = o;
    return v;
  }
  if (!gap && !unsupported && !connected_core) {
    v.kind = VerdictKind::Undecided;
    v.reason = "no placement in the searched arrangements; disconnected cores are "
               "searched over sea arrangements only";
    return v;
  }
  v.kind = VerdictKind::Undecided;
  v.reason = unsupported ? "arrangement outside the supported chamber structure"
                         : "feasible placements failed witness validation";
  return v;
}

// ---- product-minor classification --------------------------------------------

enum class ProductMinor { K5_with_K14, K5_with_K3, K33_with_K13, None };

inline std::string product_minor_str(ProductMinor m) {
  switch (m) {
    case ProductMinor::K5_with_K14: return "K5-with-K14";
    case ProductMinor::K5_with_K3: return "K5-with-K3";
    case ProductMinor::K33_with_K13: return "K33-with-K13";
    case ProductMinor::None: return "none";
  }
  return "?";
}

// Which H' pattern is realized by the H-originated edges inside a Kuratowski
// subdivision of the reduction.
inline ProductMinor classify_product_minor(const MBComplex& x,
                                           std::uint64_t budget = 10'000'000) {
  if (!x.piece_free()) return ProductMinor::None;
  ReductionResult r = reduce_complex(x);
  auto h_shape = [&](const SubdivisionWitness& w) -> std::optional<Graph> {
    // the subgraph of H-originated edges used by the witness, as vertex pairs
    Graph h;
    std::set<int> verts;
    std::vector<std::pair<int, int>> es;
    for (auto& [he, path] : w.edge_paths) {
      (void)he;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        // find the edge used between path[i] and path[i+1]
        for (auto& e : r.graph.edges())
          if (r.h_edges.count(e.id) &&
              ((e.u == path[i] && e.v == path[i + 1]) || (e.v == path[i] && e.u == path[i + 1]))) {
            verts.insert(e.u);
            verts.insert(e.v);
            es.push_back({e.u, e.v});
            break;
          }
      }
    }
    for (int v : verts) h.add_vertex(v);
    int id = 0;
    for (auto& [a, b] : es) h.add_edge(id++, a, b);
    return h;
  };

  if (auto w = find_subdivision(complete_graph(5), r.graph, budget)) {
    auto h = h_shape(*w);
    if (h) {
      // star with 4 leaves?
      std::map<int, int> deg;
      for (auto& e : h->edges()) {
        deg[e.u]++;
        deg[e.v]++;
      }
      int centers = 0, leaves = 0;
      for (auto& [v, d] : deg) (d >= 2 ? centers : leaves) += 1;
      if (h->edge_count() == 4 && centers == 1 && leaves == 4) return ProductMinor::K5_with_K14;
      if (h->edge_count() == 3 && h->vertex_count() == 3 && centers == 3)
        return ProductMinor::K5_with_K3;
    }
  }
  if (auto w = find_subdivision(complete_bipartite(3, 3), r.graph, budget)) {
    auto h = h_shape(*w);
    if (h) {
      std::map<int, int> deg;
      for (auto& e : h->edges()) {
        deg[e.u]++;
        deg[e.v]++;
      }
      int centers = 0, leaves = 0;
      for (auto& [v, d] : deg) (d >= 2 ? centers : leaves) += 1;
      if (h->edge_count() == 3 && centers == 1 && leaves == 3) return ProductMinor::K33_with_K13;
    }
  }
  return ProductMinor::None;
}

// ---- certificate / witness verification ---------------------------------------

// Re-checks a verdict using only the verdict payload and the input complex.
// Kuratowski certificates verify in polynomial time; an exhaustive
// infeasibility certificate is verified by a deterministic replay of the
// recorded search.
inline bool verify_verdict(const MBComplex& x, const Verdict& v,
                           const EngineOptions& opt = {}) {
  switch (v.kind) {
    case VerdictKind::Undecided:
      return true;
    case VerdictKind::NotEmbeddable: {
      if (!v.obstruction) return false;
      const Obstruction& o = *v.obstruction;
      if (o.kind == ObstructionKind::NonplanarCore) {
        for (auto& comp : x.core.components()) {
          Graph sub = x.core.induced(comp);
          if (validate_kuratowski(sub.simplified(), o.certificate)) return true;
        }
        return false;
      }
      if (o.kind == ObstructionKind::NonplanarLink) {
        Graph link = link_graph(x, o.link_point);
        return validate_kuratowski(link.simplified(), o.certificate);
      }
      // replay
      Verdict again = decide_embeddable_s3(x, opt);
      if (again.kind != VerdictKind::NotEmbeddable || !again.obstruction) return false;
      if (again.obstruction->kind != ObstructionKind::ExhaustiveInfeasibility) return false;
      auto& a = again.obstruction->infeasibility;
      auto& b = o.infeasibility;
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].arrangement_code != b[i].arrangement_code || a[i].failures != b[i].failures)
          return false;
      return true;
    }
    case VerdictKind::Embeddable: {
      if (!v.witness) return false;
      const EmbeddingWitness& w = *v.witness;
      if (w.kind == WitnessKind::VerticalReduction) {
        if (!x.piece_free()) return false;
        Graph r = reduction(x);
        return r.code() == w.reduction.code() && is_planar(r);
      }
      if (w.kind == WitnessKind::PlanarCone) {
        return x.cone_over && is_planar(*x.cone_over) && x.core.vertices().empty() &&
               x.pieces.empty() && x.hpart.empty();
      }
      // placement witness: rebuild the named arrangement and re-run the
      // placement checks deterministically (no search beyond the replay)
      std::vector<Arrangement> arrangements = enumerate_arrangements(x.core, opt.rotation_budget);
      for (auto& arr : arrangements) {
        if (arr.code() != w.placement.arrangement_code) continue;
        std::uint64_t nodes = opt.node_budget;
        PlacementSearch s(x, arr, w.placement.arrangement_index, &nodes, true);
        auto oc = s.run();
        return oc.status == ArrangementOutcome::Status::Witness;
      }
      return false;
    }
  }
  return false;
}

}  // namespace fcx
