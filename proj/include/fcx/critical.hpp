#pragma once

// Criticality analysis: per-stratum deletion verdicts, greedy extraction of
// a critical subcomplex, pattern classification of the extracted complexes,
// the surface-criticality check of reductions, and the graph poset under
// mutual topological embedding.

#include "fcx/engine.hpp"
#include "fcx/rewrite.hpp"

namespace fcx {

enum class Criticality { Critical, NotCritical, Undecided };

struct CriticalityRow {
  PointClass cls;
  VerdictKind verdict = VerdictKind::Undecided;
  std::string note;
};

struct CriticalityReport {
  VerdictKind original = VerdictKind::Undecided;
  Criticality overall = Criticality::Undecided;
  std::optional<PointClass> witness;  // NotCritical: a deletion that stays obstructed
  std::vector<CriticalityRow> rows;

  int undecided_rows() const {
    int n = 0;
    for (auto& r : rows)
      if (r.verdict == VerdictKind::Undecided) ++n;
    return n;
  }

  json to_json() const {
    json j;
    j["schema"] = "fcx/1";
    j["original"] = original == VerdictKind::Embeddable
                        ? "embeddable"
                        : original == VerdictKind::NotEmbeddable ? "not-embeddable" : "undecided";
    j["overall"] = overall == Criticality::Critical
                       ? "critical"
                       : overall == Criticality::NotCritical ? "not-critical" : "undecided";
    if (witness) j["witness"] = witness->to_json();
    json rj = json::array();
    for (auto& r : rows) {
      json jr;
      jr["class"] = r.cls.str();
      jr["verdict"] = r.verdict == VerdictKind::Embeddable
                          ? "embeddable"
                          : r.verdict == VerdictKind::NotEmbeddable ? "not-embeddable"
                                                                    : "undecided";
      if (!r.note.empty()) jr["note"] = r.note;
      rj.push_back(jr);
    }
    j["rows"] = rj;
    return j;
  }
};

inline CriticalityReport check_critical_s3(const MBComplex& x, const EngineOptions& opt = {}) {
  CriticalityReport rep;
  Verdict orig = decide_embeddable_s3(x, opt);
  rep.original = orig.kind;
  for (auto& s : deletion_surrogates(x)) {
    CriticalityRow row;
    row.cls = s.cls;
    row.note = s.note;
    row.verdict = decide_embeddable_s3(s.surrogate, opt).kind;
    rep.rows.push_back(std::move(row));
  }
  if (orig.kind != VerdictKind::NotEmbeddable) {
    rep.overall = orig.kind == VerdictKind::Embeddable ? Criticality::NotCritical
                                                       : Criticality::Undecided;
    return rep;
  }
  bool all_embed = true;
  for (auto& r : rep.rows) {
    if (r.verdict == VerdictKind::NotEmbeddable) {
      rep.overall = Criticality::NotCritical;
      rep.witness = r.cls;
      return rep;
    }
    if (r.verdict != VerdictKind::Embeddable) all_embed = false;
  }
  rep.overall = all_embed ? Criticality::Critical : Criticality::Undecided;
  return rep;
}

// ---- extraction ---------------------------------------------------------------

struct StuckUndecided : ComplexError {
  StuckUndecided() : ComplexError("extraction stuck: remaining moves are undecided") {}
};

struct ExtractionStep {
  std::string move;
  MBComplex complex;
  VerdictKind verdict = VerdictKind::NotEmbeddable;
};

struct ExtractionTrace {
  std::vector<ExtractionStep> steps;
  MBComplex final_complex;
  CriticalityReport final_report;
  bool flagged_undecided = false;

  json to_json() const {
    json j;
    j["schema"] = "fcx/1";
    json st = json::array();
    for (auto& s : steps)
      st.push_back({{"move", s.move}, {"complex", s.complex.to_json()}, {"verdict", "not-embeddable"}});
    j["steps"] = st;
    j["final"] = final_complex.to_json();
    j["final_report"] = final_report.to_json();
    if (flagged_undecided) j["flagged_undecided"] = true;
    return j;
  }
};

// Greedy spine replacements and H deletions, committing whichever move keeps
// the complex obstructed: spine moves on sectors first (annuli in edge-id
// order, then pieces in id order), then H edge deletions, then H vertex
// deletions. The fixed priority keeps traces reproducible.
inline ExtractionTrace extract_critical(const MBComplex& x, const EngineOptions& opt = {},
                                        int max_moves = 64) {
  Verdict v0 = decide_embeddable_s3(x, opt);
  if (v0.kind != VerdictKind::NotEmbeddable)
    throw ComplexError("extraction requires a complex obstructed for the 3-sphere");
  ExtractionTrace trace;
  MBComplex cur = x;
  for (int step = 0; step < max_moves; ++step) {
    bool committed = false;
    bool saw_undecided = false;
    auto try_move = [&](const MBComplex& cand, const std::string& label) {
      Verdict v = decide_embeddable_s3(cand, opt);
      if (v.kind == VerdictKind::NotEmbeddable) {
        trace.steps.push_back({label, cand, v.kind});
        cur = cand;
        committed = true;
        return true;
      }
      if (v.kind == VerdictKind::Undecided) saw_undecided = true;
      return false;
    };
    for (auto& sec : cur.sectors()) {
      if (try_move(surrogate_sector_interior(cur, sec), "puncture " + sec.str())) break;
    }
    if (!committed)
      for (auto& e : cur.hpart.edges) {
        if (try_move(surrogate_h_edge(cur, e.id), "remove h-edge " + std::to_string(e.id)))
          break;
      }
    if (!committed)
      for (auto& hv : cur.hpart.vertices) {
        if (try_move(surrogate_h_vertex(cur, hv.id),
                     "remove h-vertex " + std::to_string(hv.id)))
          break;
      }
    if (!committed) {
      trace.final_complex = cur;
      trace.final_report = check_critical_s3(cur, opt);
      if (trace.final_report.overall != Criticality::Critical) {
        trace.flagged_undecided = true;
        if (saw_undecided || trace.final_report.undecided_rows() > 0) throw StuckUndecided();
      }
      return trace;
    }
  }
  trace.final_complex = cur;
  trace.final_report = check_critical_s3(cur, opt);
  trace.flagged_undecided = trace.final_report.overall != Criticality::Critical;
  return trace;
}

// ---- type classification --------------------------------------------------------

enum class TypeTag { K4Type, Theta4Type, K23Type, Unclassified };

inline std::string type_tag_str(TypeTag t) {
  switch (t) {
    case TypeTag::K4Type: return "K4-type";
    case TypeTag::Theta4Type: return "Theta4-type";
    case TypeTag::K23Type: return "K23-type";
    case TypeTag::Unclassified: return "unclassified";
  }
  return "?";
}

namespace detail {

// A site is interior to a 2-manifold part when it is in a sector interior or
// on a branch of total degree two (such branch circles have a 2-manifold
// neighborhood). The identity of the surrounding sector distinguishes sites.
inline std::optional<std::string> sector_like_class(const MBComplex& x, const HSite& s) {
  if (auto* is = std::get_if<SiteInSector>(&s)) return is->sector.str();
  if (auto* ob = std::get_if<SiteOnBranch>(&s))
    if (x.branch_degree(ob->branch) == 2) return "around-branch:" + std::to_string(ob->branch);
  return std::nullopt;
}

struct HShape {
  bool is_forest = true;
  bool connected = true;
  std::vector<int> leaves;      // degree-1 vertex ids
  std::vector<int> internal;    // the rest
};

inline HShape h_shape(const HGraph& h) {
  HShape s;
  std::map<int, int> deg;
  for (auto& v : h.vertices) deg[v.id] = 0;
  for (auto& e : h.edges) {
    deg[e.u]++;
    deg[e.v]++;
    if (e.u == e.v) s.is_forest = false;
  }
  if (h.edges.size() + 1 != h.vertices.size()) s.is_forest = false;  // tree check below
  // connectivity
  if (!h.vertices.empty()) {
    std::set<int> seen{h.vertices.front().id};
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto& e : h.edges) {
        if (seen.count(e.u) && !seen.count(e.v)) {
          seen.insert(e.v);
          grew = true;
        }
        if (seen.count(e.v) && !seen.count(e.u)) {
          seen.insert(e.u);
          grew = true;
        }
      }
    }
    s.connected = seen.size() == h.vertices.size();
  }
  for (auto& [v, d] : deg) (d == 1 ? s.leaves : s.internal).push_back(v);
  return s;
}

}  // namespace detail

inline TypeTag classify_type(const MBComplex& x) {
  const HGraph& h = x.hpart;
  if (h.edges.empty()) return TypeTag::Unclassified;

  auto shape = detail::h_shape(h);

  // Theta4: exactly three edges between sector-interior sites covering the
  // three pairs of three distinct sectors (a triangle or three disjoint arcs).
  if (h.edges.size() == 3) {
    std::set<std::pair<std::string, std::string>> pairs;
    std::set<std::string> classes;
    bool ok = true;
    for (auto& e : h.edges) {
      auto cu = detail::sector_like_class(x, h.vertex(e.u).site);
      auto cv = detail::sector_like_class(x, h.vertex(e.v).site);
      if (!cu || !cv || *cu == *cv) {
        ok = false;
        break;
      }
      classes.insert(*cu);
      classes.insert(*cv);
      pairs.insert({std::min(*cu, *cv), std::max(*cu, *cv)});
    }
    if (ok && classes.size() == 3 && pairs.size() == 3) return TypeTag::Theta4Type;
  }

  // tree patterns
  if (shape.is_forest && shape.connected && !h.edges.empty()) {
    // K4: a tree with exactly four leaves held by four distinct genuine
    // branches (degree >= 3); internal vertices float free. Any such tree
    // carries the 4-star as a minor.
    if (shape.leaves.size() == 4) {
      std::set<int> branches;
      bool ok = true;
      for (int l : shape.leaves) {
        auto& site = h.vertex(l).site;
        auto* ob = std::get_if<SiteOnBranch>(&site);
        if (!ob || x.branch_degree(ob->branch) < 3) {
          ok = false;
          break;
        }
        branches.insert(ob->branch);
      }
      for (int v : shape.internal)
        if (!std::holds_alternative<SiteFree>(h.vertex(v).site)) ok = false;
      if (ok && branches.size() == 4) return TypeTag::K4Type;
    }
    // K23: a subdivided 3-star whose leaves sit in three distinct
    // sector-interior sites.
    if (shape.leaves.size() == 3) {
      std::set<std::string> classes;
      bool ok = true;
      for (int l : shape.leaves) {
        auto c = detail::sector_like_class(x, h.vertex(l).site);
        if (!c) {
          ok = false;
          break;
        }
        classes.insert(*c);
      }
      for (int v : shape.internal)
        if (!std::holds_alternative<SiteFree>(h.vertex(v).site)) ok = false;
      if (ok && classes.size() == 3) return TypeTag::K23Type;
    }
  }
  return TypeTag::Unclassified;
}

// ---- reductions critical for the 2-sphere ----------------------------------------

inline bool check_reduction_critical_s2(const MBComplex& x,
                                        std::uint64_t budget = 100'000'000) {
  if (!x.piece_free()) throw ComplexError("reduction criticality needs a piece-free complex");
  Graph r = reduction(x);
  return graph_critical_for_surface(r, 0, budget);
}

// ---- poset of graphs under mutual embedding ---------------------------------------

enum class ClassRelation { EqualClass, AStrictlyBelow, BStrictlyBelow, Incomparable };

inline std::string class_relation_str(ClassRelation r) {
  switch (r) {
    case ClassRelation::EqualClass: return "equal-class";
    case ClassRelation::AStrictlyBelow: return "a-strictly-below";
    case ClassRelation::BStrictlyBelow: return "b-strictly-below";
    case ClassRelation::Incomparable: return "incomparable";
  }
  return "?";
}

inline ClassRelation graph_class_relation(const Graph& a, const Graph& b,
                                          std::uint64_t budget = 10'000'000) {
  bool ab = embeds_topologically(a, b, budget);
  bool ba = embeds_topologically(b, a, budget);
  if (ab && ba) return ClassRelation::EqualClass;
  if (ab) return ClassRelation::AStrictlyBelow;
  if (ba) return ClassRelation::BStrictlyBelow;
  return ClassRelation::Incomparable;
}

}  // namespace fcx
