#pragma once

// The central object: a 2-complex of product form. Branch circles are the
// core vertices, vertical annuli the core edges; disks and punctured spheres
// attach to branches along degree-1 maps; a 1-dimensional graph part sits on
// branches, in sector interiors, or free in the complement. A cone part
// (apex joined to every point of a graph) is carried separately for the
// link-obstruction fixtures.

#include <optional>
#include <variant>

#include "fcx/graph.hpp"

namespace fcx {

struct ComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ArityMismatch : ComplexError {
  using ComplexError::ComplexError;
};
struct UnknownBranch : ComplexError {
  using ComplexError::ComplexError;
};

enum class SectorKind { VerticalAnnulus, Disk, PuncturedSphere };

// Pieces only; vertical annuli are implied by core edges.
struct Piece {
  int id = 0;
  SectorKind kind = SectorKind::Disk;
  std::vector<int> branches;  // length 1 for disks, k >= 2 for P_k

  bool is_disk() const { return kind == SectorKind::Disk; }
  int punctures() const { return static_cast<int>(branches.size()); }
};

// Identifies a sector: a vertical annulus (by core edge id) or a piece.
struct SectorRef {
  bool piece = false;
  int id = -1;
  friend bool operator==(const SectorRef&, const SectorRef&) = default;
  friend auto operator<=>(const SectorRef&, const SectorRef&) = default;
  static SectorRef annulus(int edge_id) { return {false, edge_id}; }
  static SectorRef of_piece(int piece_id) { return {true, piece_id}; }
  std::string str() const {
    return (piece ? "piece:" : "annulus:") + std::to_string(id);
  }
};

struct SiteFree {
  friend bool operator==(const SiteFree&, const SiteFree&) = default;
};
struct SiteOnBranch {
  int branch = -1;
  friend bool operator==(const SiteOnBranch&, const SiteOnBranch&) = default;
};
struct SiteInSector {
  SectorRef sector;
  friend bool operator==(const SiteInSector&, const SiteInSector&) = default;
};
using HSite = std::variant<SiteFree, SiteOnBranch, SiteInSector>;

inline std::string site_str(const HSite& s) {
  if (std::holds_alternative<SiteFree>(s)) return "free";
  if (auto* b = std::get_if<SiteOnBranch>(&s)) return "branch:" + std::to_string(b->branch);
  return "sector:" + std::get<SiteInSector>(s).sector.str();
}

struct HVertex {
  int id = 0;
  HSite site = SiteFree{};
};

struct HEdge {
  int id = 0;
  int u = 0;
  int v = 0;
};

struct HGraph {
  std::vector<HVertex> vertices;
  std::vector<HEdge> edges;

  bool has_vertex(int id) const {
    for (auto& v : vertices)
      if (v.id == id) return true;
    return false;
  }
  const HVertex& vertex(int id) const {
    for (auto& v : vertices)
      if (v.id == id) return v;
    throw ComplexError("unknown H vertex " + std::to_string(id));
  }
  HVertex& vertex(int id) {
    for (auto& v : vertices)
      if (v.id == id) return v;
    throw ComplexError("unknown H vertex " + std::to_string(id));
  }
  int degree(int id) const {
    int d = 0;
    for (auto& e : edges) {
      if (e.u == id) ++d;
      if (e.v == id) ++d;
    }
    return d;
  }
  int next_vertex_id() const {
    int m = 0;
    for (auto& v : vertices) m = std::max(m, v.id + 1);
    return m;
  }
  int next_edge_id() const {
    int m = 0;
    for (auto& e : edges) m = std::max(m, e.id + 1);
    return m;
  }
  bool empty() const { return vertices.empty() && edges.empty(); }
};

enum class PointClassKind { SectorInterior, BranchPoint, HEdgeInterior, HVertexPoint, ConeApex };

struct PointClass {
  PointClassKind kind = PointClassKind::SectorInterior;
  SectorRef sector;  // SectorInterior
  int id = -1;       // branch vertex / H edge / H vertex

  static PointClass sector_interior(SectorRef s) {
    return {PointClassKind::SectorInterior, s, -1};
  }
  static PointClass branch_point(int b) {
    return {PointClassKind::BranchPoint, {}, b};
  }
  static PointClass h_edge(int e) { return {PointClassKind::HEdgeInterior, {}, e}; }
  static PointClass h_vertex(int v) { return {PointClassKind::HVertexPoint, {}, v}; }
  static PointClass cone_apex() { return {PointClassKind::ConeApex, {}, -1}; }

  std::string str() const {
    switch (kind) {
      case PointClassKind::SectorInterior: return "sector-interior(" + sector.str() + ")";
      case PointClassKind::BranchPoint: return "branch(" + std::to_string(id) + ")";
      case PointClassKind::HEdgeInterior: return "h-edge(" + std::to_string(id) + ")";
      case PointClassKind::HVertexPoint: return "h-vertex(" + std::to_string(id) + ")";
      case PointClassKind::ConeApex: return "cone-apex";
    }
    return "?";
  }

  json to_json() const {
    json j;
    j["class"] = str();
    return j;
  }
};

class MBComplex {
public:
  Graph core;
  std::vector<Piece> pieces;
  HGraph hpart;
  std::optional<Graph> cone_over;

  bool has_pieces() const { return !pieces.empty(); }
  bool piece_free() const { return pieces.empty(); }

  const Piece& piece(int id) const {
    for (auto& p : pieces)
      if (p.id == id) return p;
    throw ComplexError("unknown piece " + std::to_string(id));
  }
  bool has_piece(int id) const {
    for (auto& p : pieces)
      if (p.id == id) return true;
    return false;
  }
  int next_piece_id() const {
    int m = 0;
    for (auto& p : pieces) m = std::max(m, p.id + 1);
    return m;
  }

  // Sector-boundary incidences along a branch circle.
  int branch_degree(int b) const {
    int d = core.degree(b);
    for (auto& p : pieces)
      for (int x : p.branches)
        if (x == b) ++d;
    return d;
  }

  std::vector<SectorRef> sectors() const {
    std::vector<SectorRef> out;
    for (auto& e : core.edges()) out.push_back(SectorRef::annulus(e.id));
    for (auto& p : pieces) out.push_back(SectorRef::of_piece(p.id));
    return out;
  }

  std::vector<SectorRef> sectors_at(int b) const {
    std::vector<SectorRef> out;
    for (auto& e : core.edges())
      if (e.u == b || e.v == b) out.push_back(SectorRef::annulus(e.id));
    for (auto& p : pieces)
      for (int x : p.branches)
        if (x == b) {
          out.push_back(SectorRef::of_piece(p.id));
          break;
        }
    return out;
  }

  void validate() const {
    for (auto& p : pieces) {
      if (p.kind == SectorKind::VerticalAnnulus)
        throw ComplexError("vertical annuli are implied by core edges");
      if (p.is_disk() && p.branches.size() != 1)
        throw ArityMismatch("disk must attach to exactly one branch");
      if (p.kind == SectorKind::PuncturedSphere && p.branches.size() < 2)
        throw ArityMismatch("punctured sphere needs at least two boundary circles");
      for (int b : p.branches)
        if (!core.has_vertex(b))
          throw UnknownBranch("piece attaches to unknown branch " + std::to_string(b));
    }
    std::set<int> hv;
    for (auto& v : hpart.vertices) {
      if (!hv.insert(v.id).second) throw ComplexError("duplicate H vertex id");
      if (auto* b = std::get_if<SiteOnBranch>(&v.site)) {
        if (!core.has_vertex(b->branch))
          throw UnknownBranch("H vertex on unknown branch");
      } else if (auto* s = std::get_if<SiteInSector>(&v.site)) {
        if (s->sector.piece) {
          if (!has_piece(s->sector.id)) throw ComplexError("H vertex in unknown piece");
        } else if (!core.has_edge(s->sector.id)) {
          throw ComplexError("H vertex in unknown annulus");
        }
      }
    }
    std::set<int> he;
    for (auto& e : hpart.edges) {
      if (!he.insert(e.id).second) throw ComplexError("duplicate H edge id");
      if (!hv.count(e.u) || !hv.count(e.v))
        throw ComplexError("H edge references unknown vertex");
    }
  }

  // Euler characteristic from the stratification. Branch circles and closed
  // annuli contribute 0, disks 1, P_k 2-k; free H vertices +1, H edges -1,
  // on-complex H vertices 0. A cone over g is contractible.
  int chi() const {
    if (cone_over) {
      int c = 1;
      if (!core.vertices().empty() || !pieces.empty() || !hpart.vertices.empty())
        c += chi_product_part();
      return c;
    }
    return chi_product_part();
  }

  std::vector<PointClass> point_classes() const {
    std::vector<PointClass> out;
    for (auto& s : sectors()) out.push_back(PointClass::sector_interior(s));
    for (int b : core.vertices()) out.push_back(PointClass::branch_point(b));
    for (auto& e : hpart.edges) out.push_back(PointClass::h_edge(e.id));
    for (auto& v : hpart.vertices) out.push_back(PointClass::h_vertex(v.id));
    if (cone_over) out.push_back(PointClass::cone_apex());
    return out;
  }

  json to_json() const {
    json j;
    j["core"] = core.to_json();
    json ps = json::array();
    for (auto& p : pieces)
      ps.push_back({{"id", p.id},
                    {"kind", p.is_disk() ? "D" : "P"},
                    {"branches", p.branches}});
    j["pieces"] = ps;
    json hv = json::array();
    for (auto& v : hpart.vertices) {
      json s;
      if (std::holds_alternative<SiteFree>(v.site)) {
        s = "free";
      } else if (auto* b = std::get_if<SiteOnBranch>(&v.site)) {
        s = json{{"branch", b->branch}};
      } else {
        auto& sec = std::get<SiteInSector>(v.site).sector;
        s = sec.piece ? json{{"piece", sec.id}} : json{{"annulus", sec.id}};
      }
      hv.push_back({{"id", v.id}, {"site", s}});
    }
    json hedges = json::array();
    for (auto& e : hpart.edges) hedges.push_back({e.id, e.u, e.v});
    j["h"] = {{"vertices", hv}, {"edges", hedges}};
    if (cone_over) j["cone_over"] = cone_over->to_json();
    return j;
  }

  static MBComplex from_json(const json& j) {
    MBComplex x;
    x.core = Graph::from_json(j.at("core"));
    if (j.contains("pieces"))
      for (auto& p : j.at("pieces")) {
        Piece pc;
        pc.id = p.contains("id") ? p.at("id").get<int>() : x.next_piece_id();
        std::string k = p.at("kind").get<std::string>();
        if (k == "D") pc.kind = SectorKind::Disk;
        else if (k == "P") pc.kind = SectorKind::PuncturedSphere;
        else throw ComplexError("piece kind must be \"D\" or \"P\"");
        pc.branches = p.at("branches").get<std::vector<int>>();
        x.pieces.push_back(pc);
      }
    if (j.contains("h")) {
      for (auto& v : j.at("h").at("vertices")) {
        HVertex hv;
        hv.id = v.at("id").get<int>();
        auto& s = v.at("site");
        if (s.is_string() && s.get<std::string>() == "free") hv.site = SiteFree{};
        else if (s.contains("branch")) hv.site = SiteOnBranch{s.at("branch").get<int>()};
        else if (s.contains("annulus"))
          hv.site = SiteInSector{SectorRef::annulus(s.at("annulus").get<int>())};
        else if (s.contains("piece"))
          hv.site = SiteInSector{SectorRef::of_piece(s.at("piece").get<int>())};
        else throw ComplexError("bad H vertex site");
        x.hpart.vertices.push_back(hv);
      }
      for (auto& e : j.at("h").at("edges"))
        x.hpart.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    if (j.contains("cone_over")) x.cone_over = Graph::from_json(j.at("cone_over"));
    x.validate();
    return x;
  }

private:
  int chi_product_part() const {
    int c = 0;
    for (auto& p : pieces) c += p.is_disk() ? 1 : 2 - p.punctures();
    for (auto& v : hpart.vertices)
      if (std::holds_alternative<SiteFree>(v.site)) ++c;
    c -= static_cast<int>(hpart.edges.size());
    return c;
  }
};

inline MBComplex product_complex(const Graph& g) {
  MBComplex x;
  x.core = g;
  return x;
}

inline MBComplex cone_complex(const Graph& g) {
  MBComplex x;
  x.cone_over = g;
  return x;
}

inline MBComplex attach_piece(const MBComplex& x, SectorKind kind,
                              const std::vector<int>& branches) {
  MBComplex y = x;
  Piece p;
  p.id = y.next_piece_id();
  p.kind = kind;
  p.branches = branches;
  if (kind == SectorKind::Disk && branches.size() != 1)
    throw ArityMismatch("disk must attach to exactly one branch");
  if (kind == SectorKind::PuncturedSphere && branches.size() < 2)
    throw ArityMismatch("punctured sphere needs at least two boundary circles");
  if (kind == SectorKind::VerticalAnnulus)
    throw ArityMismatch("vertical annuli come from core edges");
  for (int b : branches)
    if (!y.core.has_vertex(b)) throw UnknownBranch("unknown branch " + std::to_string(b));
  y.pieces.push_back(p);
  return y;
}

struct Strata {
  std::vector<SectorRef> sectors;
  std::map<int, int> branch_degrees;
  std::vector<HEdge> h_edges;
  std::vector<HVertex> h_vertices;
  // Product-plus-pieces complexes have no free boundary.
  std::vector<int> boundary_components;
};

inline Strata strata(const MBComplex& x) {
  Strata s;
  s.sectors = x.sectors();
  for (int b : x.core.vertices()) s.branch_degrees[b] = x.branch_degree(b);
  s.h_edges = x.hpart.edges;
  s.h_vertices = x.hpart.vertices;
  return s;
}

// The link of a generic point of the given class. For product-class
// complexes all links are planar (circles, thetas, stars); only cone apexes
// can carry a nonplanar link.
inline Graph link_graph(const MBComplex& x, const PointClass& pc) {
  Graph g;
  switch (pc.kind) {
    case PointClassKind::SectorInterior: {
      g.add_vertex(0);
      g.add_edge(0, 0, 0);  // a circle
      return g;
    }
    case PointClassKind::BranchPoint: {
      int d = x.branch_degree(pc.id);
      g.add_vertex(0);
      g.add_vertex(1);
      for (int i = 0; i < d; ++i) g.add_edge(i, 0, 1);
      return g;
    }
    case PointClassKind::HEdgeInterior: {
      g.add_vertex(0);
      g.add_vertex(1);
      return g;
    }
    case PointClassKind::HVertexPoint: {
      const HVertex& v = x.hpart.vertex(pc.id);
      int hdeg = x.hpart.degree(pc.id);
      int next = 0;
      if (auto* ob = std::get_if<SiteOnBranch>(&v.site)) {
        int d = x.branch_degree(ob->branch);
        g.add_vertex(next++);
        g.add_vertex(next++);
        for (int i = 0; i < d; ++i) g.add_edge(i, 0, 1);
      } else if (std::holds_alternative<SiteInSector>(v.site)) {
        g.add_vertex(next++);
        g.add_edge(0, 0, 0);
      }
      for (int i = 0; i < hdeg; ++i) g.add_vertex(next++);
      return g;
    }
    case PointClassKind::ConeApex: {
      if (!x.cone_over) throw ComplexError("complex has no cone part");
      return *x.cone_over;
    }
  }
  throw ComplexError("bad point class");
}

}  // namespace fcx
