#pragma once

// Point-deletion surrogates: for each stratum class, the complex whose
// S^3-embeddability agrees with "X minus one point of that class".
//
// A punctured sector deformation-retracts onto its boundary circles plus a
// spine; the boundary circles are the branch circles already present, so
// only the spine's arcs enter the H part. A punctured vertical annulus over
// edge (u,v) keeps both branch circles and gains connecting arcs (a theta
// spine, carried as two parallel H edges between OnBranch vertices); a
// punctured disk retracts to its branch, recorded as a free pendant; a
// punctured P_k leaves a star spine joining its k branches. Branch-point
// deletions reduce to an adjacent sector deletion. H deletions remove the
// open edge or open star directly.

#include "fcx/complex.hpp"

namespace fcx {

struct DeletionSurrogate {
  PointClass cls;
  MBComplex surrogate;
  std::string note;
};

// A core vertex whose branch circle carries no sector at all is no longer
// 2-dimensional material; it moves into the H part as a circle subgraph
// threaded through its OnBranch vertices (id order).
inline void normalize_free_branches(MBComplex& x) {
  for (;;) {
    int victim = -1;
    for (int v : x.core.vertices())
      if (x.branch_degree(v) == 0) {
        victim = v;
        break;
      }
    if (victim < 0) return;

    std::vector<int> carried;
    for (auto& hv : x.hpart.vertices)
      if (auto* ob = std::get_if<SiteOnBranch>(&hv.site))
        if (ob->branch == victim) carried.push_back(hv.id);
    std::sort(carried.begin(), carried.end());

    if (carried.empty()) {
      int nv = x.hpart.next_vertex_id();
      x.hpart.vertices.push_back({nv, SiteFree{}});
      x.hpart.edges.push_back({x.hpart.next_edge_id(), nv, nv});
    } else {
      for (int id : carried) x.hpart.vertex(id).site = SiteFree{};
      if (carried.size() == 1) {
        x.hpart.edges.push_back({x.hpart.next_edge_id(), carried[0], carried[0]});
      } else {
        // circle through the carried points; two points give two parallel arcs
        for (std::size_t i = 0; i < carried.size(); ++i) {
          int a = carried[i];
          int b = carried[(i + 1) % carried.size()];
          x.hpart.edges.push_back({x.hpart.next_edge_id(), a, b});
        }
      }
    }
    x.core = x.core.without_vertex(victim);
  }
}

namespace detail {

// H vertices sitting inside a sector that is being deleted slide along the
// retraction onto the sector's first attached branch.
inline void resite_sector_vertices(MBComplex& x, SectorRef sec, int target_branch) {
  for (auto& hv : x.hpart.vertices)
    if (auto* is = std::get_if<SiteInSector>(&hv.site))
      if (is->sector == sec) hv.site = SiteOnBranch{target_branch};
}

}  // namespace detail

inline MBComplex surrogate_sector_interior(const MBComplex& x, SectorRef sec) {
  MBComplex y = x;
  if (!sec.piece) {
    const Edge e = y.core.edge(sec.id);
    detail::resite_sector_vertices(y, sec, e.u);
    y.core = y.core.without_edge(sec.id);
    int a = y.hpart.next_vertex_id();
    int b = a + 1;
    y.hpart.vertices.push_back({a, SiteOnBranch{e.u}});
    y.hpart.vertices.push_back({b, SiteOnBranch{e.v}});
    int eid = y.hpart.next_edge_id();
    y.hpart.edges.push_back({eid, a, b});
    y.hpart.edges.push_back({eid + 1, a, b});
  } else {
    const Piece p = y.piece(sec.id);
    detail::resite_sector_vertices(y, sec, p.branches.front());
    std::erase_if(y.pieces, [&](const Piece& q) { return q.id == sec.id; });
    if (p.is_disk()) {
      int f = y.hpart.next_vertex_id();
      int t = f + 1;
      y.hpart.vertices.push_back({f, SiteFree{}});
      y.hpart.vertices.push_back({t, SiteOnBranch{p.branches[0]}});
      y.hpart.edges.push_back({y.hpart.next_edge_id(), f, t});
    } else {
      int c = y.hpart.next_vertex_id();
      y.hpart.vertices.push_back({c, SiteFree{}});
      for (int b : p.branches) {
        int t = y.hpart.next_vertex_id();
        y.hpart.vertices.push_back({t, SiteOnBranch{b}});
        y.hpart.edges.push_back({y.hpart.next_edge_id(), c, t});
      }
    }
  }
  normalize_free_branches(y);
  return y;
}

inline MBComplex surrogate_h_edge(const MBComplex& x, int edge_id) {
  MBComplex y = x;
  std::erase_if(y.hpart.edges, [&](const HEdge& e) { return e.id == edge_id; });
  return y;
}

inline MBComplex surrogate_h_vertex(const MBComplex& x, int vertex_id) {
  MBComplex y = x;
  std::erase_if(y.hpart.edges,
                [&](const HEdge& e) { return e.u == vertex_id || e.v == vertex_id; });
  std::erase_if(y.hpart.vertices, [&](const HVertex& v) { return v.id == vertex_id; });
  return y;
}

inline std::vector<DeletionSurrogate> deletion_surrogates(const MBComplex& x) {
  std::vector<DeletionSurrogate> out;
  for (auto& sec : x.sectors()) {
    auto pc = PointClass::sector_interior(sec);
    out.push_back({pc, surrogate_sector_interior(x, sec),
                   sec.piece ? "spine of punctured piece" : "theta spine of punctured annulus"});
  }
  for (int b : x.core.vertices()) {
    auto at = x.sectors_at(b);
    if (at.empty()) continue;  // normalized away elsewhere
    out.push_back({PointClass::branch_point(b), surrogate_sector_interior(x, at.front()),
                   "branch deletion meets the adjacent sector " + at.front().str()});
  }
  for (auto& e : x.hpart.edges)
    out.push_back({PointClass::h_edge(e.id), surrogate_h_edge(x, e.id), "open edge removed"});
  for (auto& v : x.hpart.vertices)
    out.push_back({PointClass::h_vertex(v.id), surrogate_h_vertex(x, v.id),
                   "open star removed"});
  return out;
}

}  // namespace fcx
