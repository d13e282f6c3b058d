#pragma once

// Rewriting moves used by criticality extraction. Each move produces a
// complex that embeds into its input: removals are inclusions and punctures
// are spine replacements inside the punctured sector.

#include <variant>

#include "fcx/surrogate.hpp"

namespace fcx {

struct InapplicableMove : ComplexError {
  using ComplexError::ComplexError;
};

struct RemoveEdgeOrSector {
  // exactly one of these is set
  std::optional<int> h_edge;
  std::optional<SectorRef> sector;
};

struct PunctureSector {
  SectorRef sector;
};

// Boundary/Euler bookkeeping for cutting a P_k piece along an arc.
// - ends on two distinct boundary circles: they merge, P_k -> P_{k-1};
//   the merged boundary attaches to the first of the two branches.
// - both ends on one boundary circle, non-separating: that circle splits,
//   P_k -> P_{k+1} with the branch attached twice.
// - both ends on one boundary circle, separating: the piece splits in two;
//   `partition` lists the boundary indices carried by the first part.
struct CutAlongArc {
  int piece = -1;
  int boundary_a = 0;  // index into the piece's attachment list
  int boundary_b = 0;
  bool separating = false;
  std::vector<int> partition;
};

using RewriteMove = std::variant<RemoveEdgeOrSector, PunctureSector, CutAlongArc>;

inline std::string move_str(const RewriteMove& m) {
  if (auto* r = std::get_if<RemoveEdgeOrSector>(&m)) {
    if (r->h_edge) return "remove h-edge " + std::to_string(*r->h_edge);
    return "remove sector " + r->sector->str();
  }
  if (auto* p = std::get_if<PunctureSector>(&m)) return "puncture " + p->sector.str();
  auto& c = std::get<CutAlongArc>(m);
  return "cut piece " + std::to_string(c.piece) + " along arc " +
         std::to_string(c.boundary_a) + "-" + std::to_string(c.boundary_b);
}

inline MBComplex rewrite(const MBComplex& x, const RewriteMove& move) {
  if (auto* r = std::get_if<RemoveEdgeOrSector>(&move)) {
    MBComplex y = x;
    if (r->h_edge) {
      bool found = false;
      for (auto& e : y.hpart.edges)
        if (e.id == *r->h_edge) found = true;
      if (!found) throw InapplicableMove("no such H edge");
      return surrogate_h_edge(y, *r->h_edge);
    }
    if (!r->sector) throw InapplicableMove("empty removal");
    SectorRef s = *r->sector;
    if (!s.piece) {
      if (!y.core.has_edge(s.id)) throw InapplicableMove("no such annulus");
      y.core = y.core.without_edge(s.id);
      // interior sites of a removed sector have nowhere to live
      for (auto& hv : y.hpart.vertices)
        if (auto* is = std::get_if<SiteInSector>(&hv.site))
          if (is->sector == s) throw InapplicableMove("sector carries H vertices");
    } else {
      if (!y.has_piece(s.id)) throw InapplicableMove("no such piece");
      for (auto& hv : y.hpart.vertices)
        if (auto* is = std::get_if<SiteInSector>(&hv.site))
          if (is->sector == s) throw InapplicableMove("sector carries H vertices");
      std::erase_if(y.pieces, [&](const Piece& p) { return p.id == s.id; });
    }
    normalize_free_branches(y);
    return y;
  }
  if (auto* p = std::get_if<PunctureSector>(&move)) {
    bool exists = p->sector.piece ? x.has_piece(p->sector.id) : x.core.has_edge(p->sector.id);
    if (!exists) throw InapplicableMove("no such sector");
    return surrogate_sector_interior(x, p->sector);
  }
  auto& c = std::get<CutAlongArc>(move);
  MBComplex y = x;
  if (!y.has_piece(c.piece)) throw InapplicableMove("no such piece");
  Piece p = y.piece(c.piece);
  if (p.is_disk()) throw InapplicableMove("cannot cut a disk along a boundary arc");
  int k = p.punctures();
  if (c.boundary_a < 0 || c.boundary_a >= k || c.boundary_b < 0 || c.boundary_b >= k)
    throw InapplicableMove("boundary index out of range");
  std::erase_if(y.pieces, [&](const Piece& q) { return q.id == c.piece; });
  if (c.boundary_a != c.boundary_b) {
    Piece q = p;
    std::vector<int> nb;
    for (int i = 0; i < k; ++i)
      if (i != c.boundary_b) nb.push_back(p.branches[i]);
    q.branches = nb;
    if (q.branches.size() == 1) q.kind = SectorKind::Disk;
    y.pieces.push_back(q);
  } else if (!c.separating) {
    Piece q = p;
    q.branches.push_back(p.branches[c.boundary_a]);
    y.pieces.push_back(q);
  } else {
    std::set<int> first(c.partition.begin(), c.partition.end());
    first.insert(c.boundary_a);
    Piece q1, q2;
    q1.id = y.next_piece_id();
    q2.id = q1.id + 1;
    for (int i = 0; i < k; ++i)
      (first.count(i) ? q1 : q2).branches.push_back(p.branches[i]);
    q2.branches.push_back(p.branches[c.boundary_a]);
    for (Piece* q : {&q1, &q2}) {
      if (q->branches.empty()) throw InapplicableMove("cut leaves an unattached part");
      q->kind = q->branches.size() == 1 ? SectorKind::Disk : SectorKind::PuncturedSphere;
      y.pieces.push_back(*q);
    }
  }
  for (auto& hv : y.hpart.vertices)
    if (auto* is = std::get_if<SiteInSector>(&hv.site))
      if (is->sector == SectorRef::of_piece(c.piece))
        throw InapplicableMove("piece carries H vertices");
  normalize_free_branches(y);
  return y;
}

}  // namespace fcx
