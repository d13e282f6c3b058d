#pragma once

// Witness validation for a feasible candidate placement. Included from
// placement.hpp only; relies on the PlacementSearch internals.
//
// Geometry behind the checks: a punctured sphere placed in the sea is built
// from meridian caps at its chosen occurrences joined by tubes, so distinct
// pieces in one chamber must occupy mutually noncrossing occurrence sets; a
// punctured sphere in a Longitude region is built from vertical annuli
// (noncrossing chords pairing its boundaries) joined by tubes. Caps, chords
// and tubes leave the ambient region in "side components": the cap walls
// separate, the tube tunnels reconnect their far sides. H edges must route
// inside one side component.

#ifndef FCX_PLACEMENT_INCLUDED_VALIDATE
#define FCX_PLACEMENT_INCLUDED_VALIDATE
#endif

namespace fcx {

class CandidateValidator {
public:
  explicit CandidateValidator(PlacementSearch& s) : s_(s) {}

  bool validate() {
    if (!chambers_noncrossing()) return false;
    collect_longitude_regions();
    collect_cyclic_pieces();
    try {
      enumerate_matchings(0);
    } catch (Valid&) {
      return true;
    }
    return false;
  }

  void annotate(PlacementWitness& w) {
    for (auto& pp : w.ppieces) {
      auto it = final_matchings_.find(pp.piece);
      if (it == final_matchings_.end()) continue;
      pp.pairing = it->second;
      pp.signs.assign(pp.occ.size(), 0);
      for (auto& [a, b] : pp.pairing) {
        pp.signs[a] = +1;
        pp.signs[b] = -1;
      }
    }
  }

private:
  struct Valid {};

  PlacementSearch& s_;

  // longitude regions that carry pieces, with those pieces' walk positions
  struct LongRegion {
    RegionAddr addr;
    int walk_size = 0;
    std::vector<int> piece_ids;
    std::map<int, std::vector<int>> positions;  // piece -> per-boundary walk position
  };
  std::vector<LongRegion> long_regions_;

  // pieces in cyclic sea chambers (tube gap-omission choice per piece)
  struct CyclicPiece {
    int chamber;
    int piece;
    int ncaps;
  };
  std::vector<CyclicPiece> cyclic_pieces_;

  std::map<int, std::vector<std::pair<int, int>>> matchings_;       // in-flight
  std::map<int, std::vector<std::pair<int, int>>> final_matchings_;
  std::map<int, int> omit_choice_;  // cyclic sea piece -> omitted gap index

  // ---- step A --------------------------------------------------------------

  bool chambers_noncrossing() {
    for (std::size_t ch = 0; ch < s_.chambers_.size(); ++ch) {
      std::vector<const PiecePlacement*> here;
      for (auto& pp : s_.piece_placements_)
        if (pp.where == RegionAddr::sea(static_cast<int>(ch))) here.push_back(&pp);
      for (std::size_t i = 0; i < here.size(); ++i)
        for (std::size_t j = i + 1; j < here.size(); ++j)
          for (std::size_t c = 0; c < s_.arr_.comps.size(); ++c) {
            std::vector<int> a, b;
            for (auto& [cc, pos] : here[i]->occ)
              if (cc == static_cast<int>(c)) a.push_back(pos);
            for (auto& [cc, pos] : here[j]->occ)
              if (cc == static_cast<int>(c)) b.push_back(pos);
            if (a.empty() || b.empty()) continue;
            int W = static_cast<int>(s_.arr_.comps[c].outer_walk.size());
            if (detail::cyclic_cross(a, b, W)) return false;
          }
    }
    return true;
  }

  // ---- step B: longitude matchings ------------------------------------------

  void collect_longitude_regions() {
    long_regions_.clear();
    std::map<std::pair<int, int>, LongRegion> acc;
    for (auto& pp : s_.piece_placements_) {
      if (pp.where.kind != 1) continue;
      auto key = std::make_pair(pp.where.comp, pp.where.face);
      auto& lr = acc[key];
      lr.addr = pp.where;
      lr.walk_size = static_cast<int>(
          face_walk_items(s_.arr_.comps[pp.where.comp].faces.faces[pp.where.face]).size());
      lr.piece_ids.push_back(pp.piece);
      std::vector<int> pos;
      for (auto& [c, p] : pp.occ) pos.push_back(p);
      lr.positions[pp.piece] = pos;
    }
    for (auto& [k, lr] : acc) long_regions_.push_back(lr);
  }

  void collect_cyclic_pieces() {
    cyclic_pieces_.clear();
    for (auto& pp : s_.piece_placements_) {
      if (pp.where.kind != 0) continue;
      if (!s_.chambers_[pp.where.chamber].cyclic) continue;
      int ncaps = 0;
      for (auto& [c, pos] : pp.occ)
        if (c == s_.primary_) ++ncaps;
      if (ncaps >= 2) cyclic_pieces_.push_back({pp.where.chamber, pp.piece, ncaps});
    }
  }

  static bool chords_cross(int a1, int a2, int b1, int b2, int W) {
    if (a1 == a2 || b1 == b2) return false;
    if (b1 == a1 || b1 == a2 || b2 == a1 || b2 == a2) return false;  // shared endpoints stack
    auto inside = [&](int x, int lo, int hi) {
      int span = (hi - lo + W) % W;
      int off = (x - lo + W) % W;
      return off > 0 && off < span;
    };
    return inside(b1, a1, a2) != inside(b2, a1, a2);
  }

  void enumerate_matchings(std::size_t region_idx) {
    s_.tick();
    if (region_idx == long_regions_.size()) {
      enumerate_omits(0);
      return;
    }
    auto& lr = long_regions_[region_idx];
    std::vector<std::tuple<int, int, int>> placed_chords;  // (piece, posA, posB)
    match_region(lr, 0, placed_chords, region_idx);
  }

  void match_region(LongRegion& lr, std::size_t piece_idx,
                    std::vector<std::tuple<int, int, int>>& chords, std::size_t region_idx) {
    s_.tick();
    if (piece_idx == lr.piece_ids.size()) {
      enumerate_matchings(region_idx + 1);
      return;
    }
    int pid = lr.piece_ids[piece_idx];
    auto& pos = lr.positions[pid];
    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> used(pos.size(), false);
    match_piece(lr, piece_idx, pid, pos, used, pairs, chords, region_idx);
  }

  void match_piece(LongRegion& lr, std::size_t piece_idx, int pid, const std::vector<int>& pos,
                   std::vector<bool>& used, std::vector<std::pair<int, int>>& pairs,
                   std::vector<std::tuple<int, int, int>>& chords, std::size_t region_idx) {
    s_.tick();
    std::size_t first = 0;
    while (first < used.size() && used[first]) ++first;
    if (first == used.size()) {
      matchings_[pid] = pairs;
      match_region(lr, piece_idx + 1, chords, region_idx);
      matchings_.erase(pid);
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < used.size(); ++j) {
      if (used[j]) continue;
      bool ok = true;
      // noncrossing with everything already placed in this region
      for (auto& [qp, qa, qb] : chords)
        if (chords_cross(pos[first], pos[j], qa, qb, lr.walk_size)) ok = false;
      for (auto& [a, b] : pairs)
        if (chords_cross(pos[first], pos[j], pos[a], pos[b], lr.walk_size)) ok = false;
      if (ok) {
        used[j] = true;
        pairs.push_back({static_cast<int>(first), static_cast<int>(j)});
        chords.push_back({pid, pos[first], pos[j]});
        match_piece(lr, piece_idx, pid, pos, used, pairs, chords, region_idx);
        chords.pop_back();
        pairs.pop_back();
        used[j] = false;
      }
    }
    used[first] = false;
  }

  void enumerate_omits(std::size_t i) {
    s_.tick();
    if (i == cyclic_pieces_.size()) {
      if (check_routing()) {
        final_matchings_ = matchings_snapshot_;
        throw Valid{};
      }
      return;
    }
    for (int g = 0; g < cyclic_pieces_[i].ncaps; ++g) {
      omit_choice_[cyclic_pieces_[i].piece] = g;
      enumerate_omits(i + 1);
    }
    omit_choice_.erase(cyclic_pieces_[i].piece);
  }

  // ---- step C: side models and H routing ------------------------------------

  struct SideModel {
    int nclasses = 1;
    std::map<int, std::set<int>> entry_classes;   // wall entry / walk position -> classes
    std::map<int, std::set<int>> piece_classes;   // piece id -> classes
    std::set<int> all_classes;
  };

  std::map<RegionAddr, SideModel> side_;
  std::map<int, std::vector<std::pair<int, int>>> matchings_snapshot_;

  bool check_routing() {
    s_.tick();
    matchings_snapshot_.clear();
    for (auto& lr : long_regions_)
      for (int pid : lr.piece_ids)
        if (matchings_.count(pid)) matchings_snapshot_[pid] = matchings_.at(pid);

    side_.clear();
    for (std::size_t ch = 0; ch < s_.chambers_.size(); ++ch)
      side_[RegionAddr::sea(static_cast<int>(ch))] = chamber_side_model(static_cast<int>(ch));
    for (auto& lr : long_regions_) {
      SideModel sm = longitude_side_model(lr);
      if (sm.nclasses < 0) return false;  // some piece's chords cannot be tubed together
      side_[lr.addr] = std::move(sm);
    }

    // static H edges
    for (auto& e : s_.x_.hpart.edges) {
      const HVertex& u = s_.x_.hpart.vertex(e.u);
      const HVertex& v = s_.x_.hpart.vertex(e.v);
      if (std::holds_alternative<SiteFree>(u.site) || std::holds_alternative<SiteFree>(v.site))
        continue;
      if (!edge_routable(u.site, v.site)) return false;
    }
    // free vertices: one side class each, consistent across incident edges
    std::vector<int> free_vs;
    for (auto& [v, addr] : s_.free_assign_) free_vs.push_back(v);
    std::sort(free_vs.begin(), free_vs.end());
    std::map<int, int> chosen;
    return assign_free_classes(0, free_vs, chosen);
  }

  std::set<int> site_classes(const HSite& site, const RegionAddr& addr) const {
    auto it = side_.find(addr);
    if (it == side_.end()) return {0};
    const SideModel& sm = it->second;
    if (auto* ob = std::get_if<SiteOnBranch>(&site)) {
      int c = s_.arr_.comp_of(ob->branch);
      if (addr.kind == 0) {
        if (c != s_.primary_) return sm.all_classes;  // hosted: every side
        std::set<int> out;
        auto& wall = chamber_wall_items(addr.chamber);
        for (auto& [entry, cls] : sm.entry_classes)
          if (entry < static_cast<int>(wall.size()) && wall[entry].is_vertex &&
              wall[entry].vertex == ob->branch)
            out.insert(cls.begin(), cls.end());
        return out;
      }
      std::set<int> out;
      auto walk = face_walk_items(s_.arr_.comps[addr.comp].faces.faces[addr.face]);
      for (std::size_t i = 0; i < walk.size(); ++i)
        if (walk[i].is_vertex && walk[i].vertex == ob->branch) {
          auto f = sm.entry_classes.find(static_cast<int>(i));
          if (f != sm.entry_classes.end()) out.insert(f->second.begin(), f->second.end());
        }
      return out;
    }
    if (auto* is = std::get_if<SiteInSector>(&site)) {
      if (!is->sector.piece) {
        int eid = is->sector.id;
        int c = s_.arr_.comp_of_edge(eid);
        if (addr.kind == 0) {
          if (c != s_.primary_) return sm.all_classes;
          std::set<int> out;
          auto& wall = chamber_wall_items(addr.chamber);
          for (std::size_t i = 0; i < wall.size(); ++i)
            if (!wall[i].is_vertex && wall[i].dart.edge == eid) {
              auto f = sm.entry_classes.find(static_cast<int>(i));
              if (f != sm.entry_classes.end()) out.insert(f->second.begin(), f->second.end());
            }
          return out;
        }
        std::set<int> out;
        auto walk = face_walk_items(s_.arr_.comps[addr.comp].faces.faces[addr.face]);
        for (std::size_t i = 0; i < walk.size(); ++i)
          if (!walk[i].is_vertex && walk[i].dart.edge == eid) {
            auto f = sm.entry_classes.find(static_cast<int>(i));
            if (f != sm.entry_classes.end()) out.insert(f->second.begin(), f->second.end());
          }
        return out;
      }
      const Piece& p = s_.x_.piece(is->sector.id);
      if (p.is_disk()) {
        if (addr.kind != 0) return {};
        auto it2 = s_.disk_occ_.find(p.id);
        if (it2 == s_.disk_occ_.end()) return sm.all_classes;
        auto [c, pos] = it2->second;
        if (c != s_.primary_) return sm.all_classes;
        std::set<int> out;
        auto& wall = chamber_wall_items(addr.chamber);
        for (std::size_t i = 0; i < wall.size(); ++i)
          if (wall[i].is_vertex && chamber_wall_position(addr.chamber, i) == pos &&
              (i == 0 || i + 1 == wall.size() || s_.chambers_[addr.chamber].cyclic)) {
            auto f = sm.entry_classes.find(static_cast<int>(i));
            if (f != sm.entry_classes.end()) out.insert(f->second.begin(), f->second.end());
          }
        if (out.empty()) return sm.all_classes;
        return out;
      }
      auto f = sm.piece_classes.find(p.id);
      if (f != sm.piece_classes.end()) return f->second;
      return sm.all_classes;
    }
    return sm.all_classes;
  }

  bool edge_routable(const HSite& a, const HSite& b) const {
    auto aa = s_.site_access(a);
    auto ab = s_.site_access(b);
    for (auto& addr : aa) {
      if (!ab.count(addr)) continue;
      auto ca = site_classes(a, addr);
      auto cb = site_classes(b, addr);
      for (int c : ca)
        if (cb.count(c)) return true;
    }
    return false;
  }

  bool assign_free_classes(std::size_t i, const std::vector<int>& free_vs,
                           std::map<int, int>& chosen) {
    if (i == free_vs.size()) return true;
    int v = free_vs[i];
    const RegionAddr& addr = s_.free_assign_.at(v);
    auto it = side_.find(addr);
    std::set<int> classes = it != side_.end() ? it->second.all_classes : std::set<int>{0};
    for (int cls : classes) {
      bool ok = true;
      for (auto& e : s_.x_.hpart.edges) {
        if (e.u != v && e.v != v) continue;
        int other = e.u == v ? e.v : e.u;
        if (other == v) continue;  // loop: always fine
        const HVertex& ov = s_.x_.hpart.vertex(other);
        if (std::holds_alternative<SiteFree>(ov.site)) {
          auto co = chosen.find(other);
          if (co == chosen.end()) continue;
          if (!(s_.free_assign_.at(other) == addr) || co->second != cls) ok = false;
        } else {
          auto oc = site_classes(ov.site, addr);
          if (!s_.site_access(ov.site).count(addr) || !oc.count(cls)) ok = false;
        }
        if (!ok) break;
      }
      if (!ok) continue;
      chosen[v] = cls;
      if (assign_free_classes(i + 1, free_vs, chosen)) return true;
      chosen.erase(v);
    }
    return false;
  }

  // ---- side model construction ----------------------------------------------

  mutable std::map<int, std::vector<WalkItem>> wall_cache_;
  std::vector<WalkItem> wall_dummy_;

  const std::vector<WalkItem>& chamber_wall_items(int ch) const {
    auto it = wall_cache_.find(ch);
    if (it != wall_cache_.end()) return it->second;
    std::vector<WalkItem> out;
    auto& chamber = s_.chambers_[ch];
    if (s_.primary_ >= 0) {
      auto& walk = s_.arr_.comps[s_.primary_].outer_walk;
      for (int pos : chamber.wall) out.push_back(walk[pos]);
    }
    return wall_cache_[ch] = out;
  }

  int chamber_wall_position(int ch, std::size_t entry) const {
    return s_.chambers_[ch].wall[entry];
  }

  SideModel chamber_side_model(int ch) const {
    SideModel sm;
    auto& chamber = s_.chambers_[ch];
    int n_entries = static_cast<int>(chamber.wall.size());

    // caps: sea pieces here whose occurrences all sit on the primary walk
    struct Cap {
      int entry;
      int piece;
    };
    std::vector<Cap> caps;
    std::map<int, std::vector<int>> piece_caps;  // piece -> cap entry list
    for (auto& pp : s_.piece_placements_) {
      if (!(pp.where == RegionAddr::sea(ch))) continue;
      bool all_primary = true;
      for (auto& [c, pos] : pp.occ)
        if (c != s_.primary_) all_primary = false;
      if (!all_primary) continue;  // cross-component piece: treated nonseparating
      for (auto& [c, pos] : pp.occ) {
        int entry = -1;
        for (int i = 0; i < n_entries; ++i)
          if (chamber.wall[i] == pos) {
            entry = i;
            break;
          }
        if (entry >= 0) {
          caps.push_back({entry, pp.piece});
          piece_caps[pp.piece].push_back(entry);
        }
      }
    }
    std::sort(caps.begin(), caps.end(), [](const Cap& a, const Cap& b) {
      return std::tie(a.entry, a.piece) < std::tie(b.entry, b.piece);
    });
    for (auto& [pid, es] : piece_caps) std::sort(es.begin(), es.end());

    int m = static_cast<int>(caps.size());
    // segments (closed entry ranges)
    std::vector<std::pair<int, int>> segs;
    if (m == 0) {
      segs.push_back({0, std::max(0, n_entries - 1)});
    } else if (chamber.cyclic) {
      for (int i = 0; i < m; ++i)
        segs.push_back({caps[i].entry, caps[(i + 1) % m].entry});
    } else {
      segs.push_back({0, caps[0].entry});
      for (int i = 0; i + 1 < m; ++i) segs.push_back({caps[i].entry, caps[i + 1].entry});
      segs.push_back({caps[m - 1].entry, n_entries - 1});
    }

    detail::UnionFind uf(segs.size());
    auto seg_before_cap = [&](int cap_idx) {
      if (chamber.cyclic) return (cap_idx - 1 + m) % m;
      return cap_idx;  // linear: segment i ends at cap i
    };
    auto seg_after_cap = [&](int cap_idx) {
      if (chamber.cyclic) return cap_idx;
      return cap_idx + 1;
    };
    // tubes per piece
    for (auto& [pid, entries] : piece_caps) {
      if (entries.size() < 2) continue;
      std::vector<int> gidx;
      for (int i = 0; i < m; ++i)
        if (caps[i].piece == pid) gidx.push_back(i);
      int t = static_cast<int>(gidx.size());
      int omit = chamber.cyclic && omit_choice_.count(pid) ? omit_choice_.at(pid) : -1;
      for (int i = 0; i < t; ++i) {
        bool last_gap = (i == t - 1);
        if (!chamber.cyclic && last_gap) break;  // linear: path of t-1 tubes
        if (chamber.cyclic && i == omit) continue;
        int a = gidx[i];
        int b = gidx[(i + 1) % t];
        // tunnel joins the far sides of the two caps
        uf.unite(seg_before_cap(a), seg_after_cap(b));
      }
    }

    std::map<int, int> cls_of_seg;
    std::set<int> classes;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      cls_of_seg[static_cast<int>(i)] = uf.find(static_cast<int>(i));
      classes.insert(uf.find(static_cast<int>(i)));
    }
    sm.all_classes = classes;
    sm.nclasses = static_cast<int>(classes.size());

    auto entry_in_seg = [&](int entry, std::pair<int, int> seg) {
      if (!chamber.cyclic || m == 0) return entry >= seg.first && entry <= seg.second;
      if (seg.first == seg.second) return m == 1 ? true : entry == seg.first;
      int span = (seg.second - seg.first + n_entries) % n_entries;
      int off = (entry - seg.first + n_entries) % n_entries;
      return off <= span;
    };
    for (int e = 0; e < n_entries; ++e) {
      std::set<int> cs;
      for (std::size_t i = 0; i < segs.size(); ++i)
        if (entry_in_seg(e, segs[i])) cs.insert(cls_of_seg[static_cast<int>(i)]);
      sm.entry_classes[e] = cs;
    }
    for (auto& [pid, entries] : piece_caps) {
      std::set<int> cs;
      for (int e : entries) {
        auto f = sm.entry_classes.find(e);
        if (f != sm.entry_classes.end()) cs.insert(f->second.begin(), f->second.end());
      }
      sm.piece_classes[pid] = cs;
    }
    return sm;
  }

  SideModel longitude_side_model(const LongRegion& lr) const {
    SideModel sm;
    int W = lr.walk_size;
    struct Chord {
      int piece;
      int lo, hi;
    };
    std::vector<Chord> chords;
    for (int pid : lr.piece_ids) {
      auto mit = matchings_snapshot_.find(pid);
      if (mit == matchings_snapshot_.end()) continue;
      auto& pos = lr.positions.at(pid);
      for (auto& [a, b] : mit->second) {
        int lo = std::min(pos[a], pos[b]);
        int hi = std::max(pos[a], pos[b]);
        chords.push_back({pid, lo, hi});
      }
    }
    int n = static_cast<int>(chords.size());
    // laminar parents: smallest strictly-containing chord
    auto contains = [&](const Chord& big, const Chord& small, int bi, int si) {
      if (bi == si) return false;
      if (big.lo <= small.lo && small.hi <= big.hi) {
        if (big.lo == small.lo && big.hi == small.hi) return bi < si;  // parallel chords
        return true;
      }
      return false;
    };
    std::vector<int> parent(n, -1);  // -1: root cell
    for (int i = 0; i < n; ++i) {
      int best = -1;
      for (int j = 0; j < n; ++j) {
        if (!contains(chords[j], chords[i], j, i)) continue;
        if (best < 0 || contains(chords[best], chords[j], best, j)) best = j;
      }
      parent[i] = best;
    }
    // cells: 0..n-1 inner cells of chords, n = root
    int root_cell = n;
    auto cell_of = [&](int chord) { return chord; };
    auto outer_cell_of = [&](int chord) {
      return parent[chord] < 0 ? root_cell : cell_of(parent[chord]);
    };

    detail::UnionFind uf(n + 1);
    // per piece: spanning tree over shared cells
    for (int pid : lr.piece_ids) {
      std::vector<int> mine;
      for (int i = 0; i < n; ++i)
        if (chords[i].piece == pid) mine.push_back(i);
      if (mine.size() <= 1) continue;
      std::set<int> reached{mine[0]};
      std::vector<std::pair<int, int>> tree;
      bool grew = true;
      while (reached.size() < mine.size() && grew) {
        grew = false;
        for (int i : mine) {
          if (reached.count(i)) continue;
          for (int j : mine) {
            if (!reached.count(j)) continue;
            std::set<int> ci{cell_of(i), outer_cell_of(i)};
            std::set<int> cj{cell_of(j), outer_cell_of(j)};
            std::vector<int> shared;
            std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(),
                                  std::back_inserter(shared));
            if (shared.empty()) continue;
            tree.push_back({i, j});
            reached.insert(i);
            grew = true;
            break;
          }
          if (grew) break;
        }
      }
      if (reached.size() < mine.size()) {
        // the chords of one piece cannot be tubed together
        sm.nclasses = -1;
        return sm;
      }
      for (auto& [i, j] : tree) {
        std::set<int> ci{cell_of(i), outer_cell_of(i)};
        std::set<int> cj{cell_of(j), outer_cell_of(j)};
        std::vector<int> shared;
        std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(),
                              std::back_inserter(shared));
        int f = shared.front();
        int oi = cell_of(i) == f ? outer_cell_of(i) : cell_of(i);
        int oj = cell_of(j) == f ? outer_cell_of(j) : cell_of(j);
        uf.unite(oi, oj);
      }
    }

    std::set<int> classes;
    for (int i = 0; i <= n; ++i) classes.insert(uf.find(i));
    sm.all_classes = classes;
    sm.nclasses = static_cast<int>(classes.size());

    // a walk position touches the closures of some cells
    auto pos_cells = [&](int p) {
      std::set<int> cs;
      for (int i = 0; i <= n; ++i) {
        bool inside;
        if (i == root_cell) {
          inside = true;
          for (int j = 0; j < n; ++j)
            if (parent[j] < 0 && chords[j].lo < p && p < chords[j].hi) inside = false;
        } else {
          inside = chords[i].lo <= p && p <= chords[i].hi;
          if (inside)
            for (int j = 0; j < n; ++j)
              if (parent[j] == i && chords[j].lo < p && p < chords[j].hi) inside = false;
        }
        if (inside) cs.insert(uf.find(i));
      }
      return cs;
    };
    for (int p = 0; p < W; ++p) sm.entry_classes[p] = pos_cells(p);
    for (int pid : lr.piece_ids) {
      std::set<int> cs;
      for (int i = 0; i < n; ++i)
        if (chords[i].piece == pid) {
          cs.insert(uf.find(cell_of(i)));
          cs.insert(uf.find(outer_cell_of(i)));
        }
      sm.piece_classes[pid] = cs;
    }
    return sm;
  }
};

}  // namespace fcx
