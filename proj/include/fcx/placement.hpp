#pragma once

// Placement search over one arrangement of standard component embeddings.
//
// Feasibility layer (the necessary conditions):
//   C1  disks live in the sea at an occurrence of their branch;
//   C2  a punctured sphere needs one region whose walk reaches all of its
//       attachment branches;
//   C3  in a Longitude region the boundary count must be even (the total
//       boundary is null-homologous there);
//   C4  disks cut the sea into chambers; everything placed in the sea needs
//       all of its access sites inside one chamber;
//   C5  每 H edge needs a region or chamber from which both endpoint sites
//       are reachable.
// Witness layer (sufficient for an actual embedding): pieces sharing a
// chamber or region must occupy pairwise noncrossing occurrence sets,
// Longitude pieces need a noncrossing boundary pairing, and H edges must
// route through the side components left by the placed pieces (caps and
// tubes leave two sides whose gaps alternate through the tube tunnels).

#include <cstdint>

#include "fcx/complex.hpp"
#include "fcx/region.hpp"

namespace fcx {

struct FailureRecord {
  enum class Kind { Incidence, HomologyParity, BallAccess };
  Kind kind = Kind::Incidence;
  std::string subject;

  std::string kind_str() const {
    switch (kind) {
      case Kind::Incidence: return "incidence";
      case Kind::HomologyParity: return "homology-parity";
      case Kind::BallAccess: return "ball-access";
    }
    return "?";
  }
  json to_json() const { return {{"kind", kind_str()}, {"subject", subject}}; }
  friend bool operator<(const FailureRecord& a, const FailureRecord& b) {
    return std::tie(a.kind, a.subject) < std::tie(b.kind, b.subject);
  }
  friend bool operator==(const FailureRecord& a, const FailureRecord& b) = default;
};

struct RegionAddr {
  int kind = 0;  // 0: sea chamber, 1: longitude region
  int chamber = -1;
  int comp = -1;
  int face = -1;
  friend bool operator==(const RegionAddr&, const RegionAddr&) = default;
  friend auto operator<=>(const RegionAddr&, const RegionAddr&) = default;
  static RegionAddr sea(int ch) { return {0, ch, -1, -1}; }
  static RegionAddr longitude(int comp, int face) { return {1, -1, comp, face}; }
  std::string str() const {
    if (kind == 0) return "sea-chamber:" + std::to_string(chamber);
    return "longitude:c" + std::to_string(comp) + ":f" + std::to_string(face);
  }
  json to_json() const {
    if (kind == 0) return {{"sea_chamber", chamber}};
    return {{"component", comp}, {"face", face}};
  }
};

struct PiecePlacement {
  int piece = -1;
  RegionAddr where;
  std::vector<std::pair<int, int>> occ;         // per boundary: (component, walk position)
  std::vector<std::pair<int, int>> pairing;     // longitude: boundary index pairs
  std::vector<int> signs;                       // longitude: +1/-1 per boundary

  json to_json() const {
    json j;
    j["piece"] = piece;
    j["region"] = where.to_json();
    json o = json::array();
    for (auto& [c, p] : occ) o.push_back({c, p});
    j["occurrences"] = o;
    if (!pairing.empty()) {
      json pr = json::array();
      for (auto& [a, b] : pairing) pr.push_back({a, b});
      j["pairing"] = pr;
      j["signs"] = signs;
    }
    return j;
  }
};

struct PlacementWitness {
  int arrangement_index = -1;
  std::string arrangement_code;
  std::map<int, std::pair<int, int>> disk_occ;  // disk piece -> (component, walk position)
  std::map<int, int> hosting;                   // component -> chamber
  std::vector<PiecePlacement> ppieces;
  std::map<int, RegionAddr> free_sites;         // free H vertex -> region

  json to_json() const {
    json j;
    j["arrangement"] = arrangement_index;
    j["arrangement_code"] = arrangement_code;
    json d = json::object();
    for (auto& [p, cp] : disk_occ) d[std::to_string(p)] = {cp.first, cp.second};
    j["disks"] = d;
    json h = json::object();
    for (auto& [c, ch] : hosting) h[std::to_string(c)] = ch;
    j["hosting"] = h;
    json ps = json::array();
    for (auto& p : ppieces) ps.push_back(p.to_json());
    j["pieces"] = ps;
    json f = json::object();
    for (auto& [v, r] : free_sites) f[std::to_string(v)] = r.to_json();
    j["free_vertices"] = f;
    return j;
  }
};

struct ArrangementOutcome {
  enum class Status { Witness, Infeasible, Gap, Unsupported };
  Status status = Status::Infeasible;
  std::vector<FailureRecord> failures;
  std::optional<PlacementWitness> witness;
};

namespace detail {

inline bool cyclic_cross(const std::vector<int>& a, const std::vector<int>& b, int modulus) {
  // positions alternate a,b,a,b somewhere around the circle
  for (int p : a)
    for (int q : a) {
      if (p == q) continue;
      for (int r : b)
        for (int s : b) {
          if (r == s) continue;
          auto between = [&](int x, int lo, int hi) {
            int span = (hi - lo + modulus) % modulus;
            int off = (x - lo + modulus) % modulus;
            return off > 0 && off < span;
          };
          if (between(r, p, q) && between(s, q, p)) return true;
        }
    }
  return false;
}

inline bool linear_cross(const std::vector<int>& a, const std::vector<int>& b) {
  for (int p : a)
    for (int q : a) {
      if (p >= q) continue;
      for (int r : b)
        for (int s : b)
          if (r > p && r < q && (s < p || s > q) && s != p && s != q) return true;
    }
  return false;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

class PlacementSearch {
public:
  PlacementSearch(const MBComplex& x, const Arrangement& arr, int arr_index,
                  std::uint64_t* nodes_left, bool run_validation)
      : x_(x), arr_(arr), arr_index_(arr_index), nodes_left_(nodes_left),
        run_validation_(run_validation) {
    for (auto& p : x_.pieces)
      (p.is_disk() ? disks_ : puncs_).push_back(p);
    std::sort(disks_.begin(), disks_.end(), [](auto& a, auto& b) { return a.id < b.id; });
    std::sort(puncs_.begin(), puncs_.end(), [](auto& a, auto& b) { return a.id < b.id; });
  }

  ArrangementOutcome run() {
    ArrangementOutcome out;
    // Arrangement-level incidence: every disk needs its branch on its
    // component's sea walk; every punctured sphere needs some region walk
    // carrying all of its branches.
    bool incidence_fail = false;
    for (auto& d : disks_) {
      int c = arr_.comp_of(d.branches[0]);
      if (walk_positions(arr_.comps[c].outer_walk, d.branches[0]).empty()) {
        record(out, FailureRecord::Kind::Incidence,
               "disk " + std::to_string(d.id) + " branch " + std::to_string(d.branches[0]) +
                   " absent from the sea walk");
        incidence_fail = true;
      }
    }
    for (auto& p : puncs_) {
      bool sea_ok = true;
      for (int b : p.branches)
        if (walk_positions(arr_.comps[arr_.comp_of(b)].outer_walk, b).empty()) sea_ok = false;
      bool any_long = !longitude_faces(p).empty();
      if (!sea_ok && !any_long) {
        record(out, FailureRecord::Kind::Incidence,
               "piece " + std::to_string(p.id) + " has no region reaching all boundaries");
        incidence_fail = true;
      }
    }
    if (incidence_fail) {
      out.status = ArrangementOutcome::Status::Infeasible;
      return out;
    }

    // Primary component selection for the chamber structure.
    std::vector<int> disks_per_comp(arr_.comps.size(), 0);
    for (auto& d : disks_) disks_per_comp[arr_.comp_of(d.branches[0])]++;
    primary_ = -1;
    if (arr_.comps.size() == 1) {
      primary_ = 0;
    } else {
      int heavy = -1;
      for (std::size_t c = 0; c < arr_.comps.size(); ++c)
        if (disks_per_comp[c] >= 2) {
          if (heavy >= 0) {
            out.status = ArrangementOutcome::Status::Unsupported;
            return out;
          }
          heavy = static_cast<int>(c);
        }
      primary_ = heavy;  // -1: no component is cut more than once
    }

    try {
      enumerate_disk_choices(0, out);
    } catch (const SearchDone&) {
      out.status = ArrangementOutcome::Status::Witness;
      out.witness = witness_;
      return out;
    }
    if (gap_seen_)
      out.status = ArrangementOutcome::Status::Gap;
    else
      out.status = ArrangementOutcome::Status::Infeasible;
    return out;
  }

private:
  struct SearchDone {};

  struct Chamber {
    bool cyclic = true;
    std::vector<int> wall;  // walk positions of the primary component, in order
  };

  void tick() {
    if (nodes_left_ && *nodes_left_ == 0) throw BudgetExceeded();
    if (nodes_left_) --*nodes_left_;
  }

  static std::vector<int> walk_positions(const std::vector<WalkItem>& walk, int branch) {
    std::vector<int> out;
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (walk[i].is_vertex && walk[i].vertex == branch) out.push_back(static_cast<int>(i));
    return out;
  }

  std::vector<std::pair<int, int>> longitude_faces(const Piece& p) const {
    std::vector<std::pair<int, int>> out;
    std::set<int> bs(p.branches.begin(), p.branches.end());
    int c0 = arr_.comp_of(p.branches[0]);
    bool same = true;
    for (int b : p.branches)
      if (arr_.comp_of(b) != c0) same = false;
    if (!same) return out;
    for (int f : arr_.comps[c0].inner_faces) {
      bool all = true;
      for (int b : bs)
        if (!arr_.comps[c0].faces.faces[f].visits(b)) all = false;
      if (all) out.push_back({c0, f});
    }
    return out;
  }

  void record(ArrangementOutcome& out, FailureRecord::Kind k, const std::string& s) {
    FailureRecord r{k, s};
    if (std::find(out.failures.begin(), out.failures.end(), r) == out.failures.end())
      out.failures.push_back(r);
  }

  // ---- disk choices -------------------------------------------------------

  void enumerate_disk_choices(std::size_t i, ArrangementOutcome& out) {
    tick();
    if (i == disks_.size()) {
      build_chambers();
      enumerate_hosting(0, out);
      return;
    }
    const Piece& d = disks_[i];
    int c = arr_.comp_of(d.branches[0]);
    auto occs = walk_positions(arr_.comps[c].outer_walk, d.branches[0]);
    if (c == primary_) {
      for (int pos : occs) {
        disk_occ_[d.id] = {c, pos};
        enumerate_disk_choices(i + 1, out);
      }
      disk_occ_.erase(d.id);
    } else {
      disk_occ_[d.id] = {c, occs.front()};
      enumerate_disk_choices(i + 1, out);
      disk_occ_.erase(d.id);
    }
  }

  void build_chambers() {
    chambers_.clear();
    cut_positions_.clear();
    if (primary_ >= 0) {
      std::set<int> cuts;
      for (auto& [pid, cp] : disk_occ_)
        if (cp.first == primary_) cuts.insert(cp.second);
      cut_positions_.assign(cuts.begin(), cuts.end());
    }
    const std::vector<WalkItem>* wall =
        primary_ >= 0 ? &arr_.comps[primary_].outer_walk : nullptr;
    if (!wall || cut_positions_.empty()) {
      Chamber ch;
      ch.cyclic = true;
      if (wall)
        for (std::size_t i = 0; i < wall->size(); ++i) ch.wall.push_back(static_cast<int>(i));
      chambers_.push_back(std::move(ch));
      return;
    }
    int W = static_cast<int>(wall->size());
    int m = static_cast<int>(cut_positions_.size());
    for (int i = 0; i < m; ++i) {
      int from = cut_positions_[i];
      int to = cut_positions_[(i + 1) % m];
      Chamber ch;
      ch.cyclic = false;
      ch.wall.push_back(from);
      for (int p = (from + 1) % W; p != to; p = (p + 1) % W) ch.wall.push_back(p);
      ch.wall.push_back(to);
      chambers_.push_back(std::move(ch));
    }
  }

  // Chambers a primary-walk position belongs to (cut positions touch two).
  std::vector<int> chambers_of_position(int pos) const {
    std::vector<int> out;
    for (std::size_t c = 0; c < chambers_.size(); ++c) {
      auto& w = chambers_[c].wall;
      if (chambers_[c].cyclic) {
        out.push_back(static_cast<int>(c));
        continue;
      }
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == pos) {
          out.push_back(static_cast<int>(c));
          break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // ---- hosting -------------------------------------------------------------

  void enumerate_hosting(std::size_t ci, ArrangementOutcome& out) {
    tick();
    if (ci == arr_.comps.size()) {
      enumerate_pieces(0, out);
      return;
    }
    if (static_cast<int>(ci) == primary_) {
      enumerate_hosting(ci + 1, out);
      return;
    }
    for (std::size_t ch = 0; ch < chambers_.size(); ++ch) {
      hosting_[static_cast<int>(ci)] = static_cast<int>(ch);
      enumerate_hosting(ci + 1, out);
    }
    hosting_.erase(static_cast<int>(ci));
  }

  // ---- punctured spheres ---------------------------------------------------

  struct PieceCandidate {
    RegionAddr where;
    std::vector<std::pair<int, int>> occ;
  };

  std::vector<PieceCandidate> piece_candidates(const Piece& p, ArrangementOutcome& out) {
    std::vector<PieceCandidate> cands;
    int k = p.punctures();
    // sea chambers
    for (std::size_t ch = 0; ch < chambers_.size(); ++ch) {
      std::vector<std::vector<std::pair<int, int>>> per_boundary;
      bool ok = true;
      for (int b : p.branches) {
        std::vector<std::pair<int, int>> opts;
        int c = arr_.comp_of(b);
        if (c == primary_) {
          for (int pos : walk_positions(arr_.comps[c].outer_walk, b)) {
            auto chs = chambers_of_position(pos);
            if (std::find(chs.begin(), chs.end(), static_cast<int>(ch)) != chs.end())
              opts.push_back({c, pos});
          }
        } else {
          int host = hosting_.count(c) ? hosting_.at(c) : 0;
          if (host == static_cast<int>(ch))
            for (int pos : walk_positions(arr_.comps[c].outer_walk, b)) opts.push_back({c, pos});
        }
        if (opts.empty()) {
          ok = false;
          break;
        }
        per_boundary.push_back(std::move(opts));
      }
      if (!ok) continue;
      std::vector<std::pair<int, int>> occ(k);
      std::function<void(int)> rec = [&](int bi) {
        if (bi == k) {
          cands.push_back({RegionAddr::sea(static_cast<int>(ch)), occ});
          return;
        }
        for (auto& o : per_boundary[bi]) {
          occ[bi] = o;
          rec(bi + 1);
        }
      };
      rec(0);
    }
    // longitude regions
    for (auto& [c, f] : longitude_faces(p)) {
      if (k % 2 != 0) {
        record(out, FailureRecord::Kind::HomologyParity,
               "piece " + std::to_string(p.id) + " has odd boundary count in longitude region c" +
                   std::to_string(c) + ":f" + std::to_string(f));
        continue;
      }
      auto walk = face_walk_items(arr_.comps[c].faces.faces[f]);
      std::vector<std::vector<std::pair<int, int>>> per_boundary;
      for (int b : p.branches) {
        std::vector<std::pair<int, int>> opts;
        for (int pos : walk_positions(walk, b)) opts.push_back({c, pos});
        per_boundary.push_back(std::move(opts));
      }
      std::vector<std::pair<int, int>> occ(k);
      std::function<void(int)> rec = [&](int bi) {
        if (bi == k) {
          cands.push_back({RegionAddr::longitude(c, f), occ});
          return;
        }
        for (auto& o : per_boundary[bi]) {
          occ[bi] = o;
          rec(bi + 1);
        }
      };
      rec(0);
    }
    return cands;
  }

  void enumerate_pieces(std::size_t i, ArrangementOutcome& out) {
    tick();
    if (i == puncs_.size()) {
      h_feasibility(out);
      return;
    }
    const Piece& p = puncs_[i];
    auto cands = piece_candidates(p, out);
    if (cands.empty()) {
      bool sea_reaches = true;
      for (int b : p.branches)
        if (walk_positions(arr_.comps[arr_.comp_of(b)].outer_walk, b).empty())
          sea_reaches = false;
      record(out,
             sea_reaches ? FailureRecord::Kind::BallAccess : FailureRecord::Kind::Incidence,
             "piece " + std::to_string(p.id) +
                 (sea_reaches ? " boundaries are separated by the placed disks"
                              : " has no region reaching all boundaries"));
      return;
    }
    for (auto& cand : cands) {
      PiecePlacement pp;
      pp.piece = p.id;
      pp.where = cand.where;
      pp.occ = cand.occ;
      piece_placements_.push_back(pp);
      enumerate_pieces(i + 1, out);
      piece_placements_.pop_back();
    }
  }

  // ---- H part --------------------------------------------------------------

  std::set<RegionAddr> all_region_addrs() const {
    std::set<RegionAddr> out;
    for (std::size_t ch = 0; ch < chambers_.size(); ++ch)
      out.insert(RegionAddr::sea(static_cast<int>(ch)));
    for (std::size_t c = 0; c < arr_.comps.size(); ++c)
      for (int f : arr_.comps[c].inner_faces)
        out.insert(RegionAddr::longitude(static_cast<int>(c), f));
    return out;
  }

  std::set<RegionAddr> site_access(const HSite& site) const {
    std::set<RegionAddr> out;
    if (std::holds_alternative<SiteFree>(site)) return all_region_addrs();
    if (auto* ob = std::get_if<SiteOnBranch>(&site)) {
      int b = ob->branch;
      int c = arr_.comp_of(b);
      for (int f : arr_.comps[c].inner_faces)
        if (arr_.comps[c].faces.faces[f].visits(b))
          out.insert(RegionAddr::longitude(c, f));
      if (c == primary_) {
        for (int pos : walk_positions(arr_.comps[c].outer_walk, b))
          for (int ch : chambers_of_position(pos)) out.insert(RegionAddr::sea(ch));
      } else {
        int host = hosting_.count(c) ? hosting_.at(c) : 0;
        out.insert(RegionAddr::sea(host));
      }
      return out;
    }
    auto& sec = std::get<SiteInSector>(site).sector;
    if (!sec.piece) {
      int eid = sec.id;
      int c = arr_.comp_of_edge(eid);
      auto& fs = arr_.comps[c].faces;
      for (auto& [dart, f] : fs.face_of_dart) {
        if (dart.edge != eid) continue;
        if (f == arr_.comps[c].emb.outer_face) {
          if (c == primary_) {
            for (std::size_t i = 0; i < arr_.comps[c].outer_walk.size(); ++i) {
              auto& it = arr_.comps[c].outer_walk[i];
              if (!it.is_vertex && it.dart == dart)
                for (int ch : chambers_of_interior_position(static_cast<int>(i)))
                  out.insert(RegionAddr::sea(ch));
            }
          } else {
            int host = hosting_.count(c) ? hosting_.at(c) : 0;
            out.insert(RegionAddr::sea(host));
          }
        } else {
          out.insert(RegionAddr::longitude(c, f));
        }
      }
      return out;
    }
    // piece interiors
    const Piece& p = x_.piece(sec.id);
    if (p.is_disk()) {
      auto it = disk_occ_.find(p.id);
      if (it == disk_occ_.end()) return out;
      auto [c, pos] = it->second;
      if (c == primary_) {
        for (int ch : chambers_of_position(pos)) out.insert(RegionAddr::sea(ch));
      } else {
        int host = hosting_.count(c) ? hosting_.at(c) : 0;
        out.insert(RegionAddr::sea(host));
      }
      return out;
    }
    for (auto& pp : piece_placements_)
      if (pp.piece == p.id) out.insert(pp.where);
    return out;
  }

  // chambers whose open interval contains the position (darts never sit at cuts)
  std::vector<int> chambers_of_interior_position(int pos) const {
    std::vector<int> out;
    for (std::size_t c = 0; c < chambers_.size(); ++c) {
      auto& w = chambers_[c].wall;
      if (chambers_[c].cyclic) {
        out.push_back(static_cast<int>(c));
        continue;
      }
      for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i] == pos) out.push_back(static_cast<int>(c));
    }
    return out;
  }

  void h_feasibility(ArrangementOutcome& out) {
    tick();
    // static edges (no free endpoint)
    std::vector<int> free_vs;
    for (auto& v : x_.hpart.vertices)
      if (std::holds_alternative<SiteFree>(v.site)) free_vs.push_back(v.id);
    std::sort(free_vs.begin(), free_vs.end());

    for (auto& e : x_.hpart.edges) {
      const HVertex& u = x_.hpart.vertex(e.u);
      const HVertex& v = x_.hpart.vertex(e.v);
      if (std::holds_alternative<SiteFree>(u.site) || std::holds_alternative<SiteFree>(v.site))
        continue;
      auto au = site_access(u.site);
      auto av = site_access(v.site);
      std::vector<RegionAddr> inter;
      std::set_intersection(au.begin(), au.end(), av.begin(), av.end(),
                            std::back_inserter(inter));
      if (inter.empty()) {
        record(out, FailureRecord::Kind::BallAccess,
               "h-edge " + std::to_string(e.id) + " endpoints share no region");
        return;
      }
    }
    assign_free(0, free_vs, out);
  }

  void assign_free(std::size_t i, const std::vector<int>& free_vs, ArrangementOutcome& out) {
    tick();
    if (i == free_vs.size()) {
      finish_candidate(out);
      return;
    }
    int v = free_vs[i];
    bool any = false;
    for (auto& addr : all_region_addrs()) {
      bool ok = true;
      for (auto& e : x_.hpart.edges) {
        if (e.u != v && e.v != v) continue;
        int other = e.u == v ? e.v : e.u;
        const HVertex& ov = x_.hpart.vertex(other);
        std::set<RegionAddr> oa;
        if (std::holds_alternative<SiteFree>(ov.site)) {
          auto it = free_assign_.find(other);
          if (it == free_assign_.end()) continue;  // later vertex
          oa = {it->second};
        } else {
          oa = site_access(ov.site);
        }
        if (!oa.count(addr)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      any = true;
      free_assign_[v] = addr;
      assign_free(i + 1, free_vs, out);
      free_assign_.erase(v);
    }
    if (!any)
      record(out, FailureRecord::Kind::BallAccess,
             "h-vertex " + std::to_string(v) + " has no region reaching all requirements");
  }

  // ---- witness layer -------------------------------------------------------

  void finish_candidate(ArrangementOutcome& out) {
    tick();
    feasible_seen_ = true;
    if (!run_validation_) {
      build_witness();
      throw SearchDone{};
    }
    if (validate_candidate()) throw SearchDone{};
    gap_seen_ = true;
  }

  void build_witness() {
    witness_ = PlacementWitness{};
    witness_.arrangement_index = arr_index_;
    witness_.arrangement_code = arr_.code();
    witness_.disk_occ = disk_occ_;
    witness_.hosting = hosting_;
    witness_.ppieces = piece_placements_;
    witness_.free_sites = free_assign_;
  }

  bool validate_candidate();

  const MBComplex& x_;
  const Arrangement& arr_;
  int arr_index_;
  std::uint64_t* nodes_left_;
  bool run_validation_;

  std::vector<Piece> disks_;
  std::vector<Piece> puncs_;
  int primary_ = -1;
  std::map<int, std::pair<int, int>> disk_occ_;
  std::vector<int> cut_positions_;
  std::vector<Chamber> chambers_;
  std::map<int, int> hosting_;
  std::vector<PiecePlacement> piece_placements_;
  std::map<int, RegionAddr> free_assign_;

  bool gap_seen_ = false;
  bool feasible_seen_ = false;
  PlacementWitness witness_;

  friend class CandidateValidator;
};

}  // namespace fcx

#include "fcx/validate.hpp"

namespace fcx {

inline bool PlacementSearch::validate_candidate() {
  CandidateValidator v(*this);
  if (!v.validate()) return false;
  build_witness();
  v.annotate(witness_);
  return true;
}

}  // namespace fcx
