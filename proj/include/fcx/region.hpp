#pragma once

// Complement regions of a standard embedding. The faces of a planar
// embedding of the core correspond one-to-one to the regions of the
// complement: the outer face is the region where vertical circles bound
// disks (Meridian), every inner face is a solid torus whose vertical
// circles generate first homology (Longitude).

#include "fcx/embeddings.hpp"

namespace fcx {

struct WalkItem {
  bool is_vertex = true;
  int vertex = -1;
  Dart dart{};
};

inline std::vector<WalkItem> face_walk_items(const FaceWalk& f) {
  std::vector<WalkItem> out;
  if (f.darts.empty()) {
    for (int v : f.verts) out.push_back({true, v, {}});
    return out;
  }
  for (std::size_t i = 0; i < f.darts.size(); ++i) {
    out.push_back({true, f.verts[i], {}});
    out.push_back({false, -1, f.darts[i]});
  }
  return out;
}

enum class RegionKind { Meridian, Longitude };

struct Region {
  RegionKind kind = RegionKind::Longitude;
  int face = -1;
  std::vector<WalkItem> walk;

  std::vector<int> occurrences_of(int branch) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (walk[i].is_vertex && walk[i].vertex == branch)
        out.push_back(static_cast<int>(i));
    return out;
  }
  std::vector<int> dart_positions_of(int edge_id) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (!walk[i].is_vertex && walk[i].dart.edge == edge_id)
        out.push_back(static_cast<int>(i));
    return out;
  }
};

struct RegionModel {
  PlanarEmbedding embedding;
  FaceSet faces;
  std::vector<Region> regions;  // index 0 is the Meridian region

  const Region& meridian() const { return regions.front(); }
};

inline RegionModel region_model(const Graph& core, const PlanarEmbedding& e) {
  if (!core.connected()) throw GraphError("region_model requires a connected core");
  RegionModel rm;
  rm.embedding = e;
  rm.faces = trace_faces(core, e.rotation);
  if (rm.faces.genus != 0) throw NonplanarInputError();
  if (e.outer_face < 0 || e.outer_face >= static_cast<int>(rm.faces.faces.size()))
    throw GraphError("outer face out of range");
  Region outer;
  outer.kind = RegionKind::Meridian;
  outer.face = e.outer_face;
  outer.walk = face_walk_items(rm.faces.faces[e.outer_face]);
  rm.regions.push_back(std::move(outer));
  for (int f = 0; f < static_cast<int>(rm.faces.faces.size()); ++f) {
    if (f == e.outer_face) continue;
    Region r;
    r.kind = RegionKind::Longitude;
    r.face = f;
    r.walk = face_walk_items(rm.faces.faces[f]);
    rm.regions.push_back(std::move(r));
  }
  return rm;
}

// One standardly embedded component of a (possibly disconnected) core.
struct ComponentModel {
  Graph sub;
  PlanarEmbedding emb;
  FaceSet faces;
  std::vector<WalkItem> outer_walk;
  std::vector<int> inner_faces;
};

// A joint choice of embeddings for every core component. Components are
// ordered by their smallest vertex id; the shared outer region is the sea.
struct Arrangement {
  std::vector<ComponentModel> comps;

  int comp_of(int vertex) const {
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (comps[i].sub.has_vertex(vertex)) return static_cast<int>(i);
    throw GraphError("vertex not in any component");
  }
  int comp_of_edge(int edge_id) const {
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (comps[i].sub.has_edge(edge_id)) return static_cast<int>(i);
    throw GraphError("edge not in any component");
  }

  std::string code() const {
    std::ostringstream os;
    for (auto& c : comps)
      os << c.emb.rotation.code() << "|outer=" << c.emb.outer_face << ";";
    return os.str();
  }
};

inline std::vector<Arrangement> enumerate_arrangements(
    const Graph& core, std::uint64_t rotation_budget = 100'000'000) {
  std::vector<std::set<int>> comps = core.components();
  std::sort(comps.begin(), comps.end(),
            [](auto& a, auto& b) { return *a.begin() < *b.begin(); });
  std::vector<std::vector<ComponentModel>> per_comp;
  for (auto& cs : comps) {
    Graph sub = core.induced(cs);
    std::vector<ComponentModel> models;
    for (auto& e : planar_embeddings(sub, rotation_budget)) {
      ComponentModel m;
      m.sub = sub;
      m.emb = e;
      m.faces = trace_faces(sub, e.rotation);
      m.outer_walk = face_walk_items(m.faces.faces[e.outer_face]);
      for (int f = 0; f < static_cast<int>(m.faces.faces.size()); ++f)
        if (f != e.outer_face) m.inner_faces.push_back(f);
      models.push_back(std::move(m));
    }
    per_comp.push_back(std::move(models));
  }
  std::uint64_t total = 1;
  for (auto& v : per_comp) {
    total *= std::max<std::size_t>(v.size(), 1);
    if (total > rotation_budget) throw BudgetExceeded();
  }
  std::vector<Arrangement> out;
  std::vector<std::size_t> idx(per_comp.size(), 0);
  for (;;) {
    Arrangement a;
    for (std::size_t i = 0; i < per_comp.size(); ++i) a.comps.push_back(per_comp[i][idx[i]]);
    out.push_back(std::move(a));
    bool done = true;
    std::size_t i = per_comp.size();
    while (i > 0) {
      --i;
      if (++idx[i] < per_comp[i].size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace fcx
