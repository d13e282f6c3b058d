#pragma once

// Rotation systems (combinatorial maps) and face tracing.
//
// A dart is an edge end. Loop edges contribute two darts at the same vertex.
// The face permutation used here is phi(d) = rot_next(twin(d)); its orbits
// are the face walks, and the Euler genus of each connected component comes
// from V - E + F = 2 - 2g.

#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "fcx/graph.hpp"

namespace fcx {

struct Dart {
  int edge = -1;
  int end = 0;  // 0: the u side, 1: the v side
  friend bool operator==(const Dart& a, const Dart& b) = default;
  friend auto operator<=>(const Dart& a, const Dart& b) = default;
};

inline Dart twin(Dart d) { return {d.edge, 1 - d.end}; }

inline int dart_vertex(const Graph& g, Dart d) {
  const Edge& e = g.edge(d.edge);
  return d.end == 0 ? e.u : e.v;
}

// Vertex the dart points to when traversed away from its base.
inline int dart_head(const Graph& g, Dart d) { return dart_vertex(g, twin(d)); }

class RotationSystem {
public:
  RotationSystem() = default;
  explicit RotationSystem(std::map<int, std::vector<Dart>> rot) : rot_(std::move(rot)) {}

  static RotationSystem canonical(const Graph& g) {
    std::map<int, std::vector<Dart>> rot;
    for (int v : g.vertices()) rot[v] = {};
    for (auto& e : g.edges()) {
      rot[e.u].push_back({e.id, 0});
      rot[e.v].push_back({e.id, 1});
    }
    return RotationSystem(std::move(rot));
  }

  const std::vector<Dart>& at(int v) const { return rot_.at(v); }
  std::vector<Dart>& at(int v) { return rot_.at(v); }
  const std::map<int, std::vector<Dart>>& all() const { return rot_; }

  bool valid(const Graph& g) const {
    std::map<Dart, int> seen;
    std::size_t total = 0;
    for (auto& [v, ds] : rot_) {
      if (!g.has_vertex(v)) return false;
      for (Dart d : ds) {
        if (!g.has_edge(d.edge)) return false;
        if (dart_vertex(g, d) != v) return false;
        if (seen[d]++) return false;
        ++total;
      }
    }
    return total == 2 * g.edge_count();
  }

  Dart next(int v, Dart d) const {
    const auto& ds = rot_.at(v);
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (ds[i] == d) return ds[(i + 1) % ds.size()];
    throw GraphError("dart not present in rotation");
  }

  std::string code() const {
    std::ostringstream os;
    for (auto& [v, ds] : rot_) {
      os << v << ":";
      // Normalize the cyclic order to start at the smallest dart.
      if (!ds.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < ds.size(); ++i)
          if (ds[i] < ds[best]) best = i;
        for (std::size_t i = 0; i < ds.size(); ++i) {
          Dart d = ds[(best + i) % ds.size()];
          os << d.edge << (d.end ? "b" : "a") << ",";
        }
      }
      os << ";";
    }
    return os.str();
  }

private:
  std::map<int, std::vector<Dart>> rot_;
};

// One face walk: the cyclic sequence of (vertex occurrence, dart) corners.
// `verts[i]` is the base of `darts[i]`; the walk leaves verts[i] along
// darts[i] and arrives at verts[(i+1) % n].
struct FaceWalk {
  std::vector<int> verts;
  std::vector<Dart> darts;
  std::size_t length() const { return darts.size(); }
  std::vector<int> distinct_vertices() const {
    std::set<int> s(verts.begin(), verts.end());
    return {s.begin(), s.end()};
  }
  bool visits(int v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
  }
};

struct FaceSet {
  std::vector<FaceWalk> faces;
  // Component-summed Euler genus.
  int genus = 0;
  // face index containing each dart
  std::map<Dart, int> face_of_dart;
};

inline FaceSet trace_faces(const Graph& g, const RotationSystem& rot) {
  FaceSet out;
  std::set<Dart> visited;
  for (auto& [v, ds] : rot.all()) {
    (void)v;
    for (Dart start : ds) {
      if (visited.count(start)) continue;
      FaceWalk w;
      Dart d = start;
      do {
        visited.insert(d);
        w.verts.push_back(dart_vertex(g, d));
        w.darts.push_back(d);
        out.face_of_dart[d] = static_cast<int>(out.faces.size());
        Dart t = twin(d);
        d = rot.next(dart_vertex(g, t), t);
      } while (!(d == start));
      out.faces.push_back(std::move(w));
    }
  }
  // Isolated vertices carry a one-item walk (their own face unless the
  // component has edges).
  std::map<int, bool> has_dart;
  for (auto& [v, ds] : rot.all()) has_dart[v] = !ds.empty();
  for (auto& [v, h] : has_dart)
    if (!h) {
      FaceWalk w;
      w.verts.push_back(v);
      out.faces.push_back(std::move(w));
    }

  // Genus per connected component, summed.
  int genus2 = 0;
  auto comps = g.components();
  for (auto& comp : comps) {
    int V = static_cast<int>(comp.size());
    int E = 0;
    for (auto& e : g.edges())
      if (comp.count(e.u)) ++E;
    int F = 0;
    for (auto& f : out.faces) {
      int v0 = f.verts.empty() ? -1 : f.verts.front();
      if (v0 >= 0 && comp.count(v0)) ++F;
    }
    genus2 += 2 - (V - E + F);
  }
  out.genus = genus2 / 2;
  return out;
}

inline int euler_genus(const Graph& g, const RotationSystem& rot) {
  return trace_faces(g, rot).genus;
}

}  // namespace fcx
