#pragma once

// Exhaustive enumeration of rotation systems and planar embeddings.
//
// This is the search space of the region engine and the independent
// planarity oracle. Output order is deterministic: rotations are produced in
// lexicographic order of the per-vertex dart permutations, and embeddings as
// (rotation, outer face) pairs in that order. Reflections are not identified.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "fcx/planarity.hpp"
#include "fcx/rotation.hpp"

namespace fcx {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("enumeration budget exceeded") {}
};

struct EnumerationBudget {
  std::uint64_t rotation_systems = 100'000'000;  // default 1e8
  std::uint64_t search_nodes = 10'000'000;       // default 1e7
};

inline std::uint64_t rotation_space_size(const Graph& g) {
  std::uint64_t total = 1;
  for (int v : g.vertices()) {
    int d = g.degree(v);
    for (int k = 2; k < d; ++k) {
      total *= k;
      if (total > (std::uint64_t{1} << 62)) return total;
    }
  }
  return total;
}

// Calls fn for every rotation system of g; stops early if fn returns false.
inline void enumerate_rotation_systems(
    const Graph& g, const std::function<bool(const RotationSystem&)>& fn,
    std::uint64_t budget = 100'000'000) {
  if (rotation_space_size(g) > budget) throw BudgetExceeded();

  std::vector<int> vs = g.vertices();
  std::sort(vs.begin(), vs.end());
  std::map<int, std::vector<Dart>> base;
  for (int v : vs) base[v] = {};
  for (auto& e : g.edges()) {
    base[e.u].push_back({e.id, 0});
    base[e.v].push_back({e.id, 1});
  }
  for (auto& [v, ds] : base) std::sort(ds.begin(), ds.end());

  // For each vertex, the first dart is pinned; permutations of the rest give
  // all cyclic orders exactly once.
  std::map<int, std::vector<Dart>> current = base;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t vi) {
    if (stop) return;
    if (vi == vs.size()) {
      if (!fn(RotationSystem(current))) stop = true;
      return;
    }
    int v = vs[vi];
    auto& ds = current[v];
    if (ds.size() <= 2) {
      rec(vi + 1);
      return;
    }
    std::vector<Dart> tail(ds.begin() + 1, ds.end());
    std::sort(tail.begin(), tail.end());
    do {
      for (std::size_t i = 0; i < tail.size(); ++i) ds[i + 1] = tail[i];
      rec(vi + 1);
      if (stop) return;
    } while (std::next_permutation(tail.begin(), tail.end()));
    ds = base[v];
  };
  rec(0);
}

// The rotation-system planarity oracle (independent of boost).
inline bool is_planar_by_rotations(const Graph& g,
                                   std::uint64_t budget = 100'000'000) {
  auto comps = g.components();
  for (auto& comp : comps) {
    Graph sub = g.induced(comp);
    bool found = false;
    enumerate_rotation_systems(
        sub,
        [&](const RotationSystem& rot) {
          if (euler_genus(sub, rot) == 0) {
            found = true;
            return false;
          }
          return true;
        },
        budget);
    if (!found) return false;
  }
  return true;
}

struct PlanarEmbedding {
  RotationSystem rotation;
  int outer_face = 0;

  bool valid(const Graph& g) const {
    if (!rotation.valid(g)) return false;
    FaceSet fs = trace_faces(g, rotation);
    if (fs.genus != 0) return false;
    return outer_face >= 0 && outer_face < static_cast<int>(fs.faces.size());
  }
};

struct NonplanarInputError : std::runtime_error {
  NonplanarInputError() : std::runtime_error("graph is not planar") {}
};

// Every (genus-0 rotation system, outer face) pair of a connected planar
// graph, deduplicated by the canonical code of the labeled map.
inline std::vector<PlanarEmbedding> planar_embeddings(
    const Graph& g, std::uint64_t budget = 100'000'000) {
  if (!g.connected()) throw GraphError("planar_embeddings requires a connected graph");
  if (!is_planar(g)) throw NonplanarInputError();
  std::vector<PlanarEmbedding> out;
  std::set<std::string> seen;
  enumerate_rotation_systems(
      g,
      [&](const RotationSystem& rot) {
        FaceSet fs = trace_faces(g, rot);
        if (fs.genus != 0) return true;
        std::string code = rot.code();
        if (!seen.insert(code).second) return true;
        for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
          out.push_back({rot, f});
        return true;
      },
      budget);
  return out;
}

// Genus-0 rotation systems only (no outer-face expansion).
inline std::vector<RotationSystem> planar_rotation_systems(
    const Graph& g, std::uint64_t budget = 100'000'000) {
  std::vector<RotationSystem> out;
  std::set<std::string> seen;
  enumerate_rotation_systems(
      g,
      [&](const RotationSystem& rot) {
        if (euler_genus(g, rot) != 0) return true;
        if (seen.insert(rot.code()).second) out.push_back(rot);
        return true;
      },
      budget);
  return out;
}

}  // namespace fcx
