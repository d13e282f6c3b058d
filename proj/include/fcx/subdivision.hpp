#pragma once

// Topological containment between small graphs: does a subdivision of h
// occur as a subgraph of g? Backtracking over branch-vertex injections and
// internally disjoint path realizations, with a node budget.

#include <optional>

#include "fcx/genus.hpp"
#include "fcx/planarity.hpp"

namespace fcx {

struct SubdivisionWitness {
  // h vertex -> g vertex
  std::map<int, int> vertex_map;
  // h edge id -> path of g vertices (cycle for loops: first == last)
  std::map<int, std::vector<int>> edge_paths;
};

namespace detail {

struct SubdivSearch {
  const Graph& h;
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  std::map<int, int> vmap;
  std::set<int> used_vertices;  // g vertices used as images or path interiors
  std::set<int> used_edges;     // g edges consumed by realized paths
  std::map<int, std::vector<int>> paths;

  bool tick() {
    if (++nodes > budget) throw BudgetExceeded();
    return true;
  }

  // Finds a path from a to b in g whose interior avoids used_vertices and the
  // images of h vertices. min_len: loops need >= 2 edges unless g has a loop.
  bool realize_edges(std::size_t ei, const std::vector<Edge>& hedges) {
    if (ei == hedges.size()) return true;
    const Edge& he = hedges[ei];
    int a = vmap.at(he.u);
    int b = vmap.at(he.v);
    std::vector<int> path{a};
    std::set<int> interior;
    return extend_path(ei, hedges, a, b, he.is_loop(), path, interior);
  }

  bool extend_path(std::size_t ei, const std::vector<Edge>& hedges, int cur, int target,
                   bool loop, std::vector<int>& path, std::set<int>& interior) {
    tick();
    // Paths are simple; once the target is reached the path ends there.
    if (cur == target && path.size() >= 2) {
      paths[hedges[ei].id] = path;
      for (int w : interior) used_vertices.insert(w);
      if (realize_edges(ei + 1, hedges)) return true;
      for (int w : interior) used_vertices.erase(w);
      paths.erase(hedges[ei].id);
      return false;
    }
    for (auto& e : g.edges()) {
      if (used_edges.count(e.id)) continue;
      int nxt;
      if (e.u == cur) nxt = e.v;
      else if (e.v == cur) nxt = e.u;
      else continue;
      if (e.is_loop()) {
        // usable only to realize a loop edge of h directly
        if (!(loop && cur == target && path.size() == 1)) continue;
        used_edges.insert(e.id);
        paths[hedges[ei].id] = {cur, cur};
        if (realize_edges(ei + 1, hedges)) return true;
        paths.erase(hedges[ei].id);
        used_edges.erase(e.id);
        continue;
      }
      if (nxt == target) {
        used_edges.insert(e.id);
        path.push_back(nxt);
        if (extend_path(ei, hedges, nxt, target, loop, path, interior)) return true;
        path.pop_back();
        used_edges.erase(e.id);
        continue;
      }
      if (used_vertices.count(nxt) || interior.count(nxt)) continue;
      bool is_image = false;
      for (auto& [hv, gv] : vmap)
        if (gv == nxt) is_image = true;
      if (is_image) continue;
      used_edges.insert(e.id);
      interior.insert(nxt);
      path.push_back(nxt);
      if (extend_path(ei, hedges, nxt, target, loop, path, interior)) return true;
      path.pop_back();
      interior.erase(nxt);
      used_edges.erase(e.id);
    }
    return false;
  }

  bool assign(std::size_t vi, const std::vector<int>& hverts) {
    tick();
    if (vi == hverts.size()) {
      std::vector<Edge> hedges = h.edges();
      return realize_edges(0, hedges);
    }
    int hv = hverts[vi];
    for (int gv : g.vertices()) {
      bool taken = false;
      for (auto& [x, y] : vmap)
        if (y == gv) taken = true;
      if (taken) continue;
      if (g.degree(gv) < h.degree(hv)) continue;
      vmap[hv] = gv;
      if (assign(vi + 1, hverts)) return true;
      vmap.erase(hv);
    }
    return false;
  }
};

}  // namespace detail

inline std::optional<SubdivisionWitness> find_subdivision(
    const Graph& h, const Graph& g, std::uint64_t budget = 10'000'000) {
  if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count())
    return std::nullopt;
  detail::SubdivSearch s{h, g, budget};
  std::vector<int> hverts = h.vertices();
  // Assign high-degree vertices first.
  std::sort(hverts.begin(), hverts.end(),
            [&](int a, int b) { return h.degree(a) > h.degree(b); });
  if (!s.assign(0, hverts)) return std::nullopt;
  SubdivisionWitness w;
  w.vertex_map = s.vmap;
  w.edge_paths = s.paths;
  return w;
}

// Suppresses degree-2 vertices: they are not topological features, so the
// pattern side of a containment test is smoothed first. A cycle smooths down
// to a single vertex carrying a loop.
inline Graph smooth_degree_two(const Graph& g) {
  Graph cur = g;
  for (;;) {
    int victim = -1;
    std::array<int, 2> inc{-1, -1};
    for (int v : cur.vertices()) {
      auto es = cur.incident_edges(v);
      if (es.size() != 2) continue;
      if (cur.edge(es[0]).is_loop() || cur.edge(es[1]).is_loop()) continue;
      victim = v;
      inc = {es[0], es[1]};
      break;
    }
    if (victim < 0) return cur;
    int a = cur.edge(inc[0]).other(victim);
    int b = cur.edge(inc[1]).other(victim);
    Graph next;
    for (int v : cur.vertices())
      if (v != victim) next.add_vertex(v);
    for (auto& e : cur.edges())
      if (e.id != inc[0] && e.id != inc[1]) next.add_edge(e.id, e.u, e.v);
    next.add_edge(next.next_edge_id(), a, b);  // loop when a == b
    cur = std::move(next);
  }
}

// Topological containment of |h| in |g|: a subdivision of the smoothed h
// occurs as a subgraph of g.
inline bool embeds_topologically(const Graph& h, const Graph& g,
                                 std::uint64_t budget = 10'000'000) {
  return find_subdivision(smooth_degree_two(h), g, budget).has_value();
}

// Criticality for the closed orientable genus-k surface. Point deletion is
// realized per stratum: open-edge deletions and open-star deletions, with
// pendant remnants dropped. Genus of a disconnected graph is the sum over
// components.
inline int total_min_genus(const Graph& g, std::uint64_t budget = 100'000'000) {
  int total = 0;
  for (auto& comp : g.components()) total += min_genus(g.induced(comp), budget);
  return total;
}

inline bool graph_critical_for_surface(const Graph& g, int genus,
                                       std::uint64_t budget = 100'000'000) {
  auto embeds = [&](const Graph& x) {
    if (genus == 0) return is_planar(x);
    return total_min_genus(x, budget) <= genus;
  };
  if (embeds(g)) return false;
  for (auto& e : g.edges())
    if (!embeds(g.without_edge(e.id))) return false;
  for (int v : g.vertices())
    if (!embeds(g.without_vertex(v))) return false;
  return true;
}

}  // namespace fcx
