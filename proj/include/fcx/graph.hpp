#pragma once

// Multigraph with stable integer ids. Loops and parallel edges are allowed;
// several constructions below (theta spines, punctured-annulus remnants)
// depend on that.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fcx {

using json = nlohmann::json;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  int other(int w) const { return w == u ? v : u; }
};

class Graph {
public:
  Graph() = default;

  static Graph from_lists(std::vector<int> vertices,
                          std::vector<std::array<int, 3>> edges) {
    Graph g;
    for (int v : vertices) g.add_vertex(v);
    for (auto& e : edges) g.add_edge(e[0], e[1], e[2]);
    return g;
  }

  void add_vertex(int id, std::string label = {}) {
    if (vertex_set_.count(id))
      throw GraphError("duplicate vertex id " + std::to_string(id));
    vertex_set_.insert(id);
    vertices_.push_back(id);
    if (!label.empty()) vertex_labels_[id] = std::move(label);
  }

  int add_edge(int id, int u, int v, std::string label = {}) {
    if (edge_index_.count(id))
      throw GraphError("duplicate edge id " + std::to_string(id));
    if (!vertex_set_.count(u) || !vertex_set_.count(v))
      throw GraphError("edge " + std::to_string(id) + " references undeclared vertex");
    edge_index_[id] = edges_.size();
    edges_.push_back({id, u, v});
    if (!label.empty()) edge_labels_[id] = std::move(label);
    return id;
  }

  int add_edge_auto(int u, int v) { return add_edge(next_edge_id(), u, v); }

  int next_edge_id() const {
    int m = 0;
    for (auto& e : edges_) m = std::max(m, e.id + 1);
    return m;
  }
  int next_vertex_id() const {
    int m = 0;
    for (int v : vertices_) m = std::max(m, v + 1);
    return m;
  }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_vertex(int v) const { return vertex_set_.count(v) != 0; }
  bool has_edge(int id) const { return edge_index_.count(id) != 0; }
  const Edge& edge(int id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw GraphError("unknown edge id " + std::to_string(id));
    return edges_[it->second];
  }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Loops contribute 2 to the degree.
  int degree(int v) const {
    int d = 0;
    for (auto& e : edges_) {
      if (e.u == v) ++d;
      if (e.v == v) ++d;
    }
    return d;
  }

  std::vector<int> incident_edges(int v) const {
    std::vector<int> out;
    for (auto& e : edges_)
      if (e.u == v || e.v == v) out.push_back(e.id);
    return out;
  }

  std::vector<int> neighbors(int v) const {
    std::set<int> out;
    for (auto& e : edges_) {
      if (e.u == v) out.insert(e.v);
      if (e.v == v) out.insert(e.u);
    }
    return {out.begin(), out.end()};
  }

  Graph without_edge(int id) const {
    Graph g = *this;
    auto it = g.edge_index_.find(id);
    if (it == g.edge_index_.end()) throw GraphError("unknown edge id");
    g.edges_.erase(g.edges_.begin() + it->second);
    g.reindex();
    return g;
  }

  // Removes the vertex together with its incident edges (open star).
  Graph without_vertex(int v) const {
    Graph g;
    for (int w : vertices_)
      if (w != v) g.add_vertex(w);
    for (auto& e : edges_)
      if (e.u != v && e.v != v) g.add_edge(e.id, e.u, e.v);
    return g;
  }

  Graph induced(const std::set<int>& keep) const {
    Graph g;
    for (int w : vertices_)
      if (keep.count(w)) g.add_vertex(w);
    for (auto& e : edges_)
      if (keep.count(e.u) && keep.count(e.v)) g.add_edge(e.id, e.u, e.v);
    return g;
  }

  std::vector<std::set<int>> components() const {
    std::map<int, int> comp;
    int n = 0;
    for (int v : vertices_)
      if (!comp.count(v)) {
        std::vector<int> stack{v};
        comp[v] = n;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int w : neighbors(x))
            if (!comp.count(w)) {
              comp[w] = n;
              stack.push_back(w);
            }
        }
        ++n;
      }
    std::vector<std::set<int>> out(n);
    for (auto& [v, c] : comp) out[c].insert(v);
    return out;
  }

  bool connected() const { return components().size() <= 1; }

  // Simplification for planarity: loops removed, parallel classes collapsed.
  // Returns the simple graph plus a representative host edge per kept edge.
  Graph simplified(std::map<int, int>* rep = nullptr) const {
    Graph g;
    for (int v : vertices_) g.add_vertex(v);
    std::map<std::pair<int, int>, int> seen;
    for (auto& e : edges_) {
      if (e.is_loop()) continue;
      auto key = std::minmax(e.u, e.v);
      if (seen.count(key)) continue;
      seen[key] = e.id;
      g.add_edge(e.id, e.u, e.v);
      if (rep) (*rep)[e.id] = e.id;
    }
    return g;
  }

  // Canonical code of the labeled multigraph (ids kept as-is).
  std::string code() const {
    std::ostringstream os;
    std::vector<int> vs = vertices_;
    std::sort(vs.begin(), vs.end());
    for (int v : vs) os << "v" << v << ";";
    std::vector<std::array<int, 3>> es;
    for (auto& e : edges_) es.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.id});
    std::sort(es.begin(), es.end());
    for (auto& e : es) os << "e" << e[0] << "," << e[1] << ";";
    return os.str();
  }

  json to_json() const {
    json j;
    j["vertices"] = vertices_;
    json es = json::array();
    for (auto& e : edges_) es.push_back({e.id, e.u, e.v});
    j["edges"] = es;
    return j;
  }

  static Graph from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
      throw GraphError("graph json must have 'vertices' and 'edges'");
    Graph g;
    for (auto& v : j.at("vertices")) g.add_vertex(v.get<int>());
    for (auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3)
        throw GraphError("edge entries must be [id,u,v]");
      g.add_edge(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
    }
    return g;
  }

  std::string to_dot(const std::string& name = "G") const {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v : vertices_) os << "  " << v << ";\n";
    for (auto& e : edges_)
      os << "  " << e.u << " -- " << e.v << " [label=\"e" << e.id << "\"];\n";
    os << "}\n";
    return os.str();
  }

private:
  void reindex() {
    edge_index_.clear();
    for (std::size_t i = 0; i < edges_.size(); ++i) edge_index_[edges_[i].id] = i;
  }

  std::vector<int> vertices_;
  std::set<int> vertex_set_;
  std::vector<Edge> edges_;
  std::map<int, std::size_t> edge_index_;
  std::map<int, std::string> vertex_labels_;
  std::map<int, std::string> edge_labels_;
};

// Common small graphs used throughout.
inline Graph complete_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  int id = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(id++, i, j);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g;
  for (int i = 0; i < a + b; ++i) g.add_vertex(i);
  int id = 0;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(id++, i, a + j);
  return g;
}

// Star K_{1,n}: center 0, leaves 1..n.
inline Graph star_graph(int n) {
  Graph g;
  g.add_vertex(0);
  for (int i = 1; i <= n; ++i) {
    g.add_vertex(i);
    g.add_edge(i - 1, 0, i);
  }
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i) g.add_edge(i, i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i, i + 1);
  return g;
}

}  // namespace fcx
