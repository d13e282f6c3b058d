#pragma once

// Planarity testing and Kuratowski certificates.
//
// The fast path is Boyer-Myrvold from boost::graph on the simplified graph
// (loops and parallel edges never affect planarity). The rotation-system
// enumerator in embeddings.hpp is kept as the independent oracle used by the
// tests. Certificates are subdivision witnesses of K5 or K33 and re-validate
// structurally without consulting the search that produced them.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "fcx/graph.hpp"

namespace fcx {

namespace detail {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

struct BoostView {
  BoostGraph bg;
  std::vector<int> vertex_of_index;           // boost index -> fcx vertex id
  std::map<int, int> index_of_vertex;         // fcx vertex id -> boost index
  std::vector<int> edge_of_index;             // boost edge index -> fcx edge id
};

inline BoostView to_boost(const Graph& g) {
  BoostView v;
  v.bg = BoostGraph(g.vertex_count());
  int i = 0;
  for (int w : g.vertices()) {
    v.vertex_of_index.push_back(w);
    v.index_of_vertex[w] = i++;
  }
  int ei = 0;
  for (auto& e : g.edges()) {
    auto d = boost::add_edge(v.index_of_vertex[e.u], v.index_of_vertex[e.v], v.bg).first;
    boost::put(boost::edge_index, v.bg, d, ei++);
    v.edge_of_index.push_back(e.id);
  }
  return v;
}

}  // namespace detail

inline bool is_planar(const Graph& g) {
  Graph s = g.simplified();
  if (s.edge_count() < 9) return true;  // fewer edges than K33
  auto view = detail::to_boost(s);
  return boost::boyer_myrvold_planarity_test(view.bg);
}

enum class KuratowskiModel { K5, K33 };

struct KuratowskiCertificate {
  KuratowskiModel model = KuratowskiModel::K5;
  // Injective map: model vertex (0..4 for K5, 0..5 for K33 with parts
  // {0,1,2} and {3,4,5}) -> host vertex.
  std::vector<int> branch_vertices;
  // One host path per model edge, listed as a vertex sequence from
  // branch_vertices[a] to branch_vertices[b].
  std::vector<std::pair<std::pair<int, int>, std::vector<int>>> paths;

  json to_json() const {
    json j;
    j["model"] = model == KuratowskiModel::K5 ? "K5" : "K33";
    j["branch_vertices"] = branch_vertices;
    json ps = json::array();
    for (auto& [me, path] : paths)
      ps.push_back({{"model_edge", {me.first, me.second}}, {"path", path}});
    j["paths"] = ps;
    return j;
  }

  static KuratowskiCertificate from_json(const json& j) {
    KuratowskiCertificate c;
    c.model = j.at("model").get<std::string>() == "K5" ? KuratowskiModel::K5
                                                       : KuratowskiModel::K33;
    c.branch_vertices = j.at("branch_vertices").get<std::vector<int>>();
    for (auto& p : j.at("paths")) {
      auto me = p.at("model_edge");
      c.paths.push_back({{me[0].get<int>(), me[1].get<int>()},
                         p.at("path").get<std::vector<int>>()});
    }
    return c;
  }
};

inline std::vector<std::pair<int, int>> kuratowski_model_edges(KuratowskiModel m) {
  std::vector<std::pair<int, int>> out;
  if (m == KuratowskiModel::K5) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) out.push_back({i, j});
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) out.push_back({i, j});
  }
  return out;
}

// Pure structural validation: paths exist in the host, are internally
// disjoint, avoid foreign branch vertices, and contract to the model.
inline bool validate_kuratowski(const Graph& host, const KuratowskiCertificate& c) {
  std::size_t nb = c.model == KuratowskiModel::K5 ? 5 : 6;
  if (c.branch_vertices.size() != nb) return false;
  std::set<int> bset(c.branch_vertices.begin(), c.branch_vertices.end());
  if (bset.size() != nb) return false;
  for (int b : c.branch_vertices)
    if (!host.has_vertex(b)) return false;

  auto model_edges = kuratowski_model_edges(c.model);
  if (c.paths.size() != model_edges.size()) return false;

  std::set<std::pair<int, int>> covered;
  std::map<int, int> interior_use;
  for (auto& [me, path] : c.paths) {
    auto norm = std::minmax(me.first, me.second);
    if (covered.count(norm)) return false;
    covered.insert(norm);
    bool listed = false;
    for (auto& e : model_edges)
      if (std::minmax(e.first, e.second) == norm) listed = true;
    if (!listed) return false;
    if (path.size() < 2) return false;
    if (path.front() != c.branch_vertices[me.first]) return false;
    if (path.back() != c.branch_vertices[me.second]) return false;
    // consecutive vertices adjacent in the host
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      bool adj = false;
      for (auto& e : host.edges())
        if ((e.u == path[i] && e.v == path[i + 1]) ||
            (e.v == path[i] && e.u == path[i + 1]))
          adj = true;
      if (!adj) return false;
    }
    // interior vertices: not branch vertices, used by at most one path
    std::set<int> interior_here;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      int w = path[i];
      if (bset.count(w)) return false;
      if (interior_here.count(w)) return false;  // simple path
      interior_here.insert(w);
    }
    for (int w : interior_here)
      if (interior_use[w]++) return false;
  }
  return covered.size() == model_edges.size();
}

namespace detail {

// Reconstructs branch vertices and paths from a subdivision edge set.
inline std::optional<KuratowskiCertificate> structure_subdivision(
    const Graph& host, const std::set<int>& edge_ids) {
  std::map<int, std::vector<int>> adj;  // vertex -> incident subgraph edges
  for (int id : edge_ids) {
    const Edge& e = host.edge(id);
    adj[e.u].push_back(id);
    adj[e.v].push_back(id);
  }
  std::vector<int> branch;
  for (auto& [v, es] : adj)
    if (es.size() >= 3) branch.push_back(v);

  KuratowskiCertificate c;
  if (branch.size() == 5) {
    c.model = KuratowskiModel::K5;
    for (auto& [v, es] : adj)
      if (es.size() != 2 && es.size() != 4) return std::nullopt;
  } else if (branch.size() == 6) {
    c.model = KuratowskiModel::K33;
    for (auto& [v, es] : adj)
      if (es.size() != 2 && es.size() != 3) return std::nullopt;
  } else {
    return std::nullopt;
  }
  std::set<int> bset(branch.begin(), branch.end());

  // Walk maximal paths between branch vertices.
  std::set<int> used;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> raw_paths;
  for (int b : branch) {
    for (int start : adj[b]) {
      if (used.count(start)) continue;
      std::vector<int> path{b};
      int cur = b;
      int eid = start;
      while (true) {
        used.insert(eid);
        const Edge& e = host.edge(eid);
        cur = e.other(cur);
        path.push_back(cur);
        if (bset.count(cur)) break;
        int nxt = -1;
        for (int cand : adj[cur])
          if (cand != eid) nxt = cand;
        if (nxt < 0) return std::nullopt;
        eid = nxt;
      }
      raw_paths[std::minmax(path.front(), path.back())].push_back(path);
    }
  }

  // Assign model labels. For K33 two-color the branch adjacency.
  std::map<int, int> label;
  if (c.model == KuratowskiModel::K5) {
    for (std::size_t i = 0; i < branch.size(); ++i) label[branch[i]] = static_cast<int>(i);
  } else {
    std::map<int, std::set<int>> badj;
    for (auto& [key, ps] : raw_paths) {
      badj[key.first].insert(key.second);
      badj[key.second].insert(key.first);
    }
    std::map<int, int> side;
    std::vector<int> stack{branch.front()};
    side[branch.front()] = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : badj[x]) {
        if (!side.count(y)) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
    int a = 0, b = 3;
    for (int v : branch) label[v] = side[v] == 0 ? a++ : b++;
    if (a != 3 || b != 6) return std::nullopt;
  }

  for (auto& [key, ps] : raw_paths) {
    for (auto& p : ps) {
      int ma = label[p.front()];
      int mb = label[p.back()];
      c.paths.push_back({{ma, mb}, p});
    }
  }
  c.branch_vertices.assign(c.model == KuratowskiModel::K5 ? 5 : 6, -1);
  for (auto& [v, l] : label) c.branch_vertices[l] = v;

  // Order the paths by model edge for deterministic output.
  std::sort(c.paths.begin(), c.paths.end(), [](auto& a, auto& b) {
    return std::minmax(a.first.first, a.first.second) <
           std::minmax(b.first.first, b.first.second);
  });
  if (!validate_kuratowski(host, c)) return std::nullopt;
  return c;
}

}  // namespace detail

struct PlanarInputError : std::runtime_error {
  PlanarInputError() : std::runtime_error("graph is planar; no Kuratowski certificate") {}
};

inline KuratowskiCertificate kuratowski_certificate(const Graph& g) {
  if (is_planar(g)) throw PlanarInputError();
  Graph s = g.simplified();
  auto view = detail::to_boost(s);
  std::vector<boost::graph_traits<detail::BoostGraph>::edge_descriptor> kur;
  boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = view.bg,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
  std::set<int> ids;
  for (auto& ed : kur) ids.insert(view.edge_of_index[boost::get(boost::edge_index, view.bg, ed)]);

  // The Boyer-Myrvold subgraph may still contain removable edges; peel
  // until a clean subdivision remains.
  for (;;) {
    auto cert = detail::structure_subdivision(s, ids);
    if (cert) return *cert;
    bool shrunk = false;
    for (int id : std::set<int>(ids)) {
      std::set<int> trial = ids;
      trial.erase(id);
      Graph sub;
      for (int v : s.vertices()) sub.add_vertex(v);
      for (int e : trial) sub.add_edge(e, s.edge(e).u, s.edge(e).v);
      if (!is_planar(sub)) {
        ids = trial;
        shrunk = true;
        break;
      }
    }
    if (!shrunk) break;
  }
  auto cert = detail::structure_subdivision(s, ids);
  if (!cert) throw GraphError("failed to structure Kuratowski subgraph");
  return *cert;
}

inline std::string kuratowski_to_dot(const Graph& host, const KuratowskiCertificate& c) {
  std::ostringstream os;
  os << "graph kuratowski {\n";
  std::set<int> branch(c.branch_vertices.begin(), c.branch_vertices.end());
  std::set<std::pair<int, int>> cert_edges;
  for (auto& [me, path] : c.paths)
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      cert_edges.insert(std::minmax(path[i], path[i + 1]));
  for (int v : host.vertices())
    os << "  " << v << (branch.count(v) ? " [shape=doublecircle];\n" : ";\n");
  for (auto& e : host.edges()) {
    bool in_cert = cert_edges.count(std::minmax(e.u, e.v)) > 0;
    os << "  " << e.u << " -- " << e.v << (in_cert ? " [color=red,penwidth=2]" : "")
       << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fcx
