#pragma once

// Deterministic random instances for the soundness suite: connected planar
// cores on up to six vertices, up to three pieces, up to four H edges over
// free, branch, and sector-interior sites.

#include <random>

#include "fcx/complex.hpp"
#include "fcx/planarity.hpp"

namespace fcx::testing {

inline Graph random_connected_planar_core(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nv(1, 6);
  for (;;) {
    int n = nv(rng);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    // random spanning tree first
    int eid = 0;
    for (int i = 1; i < n; ++i) {
      std::uniform_int_distribution<int> pick(0, i - 1);
      g.add_edge(eid++, pick(rng), i);
    }
    std::uniform_int_distribution<int> extra(0, std::max(0, 2 * n - 3));
    int add = extra(rng);
    for (int t = 0; t < add; ++t) {
      std::uniform_int_distribution<int> pick(0, n - 1);
      int u = pick(rng), v = pick(rng);
      if (u == v) continue;
      bool dup = false;
      for (auto& e : g.edges())
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) dup = true;
      if (!dup) g.add_edge(eid++, u, v);
    }
    if (is_planar(g)) return g;
  }
}

inline MBComplex random_complex(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MBComplex x;
  x.core = random_connected_planar_core(rng);
  int n = static_cast<int>(x.core.vertex_count());
  std::uniform_int_distribution<int> npieces(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> pickv(0, n - 1);
  int pc = npieces(rng);
  for (int i = 0; i < pc; ++i) {
    if (coin(rng) || n < 2) {
      x = attach_piece(x, SectorKind::Disk, {pickv(rng)});
    } else {
      std::uniform_int_distribution<int> kk(2, std::min(4, std::max(2, n)));
      int k = kk(rng);
      std::vector<int> bs;
      for (int j = 0; j < k; ++j) bs.push_back(pickv(rng));
      x = attach_piece(x, SectorKind::PuncturedSphere, bs);
    }
  }
  std::uniform_int_distribution<int> nh(0, 4);
  int he = nh(rng);
  auto random_site = [&]() -> HSite {
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
      case 0: return SiteFree{};
      case 1: return SiteOnBranch{pickv(rng)};
      default: {
        auto secs = x.sectors();
        if (secs.empty()) return SiteFree{};
        std::uniform_int_distribution<int> s(0, static_cast<int>(secs.size()) - 1);
        return SiteInSector{secs[s(rng)]};
      }
    }
  };
  int hv = 0;
  for (int i = 0; i < he; ++i) {
    int a = hv, b = hv + 1;
    x.hpart.vertices.push_back({a, random_site()});
    if (coin(rng) && hv >= 2) {
      std::uniform_int_distribution<int> old(0, hv - 1);
      b = old(rng);
    } else {
      x.hpart.vertices.push_back({b, random_site()});
      ++hv;
    }
    ++hv;
    x.hpart.edges.push_back({i, a, b});
  }
  x.validate();
  return x;
}

}  // namespace fcx::testing
