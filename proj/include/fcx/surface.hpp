#pragma once

// Desk-scale surface embeddability: planarity criticality (the 2-sphere) and
// forbidden-graph membership for higher genus, decided by exhaustive rotation
// enumeration. Closed-surface obstructions of genus below the target are
// documentation only: the artifact carries no closed-surface type.

#include "fcx/subdivision.hpp"

namespace fcx {

struct SurfaceVerdict {
  int genus_bound = 0;
  bool embeds = false;
  bool critical = false;
  std::optional<RotationSystem> embedding_certificate;  // when embeds
  std::optional<KuratowskiCertificate> kuratowski;      // genus 0 obstructions

  json to_json() const {
    json j;
    j["schema"] = "fcx/1";
    j["genus"] = genus_bound;
    j["embeds"] = embeds;
    j["critical"] = critical;
    if (embedding_certificate) j["rotation_certificate"] = embedding_certificate->code();
    if (kuratowski) j["kuratowski"] = kuratowski->to_json();
    return j;
  }
};

inline bool gamma_s2_membership(const Graph& g, std::uint64_t budget = 100'000'000) {
  return graph_critical_for_surface(g, 0, budget);
}

inline bool omega_membership(const Graph& g, int genus, std::uint64_t budget = 100'000'000) {
  return graph_critical_for_surface(g, genus, budget);
}

inline SurfaceVerdict surface_verdict(const Graph& g, int genus,
                                      std::uint64_t budget = 100'000'000) {
  SurfaceVerdict v;
  v.genus_bound = genus;
  if (g.connected()) {
    auto [mg, rot] = min_genus_with_certificate(g, budget);
    v.embeds = mg <= genus;
    if (v.embeds) v.embedding_certificate = rot;
  } else {
    v.embeds = total_min_genus(g, budget) <= genus;
  }
  v.critical = !v.embeds && graph_critical_for_surface(g, genus, budget);
  if (!v.embeds && genus == 0 && !is_planar(g)) v.kuratowski = kuratowski_certificate(g);
  return v;
}

}  // namespace fcx
