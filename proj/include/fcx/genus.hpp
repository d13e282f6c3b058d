#pragma once

// Minimum Euler genus by exhaustive rotation enumeration.

#include <limits>

#include "fcx/embeddings.hpp"

namespace fcx {

inline int min_genus(const Graph& g, std::uint64_t budget = 100'000'000) {
  if (g.vertex_count() == 0) return 0;
  if (!g.connected()) throw GraphError("min_genus requires a connected graph");
  int best = std::numeric_limits<int>::max();
  enumerate_rotation_systems(
      g,
      [&](const RotationSystem& rot) {
        int ge = euler_genus(g, rot);
        if (ge < best) best = ge;
        return best != 0;  // genus 0 cannot be beaten
      },
      budget);
  return best;
}

// A rotation system realizing the minimum genus, for certificate output.
inline std::pair<int, RotationSystem> min_genus_with_certificate(
    const Graph& g, std::uint64_t budget = 100'000'000) {
  if (!g.connected()) throw GraphError("min_genus requires a connected graph");
  int best = std::numeric_limits<int>::max();
  RotationSystem best_rot = RotationSystem::canonical(g);
  enumerate_rotation_systems(
      g,
      [&](const RotationSystem& rot) {
        int ge = euler_genus(g, rot);
        if (ge < best) {
          best = ge;
          best_rot = rot;
        }
        return best != 0;
      },
      budget);
  return {best, best_rot};
}

}  // namespace fcx
