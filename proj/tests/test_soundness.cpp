#include <catch2/catch_amalgamated.hpp>

#include "fcx/catalog.hpp"
#include "random_complexes.hpp"

using namespace fcx;

// A small slice of the soundness sweep; the acceptance suite runs the full
// thousand instances.
TEST_CASE("random instances never produce contradictory verdicts") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    MBComplex x = testing::random_complex(seed);
    Verdict v = decide_embeddable_s3(x);
    INFO("seed " << seed);
    if (v.kind == VerdictKind::Embeddable) {
      REQUIRE(v.witness.has_value());
      REQUIRE(verify_verdict(x, v));
      REQUIRE_FALSE(v.obstruction.has_value());
    } else if (v.kind == VerdictKind::NotEmbeddable) {
      REQUIRE(v.obstruction.has_value());
      REQUIRE_FALSE(v.witness.has_value());
      if (v.obstruction->kind != ObstructionKind::ExhaustiveInfeasibility)
        REQUIRE(verify_verdict(x, v));
    }
  }
}

TEST_CASE("reduction sufficiency always agrees with the search") {
  int fired = 0;
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    MBComplex x = testing::random_complex(seed);
    if (!x.piece_free()) continue;
    auto s = sufficiency_by_reduction(x);
    if (!s) continue;
    ++fired;
    EngineOptions opt;
    opt.force_search = true;
    Verdict v = decide_embeddable_s3(x, opt);
    INFO("seed " << seed);
    REQUIRE(v.kind == VerdictKind::Embeddable);
  }
  REQUIRE(fired > 0);
}

TEST_CASE("catalog soundness cross-check: surrogates of critical complexes embed") {
  // criticality demands every deletion surrogate of a listed critical complex
  // to be embeddable; the originals stay obstructed
  for (int n : {1, 3, 4, 8}) {
    INFO("critical " << n);
    MBComplex c = critical_of(n);
    REQUIRE(decide_embeddable_s3(c).kind == VerdictKind::NotEmbeddable);
    for (auto& s : deletion_surrogates(c)) {
      INFO(s.cls.str());
      Verdict v = decide_embeddable_s3(s.surrogate);
      REQUIRE(v.kind == VerdictKind::Embeddable);
      REQUIRE(verify_verdict(s.surrogate, v));
    }
  }
}
