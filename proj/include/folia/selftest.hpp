#pragma once

#include <cstdint>
#include <string>

namespace folia {

struct SelftestResult {
  bool ok = false;
  std::string report;
};

// Randomized cross-checks of the whole calculus: canonical-form laws, the
// realize/compute round trip, normalization invariances, wreath group
// axioms, the transport composition oracle, and text/JSON round trips.
// Deterministic for a fixed seed; `iters` scales every suite.
SelftestResult selftest(std::uint64_t seed, int iters);

}  // namespace folia
