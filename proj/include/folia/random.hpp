#pragma once

#include <random>

#include "folia/groups.hpp"
#include "folia/surface.hpp"

namespace folia {

// Structured random values for property suites. Both generators draw raw
// engine outputs only, so results are identical across platforms for a
// fixed engine state. Depth 0 yields a leaf / the trivial group.
TreePtr random_tree(std::mt19937_64& rng, int depth);
GroupPtr random_group(std::mt19937_64& rng, int depth);

}  // namespace folia
