#pragma once

#include <cstdint>

#include "folia/groups.hpp"
#include "folia/surface.hpp"

namespace folia {

// Image of the root-shift homomorphism into Z: trivial, or k*Z for the
// minimal period k of a Z-cyclic root pattern.
struct EtaImage {
  std::int64_t period = 0;  // 0 means the trivial image

  bool trivial() const { return period == 0; }

  static EtaImage make_trivial() { return EtaImage{0}; }
  static EtaImage make_period(std::int64_t k) { return EtaImage{k}; }
};

// Only a Z-indexed root boundary admits a shift: finite, N- and -N-indexed
// patterns pin every interval, and a finite nonempty support cannot be
// carried onto itself by a translation. For a Z-cycle the image is generated
// by the minimal period of the canonicalized cycle.
EtaImage eta_image(const TreePtr& tree);

// The homeotopy group of the surface as a group expression, by structural
// recursion: a shift image k*Z yields (product of the k cyclic blocks) wr Z
// (a single block skips the product layer); a trivial image yields the
// product over the root pattern with each glued subtree replaced by its
// group and empty intervals by the trivial group. The result is returned
// unnormalized.
GroupPtr compute_group(const TreePtr& tree);

}  // namespace folia
