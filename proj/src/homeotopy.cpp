#include "folia/homeotopy.hpp"

namespace folia {

namespace {

// Root pattern with canonical slots, as used for period detection. Full
// canonicalization also respells an empty Z support as the all-empty cycle.
TreePattern canonical_root_pattern(const TreePtr& tree) {
  return canonicalize(tree).tree->children;
}

}  // namespace

EtaImage eta_image(const TreePtr& tree) {
  TreePattern pat = canonical_root_pattern(tree);
  if (const auto* cyc = std::get_if<IntCycPat<TreePtr>>(&pat))
    return EtaImage::make_period(minimal_period(*cyc));
  return EtaImage::make_trivial();
}

GroupPtr compute_group(const TreePtr& tree) {
  auto slot_group = [](const TreePtr& s) -> GroupPtr { return s ? compute_group(s) : one(); };

  TreePattern canonical = canonical_root_pattern(tree);
  if (const auto* cyc = std::get_if<IntCycPat<TreePtr>>(&canonical)) {
    // Canonical cycles are primitive, so the cycle length is the period k.
    std::vector<GroupPtr> blocks;
    blocks.reserve(cyc->cycle.size());
    for (const TreePtr& s : cyc->cycle) blocks.push_back(slot_group(s));
    if (blocks.size() == 1) return wr(blocks[0]);
    return wr(prod(FinPat<GroupPtr>{std::move(blocks)}));
  }

  GroupPattern factors =
      map_pattern(tree->children, [&](const TreePtr& s) -> GroupPtr { return slot_group(s); });
  return prod(std::move(factors));
}

}  // namespace folia
