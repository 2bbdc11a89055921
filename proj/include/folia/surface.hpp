#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "folia/errors.hpp"
#include "folia/pattern.hpp"

namespace folia {

struct SurfaceTree;

// Trees are immutable after construction and shared freely.
using TreePtr = std::shared_ptr<const SurfaceTree>;
using TreePattern = Pattern<TreePtr>;

// A strip together with everything glued along its upper boundary. The lower
// boundary is always a single interval: for the root strip it is free, for
// every other strip it is glued to one interval of its parent's upper
// boundary. The tree therefore describes the whole surface.
struct SurfaceTree {
  TreePattern children;
};

TreePtr make_tree(TreePattern children);

// The bare strip with empty upper boundary: (strip (fin)).
TreePtr leaf_strip();

// Fixed total order on trees: null slot < any tree, then the pattern order
// of compare_pattern applied recursively. Used for canonical rotations.
int compare_tree(const TreePtr& a, const TreePtr& b);
bool tree_equal(const TreePtr& a, const TreePtr& b);

// Checks the pattern invariants everywhere in the tree: cycles nonempty,
// support slots nonempty, support keys distinct. The class conditions
// (tree-shaped gluing graph, finite diameter, standard boundary collections)
// hold by construction of the data model.
std::vector<ValidationIssue> validate(const TreePtr& tree);

// A tree in canonical form: Nat/Neg with primitive cycle and shortest
// prefix, IntCyc with primitive cycle in least rotation, IntSup starting at
// key 0 (and the empty support respelled as the all-empty Z cycle), all
// subtrees recursively canonical. Two describable surfaces admit a foliated
// orientation-preserving homeomorphism iff their canonical trees are equal.
struct CanonicalTree {
  TreePtr tree;
};

CanonicalTree canonicalize(const TreePtr& tree);

bool trees_equivalent(const TreePtr& a, const TreePtr& b);

// Smallest k >= 1 with cycle[j] = cycle[(j+k) mod d] for all j; always a
// divisor of d. Slots must already be canonical so that structural equality
// decides equivalence.
std::int64_t minimal_period(const IntCycPat<TreePtr>& pat);

// Diameter of the strip graph in edge count. Pattern repetitions count with
// their true multiplicity: a cycle slot instantiates its subtree countably
// often, so it can supply both of the two deepest branches at a node.
std::int64_t graph_diameter(const TreePtr& tree);

// False iff some strip's whole upper boundary is a single interval glued to
// a child: that gluing leaf is not special, so the surface is not reduced.
bool is_reduced(const TreePtr& tree);

struct Reduction {
  TreePtr tree;
  int splices = 0;
};

// Splices every single-interval gluing: the parent and child strips merge
// into one (parent's lower boundary, child's upper). The result is reduced
// and carries the same homeotopy group.
Reduction reduce_with_stats(const TreePtr& tree);
TreePtr reduce(const TreePtr& tree);

}  // namespace folia
