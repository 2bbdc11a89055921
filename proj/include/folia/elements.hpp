#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <variant>

#include "folia/groups.hpp"

namespace folia {

struct WreathElement;
using ElemPtr = std::shared_ptr<const WreathElement>;

struct UnitElem {};

// Element of a product shape: index -> non-identity element of that slot's
// group. Absent indices carry the identity.
struct ProdElem {
  std::map<std::int64_t, ElemPtr> entries;
};

// Element (phi, shift) of inner wr Z, with phi stored on its finite support;
// identity values are never stored, so equality is structural.
struct WrElem {
  std::map<std::int64_t, ElemPtr> decorations;
  std::int64_t shift = 0;
};

struct WreathElement {
  std::variant<UnitElem, ProdElem, WrElem> node;
};

ElemPtr make_unit();
ElemPtr make_prod_elem(std::map<std::int64_t, ElemPtr> entries);
ElemPtr make_wr_elem(std::map<std::int64_t, ElemPtr> decorations, std::int64_t shift);

bool is_identity(const ElemPtr& e);
int compare_element(const ElemPtr& a, const ElemPtr& b);
bool element_equal(const ElemPtr& a, const ElemPtr& b);

// Slot lookup for product shapes. `valid` is false when the index lies
// outside the pattern's index set; a null shape is the trivial group.
struct SlotShape {
  bool valid = false;
  GroupPtr shape;
};
SlotShape prod_slot_shape(const GroupPattern& pat, std::int64_t index);

// The identity in its canonical spelling for the shape.
ElemPtr identity(const GroupPtr& shape);

// Throws ShapeError unless e is a structurally valid, identity-free element
// of the shape.
void check_element(const GroupPtr& shape, const ElemPtr& e);

// (phi1, h1) * (phi2, h2) = ((phi1 . h2) * phi2, h1 + h2); products multiply
// slotwise. Both operands are checked against the shape.
ElemPtr multiply(const GroupPtr& shape, const ElemPtr& a, const ElemPtr& b);

// (phi, m)^-1 = (j -> phi(j - m)^-1, -m); products invert slotwise.
ElemPtr inverse(const GroupPtr& shape, const ElemPtr& a);

// The exact sequence 1 -> Map(Z,S) -> S wr Z -> Z -> 1: projection onto the
// shift, its section n -> (identity map, n), and the kernel inclusion
// phi -> (phi, 0).
std::int64_t project_pi(const GroupPtr& shape, const ElemPtr& a);
ElemPtr section_s(const GroupPtr& shape, std::int64_t n);
ElemPtr include_i(const GroupPtr& shape, const std::map<std::int64_t, ElemPtr>& decorations);

// Independent composition oracle for Wr(block_shape) elements, modelled on
// the underlying surface symmetry: block j is carried to j + shift, and
// decorations compose by following where blocks go. Must agree with multiply
// exactly. k is the block count of the product shape (1 when the single
// block skipped the product layer).
ElemPtr transport_compose(std::int64_t k, const GroupPtr& block_shape, const ElemPtr& a,
                          const ElemPtr& b);

// Deterministic in (shape, budget, seed); the identity when budget is 0.
// Support sizes, indices and shifts are bounded by the budget.
ElemPtr random_element(const GroupPtr& shape, int budget, std::uint64_t seed);

}  // namespace folia
