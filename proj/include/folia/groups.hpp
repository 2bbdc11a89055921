#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "folia/pattern.hpp"
#include "folia/surface.hpp"

namespace folia {

struct GroupExpr;
using GroupPtr = std::shared_ptr<const GroupExpr>;

// Factor patterns reuse the surface index machinery; a null slot reads as
// the trivial group.
using GroupPattern = Pattern<GroupPtr>;

struct OneExpr {};

struct ProdExpr {
  GroupPattern factors;
};

// inner wr Z: maps Z -> inner with finite support, extended by the shift.
struct WrExpr {
  GroupPtr inner;
};

// A representation of a group built from the trivial group by countable
// direct products and wreath products with Z. The representation is data;
// isomorphic groups can be spelled many ways.
struct GroupExpr {
  std::variant<OneExpr, ProdExpr, WrExpr> node;
};

GroupPtr one();
GroupPtr prod(GroupPattern factors);
GroupPtr wr(GroupPtr inner);
GroupPtr z_group();  // wr(one): the canonical spelling of the integers

int compare_group(const GroupPtr& a, const GroupPtr& b);
bool group_equal(const GroupPtr& a, const GroupPtr& b);

std::vector<ValidationIssue> validate_group(const GroupPtr& e);

// --------------------------------------------------------------------------
// normal form

struct GroupNormalForm;
using NfPtr = std::shared_ptr<const GroupNormalForm>;

// Factor multiplicity: a positive count or omega (countably infinite).
struct Mult {
  std::uint64_t count = 1;
  bool omega = false;

  static Mult finite(std::uint64_t n) { return Mult{n, false}; }
  static Mult w() { return Mult{0, true}; }
};

int compare_mult(const Mult& a, const Mult& b);

struct NfOne {};
struct NfWr {
  NfPtr inner;
};
struct NfFactor {
  NfPtr factor;  // never the trivial group
  Mult mult;
};
// Commutative product data: factors pairwise distinct, sorted by the
// structural order, total multiplicity at least 2 (omega counts as 2).
struct NfProd {
  std::vector<NfFactor> factors;
};

struct GroupNormalForm {
  std::variant<NfOne, NfWr, NfProd> node;
};

NfPtr nf_one();
NfPtr nf_wr(NfPtr inner);
NfPtr nf_prod(std::vector<NfFactor> factors);  // applies the collapse rules

int compare_nf(const NfPtr& a, const NfPtr& b);
bool nf_equal(const NfPtr& a, const NfPtr& b);

// Sound normalization: drops trivial factors, flattens nested products,
// collapses singleton products, turns infinite index families into omega
// multiplicities, and absorbs finite counts into omega. Equal normal forms
// imply isomorphic groups; completeness is not claimed.
NfPtr normalize(const GroupPtr& e);

// A representative expression spelling the normal form: omega entries become
// constant N-indexed product factors.
GroupPtr nf_to_expr(const NfPtr& nf);

// Height of the representation as written: 0 for the trivial group, wreath
// adds 1, a product adds 1 plus the deepest factor.
std::int64_t height(const GroupPtr& e);

// Builds a surface whose homeotopy group is the given one. Products mirror
// their factor pattern onto strip boundaries; a wreath layer becomes the
// constant Z-cycle of copies of the realized inner surface. Z-cyclic product
// patterns are respelled over N (and the empty Z support as the bare strip)
// so that no unintended shift symmetry appears.
TreePtr realize(const GroupPtr& e);

}  // namespace folia
