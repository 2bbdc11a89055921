#include "folia/elements.hpp"

#include <random>
#include <set>

#include "folia/errors.hpp"

namespace folia {

ElemPtr make_unit() {
  static const ElemPtr instance = std::make_shared<const WreathElement>(WreathElement{UnitElem{}});
  return instance;
}

ElemPtr make_prod_elem(std::map<std::int64_t, ElemPtr> entries) {
  return std::make_shared<const WreathElement>(WreathElement{ProdElem{std::move(entries)}});
}

ElemPtr make_wr_elem(std::map<std::int64_t, ElemPtr> decorations, std::int64_t shift) {
  return std::make_shared<const WreathElement>(WreathElement{WrElem{std::move(decorations), shift}});
}

bool is_identity(const ElemPtr& e) {
  if (std::holds_alternative<UnitElem>(e->node)) return true;
  if (const auto* p = std::get_if<ProdElem>(&e->node)) return p->entries.empty();
  const auto& w = std::get<WrElem>(e->node);
  return w.decorations.empty() && w.shift == 0;
}

namespace {

int compare_entry_maps(const std::map<std::int64_t, ElemPtr>& a,
                       const std::map<std::int64_t, ElemPtr>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (int c = compare_element(ia->second, ib->second); c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

int compare_element(const ElemPtr& a, const ElemPtr& b) {
  if (a->node.index() != b->node.index()) return a->node.index() < b->node.index() ? -1 : 1;
  if (std::holds_alternative<UnitElem>(a->node)) return 0;
  if (const auto* pa = std::get_if<ProdElem>(&a->node))
    return compare_entry_maps(pa->entries, std::get<ProdElem>(b->node).entries);
  const auto& wa = std::get<WrElem>(a->node);
  const auto& wb = std::get<WrElem>(b->node);
  if (wa.shift != wb.shift) return wa.shift < wb.shift ? -1 : 1;
  return compare_entry_maps(wa.decorations, wb.decorations);
}

bool element_equal(const ElemPtr& a, const ElemPtr& b) { return compare_element(a, b) == 0; }

// ---------------------------------------------------------------------------
// shapes

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

SlotShape prod_slot_shape(const GroupPattern& pat, std::int64_t index) {
  return std::visit(
      [&](const auto& p) -> SlotShape {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FinPat<GroupPtr>>) {
          if (index < 1 || index > static_cast<std::int64_t>(p.slots.size())) return {};
          return {true, p.slots[static_cast<std::size_t>(index - 1)]};
        } else if constexpr (std::is_same_v<T, NatPat<GroupPtr>> ||
                             std::is_same_v<T, NegPat<GroupPtr>>) {
          std::int64_t i = std::is_same_v<T, NatPat<GroupPtr>> ? index : -index;
          if (i < 1) return {};
          const std::int64_t pre = static_cast<std::int64_t>(p.prefix.size());
          if (i <= pre) return {true, p.prefix[static_cast<std::size_t>(i - 1)]};
          const std::int64_t d = static_cast<std::int64_t>(p.cycle.size());
          return {true, p.cycle[static_cast<std::size_t>((i - pre - 1) % d)]};
        } else if constexpr (std::is_same_v<T, IntCycPat<GroupPtr>>) {
          const std::int64_t d = static_cast<std::int64_t>(p.cycle.size());
          return {true, p.cycle[static_cast<std::size_t>(floor_mod(index, d))]};
        } else {
          for (const auto& [k, g] : p.entries)
            if (k == index) return {true, g};
          return {true, nullptr};
        }
      },
      pat);
}

ElemPtr identity(const GroupPtr& shape) {
  if (std::holds_alternative<OneExpr>(shape->node)) return make_unit();
  if (std::holds_alternative<ProdExpr>(shape->node)) return make_prod_elem({});
  return make_wr_elem({}, 0);
}

void check_element(const GroupPtr& shape, const ElemPtr& e) {
  if (!e) throw ShapeError("null element");
  if (std::holds_alternative<OneExpr>(shape->node)) {
    if (!std::holds_alternative<UnitElem>(e->node))
      throw ShapeError("only the unit inhabits the trivial group");
    return;
  }
  if (const auto* p = std::get_if<ProdExpr>(&shape->node)) {
    const auto* pe = std::get_if<ProdElem>(&e->node);
    if (!pe) throw ShapeError("product shape expects a product element");
    for (const auto& [index, child] : pe->entries) {
      SlotShape slot = prod_slot_shape(p->factors, index);
      if (!slot.valid)
        throw ShapeError("index " + std::to_string(index) + " outside the pattern's index set");
      check_element(slot.shape ? slot.shape : one(), child);
      if (is_identity(child))
        throw ShapeError("stored identity at index " + std::to_string(index));
    }
    return;
  }
  const auto& w = std::get<WrExpr>(shape->node);
  const auto* we = std::get_if<WrElem>(&e->node);
  if (!we) throw ShapeError("wreath shape expects a wreath element");
  for (const auto& [j, child] : we->decorations) {
    check_element(w.inner, child);
    if (is_identity(child)) throw ShapeError("stored identity at position " + std::to_string(j));
  }
}

// ---------------------------------------------------------------------------
// arithmetic

namespace {

ElemPtr multiply_unchecked(const GroupPtr& shape, const ElemPtr& a, const ElemPtr& b);

ElemPtr lookup(const std::map<std::int64_t, ElemPtr>& m, std::int64_t key, const GroupPtr& shape) {
  auto it = m.find(key);
  return it != m.end() ? it->second : identity(shape);
}

ElemPtr multiply_unchecked(const GroupPtr& shape, const ElemPtr& a, const ElemPtr& b) {
  if (std::holds_alternative<OneExpr>(shape->node)) return make_unit();
  if (const auto* p = std::get_if<ProdExpr>(&shape->node)) {
    const auto& ea = std::get<ProdElem>(a->node).entries;
    const auto& eb = std::get<ProdElem>(b->node).entries;
    std::set<std::int64_t> indices;
    for (const auto& [i, v] : ea) indices.insert(i);
    for (const auto& [i, v] : eb) indices.insert(i);
    std::map<std::int64_t, ElemPtr> out;
    for (std::int64_t i : indices) {
      GroupPtr slot = prod_slot_shape(p->factors, i).shape;
      if (!slot) slot = one();
      ElemPtr v = multiply_unchecked(slot, lookup(ea, i, slot), lookup(eb, i, slot));
      if (!is_identity(v)) out.emplace(i, std::move(v));
    }
    return make_prod_elem(std::move(out));
  }
  const auto& inner = std::get<WrExpr>(shape->node).inner;
  const auto& wa = std::get<WrElem>(a->node);
  const auto& wb = std::get<WrElem>(b->node);
  const std::int64_t m = wb.shift;
  std::set<std::int64_t> positions;
  for (const auto& [j, v] : wa.decorations) positions.insert(j - m);
  for (const auto& [j, v] : wb.decorations) positions.insert(j);
  std::map<std::int64_t, ElemPtr> out;
  for (std::int64_t j : positions) {
    ElemPtr v = multiply_unchecked(inner, lookup(wa.decorations, j + m, inner),
                                   lookup(wb.decorations, j, inner));
    if (!is_identity(v)) out.emplace(j, std::move(v));
  }
  return make_wr_elem(std::move(out), wa.shift + wb.shift);
}

ElemPtr inverse_unchecked(const GroupPtr& shape, const ElemPtr& a) {
  if (std::holds_alternative<OneExpr>(shape->node)) return make_unit();
  if (const auto* p = std::get_if<ProdExpr>(&shape->node)) {
    std::map<std::int64_t, ElemPtr> out;
    for (const auto& [i, v] : std::get<ProdElem>(a->node).entries) {
      GroupPtr slot = prod_slot_shape(p->factors, i).shape;
      out.emplace(i, inverse_unchecked(slot ? slot : one(), v));
    }
    return make_prod_elem(std::move(out));
  }
  const auto& inner = std::get<WrExpr>(shape->node).inner;
  const auto& w = std::get<WrElem>(a->node);
  std::map<std::int64_t, ElemPtr> out;
  // (phi, m)^-1 carries phi(j)^-1 at position j + m.
  for (const auto& [j, v] : w.decorations) out.emplace(j + w.shift, inverse_unchecked(inner, v));
  return make_wr_elem(std::move(out), -w.shift);
}

}  // namespace

ElemPtr multiply(const GroupPtr& shape, const ElemPtr& a, const ElemPtr& b) {
  check_element(shape, a);
  check_element(shape, b);
  return multiply_unchecked(shape, a, b);
}

ElemPtr inverse(const GroupPtr& shape, const ElemPtr& a) {
  check_element(shape, a);
  return inverse_unchecked(shape, a);
}

// ---------------------------------------------------------------------------
// exact sequence

namespace {

const WrExpr& require_wr_shape(const GroupPtr& shape) {
  const auto* w = std::get_if<WrExpr>(&shape->node);
  if (!w) throw ShapeError("expected a wreath shape");
  return *w;
}

}  // namespace

std::int64_t project_pi(const GroupPtr& shape, const ElemPtr& a) {
  require_wr_shape(shape);
  check_element(shape, a);
  return std::get<WrElem>(a->node).shift;
}

ElemPtr section_s(const GroupPtr& shape, std::int64_t n) {
  require_wr_shape(shape);
  return make_wr_elem({}, n);
}

ElemPtr include_i(const GroupPtr& shape, const std::map<std::int64_t, ElemPtr>& decorations) {
  const WrExpr& w = require_wr_shape(shape);
  std::map<std::int64_t, ElemPtr> kept;
  for (const auto& [j, v] : decorations) {
    check_element(w.inner, v);
    if (!is_identity(v)) kept.emplace(j, v);
  }
  return make_wr_elem(std::move(kept), 0);
}

// ---------------------------------------------------------------------------
// transport oracle

ElemPtr transport_compose(std::int64_t k, const GroupPtr& block_shape, const ElemPtr& a,
                          const ElemPtr& b) {
  if (k < 1) throw ShapeError("block count must be positive");
  GroupPtr shape = wr(block_shape);
  check_element(shape, a);
  check_element(shape, b);
  const auto& wa = std::get<WrElem>(a->node);
  const auto& wb = std::get<WrElem>(b->node);

  // b moves block j to j + wb.shift and decorates it in place; a then
  // decorates the moved family, so its decoration at position j + wb.shift
  // lands on block j, on the left of b's.
  std::map<std::int64_t, ElemPtr> out = wb.decorations;
  for (const auto& [pos, deco] : wa.decorations) {
    const std::int64_t block = pos - wb.shift;
    auto it = out.find(block);
    ElemPtr combined = it == out.end()
                           ? deco
                           : multiply_unchecked(block_shape, deco, it->second);
    if (is_identity(combined)) {
      if (it != out.end()) out.erase(it);
    } else {
      out[block] = std::move(combined);
    }
  }
  return make_wr_elem(std::move(out), wa.shift + wb.shift);
}

// ---------------------------------------------------------------------------
// random elements

namespace {

// Raw engine draws keep results identical across platforms; distribution
// classes would not.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::int64_t draw_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

ElemPtr random_element_rec(const GroupPtr& shape, int budget, std::mt19937_64& rng) {
  if (budget <= 0) return identity(shape);
  if (std::holds_alternative<OneExpr>(shape->node)) return make_unit();

  if (const auto* p = std::get_if<ProdExpr>(&shape->node)) {
    // Candidate window of valid indices near the origin of the index set.
    std::int64_t lo = 0, hi = 0;
    std::visit(
        [&](const auto& fp) {
          using T = std::decay_t<decltype(fp)>;
          if constexpr (std::is_same_v<T, FinPat<GroupPtr>>) {
            lo = 1;
            hi = static_cast<std::int64_t>(fp.slots.size());
          } else if constexpr (std::is_same_v<T, NatPat<GroupPtr>>) {
            lo = 1;
            hi = static_cast<std::int64_t>(fp.prefix.size() + fp.cycle.size()) + budget;
          } else if constexpr (std::is_same_v<T, NegPat<GroupPtr>>) {
            hi = -1;
            lo = -static_cast<std::int64_t>(fp.prefix.size() + fp.cycle.size()) - budget;
          } else {
            lo = -budget;
            hi = budget;
          }
        },
        p->factors);
    std::map<std::int64_t, ElemPtr> entries;
    if (lo <= hi) {
      const std::uint64_t tries = 1 + draw(rng, static_cast<std::uint64_t>(budget));
      for (std::uint64_t t = 0; t < tries; ++t) {
        std::int64_t index = draw_range(rng, lo, hi);
        SlotShape slot = prod_slot_shape(p->factors, index);
        ElemPtr child = random_element_rec(slot.shape ? slot.shape : one(), budget - 1, rng);
        if (!is_identity(child)) entries[index] = std::move(child);
      }
    }
    return make_prod_elem(std::move(entries));
  }

  const auto& inner = std::get<WrExpr>(shape->node).inner;
  std::int64_t shift = draw_range(rng, -budget, budget);
  std::map<std::int64_t, ElemPtr> decorations;
  const std::uint64_t tries = draw(rng, static_cast<std::uint64_t>(budget) + 1);
  for (std::uint64_t t = 0; t < tries; ++t) {
    std::int64_t j = draw_range(rng, -budget, budget);
    ElemPtr child = random_element_rec(inner, budget - 1, rng);
    if (!is_identity(child)) decorations[j] = std::move(child);
  }
  return make_wr_elem(std::move(decorations), shift);
}

}  // namespace

ElemPtr random_element(const GroupPtr& shape, int budget, std::uint64_t seed) {
  if (budget <= 0) return identity(shape);
  std::mt19937_64 rng(seed);
  return random_element_rec(shape, budget, rng);
}

}  // namespace folia
