#include "folia/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace folia {

GroupPtr one() {
  static const GroupPtr instance = std::make_shared<const GroupExpr>(GroupExpr{OneExpr{}});
  return instance;
}

GroupPtr prod(GroupPattern factors) {
  return std::make_shared<const GroupExpr>(GroupExpr{ProdExpr{std::move(factors)}});
}

GroupPtr wr(GroupPtr inner) {
  return std::make_shared<const GroupExpr>(GroupExpr{WrExpr{std::move(inner)}});
}

GroupPtr z_group() { return wr(one()); }

int compare_group(const GroupPtr& a, const GroupPtr& b) {
  if (!a || !b) {
    if (!a && !b) return 0;
    return !a ? -1 : 1;
  }
  if (a->node.index() != b->node.index()) return a->node.index() < b->node.index() ? -1 : 1;
  if (std::holds_alternative<OneExpr>(a->node)) return 0;
  if (const auto* pa = std::get_if<ProdExpr>(&a->node)) {
    const auto& pb = std::get<ProdExpr>(b->node);
    return compare_pattern(pa->factors, pb.factors, compare_group);
  }
  return compare_group(std::get<WrExpr>(a->node).inner, std::get<WrExpr>(b->node).inner);
}

bool group_equal(const GroupPtr& a, const GroupPtr& b) { return compare_group(a, b) == 0; }

namespace {

void validate_group_rec(const GroupPtr& e, const std::string& path,
                        std::vector<ValidationIssue>& out) {
  if (const auto* p = std::get_if<ProdExpr>(&e->node)) {
    std::visit(
        [&](const auto& pat) {
          using T = std::decay_t<decltype(pat)>;
          auto slots = [&](const std::vector<GroupPtr>& v, const std::string& tag) {
            for (std::size_t i = 0; i < v.size(); ++i)
              if (v[i]) validate_group_rec(v[i], path + tag + "[" + std::to_string(i) + "]", out);
          };
          if constexpr (std::is_same_v<T, FinPat<GroupPtr>>) {
            slots(pat.slots, "/fin");
          } else if constexpr (std::is_same_v<T, NatPat<GroupPtr>> ||
                               std::is_same_v<T, NegPat<GroupPtr>>) {
            const char* tag = std::is_same_v<T, NatPat<GroupPtr>> ? "/nat" : "/neg";
            if (pat.cycle.empty()) out.push_back({IssueCode::EmptyCycle, path + tag});
            slots(pat.prefix, std::string(tag) + ".pre");
            slots(pat.cycle, std::string(tag) + ".cyc");
          } else if constexpr (std::is_same_v<T, IntCycPat<GroupPtr>>) {
            if (pat.cycle.empty()) out.push_back({IssueCode::EmptyCycle, path + "/int"});
            slots(pat.cycle, "/int.cyc");
          } else {
            std::set<std::int64_t> seen;
            for (const auto& [k, s] : pat.entries) {
              std::string here = path + "/int.sup[" + std::to_string(k) + "]";
              if (!seen.insert(k).second) out.push_back({IssueCode::DuplicateSupportKey, here});
              if (!s)
                out.push_back({IssueCode::EmptySupportSlot, here});
              else
                validate_group_rec(s, here, out);
            }
          }
        },
        p->factors);
  } else if (const auto* w = std::get_if<WrExpr>(&e->node)) {
    validate_group_rec(w->inner, path + "/wr", out);
  }
}

}  // namespace

std::vector<ValidationIssue> validate_group(const GroupPtr& e) {
  std::vector<ValidationIssue> out;
  if (e) validate_group_rec(e, "", out);
  return out;
}

// ---------------------------------------------------------------------------
// normal form

int compare_mult(const Mult& a, const Mult& b) {
  if (a.omega != b.omega) return a.omega ? 1 : -1;
  if (a.omega) return 0;
  if (a.count != b.count) return a.count < b.count ? -1 : 1;
  return 0;
}

NfPtr nf_one() {
  static const NfPtr instance = std::make_shared<const GroupNormalForm>(GroupNormalForm{NfOne{}});
  return instance;
}

NfPtr nf_wr(NfPtr inner) {
  return std::make_shared<const GroupNormalForm>(GroupNormalForm{NfWr{std::move(inner)}});
}

int compare_nf(const NfPtr& a, const NfPtr& b) {
  if (a->node.index() != b->node.index()) return a->node.index() < b->node.index() ? -1 : 1;
  if (std::holds_alternative<NfOne>(a->node)) return 0;
  if (const auto* wa = std::get_if<NfWr>(&a->node))
    return compare_nf(wa->inner, std::get<NfWr>(b->node).inner);
  const auto& fa = std::get<NfProd>(a->node).factors;
  const auto& fb = std::get<NfProd>(b->node).factors;
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare_nf(fa[i].factor, fb[i].factor); c != 0) return c;
    if (int c = compare_mult(fa[i].mult, fb[i].mult); c != 0) return c;
  }
  if (fa.size() != fb.size()) return fa.size() < fb.size() ? -1 : 1;
  return 0;
}

bool nf_equal(const NfPtr& a, const NfPtr& b) { return compare_nf(a, b) == 0; }

NfPtr nf_prod(std::vector<NfFactor> factors) {
  if (factors.empty()) return nf_one();
  if (factors.size() == 1 && !factors[0].mult.omega && factors[0].mult.count == 1)
    return factors[0].factor;
  return std::make_shared<const GroupNormalForm>(GroupNormalForm{NfProd{std::move(factors)}});
}

namespace {

struct NfLess {
  bool operator()(const NfPtr& a, const NfPtr& b) const { return compare_nf(a, b) < 0; }
};

using FactorAcc = std::map<NfPtr, Mult, NfLess>;

void acc_add(FactorAcc& acc, const NfPtr& nf, Mult m);

// A product factor occurring with multiplicity m contributes its own factors
// m-fold; anything touched by omega stays omega.
Mult mult_times(const Mult& a, const Mult& b) {
  if (a.omega || b.omega) return Mult::w();
  return Mult::finite(a.count * b.count);
}

void acc_add(FactorAcc& acc, const NfPtr& nf, Mult m) {
  if (std::holds_alternative<NfOne>(nf->node)) return;
  if (const auto* p = std::get_if<NfProd>(&nf->node)) {
    for (const NfFactor& f : p->factors) acc_add(acc, f.factor, mult_times(f.mult, m));
    return;
  }
  auto [it, inserted] = acc.emplace(nf, m);
  if (!inserted) {
    if (it->second.omega || m.omega)
      it->second = Mult::w();
    else
      it->second = Mult::finite(it->second.count + m.count);
  }
}

}  // namespace

NfPtr normalize(const GroupPtr& e) {
  if (!e || std::holds_alternative<OneExpr>(e->node)) return nf_one();
  if (const auto* w = std::get_if<WrExpr>(&e->node)) return nf_wr(normalize(w->inner));
  const auto& p = std::get<ProdExpr>(e->node);
  FactorAcc acc;
  for_each_occurrence(p.factors, [&](const GroupPtr& slot, SlotMult m) {
    acc_add(acc, normalize(slot), m == SlotMult::Omega ? Mult::w() : Mult::finite(1));
  });
  std::vector<NfFactor> factors;
  factors.reserve(acc.size());
  for (const auto& [nf, m] : acc) factors.push_back(NfFactor{nf, m});
  return nf_prod(std::move(factors));
}

GroupPtr nf_to_expr(const NfPtr& nf) {
  if (std::holds_alternative<NfOne>(nf->node)) return one();
  if (const auto* w = std::get_if<NfWr>(&nf->node)) return wr(nf_to_expr(w->inner));
  const auto& p = std::get<NfProd>(nf->node);
  // Finite counts expand in place; omega factors become the cycle of one
  // N-indexed family, so the representative adds a single product layer.
  std::vector<GroupPtr> once;
  std::vector<GroupPtr> forever;
  for (const NfFactor& f : p.factors) {
    GroupPtr g = nf_to_expr(f.factor);
    if (f.mult.omega)
      forever.push_back(std::move(g));
    else
      for (std::uint64_t i = 0; i < f.mult.count; ++i) once.push_back(g);
  }
  if (forever.empty()) return prod(FinPat<GroupPtr>{std::move(once)});
  return prod(NatPat<GroupPtr>{std::move(once), std::move(forever)});
}

// ---------------------------------------------------------------------------
// height

std::int64_t height(const GroupPtr& e) {
  if (!e || std::holds_alternative<OneExpr>(e->node)) return 0;
  if (const auto* w = std::get_if<WrExpr>(&e->node)) return 1 + height(w->inner);
  const auto& p = std::get<ProdExpr>(e->node);
  std::int64_t deepest = 0;
  for_each_slot(p.factors, [&](const GroupPtr& slot) {
    if (slot) deepest = std::max(deepest, height(slot));
  });
  return 1 + deepest;
}

// ---------------------------------------------------------------------------
// realization

namespace {

TreePtr realize_slot(const GroupPtr& g) { return g ? realize(g) : nullptr; }

std::vector<TreePtr> realize_vec(const std::vector<GroupPtr>& v) {
  std::vector<TreePtr> out;
  out.reserve(v.size());
  for (const auto& g : v) out.push_back(realize_slot(g));
  return out;
}

}  // namespace

TreePtr realize(const GroupPtr& e) {
  if (std::holds_alternative<OneExpr>(e->node)) return leaf_strip();
  if (const auto* w = std::get_if<WrExpr>(&e->node))
    return make_tree(IntCycPat<TreePtr>{{realize(w->inner)}});
  const auto& p = std::get<ProdExpr>(e->node);
  TreePattern pat = std::visit(
      [&](const auto& fp) -> TreePattern {
        using T = std::decay_t<decltype(fp)>;
        if constexpr (std::is_same_v<T, FinPat<GroupPtr>>) {
          return FinPat<TreePtr>{realize_vec(fp.slots)};
        } else if constexpr (std::is_same_v<T, NatPat<GroupPtr>>) {
          return NatPat<TreePtr>{realize_vec(fp.prefix), realize_vec(fp.cycle)};
        } else if constexpr (std::is_same_v<T, NegPat<GroupPtr>>) {
          return NegPat<TreePtr>{realize_vec(fp.prefix), realize_vec(fp.cycle)};
        } else if constexpr (std::is_same_v<T, IntCycPat<GroupPtr>>) {
          // A Z-cyclic product must not pick up the shift symmetry of a
          // Z-cyclic boundary; the same factor family over N has the same
          // product and a trivial shift image.
          return NatPat<TreePtr>{{}, realize_vec(fp.cycle)};
        } else {
          if (fp.entries.empty()) return FinPat<TreePtr>{};
          std::vector<std::pair<std::int64_t, TreePtr>> entries;
          entries.reserve(fp.entries.size());
          for (const auto& [k, g] : fp.entries) entries.emplace_back(k, realize(g));
          return IntSupPat<TreePtr>{std::move(entries)};
        }
      },
      p.factors);
  return make_tree(std::move(pat));
}

}  // namespace folia
