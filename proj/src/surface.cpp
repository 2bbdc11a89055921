#include "folia/surface.hpp"

#include <algorithm>
#include <set>

namespace folia {

const char* to_string(IssueCode code) {
  switch (code) {
    case IssueCode::EmptyCycle: return "EmptyCycle";
    case IssueCode::EmptySupportSlot: return "EmptySupportSlot";
    case IssueCode::DuplicateSupportKey: return "DuplicateSupportKey";
  }
  return "?";
}

TreePtr make_tree(TreePattern children) {
  return std::make_shared<const SurfaceTree>(SurfaceTree{std::move(children)});
}

TreePtr leaf_strip() { return make_tree(FinPat<TreePtr>{}); }

int compare_tree(const TreePtr& a, const TreePtr& b) {
  if (!a || !b) {
    if (!a && !b) return 0;
    return !a ? -1 : 1;
  }
  return compare_pattern(a->children, b->children, compare_tree);
}

bool tree_equal(const TreePtr& a, const TreePtr& b) { return compare_tree(a, b) == 0; }

// ---------------------------------------------------------------------------
// validate

namespace {

void validate_rec(const TreePtr& t, const std::string& path, std::vector<ValidationIssue>& out);

void validate_slots(const std::vector<TreePtr>& slots, const std::string& path,
                    std::vector<ValidationIssue>& out) {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i]) validate_rec(slots[i], path + "[" + std::to_string(i) + "]", out);
  }
}

void validate_rec(const TreePtr& t, const std::string& path, std::vector<ValidationIssue>& out) {
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FinPat<TreePtr>>) {
          validate_slots(p.slots, path + "/fin", out);
        } else if constexpr (std::is_same_v<T, NatPat<TreePtr>> ||
                             std::is_same_v<T, NegPat<TreePtr>>) {
          const char* tag = std::is_same_v<T, NatPat<TreePtr>> ? "/nat" : "/neg";
          if (p.cycle.empty()) out.push_back({IssueCode::EmptyCycle, path + tag});
          validate_slots(p.prefix, path + tag + ".pre", out);
          validate_slots(p.cycle, path + tag + ".cyc", out);
        } else if constexpr (std::is_same_v<T, IntCycPat<TreePtr>>) {
          if (p.cycle.empty()) out.push_back({IssueCode::EmptyCycle, path + "/int"});
          validate_slots(p.cycle, path + "/int.cyc", out);
        } else {
          std::set<std::int64_t> seen;
          for (const auto& [k, s] : p.entries) {
            std::string here = path + "/int.sup[" + std::to_string(k) + "]";
            if (!seen.insert(k).second)
              out.push_back({IssueCode::DuplicateSupportKey, here});
            if (!s)
              out.push_back({IssueCode::EmptySupportSlot, here});
            else
              validate_rec(s, here, out);
          }
        }
      },
      t->children);
}

}  // namespace

std::vector<ValidationIssue> validate(const TreePtr& tree) {
  std::vector<ValidationIssue> out;
  if (tree) validate_rec(tree, "", out);
  return out;
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

// Length of the primitive root of the cycle word: the smallest divisor d of
// len such that the word is its first d slots repeated.
std::int64_t primitive_root_len(const std::vector<TreePtr>& cycle) {
  const std::int64_t n = static_cast<std::int64_t>(cycle.size());
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::int64_t j = d; j < n && ok; ++j) ok = tree_equal(cycle[j], cycle[j - d]);
    if (ok) return d;
  }
  return n;
}

std::vector<TreePtr> take_primitive(std::vector<TreePtr> cycle) {
  cycle.resize(static_cast<std::size_t>(primitive_root_len(cycle)));
  return cycle;
}

void rotate_right_once(std::vector<TreePtr>& v) {
  std::rotate(v.begin(), v.end() - 1, v.end());
}

// Shortest prefix: while the last prefix slot equals the slot the cycle
// would emit just before its current start, absorb it into the cycle.
void absorb_prefix(std::vector<TreePtr>& prefix, std::vector<TreePtr>& cycle) {
  while (!prefix.empty() && tree_equal(prefix.back(), cycle.back())) {
    prefix.pop_back();
    rotate_right_once(cycle);
  }
}

std::vector<TreePtr> least_rotation(const std::vector<TreePtr>& cycle) {
  const std::size_t n = cycle.size();
  std::size_t best = 0;
  auto cmp_rot = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < n; ++t) {
      int c = compare_tree(cycle[(i + t) % n], cycle[(j + t) % n]);
      if (c != 0) return c;
    }
    return 0;
  };
  for (std::size_t i = 1; i < n; ++i) {
    if (cmp_rot(i, best) < 0) best = i;
  }
  std::vector<TreePtr> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.push_back(cycle[(best + t) % n]);
  return out;
}

TreePtr canonicalize_rec(const TreePtr& t) {
  auto canon_slot = [](const TreePtr& s) -> TreePtr { return s ? canonicalize_rec(s) : nullptr; };
  auto canon_vec = [&](const std::vector<TreePtr>& v) {
    std::vector<TreePtr> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(canon_slot(s));
    return out;
  };
  TreePattern out = std::visit(
      [&](const auto& p) -> TreePattern {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FinPat<TreePtr>>) {
          return FinPat<TreePtr>{canon_vec(p.slots)};
        } else if constexpr (std::is_same_v<T, NatPat<TreePtr>> ||
                             std::is_same_v<T, NegPat<TreePtr>>) {
          std::vector<TreePtr> prefix = canon_vec(p.prefix);
          std::vector<TreePtr> cycle = take_primitive(canon_vec(p.cycle));
          absorb_prefix(prefix, cycle);
          if constexpr (std::is_same_v<T, NatPat<TreePtr>>)
            return NatPat<TreePtr>{std::move(prefix), std::move(cycle)};
          else
            return NegPat<TreePtr>{std::move(prefix), std::move(cycle)};
        } else if constexpr (std::is_same_v<T, IntCycPat<TreePtr>>) {
          return IntCycPat<TreePtr>{least_rotation(take_primitive(canon_vec(p.cycle)))};
        } else {
          if (p.entries.empty()) {
            // The empty Z support and the all-empty Z cycle describe the
            // same strip; the cycle is the canonical spelling.
            return IntCycPat<TreePtr>{{nullptr}};
          }
          std::vector<std::pair<std::int64_t, TreePtr>> entries;
          entries.reserve(p.entries.size());
          for (const auto& [k, s] : p.entries) entries.emplace_back(k, canon_slot(s));
          std::sort(entries.begin(), entries.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          const std::int64_t base = entries.front().first;
          for (auto& e : entries) e.first -= base;
          return IntSupPat<TreePtr>{std::move(entries)};
        }
      },
      t->children);
  return make_tree(std::move(out));
}

}  // namespace

CanonicalTree canonicalize(const TreePtr& tree) { return CanonicalTree{canonicalize_rec(tree)}; }

bool trees_equivalent(const TreePtr& a, const TreePtr& b) {
  return tree_equal(canonicalize(a).tree, canonicalize(b).tree);
}

std::int64_t minimal_period(const IntCycPat<TreePtr>& pat) {
  return primitive_root_len(pat.cycle);
}

// ---------------------------------------------------------------------------
// diameter

namespace {

struct HeightDiam {
  std::int64_t height = 0;  // max edges from this strip down
  std::int64_t diam = 0;    // diameter within this subtree
};

HeightDiam height_diam(const TreePtr& t) {
  std::int64_t best1 = 0, best2 = 0;  // two deepest branches through this node
  std::int64_t child_diam = 0;
  auto offer = [&](std::int64_t branch) {
    if (branch >= best1) {
      best2 = best1;
      best1 = branch;
    } else if (branch > best2) {
      best2 = branch;
    }
  };
  for_each_occurrence(t->children, [&](const TreePtr& slot, SlotMult m) {
    if (!slot) return;
    HeightDiam c = height_diam(slot);
    child_diam = std::max(child_diam, c.diam);
    offer(1 + c.height);
    if (m == SlotMult::Omega) offer(1 + c.height);  // countably many copies
  });
  return HeightDiam{best1, std::max(child_diam, best1 + best2)};
}

}  // namespace

std::int64_t graph_diameter(const TreePtr& tree) { return height_diam(tree).diam; }

// ---------------------------------------------------------------------------
// reduced form

namespace {

const TreePtr* unary_glued_child(const TreePattern& pat) {
  if (const auto* fin = std::get_if<FinPat<TreePtr>>(&pat)) {
    if (fin->slots.size() == 1 && fin->slots[0]) return &fin->slots[0];
  }
  return nullptr;
}

}  // namespace

bool is_reduced(const TreePtr& tree) {
  if (unary_glued_child(tree->children)) return false;
  bool ok = true;
  for_each_slot(tree->children, [&](const TreePtr& s) {
    if (s && ok) ok = is_reduced(s);
  });
  return ok;
}

namespace {

TreePtr reduce_rec(const TreePtr& t, int& splices) {
  TreePattern reduced = map_pattern(
      t->children, [&](const TreePtr& s) -> TreePtr { return s ? reduce_rec(s, splices) : nullptr; });
  if (const TreePtr* child = unary_glued_child(reduced)) {
    ++splices;
    return *child;
  }
  return make_tree(std::move(reduced));
}

}  // namespace

Reduction reduce_with_stats(const TreePtr& tree) {
  Reduction r;
  r.splices = 0;
  int n = 0;
  r.tree = reduce_rec(tree, n);
  r.splices = n;
  return r;
}

TreePtr reduce(const TreePtr& tree) { return reduce_with_stats(tree).tree; }

}  // namespace folia
