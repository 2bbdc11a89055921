#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace folia {

// An index pattern is a finite description of a family of child slots over
// one of the standard index sets: [n] = {1..n}, N = {1,2,...},
// -N = {-1,-2,...}, or Z. N/-N families are eventually periodic (prefix then
// repeating cycle); Z families are either fully periodic or have finite
// support with all unlisted slots empty.
//
// The slot payload P is a nullable pointer type; a null slot is an empty
// boundary interval (nothing attached there).
template <class P>
struct FinPat {
  std::vector<P> slots;  // slot i at index i+1
};

template <class P>
struct NatPat {
  std::vector<P> prefix;  // indices 1..p
  std::vector<P> cycle;   // index p+j maps to cycle[(j-1) mod d]; nonempty
};

template <class P>
struct NegPat {
  std::vector<P> prefix;  // indices -1..-p
  std::vector<P> cycle;   // index -(p+j) maps to cycle[(j-1) mod d]; nonempty
};

template <class P>
struct IntCycPat {
  std::vector<P> cycle;  // index j maps to cycle[j mod d]; nonempty
};

template <class P>
struct IntSupPat {
  std::vector<std::pair<std::int64_t, P>> entries;  // values non-null, keys distinct
};

template <class P>
using Pattern = std::variant<FinPat<P>, NatPat<P>, NegPat<P>, IntCycPat<P>, IntSupPat<P>>;

// How often a described slot occurs in the expanded family.
enum class SlotMult { Once, Omega };

template <class P, class F>
void for_each_occurrence(const Pattern<P>& pat, F f) {
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FinPat<P>>) {
          for (const P& s : p.slots) f(s, SlotMult::Once);
        } else if constexpr (std::is_same_v<T, NatPat<P>> || std::is_same_v<T, NegPat<P>>) {
          for (const P& s : p.prefix) f(s, SlotMult::Once);
          for (const P& s : p.cycle) f(s, SlotMult::Omega);
        } else if constexpr (std::is_same_v<T, IntCycPat<P>>) {
          for (const P& s : p.cycle) f(s, SlotMult::Omega);
        } else {
          for (const auto& [k, s] : p.entries) f(s, SlotMult::Once);
        }
      },
      pat);
}

template <class P, class F>
void for_each_slot(const Pattern<P>& pat, F f) {
  for_each_occurrence(pat, [&](const P& s, SlotMult) { f(s); });
}

// Rebuilds the pattern with every slot transformed; the index structure is
// preserved exactly.
template <class P, class F>
auto map_pattern(const Pattern<P>& pat, F f) -> Pattern<std::invoke_result_t<F, const P&>> {
  using Q = std::invoke_result_t<F, const P&>;
  auto map_vec = [&](const std::vector<P>& v) {
    std::vector<Q> out;
    out.reserve(v.size());
    for (const P& s : v) out.push_back(f(s));
    return out;
  };
  return std::visit(
      [&](const auto& p) -> Pattern<Q> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FinPat<P>>) {
          return FinPat<Q>{map_vec(p.slots)};
        } else if constexpr (std::is_same_v<T, NatPat<P>>) {
          return NatPat<Q>{map_vec(p.prefix), map_vec(p.cycle)};
        } else if constexpr (std::is_same_v<T, NegPat<P>>) {
          return NegPat<Q>{map_vec(p.prefix), map_vec(p.cycle)};
        } else if constexpr (std::is_same_v<T, IntCycPat<P>>) {
          return IntCycPat<Q>{map_vec(p.cycle)};
        } else {
          std::vector<std::pair<std::int64_t, Q>> entries;
          entries.reserve(p.entries.size());
          for (const auto& [k, s] : p.entries) entries.emplace_back(k, f(s));
          return IntSupPat<Q>{std::move(entries)};
        }
      },
      pat);
}

// Three-way comparison with a fixed tag order Fin < Nat < Neg < IntCyc <
// IntSup, then componentwise via the slot comparator (which must order null
// before non-null).
template <class P, class Cmp>
int compare_pattern(const Pattern<P>& a, const Pattern<P>& b, Cmp cmp) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  auto cmp_vec = [&](const std::vector<P>& x, const std::vector<P>& y) {
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (int c = cmp(x[i], y[i]); c != 0) return c;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
  };
  return std::visit(
      [&](const auto& pa) -> int {
        using T = std::decay_t<decltype(pa)>;
        const auto& pb = std::get<T>(b);
        if constexpr (std::is_same_v<T, FinPat<P>>) {
          return cmp_vec(pa.slots, pb.slots);
        } else if constexpr (std::is_same_v<T, NatPat<P>> || std::is_same_v<T, NegPat<P>>) {
          if (int c = cmp_vec(pa.prefix, pb.prefix); c != 0) return c;
          return cmp_vec(pa.cycle, pb.cycle);
        } else if constexpr (std::is_same_v<T, IntCycPat<P>>) {
          return cmp_vec(pa.cycle, pb.cycle);
        } else {
          std::size_t n = std::min(pa.entries.size(), pb.entries.size());
          for (std::size_t i = 0; i < n; ++i) {
            if (pa.entries[i].first != pb.entries[i].first)
              return pa.entries[i].first < pb.entries[i].first ? -1 : 1;
            if (int c = cmp(pa.entries[i].second, pb.entries[i].second); c != 0) return c;
          }
          if (pa.entries.size() != pb.entries.size())
            return pa.entries.size() < pb.entries.size() ? -1 : 1;
          return 0;
        }
      },
      a);
}

}  // namespace folia
