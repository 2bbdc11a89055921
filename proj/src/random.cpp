#include "folia/random.hpp"

#include <set>

namespace folia {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

template <class P, class Gen>
std::vector<P> random_slots(std::mt19937_64& rng, std::size_t count, Gen gen) {
  std::vector<P> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Roughly a third of the slots stay empty.
    out.push_back(draw(rng, 3) == 0 ? nullptr : gen());
  }
  return out;
}

template <class P, class Gen>
Pattern<P> random_pattern(std::mt19937_64& rng, Gen gen) {
  switch (draw(rng, 5)) {
    case 0:
      return FinPat<P>{random_slots<P>(rng, draw(rng, 4), gen)};
    case 1:
      return NatPat<P>{random_slots<P>(rng, draw(rng, 3), gen),
                       random_slots<P>(rng, 1 + draw(rng, 3), gen)};
    case 2:
      return NegPat<P>{random_slots<P>(rng, draw(rng, 3), gen),
                       random_slots<P>(rng, 1 + draw(rng, 3), gen)};
    case 3:
      return IntCycPat<P>{random_slots<P>(rng, 1 + draw(rng, 3), gen)};
    default: {
      std::set<std::int64_t> keys;
      std::size_t n = draw(rng, 3);
      while (keys.size() < n) keys.insert(static_cast<std::int64_t>(draw(rng, 13)) - 6);
      std::vector<std::pair<std::int64_t, P>> entries;
      for (std::int64_t k : keys) entries.emplace_back(k, gen());
      return IntSupPat<P>{std::move(entries)};
    }
  }
}

}  // namespace

TreePtr random_tree(std::mt19937_64& rng, int depth) {
  if (depth <= 0) return leaf_strip();
  return make_tree(
      random_pattern<TreePtr>(rng, [&] { return random_tree(rng, depth - 1 - static_cast<int>(draw(rng, 2))); }));
}

GroupPtr random_group(std::mt19937_64& rng, int depth) {
  if (depth <= 0) return draw(rng, 2) == 0 ? one() : z_group();
  switch (draw(rng, 4)) {
    case 0:
      return one();
    case 1:
      return wr(random_group(rng, depth - 1));
    default:
      return prod(random_pattern<GroupPtr>(
          rng, [&] { return random_group(rng, depth - 1 - static_cast<int>(draw(rng, 2))); }));
  }
}

}  // namespace folia
