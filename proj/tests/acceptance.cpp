// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. All checks are exact symbolic equalities; the randomized
// suites run at fixed seeds with the stated minimum case counts.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "folia/elements.hpp"
#include "folia/homeotopy.hpp"
#include "folia/random.hpp"
#include "folia/textio.hpp"
#include "oracles.hpp"

using namespace folia;

namespace {

struct Criterion {
  int number;
  const char* name;
  std::function<bool(std::string&)> run;
};

bool check(bool cond, const std::string& what, std::string& detail, int& failures) {
  if (!cond) {
    ++failures;
    if (detail.empty()) detail = what;
  }
  return cond;
}

// 1. The four spellings of the integers share one normal form, printed "Z".
bool criterion_eq3(std::string& detail) {
  int failures = 0;
  const char* spellings[] = {"Z", "(wr 1)", "(x 1 Z)", "(wr (x 1 1 1))"};
  NfPtr expected = normalize(parse_group("Z"));
  for (const char* s : spellings) {
    NfPtr nf = normalize(parse_group(s));
    check(nf_equal(nf, expected), std::string("spelling ") + s, detail, failures);
    check(print_normal_form(nf) == "Z", std::string("print of ") + s, detail, failures);
  }
  return failures == 0;
}

// 2. The height table 0, 1, 1, 2, 2, 3.
bool criterion_heights(std::string& detail) {
  int failures = 0;
  const std::pair<const char*, std::int64_t> table[] = {
      {"1", 0},           {"(x 1 1)", 1},           {"(wr 1)", 1},
      {"(wr (x 1 1))", 2}, {"(x (wr 1) (wr 1))", 2}, {"(x (wr (x 1 1)) (wr 1))", 3},
  };
  for (const auto& [text, expected] : table)
    check(height(parse_group(text)) == expected, std::string("height of ") + text, detail,
          failures);
  return failures == 0;
}

// 3. Base strips: every non-Z boundary gives the trivial group, the free Z
// boundary gives Z.
bool criterion_base_cases(std::string& detail) {
  int failures = 0;
  const char* trivial[] = {
      "(strip (fin))",
      "(strip (fin _))",
      "(strip (fin _ _))",
      "(strip (fin _ _ _))",
      "(strip (nat (pre) (cyc _)))",
      "(strip (nat (pre _ _) (cyc _ _)))",
      "(strip (neg (pre) (cyc _)))",
      "(strip (neg (pre _) (cyc _)))",
  };
  for (const char* s : trivial) {
    NfPtr nf = normalize(compute_group(parse_surface(s)));
    check(print_normal_form(nf) == "1", std::string(s) + " -> 1", detail, failures);
  }
  const char* integral[] = {"(strip (int (cyc _)))", "(strip (int (sup)))"};
  for (const char* s : integral) {
    NfPtr nf = normalize(compute_group(parse_surface(s)));
    check(print_normal_form(nf) == "Z", std::string(s) + " -> Z", detail, failures);
  }
  return failures == 0;
}

// 4. Realization round trip on 500 random expressions of height <= 5.
bool criterion_round_trip(std::string& detail) {
  int failures = 0;
  std::mt19937_64 rng(0xF01A);
  for (int i = 0; i < 500; ++i) {
    GroupPtr e = random_group(rng, 4);
    check(height(e) <= 5, "generator exceeded height 5", detail, failures);
    check(nf_equal(normalize(compute_group(realize(e))), normalize(e)), print_group(e), detail,
          failures);
  }
  return failures == 0;
}

// 5. compute_group invariant under canonicalize, reduce, and cycle
// repetition, after normalization.
bool criterion_invariance(std::string& detail) {
  int failures = 0;
  std::mt19937_64 rng(0xF01B);
  for (int i = 0; i < 200; ++i) {
    TreePtr t = random_tree(rng, 4);
    NfPtr nf = normalize(compute_group(t));
    check(nf_equal(nf, normalize(compute_group(canonicalize(t).tree))),
          "canonicalize: " + print_surface(t), detail, failures);
    check(nf_equal(nf, normalize(compute_group(reduce(t)))), "reduce: " + print_surface(t),
          detail, failures);
  }
  int cyclic = 0;
  while (cyclic < 200) {
    TreePtr t = random_tree(rng, 4);
    const auto* cyc = std::get_if<IntCycPat<TreePtr>>(&t->children);
    if (!cyc) continue;
    ++cyclic;
    NfPtr nf = normalize(compute_group(t));
    for (int m = 2; m <= 3; ++m) {
      std::vector<TreePtr> repeated;
      for (int r = 0; r < m; ++r)
        repeated.insert(repeated.end(), cyc->cycle.begin(), cyc->cycle.end());
      check(nf_equal(nf, normalize(compute_group(make_tree(IntCycPat<TreePtr>{repeated})))),
            "repetition x" + std::to_string(m) + ": " + print_surface(t), detail, failures);
    }
  }
  return failures == 0;
}

// 6. Group axioms and the exact sequence, 1000 random triples per shape.
bool criterion_axioms(std::string& detail) {
  int failures = 0;
  const std::vector<GroupPtr> shapes = {
      one(),
      z_group(),
      wr(z_group()),
      prod(FinPat<GroupPtr>{{z_group(), z_group()}}),
      wr(prod(FinPat<GroupPtr>{{z_group(), one()}})),
      prod(NatPat<GroupPtr>{{z_group()}, {z_group(), nullptr}}),
      prod(NegPat<GroupPtr>{{}, {z_group()}}),
      prod(IntCycPat<GroupPtr>{{z_group(), nullptr}}),
      prod(IntSupPat<GroupPtr>{{{-2, z_group()}, {5, z_group()}}}),
  };
  for (const GroupPtr& shape : shapes) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      ElemPtr a = random_element(shape, 3, 3 * seed);
      ElemPtr b = random_element(shape, 3, 3 * seed + 1);
      ElemPtr c = random_element(shape, 3, 3 * seed + 2);
      check(element_equal(multiply(shape, multiply(shape, a, b), c),
                          multiply(shape, a, multiply(shape, b, c))),
            "associativity in " + print_group(shape), detail, failures);
      check(element_equal(multiply(shape, a, identity(shape)), a) &&
                element_equal(multiply(shape, identity(shape), a), a),
            "identity in " + print_group(shape), detail, failures);
      check(element_equal(multiply(shape, a, inverse(shape, a)), identity(shape)) &&
                element_equal(multiply(shape, inverse(shape, a), a), identity(shape)),
            "inverses in " + print_group(shape), detail, failures);
    }
  }
  GroupPtr zz = wr(z_group());
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    ElemPtr a = random_element(zz, 3, seed);
    ElemPtr b = random_element(zz, 3, seed + 1000000);
    check(project_pi(zz, multiply(zz, a, b)) == project_pi(zz, a) + project_pi(zz, b),
          "pi homomorphism", detail, failures);
    check(project_pi(zz, section_s(zz, static_cast<std::int64_t>(seed) - 500)) ==
              static_cast<std::int64_t>(seed) - 500,
          "pi . s = id", detail, failures);
    // Constructive exactness: a kernel element is exactly the inclusion of
    // its map part.
    const auto& wa = std::get<WrElem>(a->node);
    ElemPtr kernel = make_wr_elem(wa.decorations, 0);
    check(element_equal(include_i(zz, wa.decorations), kernel), "ker pi = im i", detail,
          failures);
  }
  return failures == 0;
}

// 7. Transport oracle vs multiply, 1000 random pairs for k = 1, 2, 3.
bool criterion_transport(std::string& detail) {
  int failures = 0;
  for (std::int64_t k = 1; k <= 3; ++k) {
    std::vector<GroupPtr> blocks;
    for (std::int64_t j = 0; j < k; ++j) blocks.push_back(j % 2 == 0 ? z_group() : one());
    GroupPtr block = k == 1 ? blocks[0] : prod(FinPat<GroupPtr>{std::move(blocks)});
    GroupPtr shape = wr(block);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      ElemPtr a = random_element(shape, 3, 2 * seed);
      ElemPtr b = random_element(shape, 3, 2 * seed + 1);
      check(element_equal(transport_compose(k, block, a, b), multiply(shape, a, b)),
            "k=" + std::to_string(k), detail, failures);
    }
  }
  return failures == 0;
}

// 8. graph_diameter vs exhaustive BFS on every finite tree with <= 8
// vertices, including a diameter-3 witness.
bool criterion_diameter(std::string& detail) {
  int failures = 0;
  int trees = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const TreePtr& t : oracles::all_ordered_trees(n)) {
      ++trees;
      check(graph_diameter(t) == oracles::bfs_diameter(t), print_surface(t), detail, failures);
    }
  }
  check(trees == 1 + 1 + 2 + 5 + 14 + 42 + 132 + 429, "enumeration size", detail, failures);
  TreePtr fig = parse_surface(
      "(strip (fin (strip (fin (strip (fin)))) (strip (fin)) (strip (fin)) (strip (fin))))");
  check(graph_diameter(fig) == 3 && oracles::bfs_diameter(fig) == 3, "diameter-3 witness",
        detail, failures);
  return failures == 0;
}

// 9. Text and JSON round trips on 500 random values of each kind.
bool criterion_io(std::string& detail) {
  int failures = 0;
  std::mt19937_64 rng(0xF01C);
  for (int i = 0; i < 500; ++i) {
    TreePtr t = random_tree(rng, 4);
    check(tree_equal(parse_surface(print_surface(t)), t), "surface text", detail, failures);
    check(tree_equal(surface_from_json(to_json(t)), t), "surface json", detail, failures);
    GroupPtr g = random_group(rng, 4);
    check(group_equal(parse_group(print_group(g)), g), "group text", detail, failures);
    check(group_equal(group_from_json(to_json(g)), g), "group json", detail, failures);
    NfPtr nf = normalize(g);
    check(nf_equal(nf_from_json(to_json(nf)), nf), "nf json", detail, failures);
  }
  GroupPtr shape = wr(prod(FinPat<GroupPtr>{{z_group(), z_group()}}));
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    ElemPtr e = random_element(shape, 3, seed);
    check(element_equal(parse_element(shape, print_element(e)), e), "element text", detail,
          failures);
    check(element_equal(element_from_json(shape, to_json(e)), e), "element json", detail,
          failures);
  }
  return failures == 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "integer spellings share one normal form", criterion_eq3},
      {2, "height table 0,1,1,2,2,3", criterion_heights},
      {3, "base strips: trivial group, or Z for the free Z boundary", criterion_base_cases},
      {4, "realize/compute round trip, 500 expressions", criterion_round_trip},
      {5, "group invariant under canon/reduce/repetition, 200+200 trees", criterion_invariance},
      {6, "group axioms + exact sequence, 1000 triples per shape", criterion_axioms},
      {7, "transport oracle equals multiply, 1000 pairs, k=1..3", criterion_transport},
      {8, "diameter equals BFS on all finite trees <= 8 vertices", criterion_diameter},
      {9, "text and JSON round trips, 500 values each", criterion_io},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (!ok) ++failed;
    std::printf("%s  %d. %s%s%s\n", ok ? "PASS" : "FAIL", c.number, c.name,
                detail.empty() ? "" : "  -- ", detail.c_str());
  }
  if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
