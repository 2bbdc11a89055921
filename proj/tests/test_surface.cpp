#include <doctest.h>

#include "folia/random.hpp"
#include "folia/surface.hpp"
#include "folia/textio.hpp"
#include "oracles.hpp"

using namespace folia;

namespace {

TreePtr T(const char* dsl) { return parse_surface(dsl); }

}  // namespace

TEST_CASE("validate accepts well-formed trees") {
  CHECK(validate(T("(strip (fin))")).empty());
  CHECK(validate(T("(strip (nat (pre) (cyc _ (strip (fin)))))")).empty());
  CHECK(validate(T("(strip (int (sup (5 (strip (fin))))))")).empty());
}

TEST_CASE("validate reports each broken invariant") {
  // The DSL grammar cannot spell these, so build them by hand.
  TreePtr empty_cycle = make_tree(IntCycPat<TreePtr>{{}});
  auto issues = validate(empty_cycle);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == IssueCode::EmptyCycle);

  TreePtr empty_sup_slot = make_tree(IntSupPat<TreePtr>{{{0, nullptr}}});
  issues = validate(empty_sup_slot);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == IssueCode::EmptySupportSlot);

  TreePtr dup = make_tree(IntSupPat<TreePtr>{{{2, leaf_strip()}, {2, leaf_strip()}}});
  issues = validate(dup);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == IssueCode::DuplicateSupportKey);

  TreePtr nested = make_tree(FinPat<TreePtr>{{empty_cycle, dup}});
  CHECK(validate(nested).size() == 2);
}

TEST_CASE("canonicalize: primitive cycle and least rotation") {
  TreePtr t = T("(strip (int (cyc (strip (fin)) _ (strip (fin)) _)))");
  TreePtr c = canonicalize(t).tree;
  CHECK(print_surface(c) == "(strip (int (cyc _ (strip (fin)))))");

  // Cross-check against the definitions: the canonical cycle must be
  // rotation-equivalent to the primitive root of the input and least among
  // all of its rotations.
  const auto& canon = std::get<IntCycPat<TreePtr>>(c->children);
  std::vector<TreePtr> primitive{T("(strip (fin))"), nullptr};
  CHECK(oracles::cycles_rotation_equal(canon.cycle, primitive));
  const std::size_t n = canon.cycle.size();
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<TreePtr> rot;
    for (std::size_t j = 0; j < n; ++j) rot.push_back(canon.cycle[(j + r) % n]);
    bool le = false;
    for (std::size_t j = 0; j < n; ++j) {
      int cv = compare_tree(canon.cycle[j], rot[j]);
      if (cv != 0) {
        le = cv < 0;
        break;
      }
    }
    CHECK(le);
  }
}

TEST_CASE("canonicalize: prefix absorbed into the cycle") {
  TreePtr t = T("(strip (nat (pre (strip (fin))) (cyc (strip (fin)))))");
  CHECK(print_surface(canonicalize(t).tree) == "(strip (nat (pre) (cyc (strip (fin)))))");
}

TEST_CASE("canonicalize: support shifted to start at zero") {
  TreePtr t = T("(strip (int (sup (5 (strip (fin))))))");
  CHECK(print_surface(canonicalize(t).tree) == "(strip (int (sup (0 (strip (fin))))))");
}

TEST_CASE("canonicalize: empty support becomes the all-empty cycle") {
  CHECK(print_surface(canonicalize(T("(strip (int (sup)))")).tree) ==
        "(strip (int (cyc _)))");
}

TEST_CASE("canonicalize is idempotent on random trees") {
  std::mt19937_64 rng(20260809);
  for (int i = 0; i < 300; ++i) {
    TreePtr t = random_tree(rng, 4);
    TreePtr c = canonicalize(t).tree;
    CAPTURE(print_surface(t));
    CHECK(tree_equal(c, canonicalize(c).tree));
  }
}

TEST_CASE("canonical form is invariant under input cycle rotation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    TreePtr t = random_tree(rng, 3);
    const auto* cyc = std::get_if<IntCycPat<TreePtr>>(&t->children);
    if (!cyc) continue;
    TreePtr c = canonicalize(t).tree;
    std::vector<TreePtr> rotated = cyc->cycle;
    std::rotate(rotated.begin(), rotated.begin() + (i % rotated.size()), rotated.end());
    CHECK(tree_equal(c, canonicalize(make_tree(IntCycPat<TreePtr>{rotated})).tree));
  }
}

TEST_CASE("trees_equivalent") {
  TreePtr a = T("(strip (int (cyc (strip (fin)) _)))");
  TreePtr b = T("(strip (int (cyc _ (strip (fin)))))");
  CHECK(trees_equivalent(a, b));

  // Position 1 of an N family is pinned, so prefix vs no prefix differ.
  CHECK_FALSE(trees_equivalent(T("(strip (nat (pre (strip (fin))) (cyc _)))"),
                               T("(strip (nat (pre) (cyc _)))")));
  CHECK(trees_equivalent(T("(strip (fin))"), T("(strip (fin))")));
}

TEST_CASE("trees_equivalent is an equivalence relation") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    TreePtr a = random_tree(rng, 3);
    TreePtr b = random_tree(rng, 3);
    TreePtr c = random_tree(rng, 3);
    CHECK(trees_equivalent(a, a));
    CHECK(trees_equivalent(a, b) == trees_equivalent(b, a));
    if (trees_equivalent(a, b) && trees_equivalent(b, c)) CHECK(trees_equivalent(a, c));
  }
}

TEST_CASE("minimal_period") {
  TreePtr a = canonicalize(T("(strip (fin (strip (fin))))")).tree;
  TreePtr b = canonicalize(T("(strip (fin))")).tree;

  IntCycPat<TreePtr> abab{{a, b, a, b}};
  CHECK(minimal_period(abab) == 2);
  CHECK(oracles::scan_minimal_period(abab.cycle) == 2);

  IntCycPat<TreePtr> single{{nullptr}};
  CHECK(minimal_period(single) == 1);

  IntCycPat<TreePtr> aaa{{a, a, a}};
  CHECK(minimal_period(aaa) == 1);
  CHECK(oracles::scan_minimal_period(aaa.cycle) == 1);
}

TEST_CASE("minimal_period of a repeated cycle") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 200; ++i) {
    std::vector<TreePtr> cycle;
    std::size_t len = 1 + rng() % 3;
    for (std::size_t j = 0; j < len; ++j)
      cycle.push_back(rng() % 2 ? canonicalize(random_tree(rng, 2)).tree : nullptr);
    std::int64_t base = minimal_period(IntCycPat<TreePtr>{cycle});
    CHECK(base == oracles::scan_minimal_period(cycle));
    for (int m = 2; m <= 3; ++m) {
      std::vector<TreePtr> repeated;
      for (int r = 0; r < m; ++r) repeated.insert(repeated.end(), cycle.begin(), cycle.end());
      CHECK(minimal_period(IntCycPat<TreePtr>{repeated}) == base);
    }
  }
}

TEST_CASE("graph_diameter on the worked examples") {
  CHECK(graph_diameter(T("(strip (fin))")) == 0);
  CHECK(graph_diameter(T("(strip (fin (strip (fin)) (strip (fin))))")) == 2);
  CHECK(graph_diameter(T("(strip (fin (strip (fin (strip (fin)))) (strip (fin))))")) == 3);
}

TEST_CASE("graph_diameter counts cycle slots with multiplicity") {
  // One subtree in a Z cycle instantiates countably often, so two copies
  // provide both deepest branches.
  CHECK(graph_diameter(T("(strip (int (cyc (strip (fin (strip (fin)))))))")) == 4);
  // A lone support entry occurs once.
  CHECK(graph_diameter(T("(strip (int (sup (0 (strip (fin (strip (fin))))))))")) == 2);
}

TEST_CASE("graph_diameter equals BFS diameter on all finite trees up to 8 vertices") {
  for (int n = 1; n <= 8; ++n) {
    for (const TreePtr& t : oracles::all_ordered_trees(n)) {
      CAPTURE(print_surface(t));
      CHECK(graph_diameter(t) == oracles::bfs_diameter(t));
    }
  }
}

TEST_CASE("is_reduced") {
  CHECK_FALSE(is_reduced(T("(strip (fin (strip (fin))))")));
  CHECK(is_reduced(T("(strip (fin (strip (fin)) (strip (fin))))")));
  CHECK(is_reduced(T("(strip (fin))")));
  CHECK(is_reduced(T("(strip (fin _))")));  // a free interval is not a gluing
}

TEST_CASE("reduce splices unary gluings") {
  CHECK(print_surface(reduce(T("(strip (fin (strip (fin))))"))) == "(strip (fin))");
  CHECK(print_surface(reduce(T("(strip (fin (strip (fin (strip (int (cyc _)))))))"))) ==
        "(strip (int (cyc _)))");
  TreePtr stable = T("(strip (fin (strip (fin)) (strip (fin))))");
  CHECK(tree_equal(reduce(stable), stable));
}

TEST_CASE("reduce output is reduced and diameter shrinks by at most two per splice") {
  // A diameter path has two arms and visits each described strip at most
  // once per arm, so one splice shortens it by at most two (an omega slot
  // splices on both arms at once) and never lengthens it.
  std::mt19937_64 rng(555);
  for (int i = 0; i < 300; ++i) {
    TreePtr t = random_tree(rng, 4);
    Reduction r = reduce_with_stats(t);
    CAPTURE(print_surface(t));
    CHECK(is_reduced(r.tree));
    std::int64_t before = graph_diameter(t);
    std::int64_t after = graph_diameter(r.tree);
    CHECK(after <= before);
    CHECK(after >= before - 2 * r.splices);
  }
}

TEST_CASE("reduce on a chain drops the diameter by exactly the splice count") {
  TreePtr chain = T("(strip (fin (strip (fin (strip (fin (strip (fin))))))))");
  Reduction r = reduce_with_stats(chain);
  CHECK(r.splices == 3);
  CHECK(graph_diameter(chain) - r.splices == graph_diameter(r.tree));
  CHECK(graph_diameter(r.tree) == 0);
}
