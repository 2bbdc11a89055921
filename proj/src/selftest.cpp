#include "folia/selftest.hpp"

#include <functional>
#include <sstream>
#include <vector>

#include "folia/elements.hpp"
#include "folia/homeotopy.hpp"
#include "folia/random.hpp"
#include "folia/textio.hpp"

namespace folia {

namespace {

struct Suite {
  const char* name;
  std::function<bool(std::mt19937_64&, int, std::string&)> run;
};

bool expect(bool cond, const std::string& detail, std::string& msg) {
  if (!cond && msg.empty()) msg = detail;
  return cond;
}

GroupPtr repeat_root_cycle(const TreePtr& t, int times) {
  const auto* cyc = std::get_if<IntCycPat<TreePtr>>(&t->children);
  if (!cyc) return nullptr;
  std::vector<TreePtr> repeated;
  for (int i = 0; i < times; ++i)
    repeated.insert(repeated.end(), cyc->cycle.begin(), cyc->cycle.end());
  return compute_group(make_tree(IntCycPat<TreePtr>{std::move(repeated)}));
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"canonical-idempotent",
       [](std::mt19937_64& rng, int n, std::string& msg) {
         bool ok = true;
         for (int i = 0; i < n; ++i) {
           TreePtr t = random_tree(rng, 4);
           TreePtr c = canonicalize(t).tree;
           ok &= expect(tree_equal(c, canonicalize(c).tree), print_surface(t), msg);
         }
         return ok;
       }},
      {"equivalence-relation",
       [](std::mt19937_64& rng, int n, std::string& msg) {
         bool ok = true;
         for (int i = 0; i < n; ++i) {
           TreePtr a = random_tree(rng, 3);
           TreePtr b = random_tree(rng, 3);
           TreePtr c = random_tree(rng, 3);
           ok &= expect(trees_equivalent(a, a), "reflexivity", msg);
           ok &= expect(trees_equivalent(a, b) == trees_equivalent(b, a), "symmetry", msg);
           if (trees_equivalent(a, b) && trees_equivalent(b, c))
             ok &= expect(trees_equivalent(a, c), "transitivity", msg);
         }
         return ok;
       }},
      {"realize-round-trip",
       [](std::mt19937_64& rng, int n, std::string& msg) {
         bool ok = true;
         for (int i = 0; i < n; ++i) {
           GroupPtr e = random_group(rng, 4);
           ok &= expect(nf_equal(normalize(compute_group(realize(e))), normalize(e)),
                        print_group(e), msg);
         }
         return ok;
       }},
      {"group-invariances",
       [](std::mt19937_64& rng, int n, std::string& msg) {
         bool ok = true;
         for (int i = 0; i < n; ++i) {
           TreePtr t = random_tree(rng, 4);
           NfPtr nf = normalize(compute_group(t));
           ok &= expect(nf_equal(nf, normalize(compute_group(canonicalize(t).tree))),
                        "canonicalize changed the group of " + print_surface(t), msg);
           ok &= expect(nf_equal(nf, normalize(compute_group(reduce(t)))),
                        "reduce changed the group of " + print_surface(t), msg);
           GroupPtr rep = repeat_root_cycle(t, 2 + static_cast<int>(rng() % 2));
           if (rep)
             ok &= expect(nf_equal(nf, normalize(rep)),
                          "cycle repetition changed the group of " + print_surface(t), msg);
         }
         return ok;
       }},
      {"wreath-axioms",
       [](std::mt19937_64& rng, int n, std::string& msg) {
         GroupPtr shape = wr(prod(FinPat<GroupPtr>{{z_group(), one()}}));
         bool ok = true;
         for (int i = 0; i < n; ++i) {
           ElemPtr a = random_element(shape, 3, rng());
           ElemPtr b = random_element(shape, 3, rng());
           ElemPtr c = random_element(shape, 3, rng());
           ok &= expect(element_equal(multiply(shape, multiply(shape, a, b), c),
                                      multiply(shape, a, multiply(shape, b, c))),
                        "associativity", msg);
           ok &= expect(element_equal(multiply(shape, a, inverse(shape, a)), identity(shape)),
                        "right inverse", msg);
           ok &= expect(element_equal(multiply(shape, identity(shape), a), a), "left identity",
                        msg);
         }
         return ok;
       }},
      {"transport-oracle",
       [](std::mt19937_64& rng, int n, std::string& msg) {
         bool ok = true;
         for (int i = 0; i < n; ++i) {
           const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
           std::vector<GroupPtr> blocks;
           for (std::int64_t j = 0; j < k; ++j)
             blocks.push_back(rng() % 2 == 0 ? z_group() : one());
           GroupPtr block = k == 1 ? blocks[0] : prod(FinPat<GroupPtr>{std::move(blocks)});
           GroupPtr shape = wr(block);
           ElemPtr a = random_element(shape, 3, rng());
           ElemPtr b = random_element(shape, 3, rng());
           ok &= expect(element_equal(transport_compose(k, block, a, b), multiply(shape, a, b)),
                        "transport mismatch", msg);
         }
         return ok;
       }},
      {"text-round-trips",
       [](std::mt19937_64& rng, int n, std::string& msg) {
         bool ok = true;
         for (int i = 0; i < n; ++i) {
           TreePtr t = random_tree(rng, 4);
           ok &= expect(tree_equal(parse_surface(print_surface(t)), t), "surface text", msg);
           ok &= expect(tree_equal(surface_from_json(to_json(t)), t), "surface json", msg);
           GroupPtr e = random_group(rng, 4);
           ok &= expect(group_equal(parse_group(print_group(e)), e), "group text", msg);
           ok &= expect(group_equal(group_from_json(to_json(e)), e), "group json", msg);
           GroupPtr shape = wr(prod(FinPat<GroupPtr>{{z_group(), z_group()}}));
           ElemPtr x = random_element(shape, 3, rng());
           ok &= expect(element_equal(parse_element(shape, print_element(x)), x), "element text",
                        msg);
           ok &= expect(element_equal(element_from_json(shape, to_json(x)), x), "element json",
                        msg);
         }
         return ok;
       }},
  };
  return all;
}

}  // namespace

SelftestResult selftest(std::uint64_t seed, int iters) {
  std::ostringstream report;
  bool all_ok = true;
  for (const Suite& s : suites()) {
    std::mt19937_64 rng(seed);
    std::string msg;
    bool ok = false;
    try {
      ok = s.run(rng, iters, msg);
    } catch (const std::exception& err) {
      msg = err.what();
    }
    all_ok &= ok;
    report << (ok ? "ok   " : "FAIL ") << s.name << "  (" << iters << " cases)";
    if (!ok && !msg.empty()) report << "  [" << msg << "]";
    report << '\n';
  }
  report << (all_ok ? "selftest passed" : "selftest FAILED") << " (seed=" << seed
         << ", iters=" << iters << ")\n";
  return SelftestResult{all_ok, report.str()};
}

}  // namespace folia
