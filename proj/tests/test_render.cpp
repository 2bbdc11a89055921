#include <doctest.h>

#include "folia/random.hpp"
#include "folia/render.hpp"
#include "folia/textio.hpp"

using namespace folia;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("one rectangle per drawn strip") {
  RenderConfig cfg;
  std::string svg = render_svg(parse_surface("(strip (fin))"), cfg);
  CHECK(count_occurrences(svg, "<rect") == 1);

  svg = render_svg(parse_surface("(strip (fin (strip (fin)) (strip (fin))))"), cfg);
  CHECK(count_occurrences(svg, "<rect") == 3);

  cfg.repeat = 3;
  svg = render_svg(parse_surface("(strip (int (cyc (strip (fin)))))"), cfg);
  CHECK(count_occurrences(svg, "<rect") == 1 + 3);
  CHECK(count_occurrences(svg, "&#8943;") == 2);  // elision on both ends of Z
}

TEST_CASE("depth limit cuts the tree and marks the cut") {
  RenderConfig cfg;
  cfg.depth = 2;
  std::string svg =
      render_svg(parse_surface("(strip (fin (strip (fin (strip (fin))))))"), cfg);
  CHECK(count_occurrences(svg, "<rect") == 2);
  CHECK(count_occurrences(svg, "&#8942;") == 1);
}

TEST_CASE("rectangle count equals the truncated vertex count on random trees") {
  std::mt19937_64 rng(60442);
  for (int i = 0; i < 100; ++i) {
    TreePtr t = random_tree(rng, 4);
    RenderConfig cfg;
    cfg.repeat = 1 + static_cast<int>(rng() % 3);
    cfg.depth = 1 + static_cast<int>(rng() % 4);
    std::string svg = render_svg(t, cfg);
    CHECK(count_occurrences(svg, "<rect") == rendered_vertex_count(t, cfg));
  }
}

TEST_CASE("well-formed deterministic SVG") {
  TreePtr t = parse_surface("(strip (nat (pre (strip (fin))) (cyc _ (strip (fin)))))");
  std::string a = render_svg(t);
  std::string b = render_svg(t);
  CHECK(a == b);
  CHECK(a.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(a, "<rect") == count_occurrences(a, "/>") -
                                             count_occurrences(a, "<line") -
                                             count_occurrences(a, "<circle"));
}
