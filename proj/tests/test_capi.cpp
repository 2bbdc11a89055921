// Exercises the extern-C surface of libfolia the way an external client
// would: opaque handles, status codes, caller-owned strings.
#include <doctest.h>

#include <cstring>
#include <string>

#include "folia.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { folia_string_free(p); }
  std::string s() const { return p ? p : "<null>"; }
};

}  // namespace

TEST_CASE("surface lifecycle through the C API") {
  folia_surface* s = nullptr;
  Str err;
  REQUIRE(folia_surface_parse("(strip (int (cyc (strip (fin)) _ (strip (fin)) _)))", &s,
                              &err.p) == FOLIA_OK);
  CHECK(folia_surface_validate(s, nullptr) == FOLIA_OK);
  CHECK(folia_surface_eta_period(s) == 2);
  CHECK(folia_surface_diameter(s) == 2);
  CHECK(folia_surface_is_reduced(s) == 1);

  folia_surface* canon = folia_surface_canonicalize(s);
  Str printed;
  printed.p = folia_surface_print(canon);
  CHECK(printed.s() == "(strip (int (cyc _ (strip (fin)))))");
  CHECK(folia_surface_equivalent(s, canon) == 1);

  // Two equal blocks of trivial group: (1 x 1) wr Z normalizes to Z.
  folia_group* g = folia_surface_group(s);
  Str nf;
  nf.p = folia_group_print_normalized(g);
  CHECK(nf.s() == "Z");
  folia_group_free(g);
  folia_surface_free(canon);
  folia_surface_free(s);
}

TEST_CASE("surface JSON through the C API") {
  folia_surface* s = nullptr;
  REQUIRE(folia_surface_parse("(strip (fin))", &s, nullptr) == FOLIA_OK);
  Str js;
  js.p = folia_surface_to_json(s);
  CHECK(js.s() == R"({"strip":{"fin":[]},"v":"folia/1"})");
  folia_surface* back = nullptr;
  REQUIRE(folia_surface_from_json(js.p, &back, nullptr) == FOLIA_OK);
  CHECK(folia_surface_equivalent(s, back) == 1);
  folia_surface_free(back);
  folia_surface_free(s);
}

TEST_CASE("error codes and diagnostics") {
  folia_surface* s = nullptr;
  Str err;
  CHECK(folia_surface_parse("(strip (int (cyc)))", &s, &err.p) == FOLIA_ERR_SYNTAX);
  CHECK(err.s().find("1:17") != std::string::npos);

  CHECK(folia_surface_parse(nullptr, &s, nullptr) == FOLIA_ERR_ARG);

  Str err2;
  CHECK(folia_surface_from_json(R"({"v":"folia/9","strip":{"fin":[]}})", &s, &err2.p) ==
        FOLIA_ERR_SCHEMA);

  folia_group* shape = nullptr;
  REQUIRE(folia_group_parse("Z", &shape, nullptr) == FOLIA_OK);
  folia_element* e = nullptr;
  Str err3;
  CHECK(folia_element_parse(shape, "(p (1 e))", &e, &err3.p) == FOLIA_ERR_SHAPE);
  folia_group_free(shape);
}

TEST_CASE("group expressions and realization") {
  folia_group* g = nullptr;
  REQUIRE(folia_group_parse("(x 1 Z)", &g, nullptr) == FOLIA_OK);
  CHECK(folia_group_height(g) == 2);
  Str nf;
  nf.p = folia_group_print_normalized(g);
  CHECK(nf.s() == "Z");
  CHECK(folia_group_normalized_height(g) == 1);

  // Realization mirrors the expression as written: the trivial factor
  // becomes a bare strip next to the Z strip.
  folia_surface* s = folia_group_realize(g);
  Str printed;
  printed.p = folia_surface_print(s);
  CHECK(printed.s() == "(strip (fin (strip (fin)) (strip (int (cyc (strip (fin)))))))");
  folia_group* round = folia_surface_group(s);
  Str nf2;
  nf2.p = folia_group_print_normalized(round);
  CHECK(nf2.s() == "Z");
  folia_group_free(round);
  folia_surface_free(s);
  folia_group_free(g);
}

TEST_CASE("element arithmetic through the C API") {
  folia_group* shape = nullptr;
  REQUIRE(folia_group_parse("(wr Z)", &shape, nullptr) == FOLIA_OK);
  folia_element* a = nullptr;
  folia_element* b = nullptr;
  REQUIRE(folia_element_parse(shape, "(w ((0 (w () 3))) 1)", &a, nullptr) == FOLIA_OK);
  REQUIRE(folia_element_parse(shape, "(w ((1 (w () 5))) 2)", &b, nullptr) == FOLIA_OK);

  folia_element* ab = nullptr;
  REQUIRE(folia_element_multiply(a, b, &ab, nullptr) == FOLIA_OK);
  Str printed;
  printed.p = folia_element_print(ab);
  CHECK(printed.s() == "(w ((-2 (w () 3)) (1 (w () 5))) 3)");

  folia_element* inv = nullptr;
  REQUIRE(folia_element_inverse(a, &inv, nullptr) == FOLIA_OK);
  folia_element* unit = nullptr;
  REQUIRE(folia_element_multiply(a, inv, &unit, nullptr) == FOLIA_OK);
  Str unit_printed;
  unit_printed.p = folia_element_print(unit);
  CHECK(unit_printed.s() == "e");

  // Shape mismatch between operands.
  folia_group* other = nullptr;
  REQUIRE(folia_group_parse("Z", &other, nullptr) == FOLIA_OK);
  folia_element* oe = folia_element_identity(other);
  folia_element* bad = nullptr;
  Str err;
  CHECK(folia_element_multiply(a, oe, &bad, &err.p) == FOLIA_ERR_SHAPE);

  folia_element_free(oe);
  folia_group_free(other);
  folia_element_free(unit);
  folia_element_free(inv);
  folia_element_free(ab);
  folia_element_free(b);
  folia_element_free(a);
  folia_group_free(shape);
}

TEST_CASE("render and selftest through the C API") {
  folia_surface* s = nullptr;
  REQUIRE(folia_surface_parse("(strip (fin (strip (fin)) (strip (fin))))", &s, nullptr) ==
          FOLIA_OK);
  Str svg;
  svg.p = folia_render_svg(s, 3, 4);
  REQUIRE(svg.p != nullptr);
  CHECK(svg.s().find("<svg") == 0);
  CHECK(folia_render_svg(s, 0, 4) == nullptr);
  folia_surface_free(s);

  Str report;
  CHECK(folia_selftest(11, 5, &report.p) == FOLIA_OK);
  CHECK(report.s().find("selftest passed") != std::string::npos);
}
