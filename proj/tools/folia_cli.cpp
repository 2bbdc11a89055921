// Command-line front end for the folia shared library. Everything goes
// through the C API in folia.h.
//
// Exit codes: 0 success, 1 domain error (validation, shape mismatch),
// 2 usage or parse error.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "folia.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { folia_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

int status_exit_code(folia_status st) {
  switch (st) {
    case FOLIA_OK:
      return kExitOk;
    case FOLIA_ERR_INVALID:
    case FOLIA_ERR_SHAPE:
      return kExitDomain;
    default:
      return kExitUsage;
  }
}

int fail(folia_status st, const StringOut& err) {
  std::cerr << "error: " << (err.ptr ? err.ptr : "unknown") << '\n';
  return status_exit_code(st);
}

bool read_file(const std::string& path, std::string& out, int& rc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    rc = kExitUsage;
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

using SurfacePtr = std::unique_ptr<folia_surface, decltype(&folia_surface_free)>;
using GroupPtr = std::unique_ptr<folia_group, decltype(&folia_group_free)>;
using ElementPtr = std::unique_ptr<folia_element, decltype(&folia_element_free)>;

// Loads a surface from a DSL or JSON file; on failure prints the diagnostic
// and stores the exit code.
SurfacePtr load_surface(const std::string& path, int& rc) {
  std::string text;
  if (!read_file(path, text, rc)) return {nullptr, folia_surface_free};
  folia_surface* s = nullptr;
  StringOut err;
  folia_status st = looks_like_json(text) ? folia_surface_from_json(text.c_str(), &s, &err.ptr)
                                          : folia_surface_parse(text.c_str(), &s, &err.ptr);
  if (st != FOLIA_OK) {
    rc = fail(st, err);
    return {nullptr, folia_surface_free};
  }
  return {s, folia_surface_free};
}

// Parse errors are usage-level (2); invalid pattern data is a domain error (1).
bool require_valid(const SurfacePtr& s, int& rc) {
  StringOut err;
  folia_status st = folia_surface_validate(s.get(), &err.ptr);
  if (st == FOLIA_OK) return true;
  rc = fail(st, err);
  return false;
}

GroupPtr load_group(const std::string& path, int& rc) {
  std::string text;
  if (!read_file(path, text, rc)) return {nullptr, folia_group_free};
  folia_group* g = nullptr;
  StringOut err;
  folia_status st = looks_like_json(text) ? folia_group_from_json(text.c_str(), &g, &err.ptr)
                                          : folia_group_parse(text.c_str(), &g, &err.ptr);
  if (st != FOLIA_OK) {
    rc = fail(st, err);
    return {nullptr, folia_group_free};
  }
  return {g, folia_group_free};
}

ElementPtr parse_element_arg(const folia_group* shape, const std::string& text, int& rc) {
  folia_element* e = nullptr;
  StringOut err;
  folia_status st = folia_element_parse(shape, text.c_str(), &e, &err.ptr);
  if (st != FOLIA_OK) {
    rc = fail(st, err);
    return {nullptr, folia_element_free};
  }
  return {e, folia_element_free};
}

void print_owned(char* s) {
  StringOut out;
  out.ptr = s;
  std::cout << out.str() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculus of striped-surface foliations and their homeotopy groups"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json appear after the subcommand as well
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of the text DSL");

  std::string file, outfile, e1, e2;
  bool normalize_flag = false, height_flag = false;
  int repeat = 3, depth = 4;
  std::uint64_t seed = 1;
  int iters = 100;

  CLI::App* validate = app.add_subcommand("validate", "check pattern invariants");
  validate->add_option("file", file)->required();

  CLI::App* canon = app.add_subcommand("canon", "print the canonical form");
  canon->add_option("file", file)->required();

  CLI::App* reduce = app.add_subcommand("reduce", "splice away trivial gluings");
  reduce->add_option("file", file)->required();

  CLI::App* diameter = app.add_subcommand("diameter", "diameter of the strip graph");
  diameter->add_option("file", file)->required();

  CLI::App* eta = app.add_subcommand("eta", "image of the boundary-shift homomorphism");
  eta->add_option("file", file)->required();

  CLI::App* group = app.add_subcommand("group", "compute the homeotopy group");
  group->add_option("file", file)->required();
  group->add_flag("--normalize", normalize_flag, "print the normal form");
  group->add_flag("--height", height_flag, "also print the height of the printed representation");

  CLI::App* realize = app.add_subcommand("realize", "build a surface with the given group");
  realize->add_option("groupfile", file)->required();

  CLI::App* render = app.add_subcommand("render", "draw the strip diagram as SVG");
  render->add_option("file", file)->required();
  render->add_option("-o,--output", outfile, "output SVG path")->required();
  render->add_option("--repeat", repeat, "instances per infinite pattern part")
      ->check(CLI::PositiveNumber);
  render->add_option("--depth", depth, "tree depth drawn")->check(CLI::PositiveNumber);

  CLI::App* elem = app.add_subcommand("elem", "wreath element arithmetic");
  elem->require_subcommand(1);
  CLI::App* elem_mul = elem->add_subcommand("mul", "multiply two elements");
  elem_mul->add_option("groupfile", file)->required();
  elem_mul->add_option("e1", e1)->required();
  elem_mul->add_option("e2", e2)->required();
  CLI::App* elem_inv = elem->add_subcommand("inv", "invert an element");
  elem_inv->add_option("groupfile", file)->required();
  elem_inv->add_option("e", e1)->required();

  CLI::App* selftest = app.add_subcommand("selftest", "run the randomized cross-checks");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--iters", iters, "cases per suite")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int rc = kExitOk;

  if (*validate) {
    SurfacePtr s = load_surface(file, rc);
    if (!s) return rc;
    StringOut err;
    folia_status st = folia_surface_validate(s.get(), &err.ptr);
    if (st == FOLIA_OK) {
      std::cout << (json ? "{\"valid\":true}" : "valid") << '\n';
      return kExitOk;
    }
    if (json)
      std::cout << "{\"valid\":false}" << '\n';
    else
      std::cout << "invalid" << '\n';
    std::cerr << err.str() << '\n';
    return status_exit_code(st);
  }

  if (*canon || *reduce) {
    SurfacePtr s = load_surface(file, rc);
    if (!s || !require_valid(s, rc)) return rc;
    SurfacePtr out{*canon ? folia_surface_canonicalize(s.get()) : folia_surface_reduce(s.get()),
                   folia_surface_free};
    print_owned(json ? folia_surface_to_json(out.get()) : folia_surface_print(out.get()));
    return kExitOk;
  }

  if (*diameter) {
    SurfacePtr s = load_surface(file, rc);
    if (!s || !require_valid(s, rc)) return rc;
    int64_t d = folia_surface_diameter(s.get());
    if (json)
      std::cout << "{\"diameter\":" << d << "}" << '\n';
    else
      std::cout << d << '\n';
    return kExitOk;
  }

  if (*eta) {
    SurfacePtr s = load_surface(file, rc);
    if (!s || !require_valid(s, rc)) return rc;
    int64_t k = folia_surface_eta_period(s.get());
    if (json) {
      if (k == 0)
        std::cout << "{\"eta\":\"trivial\"}" << '\n';
      else
        std::cout << "{\"eta\":{\"period\":" << k << "}}" << '\n';
    } else {
      if (k == 0)
        std::cout << "trivial" << '\n';
      else
        std::cout << k << "Z" << '\n';
    }
    return kExitOk;
  }

  if (*group) {
    SurfacePtr s = load_surface(file, rc);
    if (!s || !require_valid(s, rc)) return rc;
    GroupPtr g{folia_surface_group(s.get()), folia_group_free};
    // --height reports the representation being printed: the raw computed
    // expression, or the normal form read back as an expression.
    int64_t h = normalize_flag ? folia_group_normalized_height(g.get())
                               : folia_group_height(g.get());
    if (json) {
      StringOut mirror;
      mirror.ptr = normalize_flag ? folia_group_normalized_to_json(g.get())
                                  : folia_group_to_json(g.get());
      std::string text = mirror.str();
      if (height_flag && !text.empty() && text.back() == '}')
        text = text.substr(0, text.size() - 1) + ",\"height\":" + std::to_string(h) + "}";
      std::cout << text << '\n';
    } else {
      print_owned(normalize_flag ? folia_group_print_normalized(g.get())
                                 : folia_group_print(g.get()));
      if (height_flag) std::cout << "height: " << h << '\n';
    }
    return kExitOk;
  }

  if (*realize) {
    GroupPtr g = load_group(file, rc);
    if (!g) return rc;
    SurfacePtr s{folia_group_realize(g.get()), folia_surface_free};
    print_owned(json ? folia_surface_to_json(s.get()) : folia_surface_print(s.get()));
    return kExitOk;
  }

  if (*render) {
    SurfacePtr s = load_surface(file, rc);
    if (!s || !require_valid(s, rc)) return rc;
    StringOut svg;
    svg.ptr = folia_render_svg(s.get(), repeat, depth);
    if (!svg.ptr) {
      std::cerr << "error: rendering failed\n";
      return kExitUsage;
    }
    std::ofstream out(outfile, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << outfile << "'\n";
      return kExitUsage;
    }
    out << svg.str();
    return kExitOk;
  }

  if (*elem_mul || *elem_inv) {
    GroupPtr shape = load_group(file, rc);
    if (!shape) return rc;
    ElementPtr a = parse_element_arg(shape.get(), e1, rc);
    if (!a) return rc;
    folia_element* result = nullptr;
    StringOut err;
    folia_status st;
    if (*elem_mul) {
      ElementPtr b = parse_element_arg(shape.get(), e2, rc);
      if (!b) return rc;
      st = folia_element_multiply(a.get(), b.get(), &result, &err.ptr);
    } else {
      st = folia_element_inverse(a.get(), &result, &err.ptr);
    }
    if (st != FOLIA_OK) return fail(st, err);
    ElementPtr r{result, folia_element_free};
    print_owned(json ? folia_element_to_json(r.get()) : folia_element_print(r.get()));
    return kExitOk;
  }

  if (*selftest) {
    StringOut report;
    folia_status st = folia_selftest(seed, iters, &report.ptr);
    std::cout << report.str();
    return st == FOLIA_OK ? kExitOk : kExitDomain;
  }

  return kExitUsage;
}
