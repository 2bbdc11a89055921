#include "folia.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "folia/elements.hpp"
#include "folia/errors.hpp"
#include "folia/homeotopy.hpp"
#include "folia/render.hpp"
#include "folia/selftest.hpp"
#include "folia/textio.hpp"

struct folia_surface {
  folia::TreePtr tree;
};

struct folia_group {
  folia::GroupPtr expr;
};

struct folia_element {
  folia::GroupPtr shape;
  folia::ElemPtr elem;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

// Maps core exceptions onto status codes; `body` does the actual work.
template <class F>
folia_status guarded(char** err, F body) {
  try {
    return body();
  } catch (const folia::SyntaxError& e) {
    set_err(err, e.what());
    return FOLIA_ERR_SYNTAX;
  } catch (const folia::SchemaError& e) {
    set_err(err, e.what());
    return FOLIA_ERR_SCHEMA;
  } catch (const folia::ShapeError& e) {
    set_err(err, e.what());
    return FOLIA_ERR_SHAPE;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return FOLIA_ERR_ARG;
  }
}

}  // namespace

extern "C" {

void folia_string_free(char* s) { std::free(s); }

/* ---- surfaces ---------------------------------------------------------- */

folia_status folia_surface_parse(const char* text, folia_surface** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return FOLIA_ERR_ARG;
  }
  return guarded(err, [&] {
    *out = new folia_surface{folia::parse_surface(text)};
    return FOLIA_OK;
  });
}

folia_status folia_surface_from_json(const char* text, folia_surface** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return FOLIA_ERR_ARG;
  }
  return guarded(err, [&] {
    *out = new folia_surface{folia::surface_from_json(text)};
    return FOLIA_OK;
  });
}

char* folia_surface_print(const folia_surface* s) {
  if (!s) return nullptr;
  return dup_string(folia::print_surface(s->tree));
}

char* folia_surface_to_json(const folia_surface* s) {
  if (!s) return nullptr;
  return dup_string(folia::to_json(s->tree));
}

void folia_surface_free(folia_surface* s) { delete s; }

folia_status folia_surface_validate(const folia_surface* s, char** err) {
  if (!s) {
    set_err(err, "null argument");
    return FOLIA_ERR_ARG;
  }
  auto issues = folia::validate(s->tree);
  if (issues.empty()) return FOLIA_OK;
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << '\n';
    os << folia::to_string(issues[i].code) << " at " << issues[i].path;
  }
  set_err(err, os.str());
  return FOLIA_ERR_INVALID;
}

folia_surface* folia_surface_canonicalize(const folia_surface* s) {
  if (!s) return nullptr;
  return new folia_surface{folia::canonicalize(s->tree).tree};
}

folia_surface* folia_surface_reduce(const folia_surface* s) {
  if (!s) return nullptr;
  return new folia_surface{folia::reduce(s->tree)};
}

int folia_surface_is_reduced(const folia_surface* s) {
  return s && folia::is_reduced(s->tree) ? 1 : 0;
}

int folia_surface_equivalent(const folia_surface* a, const folia_surface* b) {
  return a && b && folia::trees_equivalent(a->tree, b->tree) ? 1 : 0;
}

int64_t folia_surface_diameter(const folia_surface* s) {
  return s ? folia::graph_diameter(s->tree) : -1;
}

int64_t folia_surface_eta_period(const folia_surface* s) {
  return s ? folia::eta_image(s->tree).period : -1;
}

folia_group* folia_surface_group(const folia_surface* s) {
  if (!s) return nullptr;
  return new folia_group{folia::compute_group(s->tree)};
}

/* ---- group expressions -------------------------------------------------- */

folia_status folia_group_parse(const char* text, folia_group** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return FOLIA_ERR_ARG;
  }
  return guarded(err, [&] {
    *out = new folia_group{folia::parse_group(text)};
    return FOLIA_OK;
  });
}

folia_status folia_group_from_json(const char* text, folia_group** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return FOLIA_ERR_ARG;
  }
  return guarded(err, [&] {
    *out = new folia_group{folia::group_from_json(text)};
    return FOLIA_OK;
  });
}

char* folia_group_print(const folia_group* g) {
  if (!g) return nullptr;
  return dup_string(folia::print_group(g->expr));
}

char* folia_group_to_json(const folia_group* g) {
  if (!g) return nullptr;
  return dup_string(folia::to_json(g->expr));
}

char* folia_group_print_normalized(const folia_group* g) {
  if (!g) return nullptr;
  return dup_string(folia::print_normal_form(folia::normalize(g->expr)));
}

char* folia_group_normalized_to_json(const folia_group* g) {
  if (!g) return nullptr;
  return dup_string(folia::to_json(folia::normalize(g->expr)));
}

int64_t folia_group_height(const folia_group* g) { return g ? folia::height(g->expr) : -1; }

int64_t folia_group_normalized_height(const folia_group* g) {
  return g ? folia::height(folia::nf_to_expr(folia::normalize(g->expr))) : -1;
}

folia_surface* folia_group_realize(const folia_group* g) {
  if (!g) return nullptr;
  return new folia_surface{folia::realize(g->expr)};
}

void folia_group_free(folia_group* g) { delete g; }

/* ---- elements ------------------------------------------------------------ */

folia_status folia_element_parse(const folia_group* shape, const char* text, folia_element** out,
                                 char** err) {
  if (!shape || !text || !out) {
    set_err(err, "null argument");
    return FOLIA_ERR_ARG;
  }
  return guarded(err, [&] {
    // Evaluate the throwing call before the allocation: a throw inside the
    // braced initializer would leak the already-copied shape member.
    folia::ElemPtr parsed = folia::parse_element(shape->expr, text);
    *out = new folia_element{shape->expr, std::move(parsed)};
    return FOLIA_OK;
  });
}

char* folia_element_print(const folia_element* e) {
  if (!e) return nullptr;
  return dup_string(folia::print_element(e->elem));
}

char* folia_element_to_json(const folia_element* e) {
  if (!e) return nullptr;
  return dup_string(folia::to_json(e->elem));
}

folia_element* folia_element_identity(const folia_group* shape) {
  if (!shape) return nullptr;
  return new folia_element{shape->expr, folia::identity(shape->expr)};
}

folia_status folia_element_multiply(const folia_element* a, const folia_element* b,
                                    folia_element** out, char** err) {
  if (!a || !b || !out) {
    set_err(err, "null argument");
    return FOLIA_ERR_ARG;
  }
  return guarded(err, [&] {
    if (!folia::group_equal(a->shape, b->shape)) {
      set_err(err, "operands have different group shapes");
      return FOLIA_ERR_SHAPE;
    }
    folia::ElemPtr product = folia::multiply(a->shape, a->elem, b->elem);
    *out = new folia_element{a->shape, std::move(product)};
    return FOLIA_OK;
  });
}

folia_status folia_element_inverse(const folia_element* a, folia_element** out, char** err) {
  if (!a || !out) {
    set_err(err, "null argument");
    return FOLIA_ERR_ARG;
  }
  return guarded(err, [&] {
    folia::ElemPtr inverted = folia::inverse(a->shape, a->elem);
    *out = new folia_element{a->shape, std::move(inverted)};
    return FOLIA_OK;
  });
}

void folia_element_free(folia_element* e) { delete e; }

/* ---- diagrams and self-checks ------------------------------------------ */

char* folia_render_svg(const folia_surface* s, int repeat, int depth) {
  if (!s || repeat < 1 || depth < 1) return nullptr;
  folia::RenderConfig cfg;
  cfg.repeat = repeat;
  cfg.depth = depth;
  return dup_string(folia::render_svg(s->tree, cfg));
}

folia_status folia_selftest(uint64_t seed, int iters, char** report) {
  if (iters < 1) {
    if (report) *report = dup_string("iters must be positive");
    return FOLIA_ERR_ARG;
  }
  folia::SelftestResult r = folia::selftest(seed, iters);
  if (report) *report = dup_string(r.report);
  return r.ok ? FOLIA_OK : FOLIA_ERR_INVALID;
}

}  // extern "C"
