/*
 * C API of the folia library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned as char* are heap copies to be released
 * with folia_string_free. Functions returning folia_status put a diagnostic
 * into *err (when err is non-NULL) on failure; the caller frees it.
 */
#ifndef FOLIA_H
#define FOLIA_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum folia_status {
  FOLIA_OK = 0,
  FOLIA_ERR_SYNTAX = 1,  /* malformed DSL or JSON text */
  FOLIA_ERR_INVALID = 2, /* pattern invariants violated */
  FOLIA_ERR_SHAPE = 3,   /* element does not fit its group shape */
  FOLIA_ERR_SCHEMA = 4,  /* JSON schema version or shape mismatch */
  FOLIA_ERR_ARG = 5      /* null handle or out-of-range argument */
} folia_status;

typedef struct folia_surface folia_surface;
typedef struct folia_group folia_group;
typedef struct folia_element folia_element;

void folia_string_free(char* s);

/* ---- surfaces ---------------------------------------------------------- */

folia_status folia_surface_parse(const char* text, folia_surface** out, char** err);
folia_status folia_surface_from_json(const char* text, folia_surface** out, char** err);
char* folia_surface_print(const folia_surface* s);
char* folia_surface_to_json(const folia_surface* s);
void folia_surface_free(folia_surface* s);

/* FOLIA_OK when valid; FOLIA_ERR_INVALID with one diagnostic line per issue
 * in *err otherwise. */
folia_status folia_surface_validate(const folia_surface* s, char** err);

/* The remaining surface operations expect validated input. */
folia_surface* folia_surface_canonicalize(const folia_surface* s);
folia_surface* folia_surface_reduce(const folia_surface* s);
int folia_surface_is_reduced(const folia_surface* s);
int folia_surface_equivalent(const folia_surface* a, const folia_surface* b);
int64_t folia_surface_diameter(const folia_surface* s);

/* 0 when the boundary-shift image is trivial, otherwise the k of k*Z. */
int64_t folia_surface_eta_period(const folia_surface* s);

/* Homeotopy group of the surface, as an unnormalized group expression. */
folia_group* folia_surface_group(const folia_surface* s);

/* ---- group expressions -------------------------------------------------- */

folia_status folia_group_parse(const char* text, folia_group** out, char** err);
folia_status folia_group_from_json(const char* text, folia_group** out, char** err);
char* folia_group_print(const folia_group* g);
char* folia_group_to_json(const folia_group* g);
char* folia_group_print_normalized(const folia_group* g);
char* folia_group_normalized_to_json(const folia_group* g);
int64_t folia_group_height(const folia_group* g);
int64_t folia_group_normalized_height(const folia_group* g);
folia_surface* folia_group_realize(const folia_group* g);
void folia_group_free(folia_group* g);

/* ---- elements ------------------------------------------------------------
 * An element handle carries its group shape; operands of multiply must have
 * equal shapes. */

folia_status folia_element_parse(const folia_group* shape, const char* text, folia_element** out,
                                 char** err);
char* folia_element_print(const folia_element* e);
char* folia_element_to_json(const folia_element* e);
folia_element* folia_element_identity(const folia_group* shape);
folia_status folia_element_multiply(const folia_element* a, const folia_element* b,
                                    folia_element** out, char** err);
folia_status folia_element_inverse(const folia_element* a, folia_element** out, char** err);
void folia_element_free(folia_element* e);

/* ---- diagrams and self-checks ------------------------------------------ */

/* SVG strip diagram; repeat >= 1 instances per infinite pattern part, depth
 * >= 1 tree levels. NULL on bad arguments. */
char* folia_render_svg(const folia_surface* s, int repeat, int depth);

/* Runs the randomized cross-check suites. *report receives the summary text
 * either way; returns FOLIA_OK when every suite passed. */
folia_status folia_selftest(uint64_t seed, int iters, char** report);

#ifdef __cplusplus
}
#endif

#endif /* FOLIA_H */
