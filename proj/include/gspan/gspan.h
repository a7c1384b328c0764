#ifndef GSPAN_GSPAN_H
#define GSPAN_GSPAN_H

/* C interface to the gspan engine. Every document crossing this boundary is
 * JSON text in the format described in the README; indices are 1-based.
 * Strings returned through `char **out` are owned by the caller and released
 * with gspan_string_free. On failure the output pointer is left untouched and
 * gspan_last_error() describes the problem (per thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GSPAN_API __declspec(dllexport)
#else
#define GSPAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gspan_status
{
  GSPAN_OK = 0,
  GSPAN_ERR_MALFORMED = 1,
  GSPAN_ERR_SIZE_LIMIT = 2,
  GSPAN_ERR_SHAPE = 3,
  GSPAN_ERR_DOMAIN = 4,
  GSPAN_ERR_NOT_FIXED = 5,
  GSPAN_ERR_USAGE = 6,
  GSPAN_ERR_INTERNAL = 7,
  /* The call succeeded but the verification it ran found a failure. */
  GSPAN_VERIFY_FAILED = 8
} gspan_status;

typedef struct gspan_group gspan_group;

typedef struct gspan_verify_options
{
  uint64_t seed;
  size_t size_bound;
  size_t trials; /* 0 = suite default */
  size_t samples;
  double tolerance;
} gspan_verify_options;

GSPAN_API const char *gspan_last_error(void);
GSPAN_API const char *gspan_status_name(gspan_status status);
GSPAN_API void gspan_string_free(char *s);

/* Upper bound on group orders, from GSPAN_MAX_GROUP_ORDER when set. */
GSPAN_API size_t gspan_max_group_order(void);

/* `spec` is a preset ("cyclic 4", "symmetric 3", ...), a group document, or
 * the path of a file holding one. */
GSPAN_API gspan_status gspan_group_create(const char *spec, gspan_group **out);
GSPAN_API void gspan_group_free(gspan_group *group);
GSPAN_API gspan_status gspan_group_order(const gspan_group *group, size_t *out);
GSPAN_API gspan_status gspan_group_class_count(const gspan_group *group, size_t *out);

/* {"order", "classes": [{"index","order","size","generators"}], "document"} */
GSPAN_API gspan_status gspan_group_summary(const gspan_group *group, char **out);

/* Parses a G-set document (checking it is an action) and reports its orbit
 * decomposition along with the normalized document. */
GSPAN_API gspan_status gspan_gset_describe(const gspan_group *group, const char *doc, char **out);

/* {"labels", "marks": rows = orbit types, columns = subgroup classes} */
GSPAN_API gspan_status gspan_marks(const gspan_group *group, char **out);

/* Multiplication table of End(1) computed by span pullbacks, together with
 * the check against pointwise products of marks. */
GSPAN_API gspan_status gspan_ring(const gspan_group *group, char **out);

/* outer o inner for two span documents. */
GSPAN_API gspan_status gspan_compose(const gspan_group *group, const char *outer,
                                     const char *inner, char **out);

/* Dual of a G-map document, as a Burnside element. */
GSPAN_API gspan_status gspan_dual(const gspan_group *group, const char *gmap, char **out);

/* Dual of the projection G/H_sub -> G/H_super (1-based class indices). */
GSPAN_API gspan_status gspan_transfer(const gspan_group *group, size_t sub_class,
                                      size_t super_class, char **out);

/* Ranks of Ab(G/H, B) for every subgroup class H; B defaults to the point
 * when `gset` is NULL. */
GSPAN_API gspan_status gspan_presheaf(const gspan_group *group, const char *gset, char **out);

GSPAN_API gspan_verify_options gspan_verify_defaults(void);

/* Runs one suite. `out_text` (optional) receives the human report, `out_json`
 * (optional) the structured one. Returns GSPAN_VERIFY_FAILED when any
 * identity fails. */
GSPAN_API gspan_status gspan_verify(const gspan_group *group, const char *suite,
                                    const gspan_verify_options *options, char **out_text,
                                    char **out_json);

/* Numeric unit-diagram and homotopy checks for one pair of G-set documents. */
GSPAN_API gspan_status gspan_atiyah_sample(const gspan_group *group, const char *gset_a,
                                           const char *gset_b,
                                           const gspan_verify_options *options,
                                           char **out_text, char **out_json);

#ifdef __cplusplus
}
#endif

#endif /* GSPAN_GSPAN_H */
