#ifndef BOXEDEPS_BOXEDEPS_H
#define BOXEDEPS_BOXEDEPS_H

/*
 * C interface to the boxedeps library: EPS bounding-box probing, TeX
 * scaled-point arithmetic, figure placement and DVI driver specials.
 *
 * Handles are opaque and owned by the caller; every *_create has a matching
 * *_destroy. Functions return a bxe_status; on failure a description is
 * available from bxe_last_error() on the calling thread. Strings returned by
 * accessors stay valid until the owning handle is destroyed; strings returned
 * through `char **` are owned by the caller and released with bxe_free().
 *
 * Dimensions are int32_t scaled points (65536 sp = 1pt).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BXE_BUILDING_LIBRARY)
#    define BXE_API __declspec(dllexport)
#  else
#    define BXE_API __declspec(dllimport)
#  endif
#else
#  define BXE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bxe_status {
  BXE_OK = 0,
  BXE_E_PARSE = 1,
  BXE_E_OVERFLOW = 2,
  BXE_E_DIVISION_BY_ZERO = 3,
  BXE_E_DEGENERATE = 4,
  BXE_E_NAME_WITH_SPACE = 5,
  BXE_E_EMPTY_NAME = 6,
  BXE_E_UNKNOWN_DRIVER = 7,
  BXE_E_MANIFEST = 8,
  BXE_E_INVALID_ARGUMENT = 9,
  BXE_E_OUT_OF_RANGE = 10,
  BXE_E_INTERNAL = 99
} bxe_status;

typedef enum bxe_format { BXE_FORMAT_TEXT = 0, BXE_FORMAT_JSON = 1 } bxe_format;

typedef enum bxe_probe_status {
  BXE_PROBE_FOUND = 0,
  BXE_PROBE_MISSING_FILE = 1,
  BXE_PROBE_NOT_POSTSCRIPT = 2,
  BXE_PROBE_NO_BBOX_LINE = 3,
  BXE_PROBE_ATEND = 4
} bxe_probe_status;

typedef enum bxe_edge {
  BXE_EDGE_TOP = 0,
  BXE_EDGE_LEFT = 1,
  BXE_EDGE_BOTTOM = 2,
  BXE_EDGE_RIGHT = 3,
  BXE_EDGE_ALL = 4
} bxe_edge;

typedef enum bxe_axis { BXE_AXIS_WIDTH = 0, BXE_AXIS_HEIGHT = 1 } bxe_axis;
typedef enum bxe_slide { BXE_SLIDE_H = 0, BXE_SLIDE_V = 1 } bxe_slide;

typedef enum bxe_alignment {
  BXE_ALIGN_CENTER = 0,
  BXE_ALIGN_TOP = 1,
  BXE_ALIGN_BOTTOM = 2
} bxe_alignment;

typedef enum bxe_metric {
  BXE_METRIC_BOX_WIDTH = 0,
  BXE_METRIC_HEIGHT = 1,
  BXE_METRIC_DEPTH = 2,
  BXE_METRIC_INK_X = 3,
  BXE_METRIC_INK_Y = 4,
  BXE_METRIC_FIG_SCALE = 5,
  BXE_METRIC_NATURAL_WIDTH = 6,
  BXE_METRIC_NATURAL_HEIGHT = 7,
  BXE_METRIC_RULE_THICKNESS = 8
} bxe_metric;

typedef struct bxe_session bxe_session;
typedef struct bxe_figure bxe_figure;
typedef struct bxe_report bxe_report;

BXE_API const char *bxe_version(void);
BXE_API const char *bxe_status_name(bxe_status status);
BXE_API const char *bxe_last_error(void);
BXE_API void bxe_free(char *p);

/* ---- scaled-point arithmetic ---------------------------------------- */

/* "<decimal>pt" or "<decimal>bp". */
BXE_API bxe_status bxe_parse_dimension(const char *text, int32_t *out_sp);
/* A figure scale: bare decimals are read as pt ("500" -> 500pt). */
BXE_API bxe_status bxe_parse_scale(const char *text, int32_t *out_sp);
/* Writes TeX's rendering of `sp` (no unit) into buf, NUL terminated.
 * `needed` (optional) receives the length excluding the NUL. Returns
 * BXE_E_OUT_OF_RANGE when cap is too small. */
BXE_API bxe_status bxe_render_scaled(int32_t sp, char *buf, size_t cap, size_t *needed);

/* ---- drivers -------------------------------------------------------- */

BXE_API size_t bxe_driver_count(void);
/* NULL when index is out of range. */
BXE_API const char *bxe_driver_name(size_t index);
BXE_API const char *bxe_driver_aliases(size_t index);
BXE_API const char *bxe_driver_summary(size_t index);
/* 1/0, or -1 when index is out of range. */
BXE_API int bxe_driver_ps_origin(size_t index);

/* ---- session -------------------------------------------------------- */

BXE_API bxe_status bxe_session_create(bxe_session **out);
BXE_API void bxe_session_destroy(bxe_session *s);
BXE_API bxe_status bxe_session_set_driver(bxe_session *s, const char *name);
BXE_API bxe_status bxe_session_set_mag(bxe_session *s, int32_t mag);
BXE_API bxe_status bxe_session_set_default_scale(bxe_session *s, const char *decimal);
BXE_API bxe_status bxe_session_set_directory(bxe_session *s, const char *prefix);
BXE_API bxe_status bxe_session_set_axis_height(bxe_session *s, int32_t sp);
BXE_API bxe_status bxe_session_set_frames(bxe_session *s, int show);
/* -1: driver default, 0: off, 1: on */
BXE_API bxe_status bxe_session_set_ps_origin(bxe_session *s, int mode);

/* ---- figure directives ---------------------------------------------- */

/* `arg` is "name" or "name scaled N"; the session supplies default scale,
 * directory prefix and frame setting. */
BXE_API bxe_status bxe_figure_create(const bxe_session *s, const char *arg,
                                     bxe_figure **out);
BXE_API void bxe_figure_destroy(bxe_figure *f);
BXE_API bxe_status bxe_figure_set_scale(bxe_figure *f, int32_t scale_sp);
BXE_API bxe_status bxe_figure_trim(bxe_figure *f, bxe_edge edge, int32_t sp);
BXE_API bxe_status bxe_figure_slide(bxe_figure *f, bxe_slide axis, int32_t sp);
BXE_API bxe_status bxe_figure_force(bxe_figure *f, bxe_axis axis, int32_t sp,
                                    int persistent);
BXE_API bxe_status bxe_figure_release_force(bxe_figure *f);
BXE_API bxe_status bxe_figure_align(bxe_figure *f, bxe_alignment a);
BXE_API bxe_status bxe_figure_frames(bxe_figure *f, int show);
BXE_API const char *bxe_figure_spec(const bxe_figure *f);

/* ---- placement and reports ------------------------------------------ */

/* Probes the figure's file on disk and places it. */
BXE_API bxe_status bxe_place(bxe_session *s, const bxe_figure *f, bxe_report **out);
/* Same, reading the EPS text from memory instead of the file. */
BXE_API bxe_status bxe_place_buffer(bxe_session *s, const bxe_figure *f,
                                    const char *data, size_t len, bxe_report **out);
/* Bounding-box only report for a file. */
BXE_API bxe_status bxe_probe(const char *path, bxe_report **out);
BXE_API void bxe_report_destroy(bxe_report *r);

BXE_API bxe_probe_status bxe_report_probe_status(const bxe_report *r);
/* index 0..3: llx lly urx ury */
BXE_API const char *bxe_report_bbox_token(const bxe_report *r, size_t index);
BXE_API bxe_status bxe_report_metric(const bxe_report *r, bxe_metric m, int32_t *out_sp);
BXE_API const char *bxe_report_fig_scale_real(const bxe_report *r);
BXE_API size_t bxe_report_special_count(const bxe_report *r);
BXE_API const char *bxe_report_special(const bxe_report *r, size_t index);
BXE_API size_t bxe_report_setup_count(const bxe_report *r);
BXE_API const char *bxe_report_setup(const bxe_report *r, size_t index);
BXE_API size_t bxe_report_warning_count(const bxe_report *r);
BXE_API const char *bxe_report_warning(const bxe_report *r, size_t index);
BXE_API size_t bxe_report_message_count(const bxe_report *r);
BXE_API const char *bxe_report_message(const bxe_report *r, size_t index);
BXE_API bxe_status bxe_report_format(const bxe_report *r, bxe_format fmt, char **out);

/* ---- batch ---------------------------------------------------------- */

typedef struct bxe_batch bxe_batch;

/* Parses and runs a whole manifest. A syntax error fails before any figure
 * is placed. */
BXE_API bxe_status bxe_batch_run(const char *manifest_path, bxe_batch **out);
BXE_API void bxe_batch_destroy(bxe_batch *b);
BXE_API size_t bxe_batch_count(const bxe_batch *b);
/* Borrowed; owned by the batch. */
BXE_API const bxe_report *bxe_batch_report(const bxe_batch *b, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* BOXEDEPS_BOXEDEPS_H */
