#include "boxedeps/boxedeps.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "boxedeps/error.hpp"
#include "boxedeps/manifest.hpp"
#include "boxedeps/report.hpp"
#include "boxedeps/session.hpp"

struct bxe_session {
  boxedeps::Session session;
};

struct bxe_figure {
  boxedeps::directive::FigureDirective directive;
};

struct bxe_report {
  boxedeps::FigureReport report;
};

struct bxe_batch {
  std::vector<bxe_report> reports;
};

namespace {

using boxedeps::Error;
using boxedeps::ErrorCode;

thread_local std::string g_last_error;

bxe_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return BXE_E_PARSE;
    case ErrorCode::overflow: return BXE_E_OVERFLOW;
    case ErrorCode::division_by_zero: return BXE_E_DIVISION_BY_ZERO;
    case ErrorCode::degenerate_divisor: return BXE_E_DEGENERATE;
    case ErrorCode::name_with_space: return BXE_E_NAME_WITH_SPACE;
    case ErrorCode::empty_name: return BXE_E_EMPTY_NAME;
    case ErrorCode::unknown_driver: return BXE_E_UNKNOWN_DRIVER;
    case ErrorCode::manifest: return BXE_E_MANIFEST;
    case ErrorCode::invalid_argument: return BXE_E_INVALID_ARGUMENT;
  }
  return BXE_E_INTERNAL;
}

bxe_status fail(bxe_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
bxe_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return BXE_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BXE_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BXE_E_INTERNAL, e.what());
  } catch (...) {
    return fail(BXE_E_INTERNAL, "unknown error");
  }
}

#define BXE_REQUIRE(cond)                                                  \
  do {                                                                     \
    if (!(cond)) return fail(BXE_E_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

const char* item(const std::vector<std::string>& v, std::size_t i) {
  return i < v.size() ? v[i].c_str() : nullptr;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

const boxedeps::drivers::DriverInfo* driver_at(std::size_t index) {
  const auto all = boxedeps::drivers::all_drivers();
  return index < all.size() ? &all[index] : nullptr;
}

// String views in the driver table point at literals, so c_str-style access
// is safe through data().
const char* view_cstr(std::string_view v) { return v.data(); }

}  // namespace

extern "C" {

const char* bxe_version(void) { return "1.0.0"; }

const char* bxe_status_name(bxe_status status) {
  switch (status) {
    case BXE_OK: return "ok";
    case BXE_E_PARSE: return "parse error";
    case BXE_E_OVERFLOW: return "overflow";
    case BXE_E_DIVISION_BY_ZERO: return "division by zero";
    case BXE_E_DEGENERATE: return "degenerate divisor";
    case BXE_E_NAME_WITH_SPACE: return "file name with space";
    case BXE_E_EMPTY_NAME: return "empty file name";
    case BXE_E_UNKNOWN_DRIVER: return "unknown driver";
    case BXE_E_MANIFEST: return "manifest error";
    case BXE_E_INVALID_ARGUMENT: return "invalid argument";
    case BXE_E_OUT_OF_RANGE: return "out of range";
    case BXE_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bxe_last_error(void) { return g_last_error.c_str(); }

void bxe_free(char* p) { std::free(p); }

bxe_status bxe_parse_dimension(const char* text, int32_t* out_sp) {
  BXE_REQUIRE(text != nullptr && out_sp != nullptr);
  return guarded([&] { *out_sp = boxedeps::texfix::parse_dimension(text).sp; });
}

bxe_status bxe_parse_scale(const char* text, int32_t* out_sp) {
  BXE_REQUIRE(text != nullptr && out_sp != nullptr);
  return guarded([&] {
    *out_sp = boxedeps::texfix::parse_dimension(text, boxedeps::texfix::Unit::pt).sp;
  });
}

bxe_status bxe_render_scaled(int32_t sp, char* buf, size_t cap, size_t* needed) {
  const std::string text = boxedeps::texfix::render_scaled(boxedeps::texfix::ScaledDim{sp});
  if (needed != nullptr) *needed = text.size();
  if (buf == nullptr || cap < text.size() + 1) {
    return fail(BXE_E_OUT_OF_RANGE, "buffer too small for rendered dimension");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return BXE_OK;
}

size_t bxe_driver_count(void) { return boxedeps::drivers::all_drivers().size(); }

const char* bxe_driver_name(size_t index) {
  const auto* d = driver_at(index);
  return d ? view_cstr(d->name) : nullptr;
}

const char* bxe_driver_aliases(size_t index) {
  const auto* d = driver_at(index);
  return d ? view_cstr(d->aliases) : nullptr;
}

const char* bxe_driver_summary(size_t index) {
  const auto* d = driver_at(index);
  return d ? view_cstr(d->summary) : nullptr;
}

int bxe_driver_ps_origin(size_t index) {
  const auto* d = driver_at(index);
  return d ? (d->ps_origin ? 1 : 0) : -1;
}

bxe_status bxe_session_create(bxe_session** out) {
  BXE_REQUIRE(out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new bxe_session{}; });
}

void bxe_session_destroy(bxe_session* s) { delete s; }

bxe_status bxe_session_set_driver(bxe_session* s, const char* name) {
  BXE_REQUIRE(s != nullptr && name != nullptr);
  const auto kind = boxedeps::drivers::driver_from_name(name);
  if (!kind) return fail(BXE_E_UNKNOWN_DRIVER, std::string("unknown driver '") + name + "'");
  return guarded([&] { s->session.set_driver(*kind); });
}

bxe_status bxe_session_set_mag(bxe_session* s, int32_t mag) {
  BXE_REQUIRE(s != nullptr);
  return guarded([&] { s->session.set_mag(mag); });
}

bxe_status bxe_session_set_default_scale(bxe_session* s, const char* decimal) {
  BXE_REQUIRE(s != nullptr && decimal != nullptr);
  return guarded([&] { s->session.set_default_scale(decimal); });
}

bxe_status bxe_session_set_directory(bxe_session* s, const char* prefix) {
  BXE_REQUIRE(s != nullptr && prefix != nullptr);
  return guarded([&] { s->session.set_directory(prefix); });
}

bxe_status bxe_session_set_axis_height(bxe_session* s, int32_t sp) {
  BXE_REQUIRE(s != nullptr);
  return guarded([&] { s->session.set_axis_height(boxedeps::texfix::ScaledDim{sp}); });
}

bxe_status bxe_session_set_frames(bxe_session* s, int show) {
  BXE_REQUIRE(s != nullptr);
  return guarded([&] { s->session.set_frames(show != 0); });
}

bxe_status bxe_session_set_ps_origin(bxe_session* s, int mode) {
  BXE_REQUIRE(s != nullptr && mode >= -1 && mode <= 1);
  return guarded([&] {
    s->session.set_ps_origin_override(mode < 0 ? std::nullopt
                                               : std::optional<bool>(mode == 1));
  });
}

bxe_status bxe_figure_create(const bxe_session* s, const char* arg, bxe_figure** out) {
  BXE_REQUIRE(s != nullptr && arg != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] {
    *out = new bxe_figure{boxedeps::directive::make_directive(arg, s->session.config())};
  });
}

void bxe_figure_destroy(bxe_figure* f) { delete f; }

bxe_status bxe_figure_set_scale(bxe_figure* f, int32_t scale_sp) {
  BXE_REQUIRE(f != nullptr);
  f->directive.scale = boxedeps::texfix::ScaledDim{scale_sp};
  return BXE_OK;
}

bxe_status bxe_figure_trim(bxe_figure* f, bxe_edge edge, int32_t sp) {
  BXE_REQUIRE(f != nullptr && edge >= BXE_EDGE_TOP && edge <= BXE_EDGE_ALL);
  return guarded([&] {
    f->directive = boxedeps::directive::accumulate_trims(
        std::move(f->directive), static_cast<boxedeps::directive::Edge>(edge),
        boxedeps::texfix::ScaledDim{sp});
  });
}

bxe_status bxe_figure_slide(bxe_figure* f, bxe_slide axis, int32_t sp) {
  BXE_REQUIRE(f != nullptr && (axis == BXE_SLIDE_H || axis == BXE_SLIDE_V));
  return guarded([&] {
    f->directive = boxedeps::directive::accumulate_slides(
        std::move(f->directive),
        axis == BXE_SLIDE_H ? boxedeps::directive::SlideAxis::h
                            : boxedeps::directive::SlideAxis::v,
        boxedeps::texfix::ScaledDim{sp});
  });
}

bxe_status bxe_figure_force(bxe_figure* f, bxe_axis axis, int32_t sp, int persistent) {
  BXE_REQUIRE(f != nullptr && (axis == BXE_AXIS_WIDTH || axis == BXE_AXIS_HEIGHT));
  f->directive.force = boxedeps::directive::Force{
      boxedeps::texfix::ScaledDim{sp},
      axis == BXE_AXIS_WIDTH ? boxedeps::directive::Axis::width
                             : boxedeps::directive::Axis::height,
      persistent != 0};
  return BXE_OK;
}

bxe_status bxe_figure_release_force(bxe_figure* f) {
  BXE_REQUIRE(f != nullptr);
  f->directive.release_force = true;
  return BXE_OK;
}

bxe_status bxe_figure_align(bxe_figure* f, bxe_alignment a) {
  BXE_REQUIRE(f != nullptr && a >= BXE_ALIGN_CENTER && a <= BXE_ALIGN_BOTTOM);
  f->directive.alignment = static_cast<boxedeps::directive::Alignment>(a);
  return BXE_OK;
}

bxe_status bxe_figure_frames(bxe_figure* f, int show) {
  BXE_REQUIRE(f != nullptr);
  f->directive.show_frames = show != 0;
  return BXE_OK;
}

const char* bxe_figure_spec(const bxe_figure* f) {
  return f ? f->directive.file_spec.c_str() : nullptr;
}

bxe_status bxe_place(bxe_session* s, const bxe_figure* f, bxe_report** out) {
  BXE_REQUIRE(s != nullptr && f != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<bxe_report>(bxe_report{s->session.place(f->directive)});
    *out = r.release();
  });
}

bxe_status bxe_place_buffer(bxe_session* s, const bxe_figure* f, const char* data,
                            size_t len, bxe_report** out) {
  BXE_REQUIRE(s != nullptr && f != nullptr && out != nullptr);
  BXE_REQUIRE(data != nullptr || len == 0);
  *out = nullptr;
  return guarded([&] {
    const auto& d = f->directive;
    const auto probe = boxedeps::dsc::probe_buffer(std::string_view(data ? data : "", len),
                                                   {d.file_spec, d.file_name});
    auto r = std::make_unique<bxe_report>(bxe_report{s->session.place(d, probe)});
    *out = r.release();
  });
}

bxe_status bxe_probe(const char* path, bxe_report** out) {
  BXE_REQUIRE(path != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<bxe_report>(bxe_report{boxedeps::bbox_report(path)});
    *out = r.release();
  });
}

void bxe_report_destroy(bxe_report* r) { delete r; }

bxe_probe_status bxe_report_probe_status(const bxe_report* r) {
  if (r == nullptr) return BXE_PROBE_MISSING_FILE;
  return static_cast<bxe_probe_status>(r->report.probe.status);
}

const char* bxe_report_bbox_token(const bxe_report* r, size_t index) {
  if (r == nullptr) return nullptr;
  const auto& p = r->report.probe;
  switch (index) {
    case 0: return p.llx.c_str();
    case 1: return p.lly.c_str();
    case 2: return p.urx.c_str();
    case 3: return p.ury.c_str();
    default: return nullptr;
  }
}

bxe_status bxe_report_metric(const bxe_report* r, bxe_metric m, int32_t* out_sp) {
  BXE_REQUIRE(r != nullptr && out_sp != nullptr);
  const auto& rep = r->report;
  if (m == BXE_METRIC_NATURAL_WIDTH) {
    *out_sp = rep.natural.width.sp;
    return BXE_OK;
  }
  if (m == BXE_METRIC_NATURAL_HEIGHT) {
    *out_sp = rep.natural.height.sp;
    return BXE_OK;
  }
  if (!rep.placement) return fail(BXE_E_INVALID_ARGUMENT, "report has no placement");
  const auto& p = *rep.placement;
  switch (m) {
    case BXE_METRIC_BOX_WIDTH: *out_sp = p.box_width.sp; break;
    case BXE_METRIC_HEIGHT: *out_sp = p.height_above_baseline.sp; break;
    case BXE_METRIC_DEPTH: *out_sp = p.depth_below_baseline.sp; break;
    case BXE_METRIC_INK_X: *out_sp = p.ink_anchor_x.sp; break;
    case BXE_METRIC_INK_Y: *out_sp = p.ink_anchor_y.sp; break;
    case BXE_METRIC_FIG_SCALE: *out_sp = p.fig_scale.sp; break;
    case BXE_METRIC_RULE_THICKNESS: *out_sp = p.rule_thickness.sp; break;
    default: return fail(BXE_E_INVALID_ARGUMENT, "unknown metric");
  }
  return BXE_OK;
}

const char* bxe_report_fig_scale_real(const bxe_report* r) {
  if (r == nullptr || !r->report.placement) return nullptr;
  return r->report.placement->fig_scale_real.c_str();
}

size_t bxe_report_special_count(const bxe_report* r) {
  return r ? r->report.emission.figure_lines.size() : 0;
}
const char* bxe_report_special(const bxe_report* r, size_t index) {
  return r ? item(r->report.emission.figure_lines, index) : nullptr;
}
size_t bxe_report_setup_count(const bxe_report* r) {
  return r ? r->report.emission.setup_lines.size() : 0;
}
const char* bxe_report_setup(const bxe_report* r, size_t index) {
  return r ? item(r->report.emission.setup_lines, index) : nullptr;
}
size_t bxe_report_warning_count(const bxe_report* r) {
  return r ? r->report.warnings.size() : 0;
}
const char* bxe_report_warning(const bxe_report* r, size_t index) {
  return r ? item(r->report.warnings, index) : nullptr;
}
size_t bxe_report_message_count(const bxe_report* r) {
  return r ? r->report.messages.size() : 0;
}
const char* bxe_report_message(const bxe_report* r, size_t index) {
  return r ? item(r->report.messages, index) : nullptr;
}

bxe_status bxe_report_format(const bxe_report* r, bxe_format fmt, char** out) {
  BXE_REQUIRE(r != nullptr && out != nullptr);
  BXE_REQUIRE(fmt == BXE_FORMAT_TEXT || fmt == BXE_FORMAT_JSON);
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(boxedeps::report::format(
        r->report, fmt == BXE_FORMAT_JSON ? boxedeps::report::Format::json
                                          : boxedeps::report::Format::text));
  });
}

bxe_status bxe_batch_run(const char* manifest_path, bxe_batch** out) {
  BXE_REQUIRE(manifest_path != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] {
    const auto manifest = boxedeps::manifest::load(manifest_path);
    auto reports = boxedeps::manifest::run(manifest);
    auto batch = std::make_unique<bxe_batch>();
    batch->reports.reserve(reports.size());
    for (auto& rep : reports) batch->reports.push_back(bxe_report{std::move(rep)});
    *out = batch.release();
  });
}

void bxe_batch_destroy(bxe_batch* b) { delete b; }

size_t bxe_batch_count(const bxe_batch* b) { return b ? b->reports.size() : 0; }

const bxe_report* bxe_batch_report(const bxe_batch* b, size_t index) {
  if (b == nullptr || index >= b->reports.size()) return nullptr;
  return &b->reports[index];
}

}  // extern "C"
