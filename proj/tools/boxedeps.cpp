// boxedeps command-line tool. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxedeps/boxedeps.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitPlaceholder = 3;

struct Failure {
  std::string message;
};

void check(bxe_status st, const std::string& context) {
  if (st != BXE_OK) {
    throw Failure{context + ": " + bxe_status_name(st) +
                  (*bxe_last_error() ? std::string(" (") + bxe_last_error() + ")" : "")};
  }
}

struct SessionDeleter {
  void operator()(bxe_session* s) const { bxe_session_destroy(s); }
};
struct FigureDeleter {
  void operator()(bxe_figure* f) const { bxe_figure_destroy(f); }
};
struct ReportDeleter {
  void operator()(bxe_report* r) const { bxe_report_destroy(r); }
};
struct BatchDeleter {
  void operator()(bxe_batch* b) const { bxe_batch_destroy(b); }
};

int32_t dimension(const std::string& flag, const std::string& text) {
  int32_t sp = 0;
  check(bxe_parse_dimension(text.c_str(), &sp), flag + " '" + text + "'");
  return sp;
}

// Prints one report: the record on stdout, warnings and messages on stderr.
void emit(const bxe_report* r, bxe_format fmt) {
  for (size_t i = 0; i < bxe_report_warning_count(r); ++i) {
    std::cerr << bxe_report_warning(r, i) << '\n';
  }
  if (fmt == BXE_FORMAT_TEXT) {
    for (size_t i = 0; i < bxe_report_message_count(r); ++i) {
      std::cerr << bxe_report_message(r, i) << '\n';
    }
  }
  char* text = nullptr;
  check(bxe_report_format(r, fmt, &text), "formatting report");
  std::cout << text;
  bxe_free(text);
}

struct OutputOptions {
  std::string format = "text";
  bool strict = false;

  bxe_format fmt() const { return format == "json" ? BXE_FORMAT_JSON : BXE_FORMAT_TEXT; }
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--strict", out.strict,
                "Exit with status 3 when a placeholder bounding box was used");
}

struct PlaceOptions {
  std::string path;
  std::optional<std::string> scale;
  std::optional<std::string> force_width;
  std::optional<std::string> force_height;
  std::vector<std::string> trim, trim_top, trim_left, trim_bottom, trim_right;
  std::vector<std::string> hslide, vslide;
  std::string align = "c";
  std::string driver = "standard_unset";
  int32_t mag = 1000;
  std::optional<std::string> default_scale;
  std::optional<std::string> directory;
  std::optional<std::string> axis_height;
  std::string ps_origin = "auto";
  bool frames = false;
  bool no_frames = false;
};

int run_place(const PlaceOptions& o, const OutputOptions& out) {
  bxe_session* raw_session = nullptr;
  check(bxe_session_create(&raw_session), "creating session");
  std::unique_ptr<bxe_session, SessionDeleter> session(raw_session);

  check(bxe_session_set_driver(session.get(), o.driver.c_str()), "--driver");
  check(bxe_session_set_mag(session.get(), o.mag), "--mag");
  if (o.default_scale) {
    check(bxe_session_set_default_scale(session.get(), o.default_scale->c_str()),
          "--default-scale");
  }
  if (o.directory) {
    check(bxe_session_set_directory(session.get(), o.directory->c_str()), "--directory");
  }
  if (o.axis_height) {
    check(bxe_session_set_axis_height(session.get(), dimension("--axis-height", *o.axis_height)),
          "--axis-height");
  }
  const int ps_mode = o.ps_origin == "on" ? 1 : o.ps_origin == "off" ? 0 : -1;
  check(bxe_session_set_ps_origin(session.get(), ps_mode), "--ps-origin");
  if (o.no_frames) check(bxe_session_set_frames(session.get(), 0), "--no-frames");
  if (o.frames) check(bxe_session_set_frames(session.get(), 1), "--frames");

  bxe_figure* raw_figure = nullptr;
  check(bxe_figure_create(session.get(), o.path.c_str(), &raw_figure), "figure");
  std::unique_ptr<bxe_figure, FigureDeleter> figure(raw_figure);
  bxe_figure* f = figure.get();

  if (o.scale) {
    int32_t sp = 0;
    check(bxe_parse_scale(o.scale->c_str(), &sp), "--scale '" + *o.scale + "'");
    check(bxe_figure_set_scale(f, sp), "--scale");
  }
  const std::pair<const std::vector<std::string>*, bxe_edge> trims[] = {
      {&o.trim, BXE_EDGE_ALL},       {&o.trim_top, BXE_EDGE_TOP},
      {&o.trim_left, BXE_EDGE_LEFT}, {&o.trim_bottom, BXE_EDGE_BOTTOM},
      {&o.trim_right, BXE_EDGE_RIGHT}};
  for (const auto& [values, edge] : trims) {
    for (const std::string& v : *values) check(bxe_figure_trim(f, edge, dimension("trim", v)), "trim");
  }
  for (const std::string& v : o.hslide) {
    check(bxe_figure_slide(f, BXE_SLIDE_H, dimension("--hslide", v)), "--hslide");
  }
  for (const std::string& v : o.vslide) {
    check(bxe_figure_slide(f, BXE_SLIDE_V, dimension("--vslide", v)), "--vslide");
  }
  if (o.force_width && o.force_height) {
    throw Failure{"--force-width and --force-height are mutually exclusive"};
  }
  if (o.force_width) {
    check(bxe_figure_force(f, BXE_AXIS_WIDTH, dimension("--force-width", *o.force_width), 0),
          "--force-width");
  }
  if (o.force_height) {
    check(bxe_figure_force(f, BXE_AXIS_HEIGHT, dimension("--force-height", *o.force_height), 0),
          "--force-height");
  }
  const bxe_alignment a = o.align == "t" || o.align == "top"      ? BXE_ALIGN_TOP
                          : o.align == "b" || o.align == "bottom" ? BXE_ALIGN_BOTTOM
                                                                  : BXE_ALIGN_CENTER;
  check(bxe_figure_align(f, a), "--align");

  bxe_report* raw_report = nullptr;
  check(bxe_place(session.get(), f, &raw_report), "placing " + o.path);
  std::unique_ptr<bxe_report, ReportDeleter> report(raw_report);
  emit(report.get(), out.fmt());
  if (out.strict && bxe_report_probe_status(report.get()) != BXE_PROBE_FOUND) {
    return kExitPlaceholder;
  }
  return kExitOk;
}

int run_bbox(const std::vector<std::string>& paths, const OutputOptions& out) {
  bool placeholder = false;
  for (const std::string& path : paths) {
    bxe_report* raw = nullptr;
    check(bxe_probe(path.c_str(), &raw), path);
    std::unique_ptr<bxe_report, ReportDeleter> report(raw);
    emit(report.get(), out.fmt());
    if (out.fmt() == BXE_FORMAT_TEXT && paths.size() > 1) std::cout << '\n';
    placeholder |= bxe_report_probe_status(report.get()) != BXE_PROBE_FOUND;
  }
  return out.strict && placeholder ? kExitPlaceholder : kExitOk;
}

int run_batch(const std::string& manifest, const OutputOptions& out) {
  bxe_batch* raw = nullptr;
  check(bxe_batch_run(manifest.c_str(), &raw), "batch");
  std::unique_ptr<bxe_batch, BatchDeleter> batch(raw);
  bool placeholder = false;
  const size_t n = bxe_batch_count(batch.get());
  for (size_t i = 0; i < n; ++i) {
    const bxe_report* r = bxe_batch_report(batch.get(), i);
    if (i > 0 && out.fmt() == BXE_FORMAT_TEXT) std::cout << '\n';
    emit(r, out.fmt());
    placeholder |= bxe_report_probe_status(r) != BXE_PROBE_FOUND;
  }
  return out.strict && placeholder ? kExitPlaceholder : kExitOk;
}

int run_drivers(const std::string& format) {
  const size_t n = bxe_driver_count();
  for (size_t i = 0; i < n; ++i) {
    const std::string name = bxe_driver_name(i);
    const std::string aliases = bxe_driver_aliases(i);
    const bool ps = bxe_driver_ps_origin(i) == 1;
    if (format == "json") {
      std::cout << "{\"name\":\"" << name << "\",\"aliases\":\"" << aliases
                << "\",\"ps_origin\":" << (ps ? "true" : "false") << ",\"summary\":\""
                << bxe_driver_summary(i) << "\"}\n";
    } else {
      std::printf("%-20s ps_origin=%-3s %s%s\n", name.c_str(), ps ? "yes" : "no",
                  bxe_driver_summary(i),
                  aliases.empty() ? "" : (" (alias: " + aliases + ")").c_str());
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounding boxes, placement and driver specials for EPS figures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bxe_version());

  OutputOptions bbox_out, place_out, batch_out;

  std::vector<std::string> bbox_paths;
  CLI::App* bbox = app.add_subcommand("bbox", "Report the bounding box of EPS files");
  bbox->add_option("paths", bbox_paths, "EPS files")->required();
  add_output_options(bbox, bbox_out);

  PlaceOptions po;
  CLI::App* place = app.add_subcommand("place", "Place one figure and emit its specials");
  place->add_option("path", po.path, "EPS file (\"name scaled N\" is accepted)")->required();
  place->add_option("--scale", po.scale, "Figure scale, 1000 = natural size");
  place->add_option("--force-width", po.force_width, "Force the width (e.g. 2pt, 72bp)");
  place->add_option("--force-height", po.force_height, "Force the height");
  place->add_option("--trim", po.trim, "Trim all four edges");
  place->add_option("--trim-top", po.trim_top, "Trim the top edge");
  place->add_option("--trim-left", po.trim_left, "Trim the left edge");
  place->add_option("--trim-bottom", po.trim_bottom, "Trim the bottom edge");
  place->add_option("--trim-right", po.trim_right, "Trim the right edge");
  place->add_option("--hslide", po.hslide, "Slide the ink right");
  place->add_option("--vslide", po.vslide, "Slide the ink down");
  place->add_option("--align", po.align, "Alignment: c, t or b")
      ->check(CLI::IsMember({"c", "t", "b", "center", "top", "bottom"}));
  place->add_option("--driver", po.driver, "DVI driver (see `drivers`)");
  place->add_option("--mag", po.mag, "Value of \\mag")->check(CLI::PositiveNumber);
  place->add_option("--default-scale", po.default_scale, "Default figure scale");
  place->add_option("--directory", po.directory, "Directory prefix for the file name");
  place->add_option("--axis-height", po.axis_height, "Math axis height (default 2.5pt)");
  place->add_option("--ps-origin", po.ps_origin, "Override PS origin shifting")
      ->check(CLI::IsMember({"on", "off", "auto"}));
  auto* frames = place->add_flag("--frames", po.frames, "Show figure frames (default)");
  place->add_flag("--no-frames", po.no_frames, "Hide figure frames")->excludes(frames);
  add_output_options(place, place_out);

  std::string manifest;
  CLI::App* batch = app.add_subcommand("batch", "Place every figure of a manifest");
  batch->add_option("manifest", manifest, "Manifest file")->required();
  add_output_options(batch, batch_out);

  std::string drivers_format = "text";
  CLI::App* drivers = app.add_subcommand("drivers", "List supported drivers");
  drivers->add_option("--format", drivers_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*bbox) return run_bbox(bbox_paths, bbox_out);
    if (*place) return run_place(po, place_out);
    if (*batch) return run_batch(manifest, batch_out);
    if (*drivers) return run_drivers(drivers_format);
  } catch (const Failure& f) {
    std::cerr << "boxedeps: " << f.message << '\n';
    return kExitError;
  }
  return kExitError;
}
