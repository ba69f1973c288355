#include "boxedeps/manifest.hpp"

#include <fstream>
#include <optional>

#include "boxedeps/error.hpp"

namespace boxedeps::manifest {
namespace {

using directive::Edge;
using directive::FigureDirective;
using directive::SlideAxis;
using texfix::ScaledDim;

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

struct Location {
  std::string_view source;
  int line;

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::manifest,
                std::string(source) + ":" + std::to_string(line) + ": " + message);
  }
};

bool parse_flag(std::string_view value, const Location& at) {
  if (value == "yes" || value == "on" || value == "true" || value == "1") return true;
  if (value == "no" || value == "off" || value == "false" || value == "0") return false;
  at.fail("expected yes/no, got '" + std::string(value) + "'");
}

ScaledDim parse_dim(std::string_view value, const Location& at) {
  try {
    return texfix::parse_dimension(value);
  } catch (const Error& e) {
    at.fail(e.what());
  }
}

// A figure section as read, before it is turned into a directive.
struct PendingFigure {
  int header_line = 0;
  std::optional<std::string> file;
  std::optional<ScaledDim> scale;
  std::vector<std::pair<Edge, ScaledDim>> trims;
  std::vector<std::pair<SlideAxis, ScaledDim>> slides;
  std::optional<directive::Force> force;
  bool persistent = false;
  bool persistent_given = false;
  bool release_force = false;
  std::optional<directive::Alignment> alignment;
  std::optional<bool> frames;
};

FigureDirective build(const PendingFigure& f, const directive::SessionConfig& cfg,
                      std::string_view source) {
  const Location at{source, f.header_line};
  if (!f.file) at.fail("figure has no 'file' key");
  if (f.persistent_given && !f.force) {
    at.fail("'persistent' needs force_width or force_height");
  }
  FigureDirective d;
  try {
    d = directive::make_directive(*f.file, cfg);
  } catch (const Error& e) {
    at.fail(e.what());
  }
  if (f.scale) d.scale = *f.scale;
  for (const auto& [edge, amount] : f.trims) d = directive::accumulate_trims(d, edge, amount);
  for (const auto& [axis, amount] : f.slides) d = directive::accumulate_slides(d, axis, amount);
  if (f.force) {
    d.force = f.force;
    d.force->persistent = f.persistent;
  }
  d.release_force = f.release_force;
  if (f.alignment) d.alignment = *f.alignment;
  if (f.frames) d.show_frames = *f.frames;
  return d;
}

void apply_config_key(directive::SessionConfig& cfg, std::string_view key,
                      std::string_view value, const Location& at) {
  try {
    if (key == "driver") {
      const auto kind = drivers::driver_from_name(value);
      if (!kind) at.fail("unknown driver '" + std::string(value) + "'");
      cfg.driver = *kind;
    } else if (key == "mag") {
      const texfix::DecimalConstant c = texfix::parse_decimal(value);
      if (c.frac != 0 || c.sign < 0 || c.int_part == 0) {
        at.fail("mag must be a positive integer");
      }
      cfg.mag = static_cast<int>(c.int_part);
    } else if (key == "default_scale") {
      directive::set_default_scale(cfg, value);
    } else if (key == "directory") {
      directive::set_directory(cfg, value);
    } else if (key == "axis_height") {
      cfg.axis_height = parse_dim(value, at);
    } else if (key == "frames") {
      cfg.show_frames = parse_flag(value, at);
    } else if (key == "ps_origin") {
      if (value == "auto") {
        cfg.ps_origin_override.reset();
      } else {
        cfg.ps_origin_override = parse_flag(value, at);
      }
    } else {
      at.fail("unknown config key '" + std::string(key) + "'");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::manifest) throw;
    at.fail(e.what());
  }
}

void apply_figure_key(PendingFigure& f, std::string_view key, std::string_view value,
                      const Location& at) {
  auto set_force = [&](directive::Axis axis) {
    if (f.force) at.fail("figure already has a forced dimension");
    f.force = directive::Force{parse_dim(value, at), axis, false};
  };

  if (key == "file") {
    if (f.file) at.fail("duplicate 'file' key");
    f.file = std::string(value);
  } else if (key == "scale") {
    try {
      f.scale = texfix::parse_dimension(value, texfix::Unit::pt);
    } catch (const Error& e) {
      at.fail(e.what());
    }
  } else if (key == "trim_top") {
    f.trims.emplace_back(Edge::top, parse_dim(value, at));
  } else if (key == "trim_left") {
    f.trims.emplace_back(Edge::left, parse_dim(value, at));
  } else if (key == "trim_bottom") {
    f.trims.emplace_back(Edge::bottom, parse_dim(value, at));
  } else if (key == "trim_right") {
    f.trims.emplace_back(Edge::right, parse_dim(value, at));
  } else if (key == "trim") {
    f.trims.emplace_back(Edge::all, parse_dim(value, at));
  } else if (key == "hslide") {
    f.slides.emplace_back(SlideAxis::h, parse_dim(value, at));
  } else if (key == "vslide") {
    f.slides.emplace_back(SlideAxis::v, parse_dim(value, at));
  } else if (key == "force_width") {
    set_force(directive::Axis::width);
  } else if (key == "force_height") {
    set_force(directive::Axis::height);
  } else if (key == "persistent") {
    f.persistent = parse_flag(value, at);
    f.persistent_given = true;
  } else if (key == "release_force") {
    f.release_force = parse_flag(value, at);
  } else if (key == "align") {
    f.alignment = directive::alignment_from_name(value);
    if (!f.alignment) at.fail("align must be c, t or b");
  } else if (key == "frames") {
    f.frames = parse_flag(value, at);
  } else {
    at.fail("unknown figure key '" + std::string(key) + "'");
  }
}

}  // namespace

Manifest parse(std::istream& in, std::string_view source_name) {
  Manifest m;
  std::vector<PendingFigure> figures;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view text = strip(raw);
    if (text.empty() || text.front() == '#') continue;
    const Location at{source_name, line_no};

    if (text.front() == '[') {
      if (text != "[figure]") at.fail("unknown section '" + std::string(text) + "'");
      figures.emplace_back().header_line = line_no;
      continue;
    }

    const std::size_t eq = text.find('=');
    if (eq == std::string_view::npos) at.fail("expected 'key = value'");
    const std::string_view key = strip(text.substr(0, eq));
    const std::string_view value = strip(text.substr(eq + 1));
    if (key.empty()) at.fail("missing key before '='");

    if (figures.empty()) {
      apply_config_key(m.config, key, value, at);
    } else {
      apply_figure_key(figures.back(), key, value, at);
    }
  }

  for (const PendingFigure& f : figures) {
    m.entries.push_back({f.header_line, build(f, m.config, source_name)});
  }
  return m;
}

Manifest load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::manifest, "cannot open manifest " + path.string());
  }
  return parse(in, path.string());
}

std::vector<FigureReport> run(const Manifest& m) {
  Session session(m.config);
  std::vector<FigureReport> reports;
  reports.reserve(m.entries.size());
  for (const Entry& e : m.entries) {
    try {
      reports.push_back(session.place(e.directive));
    } catch (const Error& err) {
      throw Error(err.code(), "figure at line " + std::to_string(e.line) + " (" +
                                  e.directive.file_spec + "): " + err.what());
    }
  }
  return reports;
}

}  // namespace boxedeps::manifest
