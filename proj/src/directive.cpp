#include "boxedeps/directive.hpp"

#include "boxedeps/error.hpp"

namespace boxedeps::directive {
namespace {

constexpr std::string_view kSentinel = "FigNameWithSpace";

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view strip(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

std::string checked_trim(std::string_view raw, const char* what) {
  const std::string_view body = strip(raw);
  for (char c : body) {
    if (is_blank(c)) {
      throw Error(ErrorCode::name_with_space,
                  std::string(what) + " '" + std::string(body) +
                      "' contains a space (" + std::string(kSentinel) + ")");
    }
  }
  return std::string(body);
}

}  // namespace

std::string_view to_string(Alignment a) {
  switch (a) {
    case Alignment::center: return "center";
    case Alignment::top: return "top";
    case Alignment::bottom: return "bottom";
  }
  return "center";
}

std::optional<Alignment> alignment_from_name(std::string_view name) {
  if (name == "c" || name == "center") return Alignment::center;
  if (name == "t" || name == "top") return Alignment::top;
  if (name == "b" || name == "bottom") return Alignment::bottom;
  return std::nullopt;
}

std::string trim_name(std::string_view raw) {
  std::string name = checked_trim(raw, "file name");
  if (name.empty()) throw Error(ErrorCode::empty_name, "empty file name");
  return name;
}

std::pair<std::string, ScaledDim> parse_name_and_scale(std::string_view arg,
                                                       ScaledDim default_scale) {
  // The containment test looks for " scaled"; the split itself happens at
  // the first "scaled", wherever it is.
  if (arg.find(" scaled") == std::string_view::npos) {
    return {trim_name(arg), default_scale};
  }
  const std::size_t at = arg.find("scaled");
  std::string name = trim_name(arg.substr(0, at));
  const std::string_view tail = strip(arg.substr(at + 6));
  ScaledDim scale;
  try {
    scale = texfix::dim_from_unit(texfix::parse_decimal(tail), texfix::Unit::pt);
  } catch (const Error& e) {
    throw Error(e.code(), "bad scale '" + std::string(tail) + "' for " + name +
                              ": " + e.what());
  }
  return {std::move(name), scale};
}

std::string resolve_spec(std::string_view name, const SessionConfig& cfg) {
  return cfg.directory_prefix + std::string(name);
}

void set_directory(SessionConfig& cfg, std::string_view raw) {
  cfg.directory_prefix = checked_trim(raw, "directory");
}

void set_default_scale(SessionConfig& cfg, std::string_view decimal) {
  cfg.default_scale =
      texfix::dim_from_unit(texfix::parse_decimal(decimal), texfix::Unit::pt);
}

FigureDirective accumulate_trims(FigureDirective d, Edge edge, ScaledDim amount) {
  if (edge == Edge::top || edge == Edge::all) d.trims.top += amount;
  if (edge == Edge::left || edge == Edge::all) d.trims.left += amount;
  if (edge == Edge::bottom || edge == Edge::all) d.trims.bottom += amount;
  if (edge == Edge::right || edge == Edge::all) d.trims.right += amount;
  return d;
}

FigureDirective accumulate_slides(FigureDirective d, SlideAxis axis, ScaledDim amount) {
  if (axis == SlideAxis::h) {
    d.slides.h += amount;
  } else {
    d.slides.v += amount;
  }
  return d;
}

FigureDirective make_directive(std::string_view arg, const SessionConfig& cfg) {
  auto [name, scale] = parse_name_and_scale(arg, cfg.default_scale);
  FigureDirective d;
  d.file_spec = resolve_spec(name, cfg);
  d.file_name = std::move(name);
  d.scale = scale;
  d.show_frames = cfg.show_frames;
  return d;
}

}  // namespace boxedeps::directive
