#pragma once

// Figure inclusion requests: "name scaled N" parsing, directory prefixing,
// trims, slides and forced dimensions.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "boxedeps/drivers.hpp"
#include "boxedeps/texfix.hpp"

namespace boxedeps::directive {

using texfix::ScaledDim;

enum class Edge { top, left, bottom, right, all };
enum class Axis { width, height };
enum class SlideAxis { h, v };
enum class Alignment { center, top, bottom };

std::string_view to_string(Alignment a);
std::optional<Alignment> alignment_from_name(std::string_view name);

struct Trims {
  ScaledDim top, left, bottom, right;
  friend bool operator==(const Trims&, const Trims&) = default;
};

struct Slides {
  ScaledDim h, v;
  friend bool operator==(const Slides&, const Slides&) = default;
};

struct Force {
  ScaledDim amount;
  Axis axis = Axis::width;
  bool persistent = false;
  friend bool operator==(const Force&, const Force&) = default;
};

inline constexpr ScaledDim kDefaultScale{1000 * texfix::kUnity};
inline constexpr ScaledDim kDefaultAxisHeight{163840};  // 2.5pt

struct SessionConfig {
  ScaledDim default_scale = kDefaultScale;
  std::string directory_prefix;
  drivers::DriverKind driver = drivers::DriverKind::standard_unset;
  int mag = 1000;
  ScaledDim axis_height = kDefaultAxisHeight;
  std::optional<bool> ps_origin_override;
  bool show_frames = true;

  bool ps_origin() const {
    return ps_origin_override.value_or(drivers::default_ps_origin(driver));
  }
};

struct FigureDirective {
  std::string file_name;
  std::string file_spec;
  ScaledDim scale = kDefaultScale;
  Trims trims;
  std::optional<Force> force;
  // Drops a persistent force carried over from earlier figures before this
  // directive's own force (if any) is applied.
  bool release_force = false;
  Slides slides;
  Alignment alignment = Alignment::center;
  bool show_frames = true;

  friend bool operator==(const FigureDirective&, const FigureDirective&) = default;
};

// Strips surrounding blanks; an interior blank is an error labelled with
// the macros' sentinel name "FigNameWithSpace".
std::string trim_name(std::string_view raw);

std::pair<std::string, ScaledDim> parse_name_and_scale(std::string_view arg,
                                                       ScaledDim default_scale);

std::string resolve_spec(std::string_view name, const SessionConfig& cfg);

// \SetEPSFDirectory: the prefix is trimmed like a file name.
void set_directory(SessionConfig& cfg, std::string_view raw);

// \SetDefaultEPSFScale: a decimal read as pt.
void set_default_scale(SessionConfig& cfg, std::string_view decimal);

FigureDirective accumulate_trims(FigureDirective d, Edge edge, ScaledDim amount);
FigureDirective accumulate_slides(FigureDirective d, SlideAxis axis, ScaledDim amount);

// Builds a directive from a "name [scaled N]" argument using the session's
// default scale, directory and frame setting.
FigureDirective make_directive(std::string_view arg, const SessionConfig& cfg);

}  // namespace boxedeps::directive
