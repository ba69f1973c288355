#pragma once

// The \cBoxedEPSF placement pipeline: trim, resolve the scale, scale the
// registers, anchor the ink and compose the box around the baseline.

#include <optional>
#include <string>
#include <vector>

#include "boxedeps/directive.hpp"
#include "boxedeps/dscparse.hpp"
#include "boxedeps/texfix.hpp"

namespace boxedeps::layout {

using directive::Alignment;
using directive::Axis;
using texfix::ScaledDim;

// Frame rules are 0.4pt and overlap the box edges.
inline constexpr ScaledDim kRuleThickness{26214};

struct TrimmedDims {
  ScaledDim width;
  ScaledDim height;
  ScaledDim left;    // survives trimming, feeds the ink shift
  ScaledDim bottom;  // likewise
  std::vector<std::string> warnings;
};

TrimmedDims apply_trims(const dsc::NaturalDims& natural, const directive::Trims& trims,
                        const std::string& display_name = {});

struct ScaleResolution {
  ScaledDim fig_scale;
  std::optional<Axis> forced_axis;
  std::optional<ScaledDim> forced_amount;
  std::string fig_scale_real;
};

ScaleResolution resolve_scale(ScaledDim scale, const std::optional<directive::Force>& force,
                              ScaledDim trimmed_width, ScaledDim trimmed_height);

struct ScaledFigure {
  ScaledDim width;
  ScaledDim height;
  ScaledDim left;
  ScaledDim bottom;
  ScaledDim shift_x;
  ScaledDim shift_y;
};

ScaledFigure scale_dims(const ScaleResolution& res, const TrimmedDims& trimmed,
                        ScaledDim origin_shift_x, ScaledDim origin_shift_y);

struct InkAnchor {
  ScaledDim x;
  ScaledDim y;
  friend bool operator==(const InkAnchor&, const InkAnchor&) = default;
};

// Slides are applied after scaling and are never scaled themselves.
InkAnchor ink_anchor(const ScaledFigure& scaled, const directive::Slides& slides);

struct BoxMetrics {
  ScaledDim width;
  ScaledDim height;
  ScaledDim depth;
  friend bool operator==(const BoxMetrics&, const BoxMetrics&) = default;
};

BoxMetrics compose_box(ScaledDim width, ScaledDim height, Alignment alignment,
                       ScaledDim axis_height);

struct Placement {
  ScaledDim box_width;
  ScaledDim height_above_baseline;
  ScaledDim depth_below_baseline;
  ScaledDim ink_anchor_x;  // PostScript origin relative to the box's lower-left
  ScaledDim ink_anchor_y;
  ScaledDim fig_scale;
  std::string fig_scale_real;
  bool show_frames = true;
  ScaledDim rule_thickness = kRuleThickness;
  dsc::NaturalDims natural;
  std::vector<std::string> warnings;

  friend bool operator==(const Placement&, const Placement&) = default;
};

// The full pipeline for one figure. Probe warnings are carried into the
// placement. The directive's force is used as given; carrying a persistent
// force between figures is the caller's (Session's) job.
Placement place(const directive::FigureDirective& figure,
                const directive::SessionConfig& cfg, const dsc::ProbeResult& probe);

}  // namespace boxedeps::layout
