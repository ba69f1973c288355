#include "boxedeps/layout.hpp"

#include "boxedeps/error.hpp"

namespace boxedeps::layout {
namespace {

using texfix::render_scaled;
using texfix::scale_op;

// TeX's half(): odd values round away from zero by one.
std::int32_t tex_half(std::int32_t x) { return (x % 2 != 0) ? (x + 1) / 2 : x / 2; }

void warn_if_not_positive(std::vector<std::string>& warnings, ScaledDim value,
                          const char* what, const std::string& name) {
  if (value.sp > 0) return;
  warnings.push_back("warning: trimmed " + std::string(what) +
                     (name.empty() ? "" : " of " + name) + " is not positive (" +
                     render_scaled(value) + "pt)");
}

}  // namespace

TrimmedDims apply_trims(const dsc::NaturalDims& natural, const directive::Trims& trims,
                        const std::string& display_name) {
  TrimmedDims out;
  out.width = natural.width - trims.left - trims.right;
  out.height = natural.height - trims.top - trims.bottom;
  out.left = trims.left;
  out.bottom = trims.bottom;
  warn_if_not_positive(out.warnings, out.width, "width", display_name);
  warn_if_not_positive(out.warnings, out.height, "height", display_name);
  return out;
}

ScaleResolution resolve_scale(ScaledDim scale, const std::optional<directive::Force>& force,
                              ScaledDim trimmed_width, ScaledDim trimmed_height) {
  ScaleResolution res;
  res.fig_scale = scale;
  if (force) {
    const ScaledDim natural = force->axis == Axis::height ? trimmed_height : trimmed_width;
    res.forced_axis = force->axis;
    res.forced_amount = force->amount;
    res.fig_scale = texfix::rescale(directive::kDefaultScale, force->amount, natural);
  }
  res.fig_scale_real = render_scaled(res.fig_scale);
  return res;
}

ScaledFigure scale_dims(const ScaleResolution& res, const TrimmedDims& trimmed,
                        ScaledDim origin_shift_x, ScaledDim origin_shift_y) {
  const ScaledDim s = res.fig_scale;
  ScaledFigure out;
  if (res.forced_axis == Axis::height) {
    out.height = *res.forced_amount;
    out.width = scale_op(trimmed.width, s);
  } else if (res.forced_axis == Axis::width) {
    out.width = *res.forced_amount;
    out.height = scale_op(trimmed.height, s);
  } else {
    out.width = scale_op(trimmed.width, s);
    out.height = scale_op(trimmed.height, s);
  }
  out.left = scale_op(trimmed.left, s);
  out.bottom = scale_op(trimmed.bottom, s);
  out.shift_x = scale_op(origin_shift_x, s);
  out.shift_y = scale_op(origin_shift_y, s);
  return out;
}

InkAnchor ink_anchor(const ScaledFigure& scaled, const directive::Slides& slides) {
  return {scaled.shift_x - scaled.left + slides.h, scaled.shift_y - scaled.bottom - slides.v};
}

BoxMetrics compose_box(ScaledDim width, ScaledDim height, Alignment alignment,
                       ScaledDim axis_height) {
  // \cBoxedEPSF centers on the math axis; \tBoxedEPSF lowers by the height,
  // \bBoxedEPSF raises by the depth.
  const ScaledDim above = ScaledDim{tex_half(height.sp)} + axis_height;
  const BoxMetrics centered{width, above, height - above};
  switch (alignment) {
    case Alignment::center: return centered;
    case Alignment::top: return {width, ScaledDim{0}, centered.height + centered.depth};
    case Alignment::bottom: return {width, centered.height + centered.depth, ScaledDim{0}};
  }
  return centered;
}

Placement place(const directive::FigureDirective& figure,
                const directive::SessionConfig& cfg, const dsc::ProbeResult& probe) {
  Placement out;
  out.warnings = probe.warnings;
  out.natural = dsc::natural_dims(probe.probe, cfg.ps_origin());

  TrimmedDims trimmed = apply_trims(out.natural, figure.trims, figure.file_spec);
  out.warnings.insert(out.warnings.end(), trimmed.warnings.begin(), trimmed.warnings.end());

  const ScaleResolution res =
      resolve_scale(figure.scale, figure.force, trimmed.width, trimmed.height);
  const ScaledFigure scaled =
      scale_dims(res, trimmed, out.natural.origin_shift_x, out.natural.origin_shift_y);
  const InkAnchor anchor = ink_anchor(scaled, figure.slides);
  const BoxMetrics box = compose_box(scaled.width, scaled.height, figure.alignment,
                                     cfg.axis_height);

  out.box_width = box.width;
  out.height_above_baseline = box.height;
  out.depth_below_baseline = box.depth;
  out.ink_anchor_x = anchor.x;
  out.ink_anchor_y = anchor.y;
  out.fig_scale = res.fig_scale;
  out.fig_scale_real = res.fig_scale_real;
  out.show_frames = figure.show_frames;
  return out;
}

}  // namespace boxedeps::layout
