#include "boxedeps/session.hpp"

#include "boxedeps/error.hpp"

namespace boxedeps {

using directive::FigureDirective;
using directive::Force;

void Session::set_driver(drivers::DriverKind driver) {
  if (driver != cfg_.driver) setup_emitted_ = false;
  cfg_.driver = driver;
}

void Session::set_mag(int mag) {
  if (mag <= 0) throw Error(ErrorCode::invalid_argument, "mag must be positive");
  cfg_.mag = mag;
}

void Session::set_axis_height(texfix::ScaledDim axis) { cfg_.axis_height = axis; }
void Session::set_frames(bool show) { cfg_.show_frames = show; }
void Session::set_ps_origin_override(std::optional<bool> value) {
  cfg_.ps_origin_override = value;
}
void Session::set_directory(std::string_view raw) { directive::set_directory(cfg_, raw); }
void Session::set_default_scale(std::string_view decimal) {
  directive::set_default_scale(cfg_, decimal);
}

std::optional<Force> Session::pending_force() const {
  if (!forced_ || !force_on_) return std::nullopt;
  return forced_;
}

FigureReport Session::place(const FigureDirective& figure) {
  const dsc::ProbeResult probe =
      dsc::probe_file(figure.file_spec, {figure.file_spec, figure.file_name});
  return place(figure, probe);
}

FigureReport Session::place(const FigureDirective& figure, const dsc::ProbeResult& probe) {
  // Work on copies so a failing placement leaves the session untouched.
  std::optional<Force> forced = forced_;
  bool force_on = force_on_;
  if (figure.release_force) {
    force_on = false;
    forced.reset();
  }
  if (figure.force) {
    forced = Force{figure.force->amount, figure.force->axis, false};
    if (figure.force->persistent) force_on = true;
  }

  FigureDirective effective = figure;
  effective.force = forced;
  if (effective.force) effective.force->persistent = force_on;

  FigureReport report;
  report.kind = FigureReport::Kind::figure;
  report.name = figure.file_name;
  report.file_spec = figure.file_spec;
  report.probe = probe.probe;
  report.alignment = figure.alignment;
  report.driver = cfg_.driver;
  report.ps_origin = cfg_.ps_origin();

  layout::Placement placement = layout::place(effective, cfg_, probe);

  drivers::EmitContext ctx;
  ctx.mag = cfg_.mag;
  ctx.llx_token = placement.natural.llx_token;
  ctx.lly_token = placement.natural.lly_token;
  ctx.untrimmed_width = placement.natural.untrimmed_width;
  ctx.untrimmed_height = placement.natural.untrimmed_height;
  drivers::SpecialEmission emission =
      drivers::emit(cfg_.driver, figure.file_spec, placement.fig_scale_real, ctx);
  emission.ps_origin = report.ps_origin;

  // Commit cross-figure state only once everything has succeeded.
  if (!force_on) forced.reset();
  forced_ = forced;
  force_on_ = force_on;
  if (setup_emitted_) emission.setup_lines.clear();
  setup_emitted_ = true;
  if (cfg_.driver == drivers::DriverKind::standard_unset) {
    if (unset_warned_) emission.warnings.clear();
    unset_warned_ = true;
  }

  report.natural = placement.natural;
  report.warnings = placement.warnings;
  report.warnings.insert(report.warnings.end(), emission.warnings.begin(),
                         emission.warnings.end());
  report.messages.push_back("*** Box composed for the EPSF file " + figure.file_name);
  report.placement = std::move(placement);
  report.emission = std::move(emission);
  return report;
}

FigureReport bbox_report(const std::string& path) {
  FigureReport report;
  report.kind = FigureReport::Kind::bbox;
  report.name = path;
  report.file_spec = path;
  const dsc::ProbeResult probe = dsc::probe_file(path, {path, path});
  report.probe = probe.probe;
  report.warnings = probe.warnings;
  report.natural = dsc::natural_dims(probe.probe, false);
  return report;
}

}  // namespace boxedeps
