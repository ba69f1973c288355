#include "boxedeps/report.hpp"

#include <json.hpp>

namespace boxedeps::report {
namespace {

using nlohmann::ordered_json;
using texfix::render_scaled;
using texfix::ScaledDim;

std::string pt(ScaledDim d) { return render_scaled(d) + "pt"; }

ordered_json dim_json(ScaledDim d) {
  return ordered_json{{"sp", d.sp}, {"pt", render_scaled(d)}};
}

std::string bbox_tokens(const dsc::BBoxProbe& p) {
  return p.llx + " " + p.lly + " " + p.urx + " " + p.ury;
}

void line(std::string& out, std::string_view key, std::string_view value) {
  out.append(key).append(": ").append(value).push_back('\n');
}

}  // namespace

std::string sp_and_pt(ScaledDim d) {
  return std::to_string(d.sp) + "sp (" + pt(d) + ")";
}

std::string format_text(const FigureReport& r) {
  std::string out;
  line(out, "file", r.file_spec);
  line(out, "status", dsc::to_string(r.probe.status));
  line(out, "bbox", bbox_tokens(r.probe));
  if (!r.probe.raw_line.empty()) line(out, "bbox line", r.probe.raw_line);
  line(out, "natural", pt(r.natural.width) + " x " + pt(r.natural.height));
  if (r.kind == FigureReport::Kind::bbox || !r.placement) {
    line(out, "natural width", sp_and_pt(r.natural.width));
    line(out, "natural height", sp_and_pt(r.natural.height));
    return out;
  }
  const layout::Placement& p = *r.placement;
  line(out, "scale", p.fig_scale_real);
  line(out, "align", directive::to_string(r.alignment));
  line(out, "width", sp_and_pt(p.box_width));
  line(out, "height", sp_and_pt(p.height_above_baseline));
  line(out, "depth", sp_and_pt(p.depth_below_baseline));
  line(out, "ink anchor", sp_and_pt(p.ink_anchor_x) + " " + sp_and_pt(p.ink_anchor_y));
  line(out, "frames", p.show_frames ? "shown (" + pt(p.rule_thickness) + " rules)"
                                    : std::string("hidden"));
  line(out, "driver", std::string(drivers::to_string(r.driver)) +
                          (r.ps_origin ? " (ps origin)" : ""));
  for (const std::string& s : r.emission.setup_lines) line(out, "setup special", s);
  for (const std::string& s : r.emission.figure_lines) line(out, "special", s);
  return out;
}

std::string format_json(const FigureReport& r) {
  ordered_json j;
  j["kind"] = r.kind == FigureReport::Kind::bbox ? "bbox" : "figure";
  j["name"] = r.name;
  j["file_spec"] = r.file_spec;
  j["status"] = dsc::to_string(r.probe.status);
  j["bbox"] = {r.probe.llx, r.probe.lly, r.probe.urx, r.probe.ury};
  j["bbox_line"] = r.probe.raw_line;
  j["natural"] = {{"width", dim_json(r.natural.width)},
                  {"height", dim_json(r.natural.height)}};
  if (r.kind == FigureReport::Kind::figure && r.placement) {
    const layout::Placement& p = *r.placement;
    j["fig_scale"] = dim_json(p.fig_scale);
    j["fig_scale_real"] = p.fig_scale_real;
    j["align"] = directive::to_string(r.alignment);
    j["box"] = {{"width", dim_json(p.box_width)},
                {"height", dim_json(p.height_above_baseline)},
                {"depth", dim_json(p.depth_below_baseline)}};
    j["ink_anchor"] = {{"x", dim_json(p.ink_anchor_x)}, {"y", dim_json(p.ink_anchor_y)}};
    j["frames"] = p.show_frames;
    j["rule_thickness"] = dim_json(p.rule_thickness);
    j["driver"] = drivers::to_string(r.driver);
    j["ps_origin"] = r.ps_origin;
    j["setup"] = r.emission.setup_lines;
    j["specials"] = r.emission.figure_lines;
  }
  j["warnings"] = r.warnings;
  // Latin-1 bytes from EPS files are not valid UTF-8; replace rather than throw.
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

std::string format(const FigureReport& r, Format fmt) {
  return fmt == Format::json ? format_json(r) : format_text(r);
}

}  // namespace boxedeps::report
