#include <doctest.h>

#include <cstdlib>
#include <random>

#include "boxedeps/error.hpp"
#include "boxedeps/layout.hpp"
#include "oracle/texfix_oracle.hpp"

using namespace boxedeps::layout;
using boxedeps::Error;
using boxedeps::ErrorCode;
using boxedeps::directive::Edge;
using boxedeps::directive::FigureDirective;
using boxedeps::directive::Force;
using boxedeps::directive::SessionConfig;
using boxedeps::directive::Slides;
using boxedeps::directive::Trims;
using boxedeps::dsc::BBoxProbe;
using boxedeps::dsc::ProbeResult;
using boxedeps::dsc::ProbeStatus;
using boxedeps::drivers::DriverKind;
using boxedeps::texfix::ScaledDim;

namespace {

ScaledDim pt(int n) { return ScaledDim{n * 65536}; }

ProbeResult bbox(const char* llx, const char* lly, const char* urx, const char* ury) {
  ProbeResult r;
  r.probe.llx = llx;
  r.probe.lly = lly;
  r.probe.urx = urx;
  r.probe.ury = ury;
  return r;
}

FigureDirective figure(ScaledDim scale = boxedeps::directive::kDefaultScale) {
  FigureDirective d;
  d.file_name = d.file_spec = "fig.eps";
  d.scale = scale;
  return d;
}

}  // namespace

TEST_CASE("apply_trims") {
  const auto natural = boxedeps::dsc::natural_dims(bbox("0", "0", "100", "100").probe, false);
  TrimmedDims t = apply_trims(natural, Trims{});
  CHECK(t.width.sp == 6578176);
  CHECK(t.height.sp == 6578176);
  CHECK(t.left.sp == 0);
  CHECK(t.bottom.sp == 0);
  CHECK(t.warnings.empty());

  t = apply_trims(natural, Trims{pt(1), pt(1), pt(1), pt(1)});
  CHECK(t.width.sp == 6447104);
  CHECK(t.height.sp == 6447104);
  CHECK(t.left == pt(1));
  CHECK(t.bottom == pt(1));

  t = apply_trims(natural, Trims{ScaledDim{}, natural.width + pt(1), ScaledDim{}, ScaledDim{}},
                  "fig.eps");
  CHECK(t.width.sp == -65536);
  REQUIRE(t.warnings.size() == 1);
  CHECK(t.warnings[0] == "warning: trimmed width of fig.eps is not positive (-1.0pt)");
}

TEST_CASE("resolve_scale") {
  const ScaledDim w{6578176};
  ScaleResolution r = resolve_scale(pt(1000), std::nullopt, w, w);
  CHECK(r.fig_scale.sp == 65536000);
  CHECK(r.fig_scale_real == "1000.0");
  CHECK_FALSE(r.forced_axis.has_value());

  const ScaledDim amount{3289088};   // 50.1875pt
  const ScaledDim natural{6578176};  // 100.375pt
  r = resolve_scale(pt(1000), Force{amount, Axis::width, false}, natural, pt(1));
  CHECK(r.fig_scale.sp == *oracle::rescale(65536000, amount.sp, natural.sp));
  CHECK(r.fig_scale.sp == 32766415);
  CHECK(std::abs(r.fig_scale.sp - 32768000) < 65536);
  CHECK(r.fig_scale_real == "499.97581");
  CHECK(r.forced_axis == Axis::width);

  r = resolve_scale(pt(1000), Force{natural, Axis::height, false}, pt(1), natural);
  CHECK(r.fig_scale.sp == *oracle::rescale(65536000, natural.sp, natural.sp));
  CHECK(std::abs(r.fig_scale.sp - 65536000) < 65536);

  SUBCASE("a forced axis shorter than 100sp cannot be rescaled") {
    try {
      resolve_scale(pt(1000), Force{pt(2), Axis::width, false}, ScaledDim{99}, pt(1));
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::degenerate_divisor);
    }
  }
}

TEST_CASE("scale_dims") {
  TrimmedDims t{ScaledDim{6578176}, ScaledDim{6578176}, ScaledDim{}, ScaledDim{}, {}};
  ScaledFigure s = scale_dims(resolve_scale(pt(1000), std::nullopt, t.width, t.height), t,
                              ScaledDim{}, ScaledDim{});
  CHECK(s.width.sp == 6577920);
  CHECK(s.height.sp == 6577920);

  s = scale_dims(resolve_scale(pt(500), std::nullopt, t.width, t.height), t, ScaledDim{},
                 ScaledDim{});
  CHECK(s.width.sp == 3288960);
  CHECK(s.height.sp == 3288960);

  const auto res = resolve_scale(pt(1000), Force{pt(2), Axis::width, false}, t.width, t.height);
  s = scale_dims(res, t, ScaledDim{}, ScaledDim{});
  CHECK(s.width.sp == 131072);
  CHECK(s.height.sp == oracle::scale_op(t.height.sp, res.fig_scale.sp));
}

TEST_CASE("ink_anchor") {
  ScaledFigure s{};
  CHECK(ink_anchor(s, Slides{}) == InkAnchor{ScaledDim{}, ScaledDim{}});
  s.left = pt(1);
  CHECK(ink_anchor(s, Slides{}).x.sp == -65536);
  s = ScaledFigure{};
  CHECK(ink_anchor(s, Slides{ScaledDim{}, pt(1)}).y.sp == -65536);
  CHECK(ink_anchor(s, Slides{pt(2), ScaledDim{}}).x.sp == 131072);
}

TEST_CASE("compose_box") {
  const ScaledDim axis{163840};
  CHECK(compose_box(pt(3), pt(10), Alignment::center, axis) ==
        BoxMetrics{pt(3), ScaledDim{491520}, ScaledDim{163840}});
  CHECK(compose_box(pt(3), pt(10), Alignment::top, axis) ==
        BoxMetrics{pt(3), ScaledDim{0}, ScaledDim{655360}});
  CHECK(compose_box(pt(3), pt(10), Alignment::bottom, axis) ==
        BoxMetrics{pt(3), ScaledDim{655360}, ScaledDim{0}});
  // Odd heights: the half rounds up, the depth takes what is left.
  const BoxMetrics odd = compose_box(pt(1), ScaledDim{11}, Alignment::center, ScaledDim{});
  CHECK(odd.height.sp == 6);
  CHECK(odd.depth.sp == 5);
}

TEST_CASE("place end to end") {
  SessionConfig cfg;
  const ProbeResult minimal = bbox("0", "0", "100", "100");
  const Placement p = place(figure(), cfg, minimal);
  CHECK(p.box_width.sp == 6577920);
  CHECK((p.height_above_baseline + p.depth_below_baseline).sp == 6577920);
  CHECK(p.ink_anchor_x.sp == 0);
  CHECK(p.ink_anchor_y.sp == 0);
  CHECK(p.fig_scale_real == "1000.0");
  CHECK(p.rule_thickness.sp == 26214);
  CHECK(p.show_frames);
  CHECK(p.warnings.empty());

  SUBCASE("a placeholder lays out like a real 100bp box") {
    ProbeResult missing;
    missing.probe = boxedeps::dsc::placeholder(ProbeStatus::missing_file);
    missing.warnings = {"!!! EPS FILE fig.eps WAS NOT FOUND !!!", "!!! Will use placeholder !!!"};
    Placement q = place(figure(), cfg, missing);
    CHECK(q.box_width == p.box_width);
    CHECK(q.height_above_baseline == p.height_above_baseline);
    CHECK(q.depth_below_baseline == p.depth_below_baseline);
    CHECK(q.warnings == missing.warnings);
  }

  SUBCASE("origin shift passes through the scale") {
    cfg.driver = DriverKind::rokicki;
    const Placement q = place(figure(), cfg, bbox("-10", "0", "90", "100"));
    CHECK(q.ink_anchor_x.sp == oracle::scale_op(oracle::bp_integer(10), 65536000));
    CHECK(q.ink_anchor_y.sp == 0);
    const Placement half = place(figure(pt(500)), cfg, bbox("-10", "0", "90", "100"));
    CHECK(half.ink_anchor_x.sp == oracle::scale_op(oracle::bp_integer(10), 32768000));
  }

  SUBCASE("without the origin flag the shift is dropped") {
    cfg.driver = DriverKind::textures;
    CHECK(place(figure(), cfg, bbox("-10", "0", "90", "100")).ink_anchor_x.sp == 0);
    cfg.ps_origin_override = true;
    CHECK(place(figure(), cfg, bbox("-10", "0", "90", "100")).ink_anchor_x.sp > 0);
  }

  SUBCASE("over-trimming is preserved and warned") {
    FigureDirective d = figure();
    d.trims.top = pt(200);
    const Placement q = place(d, cfg, minimal);
    CHECK((q.height_above_baseline + q.depth_below_baseline).sp < 0);
    CHECK(q.warnings.size() == 1);
  }
}

TEST_CASE("placement properties over random directives") {
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> coord(-500, 1500);
  std::uniform_int_distribution<int> scale_pt(50, 2000);
  std::uniform_int_distribution<int> small(-300000, 300000);
  std::uniform_int_distribution<int> coin(0, 3);

  for (int i = 0; i < 1000; ++i) {
    int llx = coord(rng), lly = coord(rng);
    int urx = llx + 1 + std::abs(coord(rng)), ury = lly + 1 + std::abs(coord(rng));
    ProbeResult probe;
    probe.probe.llx = std::to_string(llx);
    probe.probe.lly = std::to_string(lly);
    probe.probe.urx = std::to_string(urx);
    probe.probe.ury = std::to_string(ury);

    FigureDirective d = figure(pt(scale_pt(rng)));
    d.trims = Trims{ScaledDim{small(rng)}, ScaledDim{small(rng)}, ScaledDim{small(rng)},
                    ScaledDim{small(rng)}};
    d.slides = Slides{ScaledDim{small(rng)}, ScaledDim{small(rng)}};
    const int force_kind = coin(rng);
    if (force_kind == 1) d.force = Force{pt(1 + std::abs(small(rng)) % 400), Axis::width, false};
    if (force_kind == 2) d.force = Force{pt(1 + std::abs(small(rng)) % 400), Axis::height, false};

    SessionConfig cfg;
    cfg.driver = static_cast<DriverKind>(i % 14);

    Placement first;
    try {
      first = place(d, cfg, probe);
    } catch (const Error& e) {
      // Degenerate forced axes and overflow are legitimate outcomes.
      CHECK((e.code() == ErrorCode::overflow || e.code() == ErrorCode::degenerate_divisor));
      continue;
    }
    CHECK(place(d, cfg, probe) == first);

    const auto total = first.height_above_baseline + first.depth_below_baseline;
    for (auto a : {Alignment::center, Alignment::top, Alignment::bottom}) {
      d.alignment = a;
      const Placement other = place(d, cfg, probe);
      CHECK(other.height_above_baseline + other.depth_below_baseline == total);
      CHECK(other.box_width == first.box_width);
    }

    if (d.force && d.force->axis == Axis::width) CHECK(first.box_width == d.force->amount);
    if (d.force && d.force->axis == Axis::height) CHECK(total == d.force->amount);
  }
}

TEST_CASE("scale 1000 stays within 1280sp of natural") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coord(-1000, 1600);
  SessionConfig cfg;
  for (int i = 0; i < 2000; ++i) {
    const int llx = coord(rng), lly = coord(rng);
    const int urx = llx + std::abs(coord(rng)), ury = lly + std::abs(coord(rng));
    const auto probe = bbox(std::to_string(llx).c_str(), std::to_string(lly).c_str(),
                            std::to_string(urx).c_str(), std::to_string(ury).c_str());
    const Placement p = place(figure(), cfg, probe);
    CHECK(std::abs(p.box_width.sp - p.natural.width.sp) < 1280);
    const auto total = p.height_above_baseline + p.depth_below_baseline;
    CHECK(std::abs(total.sp - p.natural.height.sp) < 1280);
    CHECK(p.ink_anchor_x.sp == 0);
    CHECK(p.ink_anchor_y.sp == 0);
  }
}
