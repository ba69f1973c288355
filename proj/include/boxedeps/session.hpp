#pragma once

// A run over one or more figures with shared configuration. Holds the only
// cross-figure state: the persistent-force flag and the once-per-session
// driver output (setup specials, the "no driver" warning).

#include <optional>
#include <string>
#include <vector>

#include "boxedeps/directive.hpp"
#include "boxedeps/drivers.hpp"
#include "boxedeps/dscparse.hpp"
#include "boxedeps/layout.hpp"

namespace boxedeps {

struct FigureReport {
  enum class Kind { figure, bbox };
  Kind kind = Kind::figure;
  std::string name;
  std::string file_spec;
  dsc::BBoxProbe probe;
  dsc::NaturalDims natural;
  std::optional<layout::Placement> placement;
  directive::Alignment alignment = directive::Alignment::center;
  drivers::DriverKind driver = drivers::DriverKind::standard_unset;
  bool ps_origin = false;
  drivers::SpecialEmission emission;
  std::vector<std::string> warnings;
  std::vector<std::string> messages;
};

class Session {
 public:
  Session() = default;
  explicit Session(directive::SessionConfig cfg) : cfg_(std::move(cfg)) {}

  const directive::SessionConfig& config() const { return cfg_; }

  void set_driver(drivers::DriverKind driver);
  void set_mag(int mag);
  void set_axis_height(texfix::ScaledDim axis);
  void set_frames(bool show);
  void set_ps_origin_override(std::optional<bool> value);
  void set_directory(std::string_view raw);
  void set_default_scale(std::string_view decimal);

  // Probes the directive's file_spec on disk.
  FigureReport place(const directive::FigureDirective& figure);
  FigureReport place(const directive::FigureDirective& figure,
                     const dsc::ProbeResult& probe);

  // The force that the next figure will use if it brings none of its own.
  std::optional<directive::Force> pending_force() const;

 private:
  directive::SessionConfig cfg_;
  std::optional<directive::Force> forced_;
  bool force_on_ = false;
  bool setup_emitted_ = false;
  bool unset_warned_ = false;
};

// Bounding-box report for a single file (no placement).
FigureReport bbox_report(const std::string& path);

}  // namespace boxedeps
