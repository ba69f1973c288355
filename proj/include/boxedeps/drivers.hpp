#pragma once

// Escape strings (\special texts) for each supported DVI driver.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boxedeps/texfix.hpp"

namespace boxedeps::drivers {

using texfix::ScaledDim;

enum class DriverKind {
  textures,
  unix_coop,
  rokicki,
  inline_rokicki,
  oztex,
  lis,
  psprint,
  arbor,
  clark,
  beebe,
  northlake,
  bechtolsheim_dvitps,
  bechtolsheim_dvi2ps,
  standard_unset,
};

struct DriverInfo {
  DriverKind kind;
  std::string_view name;
  bool ps_origin;
  std::string_view aliases;  // comma separated, may be empty
  std::string_view summary;
};

std::span<const DriverInfo> all_drivers();
const DriverInfo& info(DriverKind kind);
std::string_view to_string(DriverKind kind);

// Accepts canonical names and aliases (e.g. "dvipsone" for unix_coop).
std::optional<DriverKind> driver_from_name(std::string_view name);

bool default_ps_origin(DriverKind kind);

struct EmitContext {
  int mag = 1000;
  std::string llx_token = "0";
  std::string lly_token = "0";
  ScaledDim untrimmed_width;
  ScaledDim untrimmed_height;
};

struct SpecialEmission {
  std::vector<std::string> setup_lines;
  std::vector<std::string> figure_lines;
  bool ps_origin = false;
  std::vector<std::string> warnings;
};

// The message printed when no driver has been selected.
std::span<const std::string_view> unset_driver_warning();

SpecialEmission emit(DriverKind driver, std::string_view file_spec,
                     std::string_view fig_scale_real, const EmitContext& ctx);

}  // namespace boxedeps::drivers
