#include "boxedeps/drivers.hpp"

#include <array>

#include "boxedeps/error.hpp"

namespace boxedeps::drivers {
namespace {

using texfix::DecimalConstant;
using texfix::Unit;

constexpr std::array<DriverInfo, 14> kDrivers{{
    {DriverKind::textures, "textures", false, "", "Textures (Blue Sky Research)"},
    {DriverKind::unix_coop, "unix_coop", true, "dvipsone", "Unix Co-op / DVIPSONE psfile"},
    {DriverKind::rokicki, "rokicki", true, "", "Rokicki dvips psfile, percent scale"},
    {DriverKind::inline_rokicki, "inline_rokicki", true, "", "Rokicki dvips inline startTexFig"},
    {DriverKind::oztex, "oztex", true, "", "OzTeX epsf"},
    {DriverKind::lis, "lis", true, "", "Lis pstext/psfile"},
    {DriverKind::psprint, "psprint", false, "", "PSprint"},
    {DriverKind::arbor, "arbor", false, "", "ArborText ps: epsfile"},
    {DriverKind::clark, "clark", false, "", "Clark dvitops import"},
    {DriverKind::beebe, "beebe", false, "dvialw", "Beebe DVIALW"},
    {DriverKind::northlake, "northlake", true, "", "Northlake insert"},
    {DriverKind::bechtolsheim_dvitps, "bechtolsheim_dvitps", true, "", "Bechtolsheim dvitps"},
    {DriverKind::bechtolsheim_dvi2ps, "bechtolsheim_dvi2ps", true, "", "Bechtolsheim DVI2PS"},
    {DriverKind::standard_unset, "standard_unset", false, "", "no driver selected"},
}};

constexpr std::array<std::string_view, 4> kUnsetWarning{
    "!!! Sorry! There is still no standard for \\special EPSF integration !!!",
    "--- So you will have to identify your driver using a command",
    "--- of the form \\Set...EPSFSpecial, in order to get",
    "--- your graphics to print.  See BoxedEPS.doc.",
};

std::string join(std::initializer_list<std::string_view> parts) {
  std::string out;
  for (std::string_view part : parts) out += part;
  return out;
}

// Text before the first point, as \SPLIT@ at "." produces it.
std::string integer_part(std::string_view real) {
  return std::string(real.substr(0, real.find('.')));
}

// `\dimen4=<real>pt \divide\dimen4 by <divisor>`, printed.
std::string scaled_factor(std::string_view real, std::int32_t divisor) {
  const ScaledDim d = texfix::dim_from_unit(texfix::parse_decimal(real), Unit::pt);
  return texfix::render_scaled(texfix::divide(d, divisor));
}

// TexFig scale literal shared by lis and inline_rokicki.
std::string texfig_scale(const std::string& mag, const std::string& factor) {
  return join({mag, " 1000 div ", factor, " mul ", mag, " 1000 div ", factor,
               " mul scale"});
}

}  // namespace

std::span<const DriverInfo> all_drivers() { return kDrivers; }

const DriverInfo& info(DriverKind kind) {
  for (const DriverInfo& d : kDrivers) {
    if (d.kind == kind) return d;
  }
  throw Error(ErrorCode::unknown_driver, "unknown driver kind");
}

std::string_view to_string(DriverKind kind) { return info(kind).name; }

std::optional<DriverKind> driver_from_name(std::string_view name) {
  for (const DriverInfo& d : kDrivers) {
    if (d.name == name) return d.kind;
    std::string_view aliases = d.aliases;
    while (!aliases.empty()) {
      const std::size_t comma = aliases.find(',');
      if (aliases.substr(0, comma) == name) return d.kind;
      if (comma == std::string_view::npos) break;
      aliases.remove_prefix(comma + 1);
    }
  }
  return std::nullopt;
}

bool default_ps_origin(DriverKind kind) { return info(kind).ps_origin; }

std::span<const std::string_view> unset_driver_warning() { return kUnsetWarning; }

SpecialEmission emit(DriverKind driver, std::string_view file_spec,
                     std::string_view fig_scale_real, const EmitContext& ctx) {
  SpecialEmission out;
  out.ps_origin = default_ps_origin(driver);
  const std::string file(file_spec);
  const std::string real(fig_scale_real);
  const std::string mag = std::to_string(ctx.mag);
  auto& lines = out.figure_lines;

  switch (driver) {
    case DriverKind::textures:
      lines.push_back(join({"illustration ", file, " scaled ", integer_part(real)}));
      break;
    case DriverKind::unix_coop: {
      const std::string k = scaled_factor(real, 1000);
      lines.push_back(join({"psfile=", file, " hscale=", k, " vscale=", k}));
      break;
    }
    case DriverKind::rokicki: {
      const std::string p = scaled_factor(real, 10);
      lines.push_back(join({"psfile=\"", file, "\" hscale=", p, " vscale=", p}));
      break;
    }
    case DriverKind::inline_rokicki: {
      const std::string k = scaled_factor(real, 1000);
      lines.push_back("ps::[begin] 10 10 0 0 10 10 startTexFig " + texfig_scale(mag, k));
      lines.push_back("ps: plotfile " + file);
      lines.push_back("ps::[end] endTexFig");
      break;
    }
    case DriverKind::oztex:
      lines.push_back(join({"epsf=\"", file, "\" scale=", scaled_factor(real, 1000)}));
      break;
    case DriverKind::lis: {
      const std::string k = scaled_factor(real, 1000);
      lines.push_back("pstext=\"10 10 0 0 10 10 startTexFig " + texfig_scale(mag, k) + "\"");
      lines.push_back("psfile=" + file);
      lines.push_back("pstext=endTexFig");
      break;
    }
    case DriverKind::psprint: {
      // The end of line after "translate" sits inside the \special braces,
      // so TeX contributes a trailing space.
      const std::string factor = join({real, " 1000 div ", mag, " 1000 div mul"});
      lines.push_back(join({file, " ", factor, " ", factor, " scale ", ctx.llx_token,
                            " neg ", ctx.lly_token, " neg translate "}));
      break;
    }
    case DriverKind::arbor:
      lines.push_back(join({"ps: epsfile ", file, " ", integer_part(real)}));
      break;
    case DriverKind::clark: {
      const ScaledDim factor =
          texfix::dim_from_unit(texfix::parse_decimal(real), Unit::pt);
      const ScaledDim thousand = ScaledDim::from_pt(1000);
      const std::string w =
          texfix::render_scaled(texfix::rescale(ctx.untrimmed_width, factor, thousand));
      const std::string h =
          texfix::render_scaled(texfix::rescale(ctx.untrimmed_height, factor, thousand));
      lines.push_back(join({"dvitops: import ", file, " ", w, "pt ", h, "pt"}));
      break;
    }
    case DriverKind::beebe:
      lines.push_back(join({"language \"PS\", literal \"", real, " 1000 div ", real,
                            " 1000 div scale\", position = \"bottom left\", include \"",
                            file, "\""}));
      break;
    case DriverKind::northlake:
      lines.push_back(join({"insert ", file, ",magnification=", integer_part(real)}));
      break;
    case DriverKind::bechtolsheim_dvitps:
    case DriverKind::bechtolsheim_dvi2ps: {
      const std::string tag =
          driver == DriverKind::bechtolsheim_dvitps ? "dvitps: " : "DVI2PS: ";
      const std::string k = scaled_factor(real, 1000);
      out.setup_lines.push_back(tag + "Include0 \"psfig.pro\"");
      lines.push_back(join({tag, "Literal \"10 10 0 0 10 10 startTexFig ", mag,
                            " 1000 div dup 3.25 neg mul 2 index .25 neg mul translate ",
                            k, " mul dup scale \""}));
      lines.push_back(join({tag, "Include1 \"", file, "\""}));
      lines.push_back(tag + "Literal \"endTexFig \"");
      break;
    }
    case DriverKind::standard_unset:
      out.warnings.assign(kUnsetWarning.begin(), kUnsetWarning.end());
      break;
  }
  return out;
}

}  // namespace boxedeps::drivers
