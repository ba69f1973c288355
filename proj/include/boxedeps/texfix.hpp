#pragma once

// TeX scaled-point arithmetic, reproduced bit for bit.
//
// Every routine here is integer-only. Divisions truncate toward zero, like
// TeX's \divide, and results are checked against max_dimen at the points
// where TeX would store them in a register.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace boxedeps::texfix {

inline constexpr std::int32_t kUnity = 65536;              // 1pt
inline constexpr std::int32_t kMaxDimen = 1073741823;      // 2^30 - 1
inline constexpr std::int32_t kPtsPerThousandScale = 1000 * kUnity;

// A dimension in scaled points (65536 sp = 1pt).
struct ScaledDim {
  std::int32_t sp = 0;

  constexpr ScaledDim() = default;
  constexpr explicit ScaledDim(std::int32_t value) : sp(value) {}

  static constexpr ScaledDim from_pt(std::int32_t pt) {
    return ScaledDim{pt * kUnity};
  }

  friend constexpr auto operator<=>(ScaledDim, ScaledDim) = default;
};

// Checked register arithmetic (\advance). Throws Error{overflow} when the
// result leaves [-max_dimen, max_dimen].
ScaledDim operator+(ScaledDim a, ScaledDim b);
ScaledDim operator-(ScaledDim a, ScaledDim b);
ScaledDim operator-(ScaledDim a);
ScaledDim& operator+=(ScaledDim& a, ScaledDim b);
ScaledDim& operator-=(ScaledDim& a, ScaledDim b);

// \divide on a dimension register.
ScaledDim divide(ScaledDim d, std::int32_t by);

// A scanned decimal constant: sign * (int_part + frac/65536).
struct DecimalConstant {
  int sign = 1;
  std::int64_t int_part = 0;
  std::int32_t frac = 0;

  friend constexpr bool operator==(const DecimalConstant&,
                                   const DecimalConstant&) = default;
};

enum class Unit { pt, bp };

// TeX's decimal scanner with round_decimals. Accepts an optional sign,
// digits, an optional point and more digits; at most 17 fraction digits
// are significant.
DecimalConstant parse_decimal(std::string_view text);

// Attaches a unit to a decimal constant the way scan_dimen does.
ScaledDim dim_from_unit(const DecimalConstant& c, Unit unit);

// print_scaled: the shortest decimal that scans back to `d`.
std::string render_scaled(ScaledDim d);

// `<decimal><dimen register>`: int_part*v + trunc(v*frac/65536).
ScaledDim decimal_times_dim(const DecimalConstant& c, ScaledDim v);

// \Mult: `a` is flattened to its printed decimal first.
ScaledDim mult(ScaledDim a, ScaledDim b);

// \Invert: 8 * trunc(8192pt / d), in sp.
ScaledDim invert(ScaledDim d);

// \Rescale: x*y/z computed in the macro's five truncating stages.
ScaledDim rescale(ScaledDim x, ScaledDim y, ScaledDim z);

// \Scale: ((d div 1280) * (the_scale div 5120)) div 10.
ScaledDim scale_op(ScaledDim d, ScaledDim the_scale);

// Parses "<decimal>pt" or "<decimal>bp" (whitespace allowed before the
// unit). With `bare_unit` set, a missing unit means that unit.
ScaledDim parse_dimension(std::string_view text);
ScaledDim parse_dimension(std::string_view text, Unit bare_unit);

}  // namespace boxedeps::texfix
