#include "boxedeps/texfix.hpp"

#include <cstdlib>
#include <limits>

#include "boxedeps/error.hpp"

namespace boxedeps::texfix {
namespace {

constexpr int kMaxFractionDigits = 17;
constexpr std::int64_t kMaxInteger = std::numeric_limits<std::int32_t>::max();

// bp = 7227/7200 pt
constexpr std::int64_t kBpNum = 7227;
constexpr std::int64_t kBpDenom = 7200;

// C++ integer division already truncates toward zero, which is what TeX's
// \divide does; this wrapper only centralizes the zero check.
std::int64_t trunc_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw Error(ErrorCode::division_by_zero, "division by zero");
  return a / b;
}

ScaledDim checked(std::int64_t sp, const char* what) {
  if (sp > kMaxDimen || sp < -static_cast<std::int64_t>(kMaxDimen)) {
    throw Error(ErrorCode::overflow,
                std::string("dimension too large in ") + what + " (" +
                    std::to_string(sp) + "sp)");
  }
  return ScaledDim{static_cast<std::int32_t>(sp)};
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view strip(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string describe(char c) {
  if (c >= 0x20 && c < 0x7f) return std::string("'") + c + "'";
  return "byte " + std::to_string(static_cast<unsigned char>(c));
}

}  // namespace

ScaledDim operator+(ScaledDim a, ScaledDim b) {
  return checked(std::int64_t{a.sp} + b.sp, "addition");
}

ScaledDim operator-(ScaledDim a, ScaledDim b) {
  return checked(std::int64_t{a.sp} - b.sp, "subtraction");
}

ScaledDim operator-(ScaledDim a) { return ScaledDim{-a.sp}; }

ScaledDim& operator+=(ScaledDim& a, ScaledDim b) { return a = a + b; }
ScaledDim& operator-=(ScaledDim& a, ScaledDim b) { return a = a - b; }

ScaledDim divide(ScaledDim d, std::int32_t by) {
  return ScaledDim{static_cast<std::int32_t>(trunc_div(d.sp, by))};
}

DecimalConstant parse_decimal(std::string_view text) {
  const std::string_view original = text;
  text = strip(text);
  DecimalConstant out;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    out.sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }

  int digits_seen = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    out.int_part = out.int_part * 10 + (text[pos] - '0');
    if (out.int_part > kMaxInteger) {
      throw Error(ErrorCode::overflow,
                  "number too big in decimal '" + std::string(original) + "'");
    }
    ++digits_seen;
    ++pos;
  }

  int fraction_digits[kMaxFractionDigits] = {};
  int kept = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (kept < kMaxFractionDigits) fraction_digits[kept++] = text[pos] - '0';
      ++digits_seen;
      ++pos;
    }
  }

  if (pos < text.size()) {
    throw Error(ErrorCode::parse, "unexpected " + describe(text[pos]) +
                                      " in decimal '" + std::string(original) +
                                      "'");
  }
  if (digits_seen == 0) {
    throw Error(ErrorCode::parse,
                "expected a digit in decimal '" + std::string(original) + "'");
  }

  // round_decimals
  std::int64_t a = 0;
  for (int i = kept - 1; i >= 0; --i) {
    a = (a + fraction_digits[i] * std::int64_t{2 * kUnity}) / 10;
  }
  out.frac = static_cast<std::int32_t>((a + 1) / 2);
  return out;
}

ScaledDim dim_from_unit(const DecimalConstant& c, Unit unit) {
  std::int64_t whole = c.int_part;
  std::int64_t frac = c.frac;
  if (unit == Unit::bp) {
    const std::int64_t scaled = whole * kBpNum;
    const std::int64_t remainder = scaled % kBpDenom;
    whole = scaled / kBpDenom;
    const std::int64_t f = (kBpNum * frac + kUnity * remainder) / kBpDenom;
    whole += f / kUnity;
    frac = f % kUnity;
  }
  // scan_dimen rejects an integer part of 16384pt or more; that is the same
  // as the attached value exceeding max_dimen.
  if (whole >= 16384) {
    throw Error(ErrorCode::overflow, "dimension too large (" +
                                          std::to_string(whole) + "pt)");
  }
  return ScaledDim{static_cast<std::int32_t>(c.sign * (whole * kUnity + frac))};
}

std::string render_scaled(ScaledDim d) {
  std::string out;
  std::int64_t s = d.sp;
  if (s < 0) {
    out.push_back('-');
    s = -s;
  }
  out += std::to_string(s / kUnity);
  out.push_back('.');
  s = 10 * (s % kUnity) + 5;
  std::int64_t delta = 10;
  do {
    if (delta > kUnity) s = s + 0x8000 - 50000;  // round the last digit
    out.push_back(static_cast<char>('0' + s / kUnity));
    s = 10 * (s % kUnity);
    delta *= 10;
  } while (s > delta);
  return out;
}

ScaledDim decimal_times_dim(const DecimalConstant& c, ScaledDim v) {
  const std::int64_t fractional = trunc_div(std::int64_t{v.sp} * c.frac, kUnity);
  const std::int64_t magnitude = c.int_part * v.sp + fractional;
  return checked(c.sign * magnitude, "decimal multiplication");
}

ScaledDim mult(ScaledDim a, ScaledDim b) {
  return decimal_times_dim(parse_decimal(render_scaled(a)), b);
}

ScaledDim invert(ScaledDim d) {
  if (d.sp == 0) throw Error(ErrorCode::division_by_zero, "cannot invert 0pt");
  const std::int64_t inverse = trunc_div(std::int64_t{8192} * kUnity, d.sp);
  return checked(inverse * 8, "inversion");
}

ScaledDim rescale(ScaledDim x, ScaledDim y, ScaledDim z) {
  const ScaledDim reduced_z = divide(z, 100);
  if (reduced_z.sp == 0) {
    throw Error(ErrorCode::degenerate_divisor,
                "rescale divisor too small (" + std::to_string(z.sp) +
                    "sp, need at least 100sp)");
  }
  const ScaledDim reduced_x = divide(x, 100);
  const ScaledDim inverse = invert(reduced_z);
  const ScaledDim product = mult(reduced_x, y);
  return mult(product, inverse);
}

ScaledDim scale_op(ScaledDim d, ScaledDim the_scale) {
  const std::int64_t coarse = trunc_div(d.sp, 1280);
  const std::int64_t factor = trunc_div(the_scale.sp, 5120);
  const ScaledDim product = checked(coarse * factor, "scaling");
  return divide(product, 10);
}

ScaledDim parse_dimension(std::string_view text, Unit bare_unit) {
  std::string_view body = strip(text);
  Unit unit = bare_unit;
  if (body.size() >= 2) {
    const std::string_view suffix = body.substr(body.size() - 2);
    if (suffix == "pt" || suffix == "bp") {
      unit = suffix == "pt" ? Unit::pt : Unit::bp;
      body.remove_suffix(2);
    }
  }
  return dim_from_unit(parse_decimal(body), unit);
}

ScaledDim parse_dimension(std::string_view text) {
  std::string_view body = strip(text);
  if (body.size() < 2 || (body.substr(body.size() - 2) != "pt" &&
                          body.substr(body.size() - 2) != "bp")) {
    throw Error(ErrorCode::parse, "dimension '" + std::string(text) +
                                      "' needs a unit (pt or bp)");
  }
  return parse_dimension(text, Unit::pt);
}

}  // namespace boxedeps::texfix
