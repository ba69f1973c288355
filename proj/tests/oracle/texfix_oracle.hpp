#pragma once

// Independent reference arithmetic for the fixed-point tests.
//
// Nothing here calls into the library. Values are computed with 128-bit
// integers and closed-form (rational) characterizations instead of TeX's
// step-by-step procedures, so agreement between the two is meaningful.

#include <cstdint>
#include <optional>
#include <string>

namespace oracle {

using i128 = __int128;

inline constexpr std::int64_t kUnity = 65536;
inline constexpr std::int64_t kMaxDimen = (std::int64_t{1} << 30) - 1;

inline bool in_range(i128 v) { return v <= kMaxDimen && v >= -kMaxDimen; }

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

// Truncating division written out by magnitudes.
inline i128 trunc_div(i128 a, i128 b) {
  const i128 q = abs128(a) / abs128(b);
  return ((a < 0) != (b < 0)) ? -q : q;
}

inline i128 pow10(int k) {
  i128 p = 1;
  while (k-- > 0) p *= 10;
  return p;
}

// floor(n * 7227 * 65536 / 7200) for n >= 0; TeX attaches the sign last.
inline std::int64_t bp_integer(std::int64_t n) {
  const i128 num = i128{n < 0 ? -n : n} * 7227 * kUnity;
  const auto mag = static_cast<std::int64_t>(num / 7200);
  return n < 0 ? -mag : mag;
}

// A decimal already scanned to (int, frac) then read as bp.
inline std::int64_t bp_scaled(int sign, std::int64_t int_part, std::int64_t frac) {
  const i128 num = (i128{int_part} * kUnity + frac) * 7227;
  return sign * static_cast<std::int64_t>(num / 7200);
}

// round_decimals in closed form: round-half-up of 65536 * 0.d1..dk.
inline std::int64_t fraction_from_digits(const std::string& digits) {
  const std::string kept = digits.substr(0, 17);
  i128 m = 0;
  for (char c : kept) m = m * 10 + (c - '0');
  const i128 den = pow10(static_cast<int>(kept.size()));
  return static_cast<std::int64_t>((2 * kUnity * m + den) / (2 * den));
}

// Exact rational distance |m/10^k - f/65536| scaled by 65536*10^k.
inline i128 distance(i128 m, int k, std::int64_t f) {
  return abs128(m * kUnity - i128{f} * pow10(k));
}

// print_scaled characterized as: the shortest fraction that scans back to
// the value; among equally short ones the closest; ties go to the larger.
inline std::string render(std::int64_t sp) {
  std::string out = sp < 0 ? "-" : "";
  const std::int64_t a = sp < 0 ? -sp : sp;
  out += std::to_string(a / kUnity) + ".";
  const std::int64_t f = a % kUnity;
  for (int k = 1; k <= 17; ++k) {
    const i128 den = pow10(k);
    const i128 centre = i128{f} * den / kUnity;
    std::optional<i128> best;
    for (i128 m = centre - 2; m <= centre + 2; ++m) {
      if (m < 0 || m >= den) continue;
      std::string digits = std::to_string(static_cast<long long>(m));
      digits.insert(0, static_cast<std::size_t>(k) - digits.size(), '0');
      if (fraction_from_digits(digits) != f) continue;
      if (!best || distance(m, k, f) <= distance(*best, k, f)) best = m;
    }
    if (best) {
      std::string digits = std::to_string(static_cast<long long>(*best));
      digits.insert(0, static_cast<std::size_t>(k) - digits.size(), '0');
      return out + digits;
    }
  }
  return out + "?";
}

// <decimal> times <dimen>: sign * trunc(v * (int*65536 + frac) / 65536).
inline std::optional<std::int64_t> decimal_times(int sign, std::int64_t int_part,
                                                 std::int64_t frac, std::int64_t v) {
  const i128 r = sign * trunc_div(i128{v} * (i128{int_part} * kUnity + frac), kUnity);
  if (!in_range(r)) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

// A printed-and-rescanned dimension is the dimension itself, so \Mult is
// sgn(a) * trunc(|a| * b / 65536).
inline std::optional<std::int64_t> mult(std::int64_t a, std::int64_t b) {
  const i128 r = (a < 0 ? -1 : 1) * trunc_div(abs128(a) * i128{b}, kUnity);
  if (!in_range(r)) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

inline std::optional<std::int64_t> invert(std::int64_t d) {
  if (d == 0) return std::nullopt;
  const i128 r = 8 * trunc_div(i128{1} << 29, d);
  if (!in_range(r)) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

inline std::optional<std::int64_t> scale_op(std::int64_t d, std::int64_t s) {
  const i128 product = trunc_div(d, 1280) * trunc_div(s, 5120);
  if (!in_range(product)) return std::nullopt;
  return static_cast<std::int64_t>(trunc_div(product, 10));
}

// The five stages of \Rescale.
inline std::optional<std::int64_t> rescale(std::int64_t x, std::int64_t y, std::int64_t z) {
  const i128 t = trunc_div(z, 100);
  if (t == 0) return std::nullopt;
  const auto inverse = invert(static_cast<std::int64_t>(t));
  if (!inverse) return std::nullopt;
  const auto p = mult(static_cast<std::int64_t>(trunc_div(x, 100)), y);
  if (!p) return std::nullopt;
  return mult(*p, *inverse);
}

}  // namespace oracle
