#pragma once

// Bounding-box probing of EPS files, mirroring the macro package's
// single forward scan: PostScript signature on line 1, then the first line
// containing "BoundingBox:".

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "boxedeps/texfix.hpp"

namespace boxedeps::dsc {

using texfix::ScaledDim;

enum class ProbeStatus { found, missing_file, not_postscript, no_bbox_line, atend };

std::string_view to_string(ProbeStatus status);

struct BBoxProbe {
  std::string llx = "0";
  std::string lly = "0";
  std::string urx = "100";
  std::string ury = "100";
  ProbeStatus status = ProbeStatus::found;
  std::string raw_line;
};

struct ProbeResult {
  BBoxProbe probe;
  std::vector<std::string> warnings;
};

// One pull from a line source.
struct LineRead {
  enum class Kind { line, end, too_long };
  Kind kind = Kind::end;
  std::string text;
};

using LineSource = std::function<LineRead()>;

inline constexpr std::size_t kMaxLineBytes = 64 * 1024;

// Splits a byte stream into lines (LF, CRLF and CR terminators). Lines over
// kMaxLineBytes are reported as too_long.
class StreamLineReader {
 public:
  explicit StreamLineReader(std::istream& in) : in_(in) {}
  LineRead next();

 private:
  std::istream& in_;
};

// Names used in the warning texts: the directory-qualified spec for the
// "not found" messages and the bare name for "not PS!".
struct DisplayName {
  std::string spec;
  std::string name;
};

ProbeResult probe_eps(const LineSource& source, const DisplayName& display);
ProbeResult probe_lines(const std::vector<std::string>& lines,
                        const DisplayName& display);
ProbeResult probe_buffer(std::string_view bytes, const DisplayName& display);

// Opens `path`; an unreadable or non-regular file yields missing_file.
ProbeResult probe_file(const std::filesystem::path& path,
                       const DisplayName& display);

// The placeholder used whenever a usable box cannot be read.
BBoxProbe placeholder(ProbeStatus status);

// TeX-style line normalization: tabs become spaces, runs collapse,
// leading and trailing spaces go.
std::string normalize_line(std::string_view raw);

struct NaturalDims {
  ScaledDim width;
  ScaledDim height;
  ScaledDim origin_shift_x;
  ScaledDim origin_shift_y;
  ScaledDim untrimmed_width;
  ScaledDim untrimmed_height;
  std::string llx_token;
  std::string lly_token;

  friend bool operator==(const NaturalDims&, const NaturalDims&) = default;
};

// Corner differences converted from bp. Each corner is converted on its own
// before subtracting, as the macros do.
NaturalDims natural_dims(const BBoxProbe& probe, bool ps_origin);

}  // namespace boxedeps::dsc
