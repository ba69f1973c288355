#include "boxedeps/dscparse.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "boxedeps/error.hpp"

namespace boxedeps::dsc {
namespace {

constexpr std::string_view kSignature = "%!";
constexpr std::string_view kBBoxKey = "BoundingBox:";
constexpr std::string_view kAtend = "atend";
constexpr std::string_view kPlaceholderNote = "!!! Will use placeholder !!!";

ProbeResult fallback(ProbeStatus status, std::vector<std::string> warnings,
                     std::string raw_line = {}) {
  ProbeResult result;
  result.probe = placeholder(status);
  result.probe.raw_line = std::move(raw_line);
  result.warnings = std::move(warnings);
  result.warnings.emplace_back(kPlaceholderNote);
  return result;
}

ProbeResult no_bbox(const DisplayName& display, std::vector<std::string> notes = {}) {
  notes.push_back("!!! BoundingBox NOT FOUND IN " + display.spec + " !!!");
  return fallback(ProbeStatus::no_bbox_line, std::move(notes));
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t next = text.find(' ', pos);
    const std::size_t end = next == std::string_view::npos ? text.size() : next;
    if (end > pos) out.emplace_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

texfix::ScaledDim corner(const std::string& token, const char* which) {
  if (token.empty()) {
    throw Error(ErrorCode::parse,
                std::string("bounding box is missing its ") + which + " value");
  }
  try {
    return texfix::dim_from_unit(texfix::parse_decimal(token), texfix::Unit::bp);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("bad bounding box ") + which + " token '" +
                              token + "': " + e.what());
  }
}

}  // namespace

std::string_view to_string(ProbeStatus status) {
  switch (status) {
    case ProbeStatus::found: return "found";
    case ProbeStatus::missing_file: return "missing_file";
    case ProbeStatus::not_postscript: return "not_postscript";
    case ProbeStatus::no_bbox_line: return "no_bbox_line";
    case ProbeStatus::atend: return "atend";
  }
  return "unknown";
}

BBoxProbe placeholder(ProbeStatus status) {
  BBoxProbe probe;
  probe.status = status;
  return probe;
}

LineRead StreamLineReader::next() {
  std::streambuf* buf = in_.rdbuf();
  using traits = std::streambuf::traits_type;
  if (buf == nullptr || traits::eq_int_type(buf->sgetc(), traits::eof())) {
    return {LineRead::Kind::end, {}};
  }
  LineRead out{LineRead::Kind::line, {}};
  for (;;) {
    const auto c = buf->sbumpc();
    if (traits::eq_int_type(c, traits::eof()) || c == '\n') break;
    if (c == '\r') {
      if (buf->sgetc() == '\n') buf->sbumpc();
      break;
    }
    if (out.text.size() >= kMaxLineBytes) return {LineRead::Kind::too_long, {}};
    out.text.push_back(traits::to_char_type(c));
  }
  return out;
}

std::string normalize_line(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (c == ' ' || c == '\t') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

ProbeResult probe_eps(const LineSource& source, const DisplayName& display) {
  const LineRead first = source();
  if (first.kind == LineRead::Kind::too_long) {
    return no_bbox(display, {"!!! line longer than 64 KiB in " + display.spec + " !!!"});
  }
  // An empty file reads as one empty line, which fails the signature test.
  if (normalize_line(first.text).find(kSignature) == std::string::npos) {
    return fallback(ProbeStatus::not_postscript,
                    {"!!! " + display.name + " not PS! !!!"});
  }

  for (;;) {
    const LineRead next = source();
    if (next.kind == LineRead::Kind::end) return no_bbox(display);
    if (next.kind == LineRead::Kind::too_long) {
      return no_bbox(display, {"!!! line longer than 64 KiB in " + display.spec + " !!!"});
    }
    std::string line = normalize_line(next.text);
    const std::size_t at = line.find(kBBoxKey);
    if (at == std::string::npos) continue;

    std::string_view rest = std::string_view(line).substr(at + kBBoxKey.size());
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    if (rest.find(kAtend) != std::string_view::npos) {
      return fallback(ProbeStatus::atend,
                      {"!!! BoundingBox not found in " + display.spec + " !!!",
                       "!!! It must not be at end of EPSF !!!"},
                      line);
    }

    ProbeResult result;
    result.probe.status = ProbeStatus::found;
    std::vector<std::string> tokens = split_tokens(rest);
    tokens.resize(std::max<std::size_t>(tokens.size(), 4));
    result.probe.llx = tokens[0];
    result.probe.lly = tokens[1];
    result.probe.urx = tokens[2];
    result.probe.ury = tokens[3];
    result.probe.raw_line = std::move(line);
    return result;
  }
}

ProbeResult probe_lines(const std::vector<std::string>& lines,
                        const DisplayName& display) {
  std::size_t index = 0;
  return probe_eps(
      [&]() -> LineRead {
        if (index >= lines.size()) return {LineRead::Kind::end, {}};
        const std::string& text = lines[index++];
        if (text.size() > kMaxLineBytes) return {LineRead::Kind::too_long, {}};
        return {LineRead::Kind::line, text};
      },
      display);
}

ProbeResult probe_buffer(std::string_view bytes, const DisplayName& display) {
  std::istringstream in{std::string(bytes)};
  StreamLineReader reader(in);
  return probe_eps([&] { return reader.next(); }, display);
}

ProbeResult probe_file(const std::filesystem::path& path,
                       const DisplayName& display) {
  std::error_code ec;
  std::ifstream in;
  if (std::filesystem::is_regular_file(path, ec)) {
    in.open(path, std::ios::binary);
  }
  if (!in.is_open()) {
    return fallback(ProbeStatus::missing_file,
                    {"!!! EPS FILE " + display.spec + " WAS NOT FOUND !!!"});
  }
  StreamLineReader reader(in);
  return probe_eps([&] { return reader.next(); }, display);
}

NaturalDims natural_dims(const BBoxProbe& probe, bool ps_origin) {
  const ScaledDim llx = corner(probe.llx, "llx");
  const ScaledDim lly = corner(probe.lly, "lly");
  const ScaledDim urx = corner(probe.urx, "urx");
  const ScaledDim ury = corner(probe.ury, "ury");

  NaturalDims out;
  out.width = urx - llx;
  out.height = ury - lly;
  out.untrimmed_width = out.width;
  out.untrimmed_height = out.height;
  if (ps_origin) {
    out.origin_shift_x = -llx;
    out.origin_shift_y = -lly;
  }
  out.llx_token = probe.llx;
  out.lly_token = probe.lly;
  return out;
}

}  // namespace boxedeps::dsc
