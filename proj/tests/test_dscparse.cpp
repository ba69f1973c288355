#include <doctest.h>

#include <sstream>

#include "boxedeps/dscparse.hpp"
#include "boxedeps/error.hpp"
#include "oracle/texfix_oracle.hpp"

using namespace boxedeps::dsc;
using boxedeps::Error;
using boxedeps::texfix::ScaledDim;

namespace {

const DisplayName kName{"figs/fig.eps", "fig.eps"};

std::string corpus(const char* file) {
  return std::string(BOXEDEPS_TEST_DATA) + "/corpus/" + file;
}

bool has_warning(const ProbeResult& r, const std::string& text) {
  for (const auto& w : r.warnings) {
    if (w == text) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("probe_lines follows the macro scan") {
  SUBCASE("canonical minimal EPS") {
    const auto r = probe_lines({"%!PS-Adobe-2.0 EPSF-1.2", "%%BoundingBox: 0 0 100 100"}, kName);
    CHECK(r.probe.status == ProbeStatus::found);
    CHECK(r.probe.llx == "0");
    CHECK(r.probe.lly == "0");
    CHECK(r.probe.urx == "100");
    CHECK(r.probe.ury == "100");
    CHECK(r.probe.raw_line == "%%BoundingBox: 0 0 100 100");
    CHECK(r.warnings.empty());
  }
  SUBCASE("atend is refused") {
    const auto r = probe_lines({"%!PS", "%%BoundingBox: (atend)", "%%BoundingBox: 1 2 3 4"}, kName);
    CHECK(r.probe.status == ProbeStatus::atend);
    CHECK(r.probe.urx == "100");
    CHECK(has_warning(r, "!!! BoundingBox not found in figs/fig.eps !!!"));
    CHECK(has_warning(r, "!!! It must not be at end of EPSF !!!"));
    CHECK(has_warning(r, "!!! Will use placeholder !!!"));
  }
  SUBCASE("PageBoundingBox satisfies the substring match") {
    const auto r = probe_lines({"%!PS...", "%%PageBoundingBox: 5 5 50 50"}, kName);
    CHECK(r.probe.status == ProbeStatus::found);
    CHECK(r.probe.llx == "5");
    CHECK(r.probe.ury == "50");
  }
  SUBCASE("missing signature") {
    const auto r = probe_lines({"hello", "%%BoundingBox: 1 2 3 4"}, kName);
    CHECK(r.probe.status == ProbeStatus::not_postscript);
    CHECK(has_warning(r, "!!! fig.eps not PS! !!!"));
  }
  SUBCASE("signature anywhere on line one") {
    CHECK(probe_lines({"  junk %!PS", "BoundingBox: 1 2 3 4"}, kName).probe.status ==
          ProbeStatus::found);
  }
  SUBCASE("no bounding box line") {
    const auto r = probe_lines({"%!PS", "%%Title: x", "showpage"}, kName);
    CHECK(r.probe.status == ProbeStatus::no_bbox_line);
    CHECK(has_warning(r, "!!! BoundingBox NOT FOUND IN figs/fig.eps !!!"));
  }
  SUBCASE("line one itself is never searched") {
    const auto r = probe_lines({"%!PS %%BoundingBox: 9 9 9 9"}, kName);
    CHECK(r.probe.status == ProbeStatus::no_bbox_line);
  }
  SUBCASE("first occurrence on the line wins and the tail is ignored") {
    const auto r = probe_lines({"%!", "x BoundingBox: 1 2 3 4 5 BoundingBox: 6 7 8 9"}, kName);
    CHECK(r.probe.llx == "1");
    CHECK(r.probe.ury == "4");
  }
  SUBCASE("no space after the colon") {
    const auto r = probe_lines({"%!", "%%BoundingBox:0 0 10 20"}, kName);
    CHECK(r.probe.urx == "10");
    CHECK(r.probe.ury == "20");
  }
  SUBCASE("keyword match is case sensitive") {
    CHECK(probe_lines({"%!", "%%boundingbox: 1 2 3 4"}, kName).probe.status ==
          ProbeStatus::no_bbox_line);
  }
  SUBCASE("empty source reads as a non-PostScript file") {
    CHECK(probe_lines({}, kName).probe.status == ProbeStatus::not_postscript);
  }
}

TEST_CASE("the scan stops at the first BoundingBox line") {
  int pulls = 0;
  const std::vector<std::string> lines{"%!PS", "%%BoundingBox: 1 2 3 4", "never", "read"};
  const auto r = probe_eps(
      [&]() -> LineRead {
        if (pulls >= static_cast<int>(lines.size())) return {LineRead::Kind::end, {}};
        return {LineRead::Kind::line, lines[pulls++]};
      },
      kName);
  CHECK(r.probe.status == ProbeStatus::found);
  CHECK(pulls == 2);
}

TEST_CASE("StreamLineReader terminators and limits") {
  std::istringstream in("a\r\nb\rc\n\nd");
  StreamLineReader reader(in);
  std::vector<std::string> got;
  for (LineRead l = reader.next(); l.kind == LineRead::Kind::line; l = reader.next()) {
    got.push_back(l.text);
  }
  CHECK(got == std::vector<std::string>{"a", "b", "c", "", "d"});

  const std::string huge = "%!PS\n" + std::string(kMaxLineBytes + 1, 'x') + "\n%%BoundingBox: 1 2 3 4\n";
  const auto r = probe_buffer(huge, kName);
  CHECK(r.probe.status == ProbeStatus::no_bbox_line);

  const std::string at_limit = "%!PS\n" + std::string(kMaxLineBytes, 'x') + "\n%%BoundingBox: 1 2 3 4\n";
  CHECK(probe_buffer(at_limit, kName).probe.status == ProbeStatus::found);
}

TEST_CASE("normalize_line collapses blanks") {
  CHECK(normalize_line("  a \t\t b   c  ") == "a b c");
  CHECK(normalize_line("") == "");
  CHECK(normalize_line("\t") == "");
}

TEST_CASE("probe_file on the corpus") {
  CHECK(probe_file(corpus("minimal.eps"), kName).probe.status == ProbeStatus::found);
  CHECK(probe_file(corpus("crlf_tabs.eps"), kName).probe.llx == "1");
  CHECK(probe_file(corpus("crlf_tabs.eps"), kName).probe.ury == "4");
  CHECK(probe_file(corpus("cr_only.eps"), kName).probe.urx == "72");
  CHECK(probe_file(corpus("empty.eps"), kName).probe.status == ProbeStatus::not_postscript);

  const auto missing = probe_file(corpus("does-not-exist.eps"), kName);
  CHECK(missing.probe.status == ProbeStatus::missing_file);
  CHECK(has_warning(missing, "!!! EPS FILE figs/fig.eps WAS NOT FOUND !!!"));

  // A directory cannot be read as a figure.
  CHECK(probe_file(std::string(BOXEDEPS_TEST_DATA) + "/corpus", kName).probe.status ==
        ProbeStatus::missing_file);
}

TEST_CASE("placeholders share one geometry") {
  for (auto status : {ProbeStatus::missing_file, ProbeStatus::not_postscript,
                      ProbeStatus::no_bbox_line, ProbeStatus::atend}) {
    const NaturalDims d = natural_dims(placeholder(status), true);
    CHECK(d.width.sp == 6578176);
    CHECK(d.height.sp == 6578176);
    CHECK(d.origin_shift_x.sp == 0);
    CHECK(d.origin_shift_y.sp == 0);
  }
}

TEST_CASE("natural_dims") {
  BBoxProbe p;
  p.llx = "0";
  p.lly = "0";
  p.urx = "100";
  p.ury = "100";
  NaturalDims d = natural_dims(p, false);
  CHECK(d.width.sp == oracle::bp_integer(100));
  CHECK(d.height.sp == 6578176);
  CHECK(d.untrimmed_width == d.width);
  CHECK(d.origin_shift_x.sp == 0);

  p.llx = "-10";
  p.urx = "90";
  d = natural_dims(p, true);
  // Each corner truncates on its own, so this is 1sp short of dim(100bp).
  CHECK(d.width.sp == oracle::bp_integer(90) + oracle::bp_integer(10));
  CHECK(d.width.sp == 6578175);
  CHECK(d.origin_shift_x.sp == 657817);
  CHECK(d.origin_shift_x.sp == oracle::bp_integer(10));
  CHECK(d.llx_token == "-10");
  CHECK(natural_dims(p, false).origin_shift_x.sp == 0);

  SUBCASE("corners convert separately") {
    // 0.5bp and 100.5bp each truncate; their difference is not dim(100bp).
    BBoxProbe q;
    q.llx = "0.5";
    q.lly = "0";
    q.urx = "100.5";
    q.ury = "1";
    const NaturalDims nd = natural_dims(q, false);
    const auto bp = [](const char* t) {
      return boxedeps::texfix::dim_from_unit(boxedeps::texfix::parse_decimal(t),
                                             boxedeps::texfix::Unit::bp);
    };
    CHECK(nd.width == bp("100.5") - bp("0.5"));
  }
  SUBCASE("swapping corners negates the width") {
    BBoxProbe q = p;
    std::swap(q.llx, q.urx);
    CHECK(natural_dims(q, false).width == -natural_dims(p, false).width);
  }
  SUBCASE("bad tokens name themselves") {
    BBoxProbe q = p;
    q.urx = "abc";
    try {
      natural_dims(q, false);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("'abc'") != std::string::npos);
    }
    q.urx = "";
    CHECK_THROWS_AS(natural_dims(q, false), Error);
  }
}
