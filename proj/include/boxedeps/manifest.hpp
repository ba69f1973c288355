#pragma once

// Batch manifests: a config block followed by [figure] sections of
// `key = value` lines. See docs/manifest.md for the format.

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "boxedeps/directive.hpp"
#include "boxedeps/session.hpp"

namespace boxedeps::manifest {

struct Entry {
  int line = 0;  // line of the [figure] header
  directive::FigureDirective directive;
};

struct Manifest {
  directive::SessionConfig config;
  std::vector<Entry> entries;
};

// Throws Error{manifest} with "<source>:<line>: ..." on any syntax or value
// error; nothing is placed before the whole manifest has parsed.
Manifest parse(std::istream& in, std::string_view source_name);
Manifest load(const std::filesystem::path& path);

// Places every entry in order through one Session.
std::vector<FigureReport> run(const Manifest& m);

}  // namespace boxedeps::manifest
