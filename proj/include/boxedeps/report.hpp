#pragma once

#include <string>

#include "boxedeps/session.hpp"

namespace boxedeps::report {

enum class Format { text, json };

// Human-readable block, one "key: value" per line, ending in a newline.
std::string format_text(const FigureReport& r);

// One JSON object on a single line (JSON Lines), keys in fixed order.
std::string format_json(const FigureReport& r);

std::string format(const FigureReport& r, Format fmt);

// "<sp>sp (<render>pt)"; the decimal is always derived from the sp value.
std::string sp_and_pt(texfix::ScaledDim d);

}  // namespace boxedeps::report
