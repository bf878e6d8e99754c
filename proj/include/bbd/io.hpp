#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bbd/digraph.hpp"

namespace bbd {

// Text format "bbd/1": a header line `a=<n>`, then one arc per line
// (`X0 -> Y3`), `#` comment lines allowed, arcs in canonical order,
// UTF-8 with LF line endings. parse(serialize(d)) == d.
inline constexpr std::string_view kTextFormatName = "bbd/1";

std::string serialize(const BipartiteDigraph& d);

BipartiteDigraph parse(std::string_view text);

// Parses a blank-line separated stream of bbd/1 digraphs.
std::vector<BipartiteDigraph> parse_stream(std::string_view text);

// DOT export, directed with the two partite sets on separate ranks.
// For static viewing only; not parsed back.
std::string to_dot(const BipartiteDigraph& d);

}  // namespace bbd
