#include "bbd/io.hpp"

#include <charconv>
#include <optional>

namespace bbd {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename LineFn>
void for_each_line(std::string_view text, LineFn&& fn) {
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    fn(++lineno, text.substr(pos, end - pos));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

int parse_header(std::string_view line, int lineno) {
  if (!line.starts_with("a=")) {
    throw ParseError("line " + std::to_string(lineno) +
                     ": expected header 'a=<n>', got '" + std::string(line) + "'");
  }
  const std::string_view num = line.substr(2);
  int a = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), a);
  if (ec != std::errc{} || ptr != num.data() + num.size()) {
    throw ParseError("line " + std::to_string(lineno) + ": bad half-order '" +
                     std::string(num) + "'");
  }
  if (a < 1 || a > BipartiteDigraph::kMaxHalfOrder) {
    throw ParseError("line " + std::to_string(lineno) + ": half-order " +
                     std::to_string(a) + " outside [1, 64]");
  }
  return a;
}

void parse_arc_line(BipartiteDigraph& d, std::string_view line, int lineno) {
  const auto arrow = line.find("->");
  if (arrow == std::string_view::npos) {
    throw ParseError("line " + std::to_string(lineno) +
                     ": expected '<tail> -> <head>', got '" + std::string(line) + "'");
  }
  try {
    const VertexId u = parse_vertex(trim(line.substr(0, arrow)));
    const VertexId v = parse_vertex(trim(line.substr(arrow + 2)));
    if (!d.add_arc(u, v)) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate arc '" +
                       std::string(trim(line)) + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
  }
}

}  // namespace

std::string serialize(const BipartiteDigraph& d) {
  std::string out = "a=" + std::to_string(d.half_order()) + "\n";
  for (const Arc& arc : d.arcs()) {
    out += to_string(arc.tail);
    out += " -> ";
    out += to_string(arc.head);
    out += '\n';
  }
  return out;
}

BipartiteDigraph parse(std::string_view text) {
  std::optional<BipartiteDigraph> result;
  for_each_line(text, [&](int lineno, std::string_view raw) {
    const std::string_view line = trim(raw);
    if (line.empty() || line[0] == '#') return;
    if (!result.has_value()) {
      result.emplace(parse_header(line, lineno));
    } else {
      parse_arc_line(*result, line, lineno);
    }
  });
  if (!result.has_value()) throw ParseError("missing header line 'a=<n>'");
  return *std::move(result);
}

std::vector<BipartiteDigraph> parse_stream(std::string_view text) {
  std::vector<BipartiteDigraph> out;
  std::string chunk;
  bool significant = false;
  auto flush = [&] {
    if (significant) out.push_back(parse(chunk));
    chunk.clear();
    significant = false;
  };
  for_each_line(text, [&](int, std::string_view raw) {
    const std::string_view line = trim(raw);
    if (line.empty()) {
      flush();
      return;
    }
    if (line[0] != '#') significant = true;
    chunk += std::string(raw) + "\n";
  });
  flush();
  return out;
}

std::string to_dot(const BipartiteDigraph& d) {
  std::string out = "digraph bbd {\n  rankdir=LR;\n";
  out += "  { rank=same;";
  for (int i = 0; i < d.half_order(); ++i) out += " X" + std::to_string(i) + ";";
  out += " }\n  { rank=same;";
  for (int i = 0; i < d.half_order(); ++i) out += " Y" + std::to_string(i) + ";";
  out += " }\n";
  for (const Arc& arc : d.arcs()) {
    out += "  " + to_string(arc.tail) + " -> " + to_string(arc.head) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace bbd
