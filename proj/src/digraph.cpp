#include "bbd/digraph.hpp"

#include <algorithm>
#include <charconv>

namespace bbd {

std::string to_string(VertexId v) {
  return side_char(v.side) + std::to_string(v.index);
}

VertexId parse_vertex(std::string_view token) {
  if (token.size() < 2) {
    throw ParseError("bad vertex token '" + std::string(token) + "'");
  }
  Side side;
  switch (token[0]) {
    case 'X':
    case 'x':
      side = Side::X;
      break;
    case 'Y':
    case 'y':
      side = Side::Y;
      break;
    default:
      throw ParseError("bad vertex token '" + std::string(token) + "'");
  }
  int index = 0;
  const char* first = token.data() + 1;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last || index < 0) {
    throw ParseError("bad vertex index in '" + std::string(token) + "'");
  }
  return {side, index};
}

std::vector<VertexId> VertexSet::to_vector() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for_each_bit(x_bits, [&](int i) { out.push_back(vx(i)); });
  for_each_bit(y_bits, [&](int i) { out.push_back(vy(i)); });
  return out;
}

BipartiteDigraph::BipartiteDigraph(int a) : a_(a) {
  if (a < 1 || a > kMaxHalfOrder) {
    throw std::invalid_argument("half-order a must be in [1, 64], got " +
                                std::to_string(a));
  }
  out_x_.assign(a, 0);
  in_x_.assign(a, 0);
  out_y_.assign(a, 0);
  in_y_.assign(a, 0);
}

void BipartiteDigraph::check_vertex(VertexId v) const {
  if (v.index < 0 || v.index >= a_) {
    throw std::invalid_argument("vertex " + to_string(v) +
                                " out of range for a=" + std::to_string(a_));
  }
}

bool BipartiteDigraph::add_arc(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u.side == v.side) {
    throw std::invalid_argument("same-side arc " + to_string(u) + " -> " +
                                to_string(v) + " not allowed");
  }
  if (has_arc(u, v)) return false;
  const std::uint64_t ub = std::uint64_t{1} << u.index;
  const std::uint64_t vb = std::uint64_t{1} << v.index;
  if (u.side == Side::X) {
    out_x_[u.index] |= vb;
    in_y_[v.index] |= ub;
  } else {
    out_y_[u.index] |= vb;
    in_x_[v.index] |= ub;
  }
  ++arc_count_;
  return true;
}

bool BipartiteDigraph::remove_arc(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u.side == v.side || !has_arc(u, v)) return false;
  const std::uint64_t ub = std::uint64_t{1} << u.index;
  const std::uint64_t vb = std::uint64_t{1} << v.index;
  if (u.side == Side::X) {
    out_x_[u.index] &= ~vb;
    in_y_[v.index] &= ~ub;
  } else {
    out_y_[u.index] &= ~vb;
    in_x_[v.index] &= ~ub;
  }
  --arc_count_;
  return true;
}

bool BipartiteDigraph::has_arc(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u.side == v.side) return false;
  return (out_bits(u) >> v.index) & 1;
}

std::uint64_t BipartiteDigraph::out_bits(VertexId v) const {
  check_vertex(v);
  return v.side == Side::X ? out_x_[v.index] : out_y_[v.index];
}

std::uint64_t BipartiteDigraph::in_bits(VertexId v) const {
  check_vertex(v);
  return v.side == Side::X ? in_x_[v.index] : in_y_[v.index];
}

int BipartiteDigraph::degree_in_set(VertexId v, const VertexSet& a) const {
  // Neighbors of v all live on the opposite side.
  const std::uint64_t opp = v.side == Side::X ? a.y_bits : a.x_bits;
  return std::popcount(out_bits(v) & opp) + std::popcount(in_bits(v) & opp);
}

std::vector<VertexId> BipartiteDigraph::out_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  const Side s = opposite(v.side);
  for_each_bit(out_bits(v), [&](int i) { out.push_back({s, i}); });
  return out;
}

std::vector<VertexId> BipartiteDigraph::in_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  const Side s = opposite(v.side);
  for_each_bit(in_bits(v), [&](int i) { out.push_back({s, i}); });
  return out;
}

std::uint64_t BipartiteDigraph::out_bits_of_side_set(Side side,
                                                     std::uint64_t bits) const {
  std::uint64_t acc = 0;
  const auto& rows = side == Side::X ? out_x_ : out_y_;
  for_each_bit(bits, [&](int i) { acc |= rows[i]; });
  return acc;
}

VertexSet BipartiteDigraph::out_neighbors_of_set(const VertexSet& s) const {
  if (s.x_bits != 0 && s.y_bits != 0) {
    throw std::invalid_argument("out_neighbors_of_set requires a one-sided set");
  }
  if ((s.x_bits | s.y_bits) & ~low_bits(a_)) {
    throw std::invalid_argument("vertex set index out of range");
  }
  VertexSet result;
  if (s.x_bits != 0) {
    result.y_bits = out_bits_of_side_set(Side::X, s.x_bits);
  } else {
    result.x_bits = out_bits_of_side_set(Side::Y, s.y_bits);
  }
  return result;
}

std::vector<Arc> BipartiteDigraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (int i = 0; i < a_; ++i) {
    for_each_bit(out_x_[i], [&](int j) { out.push_back({vx(i), vy(j)}); });
  }
  for (int j = 0; j < a_; ++j) {
    for_each_bit(out_y_[j], [&](int i) { out.push_back({vy(j), vx(i)}); });
  }
  return out;
}

std::vector<VertexId> BipartiteDigraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(2 * a_);
  for (int i = 0; i < a_; ++i) out.push_back(vx(i));
  for (int i = 0; i < a_; ++i) out.push_back(vy(i));
  return out;
}

}  // namespace bbd
