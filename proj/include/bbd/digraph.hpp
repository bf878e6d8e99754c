#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bbd {

// Raised when a text input (file, vertex token, cycle string) is malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exact solver is asked for an order above its cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side : std::uint8_t { X = 0, Y = 1 };

constexpr Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }
constexpr char side_char(Side s) { return s == Side::X ? 'X' : 'Y'; }

struct VertexId {
  Side side = Side::X;
  int index = 0;
  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

constexpr VertexId vx(int i) { return {Side::X, i}; }
constexpr VertexId vy(int i) { return {Side::Y, i}; }

std::string to_string(VertexId v);

// Accepts tokens like "X0" or "y12". Range against a digraph is checked by the caller.
VertexId parse_vertex(std::string_view token);

struct Arc {
  VertexId tail;
  VertexId head;
  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

constexpr std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

template <typename F>
void for_each_bit(std::uint64_t bits, F&& f) {
  while (bits != 0) {
    f(std::countr_zero(bits));
    bits &= bits - 1;
  }
}

// A subset of V(D): one bit per index on each side.
struct VertexSet {
  std::uint64_t x_bits = 0;
  std::uint64_t y_bits = 0;

  bool contains(VertexId v) const {
    const std::uint64_t bits = v.side == Side::X ? x_bits : y_bits;
    return (bits >> v.index) & 1;
  }
  void insert(VertexId v) {
    (v.side == Side::X ? x_bits : y_bits) |= std::uint64_t{1} << v.index;
  }
  int size() const { return std::popcount(x_bits) + std::popcount(y_bits); }
  bool empty() const { return x_bits == 0 && y_bits == 0; }
  std::vector<VertexId> to_vector() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// Balanced bipartite digraph with partite sets X and Y of equal size a.
// Adjacency is a fixed-width bit vector per vertex over opposite-side
// indices, so arc tests and neighborhood unions are constant time.
// Mutation needs exclusive access; all queries are const and side-effect
// free, so a built digraph can be shared across threads.
class BipartiteDigraph {
 public:
  static constexpr int kMaxHalfOrder = 64;

  explicit BipartiteDigraph(int a);

  int half_order() const { return a_; }
  int order() const { return 2 * a_; }
  int arc_count() const { return arc_count_; }

  // Returns false (and changes nothing) when the arc is already present.
  bool add_arc(VertexId u, VertexId v);
  // Returns false when the arc was not present.
  bool remove_arc(VertexId u, VertexId v);
  bool has_arc(VertexId u, VertexId v) const;

  // Bits over opposite-side indices.
  std::uint64_t out_bits(VertexId v) const;
  std::uint64_t in_bits(VertexId v) const;

  int out_degree(VertexId v) const { return std::popcount(out_bits(v)); }
  int in_degree(VertexId v) const { return std::popcount(in_bits(v)); }
  int degree(VertexId v) const { return out_degree(v) + in_degree(v); }

  // d(v, A) = |A cap N+(v)| + |A cap N-(v)|.
  int degree_in_set(VertexId v, const VertexSet& a) const;

  std::vector<VertexId> out_neighbors(VertexId v) const;
  std::vector<VertexId> in_neighbors(VertexId v) const;

  // Union of out-neighborhoods over a set of same-side vertices given
  // as an index mask. Result is a mask over the opposite side.
  std::uint64_t out_bits_of_side_set(Side side, std::uint64_t bits) const;

  // N+(S) for a one-sided S; mixed-side sets are rejected.
  VertexSet out_neighbors_of_set(const VertexSet& s) const;

  std::vector<Arc> arcs() const;           // canonical order: X tails, then Y tails
  std::vector<VertexId> vertices() const;  // X0..X(a-1), Y0..Y(a-1)

  friend bool operator==(const BipartiteDigraph&, const BipartiteDigraph&) = default;

 private:
  void check_vertex(VertexId v) const;

  int a_ = 0;
  int arc_count_ = 0;
  std::vector<std::uint64_t> out_x_, in_x_, out_y_, in_y_;
};

}  // namespace bbd
