#pragma once

#include <optional>
#include <vector>

#include "bbd/cycles.hpp"
#include "bbd/digraph.hpp"

namespace bbd {

enum class MatchDirection { XtoY, YtoX };

constexpr Side source_side(MatchDirection dir) {
  return dir == MatchDirection::XtoY ? Side::X : Side::Y;
}

const char* to_string(MatchDirection dir);

// Independent set of arcs all oriented in the stated direction.
struct Matching {
  MatchDirection direction = MatchDirection::XtoY;
  std::vector<Arc> pairs;
  int size() const { return static_cast<int>(pairs.size()); }
  bool perfect(int a) const { return size() == a; }
};

// Source-side set S with |N+(S)| < |S|, certifying that no perfect
// matching in the direction exists.
struct HallViolator {
  MatchDirection direction = MatchDirection::XtoY;
  std::uint64_t source_bits = 0;        // indices on the source side
  std::uint64_t neighborhood_bits = 0;  // N+(S) indices on the target side
  std::vector<VertexId> source_vertices() const;
  std::vector<VertexId> neighborhood_vertices() const;
};

// Vertex-disjoint cycles covering V(D).
struct CycleFactor {
  std::vector<Cycle> cycles;
};

// Exactly one of factor/violator is set.
struct CycleFactorResult {
  std::optional<CycleFactor> factor;
  MatchDirection missing_direction = MatchDirection::XtoY;
  std::optional<HallViolator> violator;
};

// Maximum matching by repeated augmenting-path search, scanning sources
// and targets in index order; deterministic.
Matching max_matching(const BipartiteDigraph& d, MatchDirection dir);

// nullopt when a perfect matching exists; otherwise the violator read
// off the final failed augmenting search.
std::optional<HallViolator> hall_violator(const BipartiteDigraph& d,
                                          MatchDirection dir);

// Ore: a cycle factor exists iff perfect matchings exist in both
// directions; their union has all out- and in-degrees 1 and decomposes
// uniquely into cycles, emitted from the smallest unvisited X index.
CycleFactorResult cycle_factor(const BipartiteDigraph& d);

// Independent oracle: tries all a! source-to-target bijections. a <= 8.
bool brute_force_has_perfect_matching(const BipartiteDigraph& d,
                                      MatchDirection dir);

bool verify_matching(const BipartiteDigraph& d, const Matching& m);
bool verify_hall_violator(const BipartiteDigraph& d, const HallViolator& v);
bool verify_cycle_factor(const BipartiteDigraph& d, const CycleFactor& f);

}  // namespace bbd
