#pragma once

#include <optional>

#include "bbd/digraph.hpp"

namespace bbd {

// Ordered pair with no directed path from `from` to `to`.
struct UnreachablePair {
  VertexId from;
  VertexId to;
};

struct StrongConnectivityReport {
  bool strong = false;
  int component_count = 0;
  std::optional<UnreachablePair> witness;  // present iff not strong
};

// Tarjan SCC decomposition; strong iff a single component of size 2a.
StrongConnectivityReport strong_connectivity(const BipartiteDigraph& d);

bool is_strongly_connected(const BipartiteDigraph& d);

// Cut vertex u with V(D) = E u F u {u} and no UG edge between E and F.
// When UG(D) is disconnected, u is arbitrary and E/F split whole components.
struct CutVertexWitness {
  VertexId cut;
  VertexSet e_side;
  VertexSet f_side;
};

struct TwoConnectivityReport {
  bool two_connected = false;
  bool connected = false;
  std::optional<CutVertexWitness> witness;  // present iff not two_connected
};

// 2-connectivity of the underlying undirected graph UG(D), via one
// articulation-point DFS. Requires order >= 3.
TwoConnectivityReport underlying_two_connectivity(const BipartiteDigraph& d);

bool underlying_is_two_connected(const BipartiteDigraph& d);

}  // namespace bbd
