#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "bbd/digraph.hpp"

namespace bbd {

// Directed cycle v1 v2 ... vm (closing arc vm -> v1 implied). In a
// bipartite digraph m is even, m >= 2, and sides alternate.
struct Cycle {
  std::vector<VertexId> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Path p1 ... pr with r >= 3 whose endpoints lie on the host cycle and
// whose interior avoids it.
struct Bypass {
  std::vector<VertexId> path;
  Cycle host;
};

bool verify_cycle(const BipartiteDigraph& d, const Cycle& c);
bool verify_bypass(const BipartiteDigraph& d, const Bypass& b);

// Exact solvers reject orders above this cap.
inline constexpr int kSolverMaxOrder = 28;

// Exact Hamiltonicity. Primary algorithm: level-by-level bitmask dynamic
// programming over used-vertex subsets (bipartite alternation keeps only
// balanced subsets alive); falls back to branch-and-bound if the DP
// frontier would exceed its memory budget. Deterministic output.
std::optional<Cycle> hamiltonian_cycle(const BipartiteDigraph& d);

// The two routes, exposed separately so they can be cross-checked.
// The DP throws std::length_error if `max_entries` states are exceeded.
std::optional<Cycle> hamiltonian_cycle_dp(const BipartiteDigraph& d,
                                          std::size_t max_entries = std::size_t{1} << 24);
std::optional<Cycle> hamiltonian_cycle_branch_bound(const BipartiteDigraph& d);

// A cycle of exactly m vertices, or nullopt. m must be even and in
// [2, 2a]; odd m is rejected (bipartite digraphs have no odd cycles).
// Canonical-start search: the smallest cycle vertex is the start.
std::optional<Cycle> cycle_of_length(const BipartiteDigraph& d, int m);

// { m even : a cycle of length m exists }.
std::set<int> even_cycle_spectrum(const BipartiteDigraph& d);

// A cycle with 4 <= m <= 2a-2 vertices, if any.
std::optional<Cycle> exists_nonhamiltonian_cycle_geq4(const BipartiteDigraph& d);

// First bypass of the host cycle under a fixed scan order: for each
// ordered pair (u, v) of distinct cycle vertices, a shortest u->v path
// whose interior avoids the cycle. Host must be valid and leave at
// least one vertex outside.
std::optional<Bypass> find_bypass(const BipartiteDigraph& d, const Cycle& host);

// Up to `max_count` distinct cycles of length <= max_length, canonical
// start order. Each cycle is reported exactly once.
std::vector<Cycle> enumerate_cycles(const BipartiteDigraph& d, int max_length,
                                    std::size_t max_count);

}  // namespace bbd
