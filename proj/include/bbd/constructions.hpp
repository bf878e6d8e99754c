#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "bbd/digraph.hpp"

namespace bbd {

// Named generator: std::mt19937_64 seeded with `seed`; one 64-bit draw
// per candidate arc in canonical order (X tails by (tail, head) index,
// then Y tails); an arc is included iff draw >> 11 < arc_probability * 2^53.
// The scale by 2^53 is exact in IEEE doubles, so identical configs give
// identical digraphs on every platform.
inline constexpr std::string_view kGeneratorName = "mt19937_64/bbd-arc-stream-v1";

struct GeneratorConfig {
  int a = 4;
  int k = 2;
  std::uint64_t seed = 0;
  double arc_probability = 0.5;
  int max_attempts = 64;
  int repair_iterations = 300;
};

// The order-8 reference digraph of half-order 4: 20 arcs, degrees split
// 7/7/3/3 per side, strong, not Hamiltonian.
BipartiteDigraph build_D8();

// The order-10 reference digraph of half-order 5: 28 arcs, strong, with
// d(x0) = d(x4) = 2, no cycle of length 8, and UG(D) not 2-connected.
BipartiteDigraph build_D10();

// x0 y0 x1 y1 ... x(a-1) y(a-1) x0.
BipartiteDigraph directed_cycle(int a);

// All 2a^2 cross arcs.
BipartiteDigraph complete_bipartite(int a);

BipartiteDigraph random_digraph(const GeneratorConfig& config);

// A strong digraph satisfying condition B_k, or nullopt after
// max_attempts. Each attempt samples via the arc stream and then repairs
// B_k violations: mostly add an absent arc at the violating pair's
// low-degree vertex, occasionally delete an arc into the shared
// out-neighbour. Requires a >= 4 and 2 <= k <= floor(a/2).
std::optional<BipartiteDigraph> random_Bk_digraph(const GeneratorConfig& config);

// Brute force over the a! * a! * 2 side-preserving and side-swapping
// relabelings. Requires equal half-orders and a <= 6.
bool is_isomorphic(const BipartiteDigraph& d1, const BipartiteDigraph& d2);

enum class DedupMode { None, DegreeHash, Isomorphism };

struct EnumerationStats {
  long long nodes_explored = 0;
  long long emitted = 0;
  bool complete = true;  // false when the node budget ran out
};

// Depth-first search over arc subsets (include branch first), emitting
// every strong digraph satisfying B_k found within `budget` explored
// nodes. Partial assignments are cut when a partnered vertex can no
// longer reach degree min(2a-k, a+k), when a dominating pair's bounds
// are unsatisfiable, or when some vertex can no longer get both an
// in-arc and an out-arc. The emit callback may return false to stop.
// a must be 4 or 5.
EnumerationStats enumerate_Bk(int a, int k, long long budget, DedupMode dedup,
                              const std::function<bool(const BipartiteDigraph&)>& emit);

}  // namespace bbd
