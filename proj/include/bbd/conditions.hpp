#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbd/digraph.hpp"

namespace bbd {

// Same-side pair {u, v} with a common out-neighbour z; the smallest such z
// (by side, index) is kept as the witness.
struct DominatingPair {
  VertexId u;
  VertexId v;
  VertexId z;
  friend constexpr auto operator<=>(const DominatingPair&, const DominatingPair&) = default;
};

// All dominating pairs, each unordered pair once, in lexicographic
// (side, index) order of (u, v).
std::vector<DominatingPair> dominating_pairs(const BipartiteDigraph& d);

bool has_partner(const BipartiteDigraph& d, VertexId v);

struct PairWitness {
  VertexId u;
  VertexId v;
  int d_u = 0;
  int d_v = 0;
  std::optional<VertexId> z;  // common out-neighbour, when the pair is dominating
};

struct VertexWitness {
  VertexId u;
  int d_u = 0;
  std::optional<VertexId> partner;
  std::optional<VertexId> z;
};

struct ConditionReport {
  std::string condition;
  std::map<std::string, long long> params;
  bool holds = true;
  bool vacuous = false;  // quantifier ranged over an empty set
  std::optional<PairWitness> pair_witness;
  std::optional<VertexWitness> vertex_witness;
};

// Condition B_k: every dominating pair {x, y} satisfies
// d(x) >= 2a-k and d(y) >= a+k, or the other way around.
ConditionReport check_condition_Bk(const BipartiteDigraph& d, int k);

// Every vertex with a partner has degree >= a+k. Implied by B_k whenever
// 2 <= k <= floor(a/2).
ConditionReport check_proposition_1(const BipartiteDigraph& d, int k);

// d(x)+d(y) >= bound over pairs with a common out- or in-neighbour.
ConditionReport check_sum_dominating(const BipartiteDigraph& d, long long bound);

// max{d(x), d(y)} >= bound over dominating pairs.
ConditionReport check_max_dominating(const BipartiteDigraph& d, long long bound);

// d(u)+d(v) >= bound over non-adjacent distinct pairs (no arc either way).
ConditionReport check_nonadjacent_sum(const BipartiteDigraph& d, long long bound);

// Minimal degree >= bound.
ConditionReport check_min_degree(const BipartiteDigraph& d, long long bound);

// d(x)+d(y) >= bound over distinct same-side pairs.
ConditionReport check_same_side_sum(const BipartiteDigraph& d, long long bound);

}  // namespace bbd
