#include "bbd/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>
#include <vector>

#include "bbd/conditions.hpp"
#include "bbd/connectivity.hpp"

namespace bbd {

namespace {

void add_two_cycle(BipartiteDigraph& d, VertexId u, VertexId v) {
  d.add_arc(u, v);
  d.add_arc(v, u);
}

std::uint64_t probability_threshold(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("arc_probability must lie in [0, 1]");
  }
  return static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53, exact
}

void fill_arcs(BipartiteDigraph& d, std::mt19937_64& eng, std::uint64_t threshold) {
  const int a = d.half_order();
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      if ((eng() >> 11) < threshold) d.add_arc(vx(i), vy(j));
    }
  }
  for (int j = 0; j < a; ++j) {
    for (int i = 0; i < a; ++i) {
      if ((eng() >> 11) < threshold) d.add_arc(vy(j), vx(i));
    }
  }
}

// Sorted per-side (out-degree, in-degree) profiles.
using DegreeProfile = std::vector<std::pair<int, int>>;

DegreeProfile side_profile(const BipartiteDigraph& d, Side side) {
  DegreeProfile profile;
  for (int i = 0; i < d.half_order(); ++i) {
    const VertexId v{side, i};
    profile.emplace_back(d.out_degree(v), d.in_degree(v));
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

std::uint64_t profile_hash(const DegreeProfile& px, const DegreeProfile& py) {
  // Order-insensitive between the two sides so that side-swapped twins
  // collide; FNV-1a over the sorted pair lists.
  auto fnv = [](const DegreeProfile& p) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto [o, i] : p) {
      h = (h ^ static_cast<std::uint64_t>(o * 131 + i)) * 1099511628211ull;
    }
    return h;
  };
  const std::uint64_t hx = fnv(px), hy = fnv(py);
  return std::min(hx, hy) ^ (std::max(hx, hy) * 0x9e3779b97f4a7c15ull);
}

std::uint64_t permute_bits(std::uint64_t bits, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for_each_bit(bits, [&](int j) { out |= std::uint64_t{1} << perm[j]; });
  return out;
}

}  // namespace

BipartiteDigraph build_D8() {
  BipartiteDigraph d(4);
  d.add_arc(vy(0), vx(1));
  d.add_arc(vy(1), vx(0));
  d.add_arc(vx(2), vy(3));
  d.add_arc(vx(3), vy(2));
  for (int i = 0; i < 4; ++i) add_two_cycle(d, vx(i), vy(i));
  add_two_cycle(d, vy(0), vx(2));
  add_two_cycle(d, vy(0), vx(3));
  add_two_cycle(d, vy(1), vx(2));
  add_two_cycle(d, vy(1), vx(3));
  return d;
}

BipartiteDigraph build_D10() {
  BipartiteDigraph d(5);
  // <{x1,x2,x3} u {y0,y4}> complete bipartite in both directions.
  for (int i : {1, 2, 3}) {
    for (int j : {0, 4}) add_two_cycle(d, vx(i), vy(j));
  }
  // {x1,x2,x3} -> {y1,y2,y3}.
  for (int i : {1, 2, 3}) {
    for (int j : {1, 2, 3}) d.add_arc(vx(i), vy(j));
  }
  // Two-cycles; the groups overlap, duplicate adds are no-ops.
  add_two_cycle(d, vx(4), vy(4));
  add_two_cycle(d, vx(0), vy(0));
  add_two_cycle(d, vx(3), vy(1));
  for (int i : {1, 2, 3}) add_two_cycle(d, vx(i), vy(i + 1));
  return d;
}

BipartiteDigraph directed_cycle(int a) {
  BipartiteDigraph d(a);
  for (int i = 0; i < a; ++i) {
    d.add_arc(vx(i), vy(i));
    d.add_arc(vy(i), vx((i + 1) % a));
  }
  return d;
}

BipartiteDigraph complete_bipartite(int a) {
  BipartiteDigraph d(a);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) add_two_cycle(d, vx(i), vy(j));
  }
  return d;
}

BipartiteDigraph random_digraph(const GeneratorConfig& config) {
  const std::uint64_t threshold = probability_threshold(config.arc_probability);
  BipartiteDigraph d(config.a);
  std::mt19937_64 eng(config.seed);
  fill_arcs(d, eng, threshold);
  return d;
}

std::optional<BipartiteDigraph> random_Bk_digraph(const GeneratorConfig& config) {
  const int a = config.a;
  const int k = config.k;
  if (a < 4 || a > BipartiteDigraph::kMaxHalfOrder) {
    throw std::invalid_argument("random_Bk_digraph requires 4 <= a <= 64");
  }
  if (k < 2 || k > a / 2) {
    throw std::invalid_argument("random_Bk_digraph requires 2 <= k <= floor(a/2)");
  }
  if (config.max_attempts < 1) {
    throw std::invalid_argument("max_attempts must be >= 1");
  }
  const std::uint64_t threshold = probability_threshold(config.arc_probability);
  std::mt19937_64 eng(config.seed);

  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    BipartiteDigraph d(a);
    fill_arcs(d, eng, threshold);
    for (int iter = 0; iter < config.repair_iterations; ++iter) {
      const ConditionReport report = check_condition_Bk(d, k);
      if (report.holds) break;
      const PairWitness& w = *report.pair_witness;
      const VertexId low = w.d_u <= w.d_v ? w.u : w.v;
      bool added = false;
      if (eng() % 4 != 0) {
        // Add one absent arc incident to the low-degree vertex.
        std::vector<Arc> absent;
        for (int j = 0; j < a; ++j) {
          const VertexId o{opposite(low.side), j};
          if (!d.has_arc(low, o)) absent.push_back({low, o});
          if (!d.has_arc(o, low)) absent.push_back({o, low});
        }
        if (!absent.empty()) {
          const Arc& arc = absent[eng() % absent.size()];
          d.add_arc(arc.tail, arc.head);
          added = true;
        }
      }
      if (!added) {
        // Break the pair instead: drop one arc into the shared out-neighbour.
        d.remove_arc(eng() % 2 == 0 ? w.u : w.v, *w.z);
      }
    }
    if (check_condition_Bk(d, k).holds && is_strongly_connected(d)) return d;
  }
  return std::nullopt;
}

bool is_isomorphic(const BipartiteDigraph& d1, const BipartiteDigraph& d2) {
  const int a = d1.half_order();
  if (a != d2.half_order()) {
    throw std::invalid_argument("is_isomorphic requires equal half-orders");
  }
  if (a > 6) {
    throw std::invalid_argument("is_isomorphic limited to a <= 6");
  }
  if (d1.arc_count() != d2.arc_count()) return false;

  const DegreeProfile x1 = side_profile(d1, Side::X), y1 = side_profile(d1, Side::Y);
  const DegreeProfile x2 = side_profile(d2, Side::X), y2 = side_profile(d2, Side::Y);

  std::vector<std::uint64_t> out_x1(a), out_y1(a), out_x2(a), out_y2(a);
  for (int i = 0; i < a; ++i) {
    out_x1[i] = d1.out_bits(vx(i));
    out_y1[i] = d1.out_bits(vy(i));
    out_x2[i] = d2.out_bits(vx(i));
    out_y2[i] = d2.out_bits(vy(i));
  }

  // perm_src maps d1 source indices to d2 indices of rows_src; likewise heads.
  auto matches = [&](const std::vector<std::uint64_t>& rows1_a,
                     const std::vector<std::uint64_t>& rows1_b,
                     const std::vector<std::uint64_t>& rows2_a,
                     const std::vector<std::uint64_t>& rows2_b,
                     const std::vector<int>& perm_a, const std::vector<int>& perm_b) {
    for (int i = 0; i < a; ++i) {
      if (permute_bits(rows1_a[i], perm_b) != rows2_a[perm_a[i]]) return false;
    }
    for (int j = 0; j < a; ++j) {
      if (permute_bits(rows1_b[j], perm_a) != rows2_b[perm_b[j]]) return false;
    }
    return true;
  };

  auto search = [&](const std::vector<std::uint64_t>& rows1_a,
                    const std::vector<std::uint64_t>& rows1_b,
                    const std::vector<std::uint64_t>& rows2_a,
                    const std::vector<std::uint64_t>& rows2_b) {
    std::vector<int> pa(a), pb(a);
    std::iota(pa.begin(), pa.end(), 0);
    do {
      std::iota(pb.begin(), pb.end(), 0);
      do {
        if (matches(rows1_a, rows1_b, rows2_a, rows2_b, pa, pb)) return true;
      } while (std::next_permutation(pb.begin(), pb.end()));
    } while (std::next_permutation(pa.begin(), pa.end()));
    return false;
  };

  // Side-preserving: X1 -> X2, Y1 -> Y2.
  if (x1 == x2 && y1 == y2 &&
      search(out_x1, out_y1, out_x2, out_y2)) {
    return true;
  }
  // Side-swapping: X1 -> Y2, Y1 -> X2.
  if (x1 == y2 && y1 == x2 &&
      search(out_x1, out_y1, out_y2, out_x2)) {
    return true;
  }
  return false;
}

EnumerationStats enumerate_Bk(int a, int k, long long budget, DedupMode dedup,
                              const std::function<bool(const BipartiteDigraph&)>& emit) {
  if (a != 4 && a != 5) {
    throw std::invalid_argument("enumerate_Bk supports a = 4 or a = 5 only");
  }
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");

  const int total_arcs = 2 * a * a;
  const long long min_bound = std::min<long long>(2LL * a - k, static_cast<long long>(a) + k);
  EnumerationStats stats;
  BipartiteDigraph d(a);
  bool stop = false;

  std::unordered_map<std::uint64_t, std::vector<BipartiteDigraph>> iso_cache;

  // Arc t: t < a^2 is X(t/a) -> Y(t%a); otherwise Y((t-a^2)/a) -> X((t-a^2)%a).
  auto arc_at = [&](int t) -> Arc {
    if (t < a * a) return {vx(t / a), vy(t % a)};
    const int s = t - a * a;
    return {vy(s / a), vx(s % a)};
  };

  auto prune = [&](int pos) {
    // Undecided incident-arc counts per vertex.
    std::vector<int> und_out_x(a, 0), und_in_x(a, 0), und_out_y(a, 0), und_in_y(a, 0);
    for (int t = pos; t < total_arcs; ++t) {
      const Arc arc = arc_at(t);
      if (arc.tail.side == Side::X) {
        ++und_out_x[arc.tail.index];
        ++und_in_y[arc.head.index];
      } else {
        ++und_out_y[arc.tail.index];
        ++und_in_x[arc.head.index];
      }
    }
    auto max_deg = [&](VertexId v) {
      const int und = v.side == Side::X ? und_out_x[v.index] + und_in_x[v.index]
                                        : und_out_y[v.index] + und_in_y[v.index];
      return d.degree(v) + und;
    };
    for (int i = 0; i < a; ++i) {
      if (d.out_degree(vx(i)) + und_out_x[i] == 0) return true;
      if (d.in_degree(vx(i)) + und_in_x[i] == 0) return true;
      if (d.out_degree(vy(i)) + und_out_y[i] == 0) return true;
      if (d.in_degree(vy(i)) + und_in_y[i] == 0) return true;
    }
    for (const DominatingPair& p : dominating_pairs(d)) {
      const long long mu = max_deg(p.u), mv = max_deg(p.v);
      if (mu < min_bound || mv < min_bound) return true;
      const long long high = 2LL * a - k, low = static_cast<long long>(a) + k;
      if (!((mu >= high && mv >= low) || (mu >= low && mv >= high))) return true;
    }
    return false;
  };

  auto handle_leaf = [&] {
    if (!is_strongly_connected(d) || !check_condition_Bk(d, k).holds) return;
    if (dedup != DedupMode::None) {
      const std::uint64_t h =
          profile_hash(side_profile(d, Side::X), side_profile(d, Side::Y));
      auto& bucket = iso_cache[h];
      if (dedup == DedupMode::DegreeHash) {
        if (!bucket.empty()) return;
        bucket.push_back(d);
      } else {
        for (const BipartiteDigraph& seen : bucket) {
          if (is_isomorphic(d, seen)) return;
        }
        bucket.push_back(d);
      }
    }
    ++stats.emitted;
    if (!emit(d)) {
      stop = true;
      stats.complete = false;  // caller cut the stream short
    }
  };

  auto dfs = [&](auto&& self, int pos) -> void {
    if (stop) return;
    if (++stats.nodes_explored > budget) {
      stats.complete = false;
      stop = true;
      return;
    }
    if (prune(pos)) return;
    if (pos == total_arcs) {
      handle_leaf();
      return;
    }
    const Arc arc = arc_at(pos);
    d.add_arc(arc.tail, arc.head);
    self(self, pos + 1);
    d.remove_arc(arc.tail, arc.head);
    if (stop) return;
    self(self, pos + 1);
  };

  dfs(dfs, 0);
  return stats;
}

}  // namespace bbd
