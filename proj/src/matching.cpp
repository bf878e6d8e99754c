#include "bbd/matching.hpp"

#include <algorithm>

namespace bbd {

namespace {

// Out-bits of source index i in the matching direction.
std::uint64_t source_out(const BipartiteDigraph& d, MatchDirection dir, int i) {
  return d.out_bits({source_side(dir), i});
}

struct KuhnState {
  std::vector<int> match_of_target;  // target index -> source index, -1 free
  int size = 0;
};

KuhnState run_kuhn(const BipartiteDigraph& d, MatchDirection dir) {
  const int a = d.half_order();
  KuhnState state;
  state.match_of_target.assign(a, -1);
  for (int s = 0; s < a; ++s) {
    std::uint64_t visited = 0;
    auto augment = [&](auto&& self, int src) -> bool {
      bool found = false;
      for_each_bit(source_out(d, dir, src), [&](int t) {
        if (found) return;
        const std::uint64_t tb = std::uint64_t{1} << t;
        if (visited & tb) return;
        visited |= tb;
        if (state.match_of_target[t] < 0 || self(self, state.match_of_target[t])) {
          state.match_of_target[t] = src;
          found = true;
        }
      });
      return found;
    };
    if (augment(augment, s)) ++state.size;
  }
  return state;
}

}  // namespace

const char* to_string(MatchDirection dir) {
  return dir == MatchDirection::XtoY ? "XtoY" : "YtoX";
}

std::vector<VertexId> HallViolator::source_vertices() const {
  std::vector<VertexId> out;
  const Side s = source_side(direction);
  for_each_bit(source_bits, [&](int i) { out.push_back({s, i}); });
  return out;
}

std::vector<VertexId> HallViolator::neighborhood_vertices() const {
  std::vector<VertexId> out;
  const Side s = opposite(source_side(direction));
  for_each_bit(neighborhood_bits, [&](int i) { out.push_back({s, i}); });
  return out;
}

Matching max_matching(const BipartiteDigraph& d, MatchDirection dir) {
  const int a = d.half_order();
  const KuhnState state = run_kuhn(d, dir);
  Matching m;
  m.direction = dir;
  const Side src = source_side(dir);
  std::vector<std::pair<int, int>> arcs;  // (source, target)
  for (int t = 0; t < a; ++t) {
    if (state.match_of_target[t] >= 0) arcs.emplace_back(state.match_of_target[t], t);
  }
  std::sort(arcs.begin(), arcs.end());
  for (auto [s, t] : arcs) {
    m.pairs.push_back({VertexId{src, s}, VertexId{opposite(src), t}});
  }
  return m;
}

std::optional<HallViolator> hall_violator(const BipartiteDigraph& d,
                                          MatchDirection dir) {
  const int a = d.half_order();
  const KuhnState state = run_kuhn(d, dir);
  if (state.size == a) return std::nullopt;

  std::uint64_t matched_source = 0;
  for (int t = 0; t < a; ++t) {
    if (state.match_of_target[t] >= 0) {
      matched_source |= std::uint64_t{1} << state.match_of_target[t];
    }
  }
  int free_source = std::countr_zero(~matched_source & low_bits(a));

  // Alternating reachability from the free source: forward along any
  // arc, backward along matching arcs. All reached targets are matched,
  // so |N+(S)| = |S| - 1.
  std::uint64_t s_bits = std::uint64_t{1} << free_source;
  std::uint64_t t_bits = 0;
  std::vector<int> stack{free_source};
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for_each_bit(source_out(d, dir, s) & ~t_bits, [&](int t) {
      t_bits |= std::uint64_t{1} << t;
      const int s2 = state.match_of_target[t];
      if (s2 >= 0 && ((s_bits >> s2) & 1) == 0) {
        s_bits |= std::uint64_t{1} << s2;
        stack.push_back(s2);
      }
    });
  }
  return HallViolator{dir, s_bits, t_bits};
}

CycleFactorResult cycle_factor(const BipartiteDigraph& d) {
  CycleFactorResult result;
  for (MatchDirection dir : {MatchDirection::XtoY, MatchDirection::YtoX}) {
    if (auto violator = hall_violator(d, dir)) {
      result.missing_direction = dir;
      result.violator = std::move(violator);
      return result;
    }
  }
  const int a = d.half_order();
  const Matching m1 = max_matching(d, MatchDirection::XtoY);
  const Matching m2 = max_matching(d, MatchDirection::YtoX);
  // Functional successor arrays over the union of the two matchings.
  std::vector<int> succ_x(a, -1), succ_y(a, -1);
  for (const Arc& arc : m1.pairs) succ_x[arc.tail.index] = arc.head.index;
  for (const Arc& arc : m2.pairs) succ_y[arc.tail.index] = arc.head.index;

  CycleFactor factor;
  std::vector<char> visited(a, 0);
  for (int start = 0; start < a; ++start) {
    if (visited[start]) continue;
    Cycle cycle;
    int x = start;
    do {
      visited[x] = 1;
      cycle.vertices.push_back(vx(x));
      const int y = succ_x[x];
      cycle.vertices.push_back(vy(y));
      x = succ_y[y];
    } while (x != start);
    factor.cycles.push_back(std::move(cycle));
  }
  result.factor = std::move(factor);
  return result;
}

bool brute_force_has_perfect_matching(const BipartiteDigraph& d,
                                      MatchDirection dir) {
  const int a = d.half_order();
  if (a > 8) {
    throw std::invalid_argument("brute-force matching oracle limited to a <= 8");
  }
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, int s) -> bool {
    if (s == a) return true;
    bool found = false;
    for_each_bit(source_out(d, dir, s) & ~used, [&](int t) {
      if (found) return;
      used |= std::uint64_t{1} << t;
      found = self(self, s + 1);
      used &= ~(std::uint64_t{1} << t);
    });
    return found;
  };
  return rec(rec, 0);
}

bool verify_matching(const BipartiteDigraph& d, const Matching& m) {
  std::uint64_t used_src = 0, used_tgt = 0;
  const Side src = source_side(m.direction);
  for (const Arc& arc : m.pairs) {
    if (arc.tail.side != src || arc.head.side != opposite(src)) return false;
    if (arc.tail.index < 0 || arc.tail.index >= d.half_order()) return false;
    if (arc.head.index < 0 || arc.head.index >= d.half_order()) return false;
    if (!d.has_arc(arc.tail, arc.head)) return false;
    const std::uint64_t sb = std::uint64_t{1} << arc.tail.index;
    const std::uint64_t tb = std::uint64_t{1} << arc.head.index;
    if ((used_src & sb) || (used_tgt & tb)) return false;
    used_src |= sb;
    used_tgt |= tb;
  }
  return true;
}

bool verify_hall_violator(const BipartiteDigraph& d, const HallViolator& v) {
  if (v.source_bits == 0) return false;
  if (v.source_bits & ~low_bits(d.half_order())) return false;
  const std::uint64_t expected =
      d.out_bits_of_side_set(source_side(v.direction), v.source_bits);
  if (expected != v.neighborhood_bits) return false;
  return std::popcount(v.neighborhood_bits) < std::popcount(v.source_bits);
}

bool verify_cycle_factor(const BipartiteDigraph& d, const CycleFactor& f) {
  VertexSet covered;
  int total = 0;
  for (const Cycle& c : f.cycles) {
    if (!verify_cycle(d, c)) return false;
    for (const VertexId v : c.vertices) {
      if (covered.contains(v)) return false;
      covered.insert(v);
    }
    total += c.length();
  }
  return total == d.order();
}

}  // namespace bbd
