#include "bbd/cycles.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

namespace bbd {

namespace {

void check_solver_cap(const BipartiteDigraph& d) {
  if (d.order() > kSolverMaxOrder) {
    throw CapExceeded("cap exceeded: order " + std::to_string(d.order()) +
                      " above exact-solver cap " + std::to_string(kSolverMaxOrder));
  }
}

bool vertex_in_range(const BipartiteDigraph& d, VertexId v) {
  return v.index >= 0 && v.index < d.half_order();
}

struct LevelEntry {
  std::uint32_t mask;  // X bits 0..a-1, Y bits a..2a-1
  std::uint32_t cur;   // current-vertex index bits within the level's side
};

// BFS distance (number of arcs) from `cur` to X_start through interior
// vertices restricted to the avail masks. INT_MAX when unreachable.
int dist_to_start(const BipartiteDigraph& d, VertexId cur, int start_index,
                  std::uint64_t avail_x, std::uint64_t avail_y) {
  std::uint64_t frontier = std::uint64_t{1} << cur.index;
  Side side = cur.side;
  std::uint64_t vis_x = side == Side::X ? frontier : 0;
  std::uint64_t vis_y = side == Side::Y ? frontier : 0;
  const std::uint64_t closers = d.in_bits(vx(start_index));
  int steps = 0;
  while (frontier != 0) {
    ++steps;
    if (side == Side::Y && (frontier & closers) != 0) return steps;
    const std::uint64_t expanded = d.out_bits_of_side_set(side, frontier);
    side = opposite(side);
    std::uint64_t& vis = side == Side::X ? vis_x : vis_y;
    frontier = expanded & (side == Side::X ? avail_x : avail_y) & ~vis;
    vis |= frontier;
  }
  return INT_MAX;
}

}  // namespace

bool verify_cycle(const BipartiteDigraph& d, const Cycle& c) {
  const int m = c.length();
  if (m < 2 || m % 2 != 0) return false;
  VertexSet seen;
  for (const VertexId v : c.vertices) {
    if (!vertex_in_range(d, v)) return false;
    if (seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int t = 0; t < m; ++t) {
    const VertexId u = c.vertices[t];
    const VertexId v = c.vertices[(t + 1) % m];
    if (v.side != opposite(u.side)) return false;
    if (!d.has_arc(u, v)) return false;
  }
  return true;
}

bool verify_bypass(const BipartiteDigraph& d, const Bypass& b) {
  const int r = static_cast<int>(b.path.size());
  if (r < 3) return false;
  if (!verify_cycle(d, b.host)) return false;
  VertexSet host_set;
  for (const VertexId v : b.host.vertices) host_set.insert(v);
  const VertexId first = b.path.front(), last = b.path.back();
  if (first == last) return false;
  if (!host_set.contains(first) || !host_set.contains(last)) return false;
  VertexSet seen;
  for (int t = 0; t < r; ++t) {
    const VertexId v = b.path[t];
    if (!vertex_in_range(d, v)) return false;
    if (seen.contains(v)) return false;
    seen.insert(v);
    if (t > 0 && t < r - 1 && host_set.contains(v)) return false;
    if (t > 0 && !d.has_arc(b.path[t - 1], v)) return false;
  }
  return true;
}

std::optional<Cycle> hamiltonian_cycle_dp(const BipartiteDigraph& d,
                                          std::size_t max_entries) {
  check_solver_cap(d);
  const int a = d.half_order();
  const int n = 2 * a;
  const std::uint32_t full = static_cast<std::uint32_t>(low_bits(n));
  const std::uint32_t a_mask = static_cast<std::uint32_t>(low_bits(a));

  std::vector<std::vector<LevelEntry>> levels(n);
  levels[0] = {{1u, 1u}};
  std::size_t total_entries = 1;

  for (int level = 0; level + 1 < n; ++level) {
    const Side side = level % 2 == 0 ? Side::X : Side::Y;
    std::unordered_map<std::uint32_t, std::uint32_t> next;
    next.reserve(levels[level].size() * 2 + 8);
    for (const LevelEntry& e : levels[level]) {
      const std::uint32_t used_x = e.mask & a_mask;
      const std::uint32_t used_y = e.mask >> a;
      for_each_bit(e.cur, [&](int i) {
        if (side == Side::X) {
          const std::uint64_t nb = d.out_bits(vx(i)) & ~std::uint64_t{used_y};
          for_each_bit(nb, [&](int j) {
            next[e.mask | (1u << (a + j))] |= 1u << j;
          });
        } else {
          const std::uint64_t nb = d.out_bits(vy(i)) & ~std::uint64_t{used_x};
          for_each_bit(nb, [&](int j) { next[e.mask | (1u << j)] |= 1u << j; });
        }
      });
    }
    if (next.empty()) return std::nullopt;
    total_entries += next.size();
    if (total_entries > max_entries) {
      throw std::length_error("hamiltonian dp state budget exceeded");
    }
    auto& out = levels[level + 1];
    out.reserve(next.size());
    for (const auto& [mask, cur] : next) out.push_back({mask, cur});
    std::sort(out.begin(), out.end(),
              [](const LevelEntry& l, const LevelEntry& r) { return l.mask < r.mask; });
  }

  const std::uint32_t closers = static_cast<std::uint32_t>(d.in_bits(vx(0)));
  std::uint32_t finals = 0;
  for (const LevelEntry& e : levels[n - 1]) {
    if (e.mask == full) finals = e.cur & closers;
  }
  if (finals == 0) return std::nullopt;

  // Walk the levels backwards, always taking the smallest predecessor.
  std::vector<VertexId> verts(n);
  verts[n - 1] = vy(std::countr_zero(finals));
  std::uint32_t mask = full;
  for (int level = n - 1; level >= 1; --level) {
    const VertexId v = verts[level];
    const std::uint32_t vbit =
        v.side == Side::X ? (1u << v.index) : (1u << (a + v.index));
    const std::uint32_t prev_mask = mask & ~vbit;
    const auto& prev_level = levels[level - 1];
    const auto it = std::lower_bound(
        prev_level.begin(), prev_level.end(), prev_mask,
        [](const LevelEntry& e, std::uint32_t m) { return e.mask < m; });
    const std::uint32_t cands =
        it->cur & static_cast<std::uint32_t>(d.in_bits(v));
    const Side prev_side = (level - 1) % 2 == 0 ? Side::X : Side::Y;
    verts[level - 1] = {prev_side, std::countr_zero(cands)};
    mask = prev_mask;
  }
  return Cycle{verts};
}

std::optional<Cycle> hamiltonian_cycle_branch_bound(const BipartiteDigraph& d) {
  check_solver_cap(d);
  const int a = d.half_order();
  const int n = 2 * a;
  const std::uint64_t all = low_bits(a);
  if (d.out_bits(vx(0)) == 0 || d.in_bits(vx(0)) == 0) return std::nullopt;

  std::vector<VertexId> verts(n);
  verts[0] = vx(0);
  std::uint64_t used_x = 1, used_y = 0;

  auto feasible = [&](VertexId cur) {
    const std::uint64_t unused_x = all & ~used_x;
    const std::uint64_t unused_y = all & ~used_y;
    const std::uint64_t cur_bit = std::uint64_t{1} << cur.index;
    // Every unused vertex still needs an available successor and predecessor.
    bool ok = true;
    for_each_bit(unused_x, [&](int i) {
      if (!ok) return;
      if ((d.out_bits(vx(i)) & unused_y) == 0) ok = false;
      std::uint64_t preds = d.in_bits(vx(i)) & unused_y;
      if (cur.side == Side::Y) preds |= d.in_bits(vx(i)) & cur_bit;
      if (preds == 0) ok = false;
    });
    if (!ok) return false;
    for_each_bit(unused_y, [&](int i) {
      if (!ok) return;
      if ((d.out_bits(vy(i)) & (unused_x | 1u)) == 0) ok = false;
      std::uint64_t preds = d.in_bits(vy(i)) & unused_x;
      if (cur.side == Side::X) preds |= d.in_bits(vy(i)) & cur_bit;
      if (preds == 0) ok = false;
    });
    if (!ok) return false;
    // The rest of the cycle must reach every unused vertex from cur and
    // then close into X0 from some unused Y.
    std::uint64_t frontier = cur_bit;
    Side side = cur.side;
    std::uint64_t reach_x = side == Side::X ? frontier : 0;
    std::uint64_t reach_y = side == Side::Y ? frontier : 0;
    while (frontier != 0) {
      const std::uint64_t expanded = d.out_bits_of_side_set(side, frontier);
      side = opposite(side);
      if (side == Side::X) {
        frontier = expanded & unused_x & ~reach_x;
        reach_x |= frontier;
      } else {
        frontier = expanded & unused_y & ~reach_y;
        reach_y |= frontier;
      }
    }
    if ((unused_x & ~reach_x) != 0 || (unused_y & ~reach_y) != 0) return false;
    return (reach_y & unused_y & d.in_bits(vx(0))) != 0;
  };

  auto dfs = [&](auto&& self, VertexId cur, int depth) -> bool {
    if (depth == n) return d.has_arc(cur, vx(0));
    if (!feasible(cur)) return false;
    const std::uint64_t nb =
        d.out_bits(cur) & ~(cur.side == Side::X ? used_y : used_x);
    bool found = false;
    for_each_bit(nb, [&](int j) {
      if (found) return;
      const VertexId w{opposite(cur.side), j};
      (w.side == Side::X ? used_x : used_y) |= std::uint64_t{1} << j;
      verts[depth] = w;
      if (self(self, w, depth + 1)) {
        found = true;
      } else {
        (w.side == Side::X ? used_x : used_y) &= ~(std::uint64_t{1} << j);
      }
    });
    return found;
  };

  if (dfs(dfs, vx(0), 1)) return Cycle{verts};
  return std::nullopt;
}

std::optional<Cycle> hamiltonian_cycle(const BipartiteDigraph& d) {
  check_solver_cap(d);
  try {
    return hamiltonian_cycle_dp(d);
  } catch (const std::length_error&) {
    return hamiltonian_cycle_branch_bound(d);
  }
}

std::optional<Cycle> cycle_of_length(const BipartiteDigraph& d, int m) {
  if (m % 2 != 0) {
    throw std::invalid_argument("cycle length must be even, got " + std::to_string(m));
  }
  if (m < 2 || m > d.order()) {
    throw std::invalid_argument("cycle length " + std::to_string(m) +
                                " outside [2, " + std::to_string(d.order()) + "]");
  }
  check_solver_cap(d);
  const int a = d.half_order();
  const int half = m / 2;
  const std::uint64_t all = low_bits(a);

  for (int start = 0; start + half <= a; ++start) {
    // Canonical start: the smallest cycle vertex; larger X indices and
    // any Y indices may follow.
    const std::uint64_t allowed_x = all & ~low_bits(start + 1);
    std::uint64_t used_x = std::uint64_t{1} << start;
    std::uint64_t used_y = 0;
    std::vector<VertexId> path(m);
    path[0] = vx(start);

    auto dfs = [&](auto&& self, VertexId cur, int cnt) -> bool {
      if (cnt == m) return d.has_arc(cur, vx(start));
      const std::uint64_t avail_x = allowed_x & ~used_x;
      const std::uint64_t avail_y = all & ~used_y;
      if (std::popcount(avail_x) < half - std::popcount(used_x)) return false;
      if (std::popcount(avail_y) < half - std::popcount(used_y)) return false;
      // cnt vertices used = cnt-1 arcs; m-cnt+1 remain, closing arc included.
      if (dist_to_start(d, cur, start, avail_x, avail_y) > m - cnt + 1) return false;
      const std::uint64_t nb =
          d.out_bits(cur) & (cur.side == Side::X ? avail_y : avail_x);
      bool found = false;
      for_each_bit(nb, [&](int j) {
        if (found) return;
        const VertexId w{opposite(cur.side), j};
        (w.side == Side::X ? used_x : used_y) |= std::uint64_t{1} << j;
        path[cnt] = w;
        if (self(self, w, cnt + 1)) {
          found = true;
        } else {
          (w.side == Side::X ? used_x : used_y) &= ~(std::uint64_t{1} << j);
        }
      });
      return found;
    };

    if (dfs(dfs, vx(start), 1)) return Cycle{path};
  }
  return std::nullopt;
}

std::set<int> even_cycle_spectrum(const BipartiteDigraph& d) {
  check_solver_cap(d);
  std::set<int> spectrum;
  for (int m = 2; m <= d.order(); m += 2) {
    if (cycle_of_length(d, m).has_value()) spectrum.insert(m);
  }
  return spectrum;
}

std::optional<Cycle> exists_nonhamiltonian_cycle_geq4(const BipartiteDigraph& d) {
  check_solver_cap(d);
  for (int m = 4; m <= d.order() - 2; m += 2) {
    if (auto c = cycle_of_length(d, m)) return c;
  }
  return std::nullopt;
}

std::optional<Bypass> find_bypass(const BipartiteDigraph& d, const Cycle& host) {
  if (!verify_cycle(d, host)) {
    throw std::invalid_argument("invalid host cycle");
  }
  if (host.length() > d.order() - 1) {
    throw std::invalid_argument("bypass requires a vertex outside the cycle");
  }
  const int a = d.half_order();
  std::uint64_t cyc_x = 0, cyc_y = 0;
  for (const VertexId v : host.vertices) {
    (v.side == Side::X ? cyc_x : cyc_y) |= std::uint64_t{1} << v.index;
  }
  std::vector<VertexId> on_cycle = host.vertices;
  std::sort(on_cycle.begin(), on_cycle.end());

  const std::uint64_t free_x = low_bits(a) & ~cyc_x;
  const std::uint64_t free_y = low_bits(a) & ~cyc_y;

  for (const VertexId u : on_cycle) {
    for (const VertexId v : on_cycle) {
      if (u == v) continue;
      // Layered BFS through off-cycle vertices; parents for path recovery.
      std::vector<int> parent_x(a, -2), parent_y(a, -2);
      std::uint64_t frontier = d.out_bits(u) & (u.side == Side::X ? free_y : free_x);
      Side side = opposite(u.side);
      for_each_bit(frontier, [&](int j) {
        (side == Side::X ? parent_x : parent_y)[j] = -1;  // parent is u
      });
      std::uint64_t seen_x = side == Side::X ? frontier : 0;
      std::uint64_t seen_y = side == Side::Y ? frontier : 0;
      while (frontier != 0) {
        // Close into v if possible; smallest index on the first closing layer.
        if (side == opposite(v.side)) {
          const std::uint64_t closing = frontier & d.in_bits(v);
          if (closing != 0) {
            std::vector<VertexId> path{v};
            VertexId w{side, std::countr_zero(closing)};
            while (true) {
              path.push_back(w);
              const int p = (w.side == Side::X ? parent_x : parent_y)[w.index];
              if (p == -1) break;
              w = {opposite(w.side), p};
            }
            path.push_back(u);
            std::reverse(path.begin(), path.end());
            return Bypass{path, host};
          }
        }
        std::uint64_t next = 0;
        for_each_bit(frontier, [&](int i) {
          const std::uint64_t nb = d.out_bits({side, i}) &
                                   (side == Side::X ? free_y : free_x);
          for_each_bit(nb, [&](int j) {
            const std::uint64_t bit = std::uint64_t{1} << j;
            std::uint64_t& seen = side == Side::X ? seen_y : seen_x;
            if ((seen & bit) == 0) {
              seen |= bit;
              next |= bit;
              (side == Side::X ? parent_y : parent_x)[j] = i;
            }
          });
        });
        frontier = next;
        side = opposite(side);
      }
    }
  }
  return std::nullopt;
}

std::vector<Cycle> enumerate_cycles(const BipartiteDigraph& d, int max_length,
                                    std::size_t max_count) {
  check_solver_cap(d);
  std::vector<Cycle> cycles;
  if (max_count == 0 || max_length < 2) return cycles;
  const int a = d.half_order();
  const int cap = std::min(max_length, d.order());
  const std::uint64_t all = low_bits(a);

  for (int start = 0; start < a && cycles.size() < max_count; ++start) {
    const std::uint64_t allowed_x = all & ~low_bits(start + 1);
    std::uint64_t used_x = std::uint64_t{1} << start;
    std::uint64_t used_y = 0;
    std::vector<VertexId> path{vx(start)};

    auto dfs = [&](auto&& self, VertexId cur) -> bool {
      const int cnt = static_cast<int>(path.size());
      if (cur.side == Side::Y && d.has_arc(cur, vx(start))) {
        cycles.push_back(Cycle{path});
        if (cycles.size() >= max_count) return true;
      }
      if (cnt >= cap) return false;
      const std::uint64_t avail_x = allowed_x & ~used_x;
      const std::uint64_t avail_y = all & ~used_y;
      if (dist_to_start(d, cur, start, avail_x, avail_y) > cap - cnt + 1) return false;
      const std::uint64_t nb =
          d.out_bits(cur) & (cur.side == Side::X ? avail_y : avail_x);
      bool stop = false;
      for_each_bit(nb, [&](int j) {
        if (stop) return;
        const VertexId w{opposite(cur.side), j};
        (w.side == Side::X ? used_x : used_y) |= std::uint64_t{1} << j;
        path.push_back(w);
        stop = self(self, w);
        path.pop_back();
        (w.side == Side::X ? used_x : used_y) &= ~(std::uint64_t{1} << j);
      });
      return stop;
    };

    dfs(dfs, vx(start));
  }
  return cycles;
}

}  // namespace bbd
