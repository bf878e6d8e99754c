#include "bbd/connectivity.hpp"

#include <algorithm>

namespace bbd {

namespace {

// Global vertex ids: X_i -> i, Y_j -> a + j.
VertexId from_gid(int gid, int a) { return gid < a ? vx(gid) : vy(gid - a); }

std::vector<std::vector<int>> out_adjacency(const BipartiteDigraph& d) {
  const int a = d.half_order();
  std::vector<std::vector<int>> adj(2 * a);
  for (int i = 0; i < a; ++i) {
    for_each_bit(d.out_bits(vx(i)), [&](int j) { adj[i].push_back(a + j); });
    for_each_bit(d.out_bits(vy(i)), [&](int j) { adj[a + i].push_back(j); });
  }
  return adj;
}

std::vector<std::vector<int>> undirected_adjacency(const BipartiteDigraph& d) {
  const int a = d.half_order();
  std::vector<std::vector<int>> adj(2 * a);
  for (int i = 0; i < a; ++i) {
    for_each_bit(d.out_bits(vx(i)) | d.in_bits(vx(i)), [&](int j) {
      adj[i].push_back(a + j);
      adj[a + j].push_back(i);
    });
  }
  return adj;
}

// Iterative Tarjan; components are numbered in pop order, so component 0
// is a sink of the condensation.
std::vector<int> tarjan_components(const std::vector<std::vector<int>>& adj,
                                   int& component_count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1), num(n, -1), low(n, 0);
  std::vector<int> stack;
  std::vector<char> on_stack(n, 0);
  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  int counter = 0;
  component_count = 0;

  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    frames.push_back({root, 0});
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[f.v].size()) {
        const int w = adj[f.v][f.next++];
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        const int v = f.v;
        if (low[v] == num[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = component_count;
          } while (w != v);
          ++component_count;
        }
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
      }
    }
  }
  return comp;
}

std::vector<int> component_of(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  int c = 0;
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = c;
    queue.assign(1, root);
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (int w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = c;
          queue.push_back(w);
        }
      }
    }
    ++c;
  }
  return comp;
}

}  // namespace

StrongConnectivityReport strong_connectivity(const BipartiteDigraph& d) {
  const int a = d.half_order();
  StrongConnectivityReport report;
  const auto adj = out_adjacency(d);
  const auto comp = tarjan_components(adj, report.component_count);
  report.strong = report.component_count == 1;
  if (!report.strong) {
    // Component 0 is a sink: nothing outside it is reachable from it.
    int from = -1, to = -1;
    for (int v = 0; v < 2 * a; ++v) {
      if (comp[v] == 0 && from < 0) from = v;
      if (comp[v] != 0 && to < 0) to = v;
    }
    report.witness = UnreachablePair{from_gid(from, a), from_gid(to, a)};
  }
  return report;
}

bool is_strongly_connected(const BipartiteDigraph& d) {
  return strong_connectivity(d).strong;
}

TwoConnectivityReport underlying_two_connectivity(const BipartiteDigraph& d) {
  const int a = d.half_order();
  const int n = 2 * a;
  if (n < 3) {
    throw std::invalid_argument("two-connectivity requires order >= 3");
  }
  const auto adj = undirected_adjacency(d);
  TwoConnectivityReport report;

  const auto ug_comp = component_of(adj);
  const int ug_comps = 1 + *std::max_element(ug_comp.begin(), ug_comp.end());
  report.connected = ug_comps == 1;

  if (!report.connected) {
    // Whole components already split with no crossing edges; any cut
    // vertex choice keeping both sides non-empty is a valid witness.
    const int c0 = ug_comp[0];
    int c0_size = 0;
    for (int v = 0; v < n; ++v) c0_size += ug_comp[v] == c0;
    CutVertexWitness w;
    if (c0_size >= 2) {
      w.cut = from_gid(0, a);
      for (int v = 1; v < n; ++v) {
        (ug_comp[v] == c0 ? w.e_side : w.f_side).insert(from_gid(v, a));
      }
    } else {
      int u = -1;
      for (int v = 0; v < n; ++v) {
        if (ug_comp[v] != c0) {
          u = v;
          break;
        }
      }
      w.cut = from_gid(u, a);
      for (int v = 0; v < n; ++v) {
        if (v == u) continue;
        (ug_comp[v] == c0 ? w.e_side : w.f_side).insert(from_gid(v, a));
      }
    }
    report.witness = w;
    return report;
  }

  // Articulation points via iterative low-link DFS from vertex 0.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> articulation(n, 0);
  struct Frame {
    int v;
    std::size_t next;
    int children = 0;
  };
  std::vector<Frame> frames;
  int counter = 0;
  frames.push_back({0, 0, 0});
  disc[0] = low[0] = counter++;
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next < adj[f.v].size()) {
      const int w = adj[f.v][f.next++];
      if (disc[w] < 0) {
        parent[w] = f.v;
        ++f.children;
        disc[w] = low[w] = counter++;
        frames.push_back({w, 0, 0});
      } else if (w != parent[f.v]) {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      const int v = f.v;
      const int children = f.children;
      frames.pop_back();
      if (frames.empty()) {
        if (children >= 2) articulation[v] = 1;
      } else {
        const int p = frames.back().v;
        low[p] = std::min(low[p], low[v]);
        if (parent[p] != -1 && low[v] >= disc[p]) articulation[p] = 1;
      }
    }
  }

  int cut = -1;
  for (int v = 0; v < n; ++v) {
    if (articulation[v]) {
      cut = v;
      break;
    }
  }
  if (cut < 0) {
    report.two_connected = true;
    return report;
  }

  // Split V \ {cut} into one component vs the rest of UG - cut.
  std::vector<char> seen(n, 0);
  seen[cut] = 1;
  int start = cut == 0 ? 1 : 0;
  std::vector<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  CutVertexWitness w;
  w.cut = from_gid(cut, a);
  for (int v = 0; v < n; ++v) {
    if (v == cut) continue;
    (seen[v] ? w.e_side : w.f_side).insert(from_gid(v, a));
  }
  report.witness = w;
  return report;
}

bool underlying_is_two_connected(const BipartiteDigraph& d) {
  return underlying_two_connectivity(d).two_connected;
}

}  // namespace bbd
