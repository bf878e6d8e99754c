#include "bbd/conditions.hpp"

#include <algorithm>

namespace bbd {

namespace {

void require_bound(long long bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
}

void require_k(int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
}

// Visits same-side index pairs (i < j) for both sides, X first.
template <typename F>
void for_each_same_side_pair(int a, F&& f) {
  for (Side side : {Side::X, Side::Y}) {
    for (int i = 0; i < a; ++i) {
      for (int j = i + 1; j < a; ++j) {
        if (!f(VertexId{side, i}, VertexId{side, j})) return;
      }
    }
  }
}

}  // namespace

std::vector<DominatingPair> dominating_pairs(const BipartiteDigraph& d) {
  std::vector<DominatingPair> pairs;
  for_each_same_side_pair(d.half_order(), [&](VertexId u, VertexId v) {
    const std::uint64_t common = d.out_bits(u) & d.out_bits(v);
    if (common != 0) {
      pairs.push_back({u, v, VertexId{opposite(u.side), std::countr_zero(common)}});
    }
    return true;
  });
  return pairs;
}

bool has_partner(const BipartiteDigraph& d, VertexId v) {
  const std::uint64_t mine = d.out_bits(v);
  if (mine == 0) return false;
  for (int i = 0; i < d.half_order(); ++i) {
    if (i == v.index) continue;
    if (mine & d.out_bits(VertexId{v.side, i})) return true;
  }
  return false;
}

ConditionReport check_condition_Bk(const BipartiteDigraph& d, int k) {
  require_k(k);
  const int a = d.half_order();
  const long long high = 2LL * a - k;
  const long long low = static_cast<long long>(a) + k;
  ConditionReport report;
  report.condition = "Bk";
  report.params["k"] = k;
  const auto pairs = dominating_pairs(d);
  report.vacuous = pairs.empty();
  for (const DominatingPair& p : pairs) {
    const long long du = d.degree(p.u), dv = d.degree(p.v);
    const bool ok = (du >= high && dv >= low) || (du >= low && dv >= high);
    if (!ok) {
      report.holds = false;
      report.pair_witness = PairWitness{p.u, p.v, static_cast<int>(du),
                                        static_cast<int>(dv), p.z};
      break;
    }
  }
  return report;
}

ConditionReport check_proposition_1(const BipartiteDigraph& d, int k) {
  require_k(k);
  const long long low = static_cast<long long>(d.half_order()) + k;
  ConditionReport report;
  report.condition = "proposition1";
  report.params["k"] = k;
  report.vacuous = true;
  // Keyed by the first dominating pair touching each vertex.
  for (const DominatingPair& p : dominating_pairs(d)) {
    report.vacuous = false;
    for (auto [v, partner] : {std::pair{p.u, p.v}, std::pair{p.v, p.u}}) {
      if (d.degree(v) < low) {
        report.holds = false;
        VertexWitness w{v, d.degree(v), partner, p.z};
        if (!report.vertex_witness || w.u < report.vertex_witness->u) {
          report.vertex_witness = w;
        }
      }
    }
  }
  return report;
}

ConditionReport check_sum_dominating(const BipartiteDigraph& d, long long bound) {
  require_bound(bound);
  ConditionReport report;
  report.condition = "sum_dominating";
  report.params["bound"] = bound;
  report.vacuous = true;
  for_each_same_side_pair(d.half_order(), [&](VertexId u, VertexId v) {
    const std::uint64_t common_out = d.out_bits(u) & d.out_bits(v);
    const std::uint64_t common_in = d.in_bits(u) & d.in_bits(v);
    if (common_out == 0 && common_in == 0) return true;
    report.vacuous = false;
    if (d.degree(u) + d.degree(v) < bound) {
      report.holds = false;
      std::optional<VertexId> z;
      if (common_out != 0) {
        z = VertexId{opposite(u.side), std::countr_zero(common_out)};
      }
      report.pair_witness = PairWitness{u, v, d.degree(u), d.degree(v), z};
      return false;
    }
    return true;
  });
  return report;
}

ConditionReport check_max_dominating(const BipartiteDigraph& d, long long bound) {
  require_bound(bound);
  ConditionReport report;
  report.condition = "max_dominating";
  report.params["bound"] = bound;
  const auto pairs = dominating_pairs(d);
  report.vacuous = pairs.empty();
  for (const DominatingPair& p : pairs) {
    if (std::max(d.degree(p.u), d.degree(p.v)) < bound) {
      report.holds = false;
      report.pair_witness = PairWitness{p.u, p.v, d.degree(p.u), d.degree(p.v), p.z};
      break;
    }
  }
  return report;
}

ConditionReport check_nonadjacent_sum(const BipartiteDigraph& d, long long bound) {
  require_bound(bound);
  ConditionReport report;
  report.condition = "nonadjacent_sum";
  report.params["bound"] = bound;
  report.vacuous = true;
  const auto verts = d.vertices();
  for (std::size_t i = 0; i < verts.size() && report.holds; ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const VertexId u = verts[i], v = verts[j];
      if (u.side != v.side && (d.has_arc(u, v) || d.has_arc(v, u))) continue;
      report.vacuous = false;
      if (d.degree(u) + d.degree(v) < bound) {
        report.holds = false;
        report.pair_witness = PairWitness{u, v, d.degree(u), d.degree(v), std::nullopt};
        break;
      }
    }
  }
  return report;
}

ConditionReport check_min_degree(const BipartiteDigraph& d, long long bound) {
  require_bound(bound);
  ConditionReport report;
  report.condition = "min_degree";
  report.params["bound"] = bound;
  for (const VertexId v : d.vertices()) {
    if (d.degree(v) < bound) {
      report.holds = false;
      report.vertex_witness = VertexWitness{v, d.degree(v), std::nullopt, std::nullopt};
      break;
    }
  }
  return report;
}

ConditionReport check_same_side_sum(const BipartiteDigraph& d, long long bound) {
  require_bound(bound);
  ConditionReport report;
  report.condition = "same_side_sum";
  report.params["bound"] = bound;
  report.vacuous = d.half_order() < 2;
  for_each_same_side_pair(d.half_order(), [&](VertexId u, VertexId v) {
    if (d.degree(u) + d.degree(v) < bound) {
      report.holds = false;
      report.pair_witness = PairWitness{u, v, d.degree(u), d.degree(v), std::nullopt};
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace bbd
