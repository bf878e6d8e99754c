#include "bbd/reports.hpp"

#include <sstream>

namespace bbd {

std::string format_vertices(const std::vector<VertexId>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(vs[i]);
  }
  return out;
}

std::vector<VertexId> parse_vertex_list(std::string_view text) {
  std::vector<VertexId> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(parse_vertex(token));
  return out;
}

Json to_json(const ConditionReport& report) {
  Json j;
  j["condition"] = report.condition;
  j["params"] = report.params;
  j["holds"] = report.holds;
  j["vacuous"] = report.vacuous;
  j["witness"] = nullptr;
  if (report.pair_witness) {
    const PairWitness& w = *report.pair_witness;
    Json wj;
    wj["u"] = to_string(w.u);
    wj["v"] = to_string(w.v);
    wj["d_u"] = w.d_u;
    wj["d_v"] = w.d_v;
    if (w.z) wj["z"] = to_string(*w.z);
    j["witness"] = wj;
  } else if (report.vertex_witness) {
    const VertexWitness& w = *report.vertex_witness;
    Json wj;
    wj["u"] = to_string(w.u);
    wj["d_u"] = w.d_u;
    if (w.partner) wj["partner"] = to_string(*w.partner);
    if (w.z) wj["z"] = to_string(*w.z);
    j["witness"] = wj;
  }
  return j;
}

Json to_json(const StrongConnectivityReport& report) {
  Json j;
  j["strong"] = report.strong;
  j["components"] = report.component_count;
  if (report.witness) {
    j["witness"] = {{"from", to_string(report.witness->from)},
                    {"to", to_string(report.witness->to)}};
  }
  return j;
}

Json to_json(const TwoConnectivityReport& report) {
  Json j;
  j["two_connected"] = report.two_connected;
  j["connected"] = report.connected;
  if (report.witness) {
    j["witness"] = {{"cut", to_string(report.witness->cut)},
                    {"E", format_vertices(report.witness->e_side.to_vector())},
                    {"F", format_vertices(report.witness->f_side.to_vector())}};
  }
  return j;
}

Json to_json(const Matching& m) {
  Json arcs = Json::array();
  for (const Arc& arc : m.pairs) {
    arcs.push_back(to_string(arc.tail) + " -> " + to_string(arc.head));
  }
  return Json{{"direction", to_string(m.direction)},
              {"size", m.size()},
              {"arcs", arcs}};
}

Json to_json(const HallViolator& v) {
  return Json{{"direction", to_string(v.direction)},
              {"S", format_vertices(v.source_vertices())},
              {"N_plus", format_vertices(v.neighborhood_vertices())},
              {"S_size", std::popcount(v.source_bits)},
              {"N_plus_size", std::popcount(v.neighborhood_bits)}};
}

Json to_json(const CycleFactorResult& result) {
  Json j;
  if (result.factor) {
    Json cycles = Json::array();
    for (const Cycle& c : result.factor->cycles) {
      cycles.push_back(format_vertices(c.vertices));
    }
    j["factor"] = {{"cycles", cycles},
                   {"count", result.factor->cycles.size()}};
  } else {
    j["factor"] = nullptr;
    j["missing_direction"] = to_string(result.missing_direction);
    j["violator"] = to_json(*result.violator);
  }
  return j;
}

Json to_json(const Cycle& c) { return format_vertices(c.vertices); }

Json to_json(const Bypass& b) {
  return Json{{"path", format_vertices(b.path)},
              {"host", format_vertices(b.host.vertices)}};
}

Json to_json(const std::vector<DominatingPair>& pairs) {
  Json j = Json::array();
  for (const DominatingPair& p : pairs) {
    j.push_back(Json{{"u", to_string(p.u)},
                     {"v", to_string(p.v)},
                     {"z", to_string(p.z)}});
  }
  return j;
}

}  // namespace bbd
