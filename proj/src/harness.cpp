#include "bbd/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

#include "bbd/conditions.hpp"
#include "bbd/connectivity.hpp"
#include "bbd/cycles.hpp"
#include "bbd/io.hpp"
#include "bbd/matching.hpp"
#include "bbd/version.hpp"

namespace bbd {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

std::string dump_doc(const Json& j) { return j.dump(2) + "\n"; }

CmdResult usage_error(const std::string& message, const HarnessOptions& opts) {
  if (opts.format == OutputFormat::Text) {
    return {2, "error: " + message + "\n"};
  }
  return {2, dump_doc(Json{{"error", message}})};
}

std::optional<std::string> wang_range_note(int a, int k) {
  if (a % 2 == 1 && k == a / 2) {
    return "k equals floor(a/2) with a odd; the stated range k <= a/2 is "
           "interpreted as k <= floor(a/2)";
  }
  return std::nullopt;
}

std::vector<std::string> check_warnings(const std::string& condition, int a, int k) {
  std::vector<std::string> w;
  if (condition == "Bk" || condition == "proposition1") {
    if (k < 2 || k > a / 2) {
      w.push_back("k=" + std::to_string(k) +
                  " outside the problem range 2 <= k <= floor(a/2)");
    } else if (auto note = wang_range_note(a, k)) {
      w.push_back(*note);
    }
  }
  return w;
}

std::string text_witness(const ConditionReport& r) {
  if (r.pair_witness) {
    const PairWitness& w = *r.pair_witness;
    std::string s = " witness {" + to_string(w.u) + "," + to_string(w.v) + "} d(" +
                    to_string(w.u) + ")=" + std::to_string(w.d_u) + " d(" +
                    to_string(w.v) + ")=" + std::to_string(w.d_v);
    if (w.z) s += " z=" + to_string(*w.z);
    return s + "}";
  }
  if (r.vertex_witness) {
    const VertexWitness& w = *r.vertex_witness;
    std::string s = " witness " + to_string(w.u) + " d=" + std::to_string(w.d_u);
    if (w.partner) s += " partner=" + to_string(*w.partner);
    return s;
  }
  return "";
}

// ---------------------------------------------------------------------------
// Experiment machinery

struct InstanceChecks {
  long long checked = 0;
  long long generation_failures = 0;
  long long filtered = 0;
  long long hamiltonian = 0;
  std::vector<Json> violations;
  std::set<std::string> distinct;
};

Json violation_entry(const BipartiteDigraph& d, const std::string& property,
                     Json certificate, const std::string& severity) {
  return Json{{"type", "violation"},
              {"digraph", serialize(d)},
              {"property", property},
              {"certificate", std::move(certificate)},
              {"severity", severity}};
}

// B_k + strongness are the generator's contract; a violation here is a
// bug in the generator, not a finding.
void check_generator_contract(const BipartiteDigraph& d, int k, InstanceChecks& acc) {
  const ConditionReport bk = check_condition_Bk(d, k);
  if (!bk.holds) {
    acc.violations.push_back(violation_entry(
        d, "generator_contract_Bk", to_json(bk), "implementation_bug"));
  }
  const StrongConnectivityReport sc = strong_connectivity(d);
  if (!sc.strong) {
    acc.violations.push_back(violation_entry(
        d, "generator_contract_strong", to_json(sc), "implementation_bug"));
  }
}

void check_thm1_10(const BipartiteDigraph& d, InstanceChecks& acc) {
  const CycleFactorResult r = cycle_factor(d);
  if (!r.factor) {
    acc.violations.push_back(violation_entry(d, "cycle_factor_exists", to_json(r),
                                             "implementation_bug"));
  } else if (!verify_cycle_factor(d, *r.factor)) {
    acc.violations.push_back(violation_entry(d, "cycle_factor_valid", to_json(r),
                                             "implementation_bug"));
  }
}

void check_lemma4_1(const BipartiteDigraph& d, InstanceChecks& acc) {
  if (hamiltonian_cycle(d).has_value()) {
    ++acc.filtered;  // the lemma speaks about non-Hamiltonian digraphs
    return;
  }
  for (const VertexId v : d.vertices()) {
    if (!has_partner(d, v)) {
      acc.violations.push_back(violation_entry(
          d, "partner_exists",
          Json{{"vertex_without_partner", to_string(v)}}, "implementation_bug"));
      return;
    }
  }
}

bool is_directed_cycle(const BipartiteDigraph& d) {
  for (const VertexId v : d.vertices()) {
    if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
  }
  return is_strongly_connected(d);
}

void check_lemma4_2(const BipartiteDigraph& d, InstanceChecks& acc) {
  if (is_directed_cycle(d)) {
    ++acc.filtered;
    return;
  }
  const auto cycle = exists_nonhamiltonian_cycle_geq4(d);
  if (!cycle) {
    acc.violations.push_back(violation_entry(
        d, "nonhamiltonian_cycle_geq4", Json{{"found", nullptr}},
        "implementation_bug"));
  } else if (!verify_cycle(d, *cycle)) {
    acc.violations.push_back(violation_entry(d, "cycle_valid", to_json(*cycle),
                                             "implementation_bug"));
  }
}

void check_lemma4_3(const BipartiteDigraph& d, InstanceChecks& acc) {
  const TwoConnectivityReport tc = underlying_two_connectivity(d);
  if (!tc.two_connected) {
    acc.violations.push_back(violation_entry(d, "ug_two_connected", to_json(tc),
                                             "implementation_bug"));
  }
  // Sample cycles of length <= 2a-2 and demand a bypass for each.
  for (const Cycle& c : enumerate_cycles(d, d.order() - 2, 20)) {
    const auto bypass = find_bypass(d, c);
    if (!bypass) {
      acc.violations.push_back(violation_entry(
          d, "bypass_exists", Json{{"cycle", format_vertices(c.vertices)}},
          "implementation_bug"));
    } else if (!verify_bypass(d, *bypass)) {
      acc.violations.push_back(violation_entry(d, "bypass_valid", to_json(*bypass),
                                               "implementation_bug"));
    }
  }
}

void check_wang_instance(const BipartiteDigraph& d, int k, InstanceChecks& acc) {
  acc.distinct.insert(serialize(d));
  const auto ham = hamiltonian_cycle(d);
  if (ham) {
    ++acc.hamiltonian;
    return;
  }
  // A strong B_k digraph with no Hamiltonian cycle answers the open
  // problem in the negative; emit every certificate needed to re-check it.
  Json certificate;
  certificate["Bk"] = to_json(check_condition_Bk(d, k));
  certificate["strong"] = to_json(strong_connectivity(d));
  certificate["hamiltonian_search"] = "exact";
  certificate["hamiltonian"] = nullptr;
  acc.violations.push_back(
      violation_entry(d, "hamiltonicity", certificate, "research_finding"));
}

// Violations sort by the offending digraph's canonical serialization,
// then by property, so reports are independent of worker interleaving.
void sort_violations(std::vector<Json>& violations) {
  std::sort(violations.begin(), violations.end(), [](const Json& l, const Json& r) {
    const auto key = [](const Json& v) {
      return std::pair(v["digraph"].get<std::string>(), v["property"].get<std::string>());
    };
    return key(l) < key(r);
  });
}

void merge(InstanceChecks& into, InstanceChecks& from) {
  into.checked += from.checked;
  into.generation_failures += from.generation_failures;
  into.filtered += from.filtered;
  into.hamiltonian += from.hamiltonian;
  into.violations.insert(into.violations.end(),
                         std::make_move_iterator(from.violations.begin()),
                         std::make_move_iterator(from.violations.end()));
  into.distinct.merge(from.distinct);
}

// Runs fn(worker_acc, instance_index) over [0, count), strided across
// workers; the aggregate is independent of the worker count.
template <typename Fn>
InstanceChecks run_instances(long long count, Fn&& fn) {
  const int workers = worker_count(count);
  std::vector<InstanceChecks> accs(workers);
  if (workers <= 1) {
    for (long long i = 0; i < count; ++i) fn(accs[0], i);
  } else {
    std::vector<std::thread> threads;
    std::mutex error_mutex;
    std::optional<std::string> error;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (long long i = w; i < count; i += workers) fn(accs[w], i);
        } catch (const std::exception& e) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = e.what();
        }
      });
    }
    for (auto& t : threads) t.join();
    if (error) throw std::runtime_error(*error);
  }
  InstanceChecks total;
  for (auto& acc : accs) merge(total, acc);
  sort_violations(total.violations);
  return total;
}

Json config_echo(const std::string& experiment, const ExperimentConfig& config) {
  Json j;
  j["type"] = "config";
  j["experiment"] = experiment;
  j["version"] = std::string(kVersion);
  Json c;
  c["a"] = config.a;
  c["k"] = config.k;
  c["seed"] = config.seed;
  c["count"] = config.count;
  c["arc_probability"] = config.arc_probability;
  c["max_attempts"] = config.max_attempts;
  c["repair_iterations"] = config.repair_iterations;
  c["generator"] = std::string(kGeneratorName);
  if (auto note = wang_range_note(config.a, config.k)) c["k_note"] = *note;
  j["config"] = c;
  return j;
}

CmdResult emit_experiment(const Json& config_line, const InstanceChecks& total,
                          Json summary, long long wall_ms,
                          const HarnessOptions& opts) {
  summary["type"] = "summary";
  if (!opts.stable) summary["wall_ms"] = wall_ms;
  const int exit_code = total.violations.empty() ? 0 : 1;
  if (opts.format == OutputFormat::Text) {
    std::string out = config_line["experiment"].get<std::string>() + ":";
    for (const auto& [key, value] : summary.items()) {
      if (key == "type") continue;
      out += " " + key + "=" + value.dump();
    }
    out += "\n";
    for (const Json& v : total.violations) {
      out += "violation " + v["property"].get<std::string>() + " severity=" +
             v["severity"].get<std::string>() + "\n" + v["digraph"].get<std::string>();
    }
    return {exit_code, out};
  }
  std::string out = config_line.dump() + "\n";
  for (const Json& v : total.violations) out += v.dump() + "\n";
  out += summary.dump() + "\n";
  return {exit_code, out};
}

std::optional<std::string> validate_wang_range(const ExperimentConfig& config) {
  if (config.a < 4) {
    return "order 2a >= 8 required (a >= 4), got a=" + std::to_string(config.a);
  }
  if (config.k < 2 || config.k > config.a / 2) {
    return "k must satisfy 2 <= k <= floor(a/2), got k=" + std::to_string(config.k) +
           " with a=" + std::to_string(config.a);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reference suite (Examples 1 and 2 plus their extension claims)

struct Assertion {
  std::string name;
  bool pass;
  std::string detail;
};

void assert_that(std::vector<Assertion>& list, const std::string& name, bool pass,
                 const std::string& detail = "") {
  list.push_back({name, pass, pass ? "" : detail});
}

std::vector<Assertion> paper_assertions(bool mutate) {
  std::vector<Assertion> checks;
  BipartiteDigraph d8 = build_D8();
  if (mutate) d8.remove_arc(vx(0), vy(0));
  const BipartiteDigraph d10 = build_D10();

  // D(8)
  {
    const std::vector<int> expected_x = {3, 3, 7, 7}, expected_y = {7, 7, 3, 3};
    bool degrees_ok = true;
    for (int i = 0; i < 4; ++i) {
      degrees_ok &= d8.degree(vx(i)) == expected_x[i];
      degrees_ok &= d8.degree(vy(i)) == expected_y[i];
    }
    assert_that(checks, "d8_degree_profile", degrees_ok,
                "degrees differ from 7/7/3/3 split");

    const std::vector<std::pair<VertexId, VertexId>> expected_pairs = {
        {vx(0), vx(2)}, {vx(0), vx(3)}, {vx(1), vx(2)}, {vx(1), vx(3)},
        {vx(2), vx(3)}, {vy(0), vy(1)}, {vy(0), vy(2)}, {vy(0), vy(3)},
        {vy(1), vy(2)}, {vy(1), vy(3)}};
    const auto pairs = dominating_pairs(d8);
    bool pairs_ok = pairs.size() == expected_pairs.size();
    for (std::size_t i = 0; pairs_ok && i < pairs.size(); ++i) {
      pairs_ok = pairs[i].u == expected_pairs[i].first &&
                 pairs[i].v == expected_pairs[i].second;
    }
    assert_that(checks, "d8_dominating_pairs", pairs_ok,
                "got " + std::to_string(pairs.size()) + " pairs");

    assert_that(checks, "d8_strong", is_strongly_connected(d8), "not strong");
    assert_that(checks, "d8_strongness_cycle",
                verify_cycle(d8, Cycle{{vx(0), vy(0), vx(3), vy(2), vx(2), vy(1)}}),
                "witness cycle x0 y0 x3 y2 x2 y1 does not verify");
    assert_that(checks, "d8_in_neighbourhoods",
                d8.in_bits(vx(0)) == 0b0011 && d8.in_bits(vx(1)) == 0b0011,
                "N-(x0) or N-(x1) differs from {y0, y1}");
    assert_that(checks, "d8_not_hamiltonian", !hamiltonian_cycle(d8).has_value(),
                "a Hamiltonian cycle was found");
    assert_that(checks, "d8_max_dominating_2a_minus_1",
                check_max_dominating(d8, 7).holds, "max degree bound 7 fails");
  }

  // D(10)
  {
    assert_that(checks, "d10_low_degrees",
                d10.degree(vx(0)) == 2 && d10.degree(vx(4)) == 2,
                "d(x0) or d(x4) is not 2");
    assert_that(checks, "d10_strong", is_strongly_connected(d10), "not strong");
    assert_that(checks, "d10_no_cycle_length_8",
                !cycle_of_length(d10, 8).has_value(), "found a cycle of length 8");
    assert_that(checks, "d10_cycle_length_6",
                verify_cycle(d10, Cycle{{vx(1), vy(1), vx(3), vy(3), vx(2), vy(2)}}),
                "cycle x1 y1 x3 y3 x2 y2 does not verify");
    assert_that(checks, "d10_ug_not_two_connected",
                !underlying_is_two_connected(d10), "UG is 2-connected");
    assert_that(checks, "d10_max_dominating_2a_minus_2",
                check_max_dominating(d10, 8).holds, "max degree bound 8 fails");
    assert_that(checks, "d10_not_hamiltonian", !hamiltonian_cycle(d10).has_value(),
                "a Hamiltonian cycle was found");
  }

  // Extension claim: any new arc incident to x0 or x4 creates an 8-cycle.
  {
    bool all_create = true;
    std::string failing;
    for (const int xi : {0, 4}) {
      for (int j = 0; j < 5; ++j) {
        for (const bool outgoing : {true, false}) {
          const Arc arc = outgoing ? Arc{vx(xi), vy(j)} : Arc{vy(j), vx(xi)};
          BipartiteDigraph extended = d10;
          if (!extended.add_arc(arc.tail, arc.head)) continue;  // already present
          if (!cycle_of_length(extended, 8).has_value()) {
            all_create = false;
            failing = to_string(arc.tail) + " -> " + to_string(arc.head);
          }
        }
      }
    }
    assert_that(checks, "d10_extension_arcs_give_8_cycle", all_create,
                "adding " + failing + " creates no 8-cycle");
  }

  // Extension claim: adding any non-empty set of arcs y_i -> x_j
  // (i, j in {1,2,3}) leaves a dominating pair with max degree <= 2a-3.
  {
    std::vector<Arc> absent;
    for (int i : {1, 2, 3}) {
      for (int j : {1, 2, 3}) {
        if (!d10.has_arc(vy(i), vx(j))) absent.push_back({vy(i), vx(j)});
      }
    }
    bool all_low = true;
    std::string failing;
    for (std::uint32_t subset = 1; subset < (1u << absent.size()); ++subset) {
      BipartiteDigraph extended = d10;
      for (std::size_t t = 0; t < absent.size(); ++t) {
        if (subset & (1u << t)) extended.add_arc(absent[t].tail, absent[t].head);
      }
      bool found_low_pair = false;
      for (const DominatingPair& p : dominating_pairs(extended)) {
        if (std::max(extended.degree(p.u), extended.degree(p.v)) <= 7) {
          found_low_pair = true;
          break;
        }
      }
      if (!found_low_pair) {
        all_low = false;
        failing = "subset mask " + std::to_string(subset);
      }
    }
    assert_that(checks, "d10_extension_low_dominating_pair", all_low, failing);
  }

  return checks;
}

}  // namespace

int worker_count(long long tasks) {
  long long workers = std::thread::hardware_concurrency();
  if (workers < 1) workers = 1;
  if (const char* env = std::getenv("BBD_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) workers = v;
  }
  return static_cast<int>(std::clamp<long long>(std::min(workers, tasks), 1, 256));
}

CmdResult cmd_check(const BipartiteDigraph& d, const std::string& condition,
                    std::optional<int> k, std::optional<long long> bound,
                    const HarnessOptions& opts) {
  ConditionReport report;
  try {
    if (condition == "Bk" || condition == "proposition1") {
      if (!k) return usage_error("condition " + condition + " requires --k", opts);
      report = condition == "Bk" ? check_condition_Bk(d, *k)
                                 : check_proposition_1(d, *k);
    } else if (condition == "sum_dominating" || condition == "max_dominating" ||
               condition == "nonadjacent_sum" || condition == "min_degree" ||
               condition == "same_side_sum") {
      if (!bound) return usage_error("condition " + condition + " requires --bound", opts);
      if (condition == "sum_dominating") report = check_sum_dominating(d, *bound);
      if (condition == "max_dominating") report = check_max_dominating(d, *bound);
      if (condition == "nonadjacent_sum") report = check_nonadjacent_sum(d, *bound);
      if (condition == "min_degree") report = check_min_degree(d, *bound);
      if (condition == "same_side_sum") report = check_same_side_sum(d, *bound);
    } else {
      return usage_error("unknown condition '" + condition + "'", opts);
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what(), opts);
  }

  const auto warnings = check_warnings(condition, d.half_order(), k.value_or(0));
  const int exit_code = report.holds ? 0 : 1;
  if (opts.format == OutputFormat::Text) {
    std::string out = report.condition;
    for (const auto& [key, value] : report.params) {
      out += " " + key + "=" + std::to_string(value);
    }
    out += report.holds ? (report.vacuous ? ": HOLDS (vacuous)" : ": HOLDS")
                        : ": FAIL";
    out += text_witness(report);
    out += "\n";
    for (const std::string& w : warnings) out += "warning: " + w + "\n";
    return {exit_code, out};
  }
  Json j = to_json(report);
  if (!warnings.empty()) j["warnings"] = warnings;
  return {exit_code, dump_doc(j)};
}

CmdResult cmd_analyze(const BipartiteDigraph& d, int k, const HarnessOptions& opts) {
  Json j;
  j["a"] = d.half_order();
  j["order"] = d.order();
  j["arcs"] = d.arc_count();
  j["k"] = k;
  j["strong"] = to_json(strong_connectivity(d));
  Json omissions = Json::object();
  if (d.order() >= 3) {
    j["ug_two_connectivity"] = to_json(underlying_two_connectivity(d));
  } else {
    omissions["ug_two_connectivity"] = "order below 3";
  }
  j["condition_Bk"] = to_json(check_condition_Bk(d, k));
  const auto pairs = dominating_pairs(d);
  j["dominating_pair_count"] = pairs.size();
  j["dominating_pairs"] = to_json(pairs);
  j["cycle_factor"] = to_json(cycle_factor(d));
  if (d.order() <= kSolverMaxOrder) {
    const auto ham = hamiltonian_cycle(d);
    j["hamiltonian"] = ham ? Json(format_vertices(ham->vertices)) : Json(nullptr);
    Json spectrum = Json::array();
    for (int m : even_cycle_spectrum(d)) spectrum.push_back(m);
    j["even_spectrum"] = spectrum;
  } else {
    omissions["hamiltonian"] = "order above solver cap";
    omissions["even_spectrum"] = "order above solver cap";
  }
  j["omissions"] = omissions;

  if (opts.format == OutputFormat::Text) {
    std::string out = "a=" + std::to_string(d.half_order()) +
                      " order=" + std::to_string(d.order()) +
                      " arcs=" + std::to_string(d.arc_count()) + "\n";
    out += "strong: " + std::string(j["strong"]["strong"].get<bool>() ? "yes" : "no") + "\n";
    if (j.contains("ug_two_connectivity")) {
      out += "ug_two_connected: " +
             std::string(j["ug_two_connectivity"]["two_connected"].get<bool>() ? "yes" : "no") +
             "\n";
    }
    const Json& bk = j["condition_Bk"];
    out += "Bk k=" + std::to_string(k) + ": " +
           (bk["holds"].get<bool>() ? (bk["vacuous"].get<bool>() ? "HOLDS (vacuous)" : "HOLDS")
                                    : "FAIL") + "\n";
    out += "dominating_pairs: " + std::to_string(pairs.size()) + "\n";
    const Json& factor = j["cycle_factor"];
    if (!factor["factor"].is_null()) {
      for (const Json& c : factor["factor"]["cycles"]) {
        out += "cycle: " + c.get<std::string>() + "\n";
      }
    } else {
      out += "cycle_factor: none (violator in direction " +
             factor["missing_direction"].get<std::string>() + ")\n";
    }
    if (j.contains("hamiltonian")) {
      out += "hamiltonian: " +
             (j["hamiltonian"].is_null() ? std::string("none")
                                         : j["hamiltonian"].get<std::string>()) + "\n";
    }
    if (j.contains("even_spectrum")) {
      out += "spectrum:";
      for (const Json& m : j["even_spectrum"]) out += " " + m.dump();
      out += "\n";
    }
    return {0, out};
  }
  return {0, dump_doc(j)};
}

CmdResult cmd_cycle_factor(const BipartiteDigraph& d, const HarnessOptions& opts) {
  const CycleFactorResult result = cycle_factor(d);
  const int exit_code = result.factor ? 0 : 1;
  if (opts.format == OutputFormat::Text) {
    std::string out;
    if (result.factor) {
      for (const Cycle& c : result.factor->cycles) {
        out += "cycle: " + format_vertices(c.vertices) + "\n";
      }
    } else {
      out += "no cycle factor: direction " + std::string(to_string(result.missing_direction)) +
             " has Hall violator S={" + format_vertices(result.violator->source_vertices()) +
             "} N+={" + format_vertices(result.violator->neighborhood_vertices()) + "}\n";
    }
    return {exit_code, out};
  }
  return {exit_code, dump_doc(to_json(result))};
}

CmdResult cmd_hamiltonian(const BipartiteDigraph& d, const HarnessOptions& opts) {
  std::optional<Cycle> ham;
  try {
    ham = hamiltonian_cycle(d);
  } catch (const CapExceeded& e) {
    return usage_error(e.what(), opts);
  }
  const int exit_code = ham ? 0 : 1;
  if (opts.format == OutputFormat::Text) {
    return {exit_code,
            ham ? "hamiltonian: " + format_vertices(ham->vertices) + "\n"
                : std::string("hamiltonian: none\n")};
  }
  Json j;
  j["hamiltonian"] = ham ? Json(format_vertices(ham->vertices)) : Json(nullptr);
  return {exit_code, dump_doc(j)};
}

CmdResult cmd_spectrum(const BipartiteDigraph& d, const HarnessOptions& opts) {
  std::set<int> spectrum;
  try {
    spectrum = even_cycle_spectrum(d);
  } catch (const CapExceeded& e) {
    return usage_error(e.what(), opts);
  }
  if (opts.format == OutputFormat::Text) {
    std::string out = "spectrum:";
    for (int m : spectrum) out += " " + std::to_string(m);
    return {0, out + "\n"};
  }
  Json j;
  j["even_spectrum"] = Json::array();
  for (int m : spectrum) j["even_spectrum"].push_back(m);
  return {0, dump_doc(j)};
}

CmdResult cmd_bypass(const BipartiteDigraph& d, const std::string& cycle_text,
                     const HarnessOptions& opts) {
  std::optional<Bypass> bypass;
  try {
    const Cycle host{parse_vertex_list(cycle_text)};
    bypass = find_bypass(d, host);
  } catch (const std::exception& e) {
    return usage_error(e.what(), opts);
  }
  const int exit_code = bypass ? 0 : 1;
  if (opts.format == OutputFormat::Text) {
    return {exit_code, bypass ? "bypass: " + format_vertices(bypass->path) + "\n"
                              : std::string("bypass: none\n")};
  }
  Json j;
  j["bypass"] = bypass ? to_json(*bypass) : Json(nullptr);
  return {exit_code, dump_doc(j)};
}

CmdResult cmd_verify_paper(const HarnessOptions& opts, bool self_test_mutate) {
  const auto checks = paper_assertions(self_test_mutate);
  Json failures = Json::array();
  for (const Assertion& c : checks) {
    if (!c.pass) failures.push_back(Json{{"name", c.name}, {"detail", c.detail}});
  }
  const int exit_code = failures.empty() ? 0 : 1;
  if (opts.format == OutputFormat::Text) {
    std::string out;
    for (const Assertion& c : checks) {
      out += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name +
             (c.pass ? "" : " - " + c.detail) + "\n";
    }
    out += std::to_string(checks.size()) + " assertions, " +
           std::to_string(failures.size()) + " failures (" +
           std::string(kToolName) + " " + std::string(kVersion) + ")\n";
    return {exit_code, out};
  }
  Json j;
  j["experiment"] = "verify_paper";
  j["version"] = std::string(kVersion);
  j["assertions"] = checks.size();
  j["failures"] = failures;
  j["pass"] = failures.empty();
  if (self_test_mutate) j["self_test_mutate"] = true;
  return {exit_code, dump_doc(j)};
}

CmdResult cmd_experiment(const std::string& name, const ExperimentConfig& config,
                         const HarnessOptions& opts) {
  if (name != "thm1_10" && name != "lemma4_1" && name != "lemma4_2" &&
      name != "lemma4_3") {
    return usage_error("unknown experiment '" + name + "'", opts);
  }
  if (const auto range_error = validate_wang_range(config)) {
    return usage_error(*range_error, opts);
  }
  if (name != "thm1_10" && 2 * config.a > kSolverMaxOrder) {
    return usage_error("experiment " + name + " needs exact cycle search; order " +
                           std::to_string(2 * config.a) + " is above the solver cap " +
                           std::to_string(kSolverMaxOrder),
                       opts);
  }
  const auto start = Clock::now();
  const InstanceChecks total = run_instances(config.count, [&](InstanceChecks& acc,
                                                               long long i) {
    GeneratorConfig gen{config.a, config.k, config.seed + static_cast<std::uint64_t>(i),
                        config.arc_probability, config.max_attempts,
                        config.repair_iterations};
    const auto d = random_Bk_digraph(gen);
    if (!d) {
      ++acc.generation_failures;
      return;
    }
    ++acc.checked;
    check_generator_contract(*d, config.k, acc);
    if (name == "thm1_10") check_thm1_10(*d, acc);
    if (name == "lemma4_1") check_lemma4_1(*d, acc);
    if (name == "lemma4_2") check_lemma4_2(*d, acc);
    if (name == "lemma4_3") check_lemma4_3(*d, acc);
  });

  Json summary;
  summary["requested"] = config.count;
  summary["checked"] = total.checked;
  summary["generation_failures"] = total.generation_failures;
  summary["filtered_by_hypothesis"] = total.filtered;
  summary["violations"] = total.violations.size();
  summary["complete"] = true;
  return emit_experiment(config_echo(name, config), total, summary,
                         elapsed_ms(start), opts);
}

CmdResult cmd_wang_search(WangMode mode, const ExperimentConfig& config,
                          const HarnessOptions& opts) {
  if (const auto range_error = validate_wang_range(config)) {
    return usage_error(*range_error, opts);
  }
  if (2 * config.a > kSolverMaxOrder) {
    return usage_error("wang-search decides Hamiltonicity exactly; order " +
                           std::to_string(2 * config.a) + " is above the solver cap " +
                           std::to_string(kSolverMaxOrder),
                       opts);
  }
  const auto start = Clock::now();

  if (mode == WangMode::Random) {
    const InstanceChecks total = run_instances(config.count, [&](InstanceChecks& acc,
                                                                 long long i) {
      GeneratorConfig gen{config.a, config.k,
                          config.seed + static_cast<std::uint64_t>(i),
                          config.arc_probability, config.max_attempts,
                          config.repair_iterations};
      const auto d = random_Bk_digraph(gen);
      if (!d) {
        ++acc.generation_failures;
        return;
      }
      ++acc.checked;
      check_generator_contract(*d, config.k, acc);
      check_wang_instance(*d, config.k, acc);
    });
    Json summary;
    summary["mode"] = "random";
    summary["requested"] = config.count;
    summary["checked"] = total.checked;
    summary["generation_failures"] = total.generation_failures;
    summary["distinct_instances"] = total.distinct.size();
    summary["hamiltonian"] = total.hamiltonian;
    summary["candidates"] = total.violations.size();
    summary["complete"] = true;
    return emit_experiment(config_echo("wang_search", config), total, summary,
                           elapsed_ms(start), opts);
  }

  if (config.a != 4 && config.a != 5) {
    return usage_error("enumerate mode supports a = 4 or a = 5 only", opts);
  }
  InstanceChecks total;
  const DedupMode dedup =
      config.a == 4 ? DedupMode::Isomorphism : DedupMode::DegreeHash;
  const EnumerationStats stats =
      enumerate_Bk(config.a, config.k, config.budget, dedup,
                   [&](const BipartiteDigraph& d) {
                     ++total.checked;
                     check_wang_instance(d, config.k, total);
                     return true;
                   });
  sort_violations(total.violations);
  Json summary;
  summary["mode"] = "enumerate";
  summary["budget"] = config.budget;
  summary["nodes_explored"] = stats.nodes_explored;
  summary["emitted"] = stats.emitted;
  summary["checked"] = total.checked;
  summary["hamiltonian"] = total.hamiltonian;
  summary["candidates"] = total.violations.size();
  summary["complete"] = stats.complete;
  return emit_experiment(config_echo("wang_search", config), total, summary,
                         elapsed_ms(start), opts);
}

}  // namespace bbd
