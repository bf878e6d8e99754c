#pragma once

#include <optional>
#include <string>

#include "bbd/constructions.hpp"
#include "bbd/digraph.hpp"
#include "bbd/reports.hpp"

namespace bbd {

enum class OutputFormat { Json, Text };

struct HarnessOptions {
  bool stable = false;  // strip wall-time so reports can be diffed byte-for-byte
  OutputFormat format = OutputFormat::Json;
};

// Exit codes across all commands: 0 = all checks passed, 1 = a checked
// property failed (with certificate), 2 = usage or parse error.
struct CmdResult {
  int exit_code = 0;
  std::string output;
};

struct ExperimentConfig {
  int a = 4;
  int k = 2;
  std::uint64_t seed = 0;
  long long count = 1000;
  double arc_probability = 0.5;
  int max_attempts = 64;
  int repair_iterations = 300;
  long long budget = 1000000;  // enumerate-mode node budget
};

// Condition names: Bk, proposition1 (need --k); sum_dominating,
// max_dominating, nonadjacent_sum, min_degree, same_side_sum (need --bound).
CmdResult cmd_check(const BipartiteDigraph& d, const std::string& condition,
                    std::optional<int> k, std::optional<long long> bound,
                    const HarnessOptions& opts);

// One document with strongness, UG 2-connectivity, B_k, dominating pairs,
// cycle factor or violator, Hamiltonicity and even spectrum. Sections
// above the solver cap are listed under "omissions" instead of failing.
CmdResult cmd_analyze(const BipartiteDigraph& d, int k, const HarnessOptions& opts);

CmdResult cmd_cycle_factor(const BipartiteDigraph& d, const HarnessOptions& opts);
CmdResult cmd_hamiltonian(const BipartiteDigraph& d, const HarnessOptions& opts);
CmdResult cmd_spectrum(const BipartiteDigraph& d, const HarnessOptions& opts);
CmdResult cmd_bypass(const BipartiteDigraph& d, const std::string& cycle_text,
                     const HarnessOptions& opts);

// Runs the built-in reference assertions against build_D8/build_D10.
// self_test_mutate drops one arc from D(8) first; used to prove the
// suite can fail.
CmdResult cmd_verify_paper(const HarnessOptions& opts, bool self_test_mutate = false);

// name in {thm1_10, lemma4_1, lemma4_2, lemma4_3}. Generates strong B_k
// instances (instance i uses seed config.seed + i) and checks the named
// conclusion; violations are recorded with self-contained certificates
// and treated as implementation bugs.
CmdResult cmd_experiment(const std::string& name, const ExperimentConfig& config,
                         const HarnessOptions& opts);

enum class WangMode { Random, Enumerate };

// Searches strong B_k digraphs for a non-Hamiltonian instance. Hits are
// research findings and carry full certificates; their absence is
// reported with coverage statistics only.
CmdResult cmd_wang_search(WangMode mode, const ExperimentConfig& config,
                          const HarnessOptions& opts);

// Worker cap for experiment parallelism; BBD_THREADS overrides.
int worker_count(long long tasks);

}  // namespace bbd
