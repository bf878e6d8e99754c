// Command-line front end: every subcommand maps onto a harness or
// library call; graphs move through the bbd/1 text format.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bbd/conditions.hpp"
#include "bbd/connectivity.hpp"
#include "bbd/harness.hpp"
#include "bbd/io.hpp"
#include "bbd/version.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

struct GlobalFlags {
  bool stable = false;
  std::string format = "json";
};

// Generator config file: one `key=value` per line, `#` comments. Keys:
// a, k, seed, arc_probability, max_attempts, repair_iterations.
// Explicit CLI flags take precedence.
void load_config_file(const std::string& path, bbd::ExperimentConfig& config) {
  std::istringstream in(read_input(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key=value");
    }
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    try {
      if (key == "a") {
        config.a = std::stoi(value);
      } else if (key == "k") {
        config.k = std::stoi(value);
      } else if (key == "seed") {
        config.seed = std::stoull(value);
      } else if (key == "arc_probability") {
        config.arc_probability = std::stod(value);
      } else if (key == "max_attempts") {
        config.max_attempts = std::stoi(value);
      } else if (key == "repair_iterations") {
        config.repair_iterations = std::stoi(value);
      } else {
        throw std::runtime_error("config line " + std::to_string(lineno) +
                                 ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": bad value for '" + key + "'");
    }
  }
}

bbd::HarnessOptions harness_options(const GlobalFlags& flags) {
  bbd::HarnessOptions opts;
  opts.stable = flags.stable;
  opts.format = flags.format == "text" ? bbd::OutputFormat::Text
                                       : bbd::OutputFormat::Json;
  return opts;
}

int finish(const bbd::CmdResult& result) {
  std::cout << result.output;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced bipartite digraph toolkit"};
  app.set_version_flag("--version",
                       std::string(bbd::kToolName) + " " + std::string(bbd::kVersion));
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--stable", flags.stable,
               "strip wall-time fields for byte-stable reports");
  app.add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));

  std::string file = "-";
  std::string condition, cycle_text, experiment_name, gen_type = "random",
                                                      wang_mode = "random";
  int k = 2;
  long long bound = 0;
  bbd::ExperimentConfig config;
  std::string config_path;
  bool has_bound = false, has_k = false, self_test_mutate = false;
  long long gen_count = 1;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "bbd/1 input file, '-' for stdin");
  };

  struct ConfigOpts {
    CLI::Option* config_file = nullptr;
    CLI::Option* a = nullptr;
    CLI::Option* k = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* arc_prob = nullptr;
    CLI::Option* max_attempts = nullptr;
    CLI::Option* repair_iterations = nullptr;
  };
  auto add_config_options = [&](CLI::App* cmd) {
    ConfigOpts opts;
    opts.config_file =
        cmd->add_option("--config", config_path, "key=value generator config file");
    opts.a = cmd->add_option("-a,--a", config.a, "half-order");
    opts.k = cmd->add_option("--k", config.k, "parameter k");
    opts.seed = cmd->add_option("--seed", config.seed, "generator seed");
    opts.arc_prob =
        cmd->add_option("--arc-prob", config.arc_probability, "arc probability");
    opts.max_attempts =
        cmd->add_option("--max-attempts", config.max_attempts, "sampling attempts");
    opts.repair_iterations = cmd->add_option(
        "--repair-iterations", config.repair_iterations, "repair iterations per attempt");
    return opts;
  };
  // Config-file values fill the gaps; explicit flags win.
  auto resolve_config = [&](const ConfigOpts& opts) {
    if (opts.config_file->count() == 0) return;
    bbd::ExperimentConfig from_file;
    load_config_file(config_path, from_file);
    const bbd::ExperimentConfig from_cli = config;
    from_file.count = from_cli.count;
    from_file.budget = from_cli.budget;
    config = from_file;
    if (opts.a->count() > 0) config.a = from_cli.a;
    if (opts.k->count() > 0) config.k = from_cli.k;
    if (opts.seed->count() > 0) config.seed = from_cli.seed;
    if (opts.arc_prob->count() > 0) config.arc_probability = from_cli.arc_probability;
    if (opts.max_attempts->count() > 0) config.max_attempts = from_cli.max_attempts;
    if (opts.repair_iterations->count() > 0) {
      config.repair_iterations = from_cli.repair_iterations;
    }
  };

  auto* check = app.add_subcommand("check", "evaluate one degree condition");
  add_file(check);
  check->add_option("--condition", condition, "condition name")->required();
  auto* check_k = check->add_option("--k", k, "parameter k");
  auto* check_bound = check->add_option("--bound", bound, "degree bound");

  auto* analyze = app.add_subcommand("analyze", "full single-graph report");
  add_file(analyze);
  analyze->add_option("--k", k, "parameter k for the B_k section");

  auto* factor = app.add_subcommand("cycle-factor", "cycle factor or Hall violator");
  add_file(factor);

  auto* hamiltonian = app.add_subcommand("hamiltonian", "exact Hamiltonicity");
  add_file(hamiltonian);

  auto* spectrum = app.add_subcommand("spectrum", "even cycle spectrum");
  add_file(spectrum);

  auto* bypass = app.add_subcommand("bypass", "find a bypass of a given cycle");
  add_file(bypass);
  bypass->add_option("--cycle", cycle_text, "host cycle, e.g. 'X0 Y0 X1 Y1'")
      ->required();

  auto* gen = app.add_subcommand("gen", "construct or sample digraphs");
  gen->add_option("--type", gen_type, "d8|d10|cycle|complete|random|bk")
      ->check(CLI::IsMember({"d8", "d10", "cycle", "complete", "random", "bk"}));
  gen->add_option("--count", gen_count, "number of digraphs to emit");
  const ConfigOpts gen_opts = add_config_options(gen);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate strong B_k digraphs");
  enumerate->add_option("-a,--a", config.a, "half-order (4 or 5)");
  enumerate->add_option("--k", config.k, "parameter k");
  enumerate->add_option("--budget", config.budget, "search-node budget");
  std::string dedup = "default";
  enumerate->add_option("--dedup", dedup, "none|degree|iso|default")
      ->check(CLI::IsMember({"none", "degree", "iso", "default"}));

  auto* verify = app.add_subcommand("verify-paper", "run the built-in reference suite");
  verify->add_flag("--self-test-mutate", self_test_mutate)->group("");  // hidden

  auto* experiment = app.add_subcommand("experiment", "theorem/lemma property suites");
  experiment->add_option("--name", experiment_name,
                         "thm1_10|lemma4_1|lemma4_2|lemma4_3")
      ->required();
  experiment->add_option("--count", config.count, "instances");
  const ConfigOpts experiment_opts = add_config_options(experiment);

  auto* wang = app.add_subcommand("wang-search", "search for a non-Hamiltonian B_k digraph");
  wang->add_option("--mode", wang_mode, "random|enumerate")
      ->check(CLI::IsMember({"random", "enumerate"}));
  wang->add_option("--count", config.count, "instances (random mode)");
  wang->add_option("--budget", config.budget, "node budget (enumerate mode)");
  const ConfigOpts wang_opts = add_config_options(wang);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2; --help/--version exit 0
  }
  const bbd::HarnessOptions opts = harness_options(flags);
  has_k = check_k->count() > 0;
  has_bound = check_bound->count() > 0;

  try {
    if (gen->parsed()) resolve_config(gen_opts);
    if (experiment->parsed()) resolve_config(experiment_opts);
    if (wang->parsed()) resolve_config(wang_opts);

    if (gen->parsed()) {
      std::string out;
      auto emit = [&](const bbd::BipartiteDigraph& d) {
        if (!out.empty()) out += "\n";
        out += flags.format == "dot" ? bbd::to_dot(d) : bbd::serialize(d);
      };
      if (gen_type == "d8") {
        emit(bbd::build_D8());
      } else if (gen_type == "d10") {
        emit(bbd::build_D10());
      } else if (gen_type == "cycle") {
        emit(bbd::directed_cycle(config.a));
      } else if (gen_type == "complete") {
        emit(bbd::complete_bipartite(config.a));
      } else {
        for (long long i = 0; i < gen_count; ++i) {
          bbd::GeneratorConfig gc{config.a, config.k,
                                  config.seed + static_cast<std::uint64_t>(i),
                                  config.arc_probability, config.max_attempts,
                                  config.repair_iterations};
          if (gen_type == "random") {
            emit(bbd::random_digraph(gc));
          } else {
            const auto d = bbd::random_Bk_digraph(gc);
            if (!d) {
              std::cerr << "error: no B_k digraph found within max attempts (seed "
                        << gc.seed << ")\n";
              return 2;
            }
            emit(*d);
          }
        }
      }
      std::cout << out;
      return 0;
    }

    if (enumerate->parsed()) {
      bbd::DedupMode mode = bbd::DedupMode::None;
      if (dedup == "degree") mode = bbd::DedupMode::DegreeHash;
      if (dedup == "iso") mode = bbd::DedupMode::Isomorphism;
      if (dedup == "default") {
        mode = config.a == 4 ? bbd::DedupMode::Isomorphism : bbd::DedupMode::DegreeHash;
      }
      bool first = true;
      const bbd::EnumerationStats stats = bbd::enumerate_Bk(
          config.a, config.k, config.budget, mode,
          [&](const bbd::BipartiteDigraph& d) {
            if (!first) std::cout << "\n";
            first = false;
            std::cout << bbd::serialize(d);
            return true;
          });
      std::cout << "# nodes=" << stats.nodes_explored << " emitted=" << stats.emitted
                << " complete=" << (stats.complete ? "true" : "false") << "\n";
      return 0;
    }

    if (verify->parsed()) {
      return finish(bbd::cmd_verify_paper(opts, self_test_mutate));
    }
    if (experiment->parsed()) {
      return finish(bbd::cmd_experiment(experiment_name, config, opts));
    }
    if (wang->parsed()) {
      const bbd::WangMode mode = wang_mode == "enumerate" ? bbd::WangMode::Enumerate
                                                          : bbd::WangMode::Random;
      return finish(bbd::cmd_wang_search(mode, config, opts));
    }

    // Remaining subcommands read one digraph.
    const bbd::BipartiteDigraph d = bbd::parse(read_input(file));
    if (check->parsed()) {
      return finish(bbd::cmd_check(d, condition,
                                   has_k ? std::optional<int>(k) : std::nullopt,
                                   has_bound ? std::optional<long long>(bound)
                                             : std::nullopt,
                                   opts));
    }
    if (analyze->parsed()) return finish(bbd::cmd_analyze(d, k, opts));
    if (factor->parsed()) return finish(bbd::cmd_cycle_factor(d, opts));
    if (hamiltonian->parsed()) return finish(bbd::cmd_hamiltonian(d, opts));
    if (spectrum->parsed()) return finish(bbd::cmd_spectrum(d, opts));
    if (bypass->parsed()) return finish(bbd::cmd_bypass(d, cycle_text, opts));
  } catch (const bbd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
