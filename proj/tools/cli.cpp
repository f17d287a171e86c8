#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "kabar/graph_io.hpp"
#include "kabar/metrics.hpp"
#include "kabar/portfolio.hpp"

namespace kabar {
namespace {

struct Options {
  std::string graph;
  std::optional<int> k;
  std::string input_partition;
  double epsilon = 0.04;
  std::string mode = "advanced";
  std::optional<std::size_t> tau;
  std::optional<std::size_t> mu;
  std::optional<std::size_t> lambda;
  std::size_t trials = 1;
  std::size_t threads = 1;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string metrics;
  bool conflict_free = false;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("KABAR_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("KABAR_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

int run(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph(read_file(o.graph));

  std::optional<Partition> start;
  BlockId k = 0;
  if (!o.input_partition.empty()) {
    const BlockId hint = o.k.value_or(0);
    auto blocks = parse_partition(read_file(o.input_partition), g.num_nodes(), hint);
    if (hint > 0) {
      k = hint;
    } else {
      for (BlockId b : blocks) k = std::max(k, b + 1);
    }
    start.emplace(g, k, std::move(blocks), o.epsilon);
  } else {
    if (!o.k) throw std::invalid_argument("--k is required without --input-partition");
    k = *o.k;
    if (k < 1 || static_cast<std::size_t>(k) > g.num_nodes()) {
      throw std::invalid_argument("--k must lie in [1, n]");
    }
  }

  PortfolioConfig cfg;
  cfg.trials = o.trials;
  cfg.threads = o.threads;
  cfg.max_epsilon = o.epsilon;
  cfg.refine = RefineConfig::defaults_for(k);
  cfg.refine.mode = o.mode == "basic" ? RefineMode::Basic : RefineMode::Advanced;
  cfg.refine.conflict_free = o.conflict_free;
  cfg.refine.seed = resolve_seed(o);
  cfg.randomize_parameters = !o.tau && !o.mu && !o.lambda;
  if (o.tau) cfg.refine.tau = *o.tau;
  if (o.mu) cfg.refine.mu = *o.mu;
  if (o.lambda) cfg.refine.lambda = *o.lambda;
  cfg.refine.validate();

  const PortfolioResult result = start ? portfolio_refine(g, *start, cfg) : portfolio_run(g, k, cfg);

  const std::string partition_text = write_partition(result.best);
  if (o.out.empty()) {
    out << partition_text;
  } else {
    write_file(o.out, partition_text);
  }
  if (!o.metrics.empty()) write_file(o.metrics, metrics_jsonl(result));
  err << "cut " << result.best.cut() << " max_block " << result.best.max_block_size() << " capacity "
      << result.best.perfect_capacity() << " trial " << result.best_trial << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfectly balanced graph partition refinement", "kabar_refine"};
  Options o;
  app.add_option("--graph", o.graph, "Graph file (METIS format)")->required();
  app.add_option("--k", o.k, "Number of blocks");
  app.add_option("--input-partition", o.input_partition, "Partition to refine (one block id per line)");
  app.add_option("--epsilon", o.epsilon, "Imbalance of seed partitions")->check(CLI::Range(0.0, 10.0));
  app.add_option("--mode", o.mode, "Refinement model")->check(CLI::IsMember({"basic", "advanced"}));
  app.add_option("--tau", o.tau, "Maximum moves per directed search")->check(CLI::PositiveNumber);
  app.add_option("--mu", o.mu, "Packing rounds")->check(CLI::PositiveNumber);
  app.add_option("--lambda", o.lambda, "Unsuccessful iterations before balancing")->check(CLI::PositiveNumber);
  app.add_option("--trials", o.trials, "Independent trials")->check(CLI::PositiveNumber);
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Base seed (default: $KABAR_SEED or 0)");
  app.add_option("--out", o.out, "Output partition file (default: stdout)");
  app.add_option("--metrics", o.metrics, "Metrics file (JSON lines)");
  app.add_flag("--conflict-free", o.conflict_free, "Build layered models without backward edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  try {
    return run(o, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace kabar
