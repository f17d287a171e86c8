#include "kabar/portfolio.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "kabar/random.hpp"
#include "kabar/seed_partition.hpp"

namespace kabar {
namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

PortfolioResult run_all(const Graph& g, BlockId k, const PortfolioConfig& cfg,
                        const Partition* start) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::optional<TrialResult>> slots(cfg.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.trials; i = next++) {
      try {
        slots[i] = run_trial(g, k, i, cfg, start);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(cfg.threads, 1, cfg.trials);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  PortfolioResult result;
  for (auto& slot : slots) result.trials.push_back(std::move(*slot));
  for (std::size_t i = 1; i < result.trials.size(); ++i) {
    if (result.trials[i].partition.cut() < result.trials[result.best_trial].partition.cut()) {
      result.best_trial = i;
    }
  }
  result.best = result.trials[result.best_trial].partition;
  result.wall_ms = elapsed_ms(t0);
  return result;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) {
  return mix_seed(mix_seed(base_seed) + trial);
}

TrialResult run_trial(const Graph& g, BlockId k, std::size_t trial, const PortfolioConfig& cfg,
                      const Partition* start) {
  const auto t0 = std::chrono::steady_clock::now();
  TrialResult r;
  r.trial = trial;
  r.seed = trial_seed(cfg.refine.seed, trial);
  Rng rng(r.seed);

  RefineConfig rc = cfg.refine;
  if (cfg.randomize_parameters) {
    rc.tau = static_cast<std::size_t>(rng.range(1, 30));
    rc.mu = static_cast<std::size_t>(rng.range(1, 20));
    rc.lambda = static_cast<std::size_t>(rng.range(1, 10));
  }
  rc.seed = rng.next();
  r.tau = rc.tau;
  r.mu = rc.mu;
  r.lambda = rc.lambda;

  Partition initial;
  if (start != nullptr) {
    initial = *start;
    r.epsilon = start->epsilon();
  } else {
    const double lo = std::min(0.005, cfg.max_epsilon);
    r.epsilon = rng.uniform(lo, std::max(lo, cfg.max_epsilon));
    initial = seed_partition(g, k, r.epsilon, rng);
  }
  r.initial_cut = initial.cut();
  r.initial_max_block = initial.max_block_size();
  r.partition = refine(g, std::move(initial), rc, &r.trace);
  r.wall_ms = elapsed_ms(t0);
  return r;
}

PortfolioResult portfolio_run(const Graph& g, BlockId k, const PortfolioConfig& cfg) {
  return run_all(g, k, cfg, nullptr);
}

PortfolioResult portfolio_refine(const Graph& g, const Partition& start, const PortfolioConfig& cfg) {
  return run_all(g, start.k(), cfg, &start);
}

}  // namespace kabar
