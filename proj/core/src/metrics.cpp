#include "kabar/metrics.hpp"

#include <json.hpp>

namespace kabar {

std::string trial_metrics_json(const TrialResult& trial) {
  nlohmann::json steps = nlohmann::json::array();
  for (const StepRecord& s : trial.trace.steps) {
    steps.push_back({{"kind", std::string(to_string(s.kind))},
                     {"round", s.round},
                     {"delta", s.actual_delta},
                     {"predicted_delta", s.predicted_delta},
                     {"moved_nodes", s.moved_nodes},
                     {"overload_after", s.overload_after}});
  }
  const Partition& p = trial.partition;
  nlohmann::json j = {
      {"trial", trial.trial},
      {"seed", trial.seed},
      {"epsilon", trial.epsilon},
      {"tau", trial.tau},
      {"mu", trial.mu},
      {"lambda", trial.lambda},
      {"initial_cut", trial.initial_cut},
      {"initial_max_block_size", trial.initial_max_block},
      {"cut", p.cut()},
      {"max_block_size", p.max_block_size()},
      {"perfect_capacity", p.perfect_capacity()},
      {"balanced", p.perfectly_balanced()},
      {"rounds", trial.trace.rounds},
      {"balance_steps", trial.trace.balance_steps},
      {"steps", std::move(steps)},
      {"wall_time_ms", trial.wall_ms},
  };
  return j.dump();
}

std::string summary_metrics_json(const PortfolioResult& result) {
  nlohmann::json j = {
      {"summary", true},
      {"trials", result.trials.size()},
      {"best_trial", result.best_trial},
      {"cut", result.best.cut()},
      {"max_block_size", result.best.max_block_size()},
      {"perfect_capacity", result.best.perfect_capacity()},
      {"balanced", result.best.perfectly_balanced()},
      {"wall_time_ms", result.wall_ms},
  };
  return j.dump();
}

std::string metrics_jsonl(const PortfolioResult& result) {
  std::string out;
  for (const TrialResult& t : result.trials) {
    out += trial_metrics_json(t);
    out += '\n';
  }
  out += summary_metrics_json(result);
  out += '\n';
  return out;
}

}  // namespace kabar
