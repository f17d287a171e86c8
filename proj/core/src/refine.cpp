#include "kabar/refine.hpp"

#include <optional>
#include <stdexcept>

#include "kabar/advanced_model.hpp"
#include "kabar/balancer.hpp"
#include "kabar/basic_model.hpp"
#include "kabar/cycle_solver.hpp"
#include "kabar/directed_search.hpp"
#include "kabar/eligibility.hpp"
#include "kabar/random.hpp"

namespace kabar {

std::string_view to_string(RefineMode mode) {
  return mode == RefineMode::Basic ? "basic" : "advanced";
}

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::NegativeCycle: return "negative_cycle";
    case StepKind::ZeroCycle: return "zero_cycle";
    case StepKind::BalancePath: return "balance_path";
    case StepKind::BalanceFallback: return "balance_fallback";
    case StepKind::BalanceComponent: return "balance_component";
  }
  return "unknown";
}

RefineConfig RefineConfig::defaults_for(BlockId k) {
  RefineConfig cfg;
  cfg.tau = k <= 8 ? 15 : 7;
  return cfg;
}

void RefineConfig::validate() const {
  if (tau < 1) throw std::invalid_argument("tau must be at least 1");
  if (mu < 1) throw std::invalid_argument("mu must be at least 1");
  if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
}

namespace {

enum class Found { Negative, Zero, Nothing };

class Refiner {
 public:
  Refiner(const Graph& g, Partition& p, const RefineConfig& cfg, RefineTrace& trace)
      : g_(g), p_(p), cfg_(cfg), trace_(trace), rng_(cfg.seed) {
    if (cfg_.verify) recount_ = compute_cut(g_, p_.assignment());
  }

  void run() {
    std::size_t unsuccessful = 0;
    while (true) {
      ++trace_.rounds;
      bool improved = false;
      std::size_t zero_moves = 0;
      while (true) {
        const bool allow_zero =
            cfg_.zero_cycle_diversification && zero_moves < cfg_.max_zero_cycles_per_solve;
        const Found found = iterate(allow_zero);
        if (found == Found::Negative) {
          improved = true;
        } else if (found == Found::Zero) {
          ++zero_moves;
        } else {
          break;
        }
      }
      unsuccessful = improved ? 0 : unsuccessful + 1;
      if (unsuccessful < cfg_.lambda) continue;
      if (p_.overload() == 0) break;
      balance();
      unsuccessful = 0;
    }
  }

 private:
  Found iterate(bool allow_zero) {
    ++trace_.models_built;
    return cfg_.mode == RefineMode::Basic ? iterate_basic(allow_zero) : iterate_advanced(allow_zero);
  }

  Found iterate_basic(bool allow_zero) {
    BasicModel model = build_basic_model(g_, p_, rng_);
    while (auto cycle = detect_negative_cycle(model.graph, model.source())) {
      try {
        record(StepKind::NegativeCycle, apply_cycle(g_, p_, model, *cycle));
        return Found::Negative;
      } catch (const ModelError&) {
        remove_random_payload_edge(model.graph, cycle->edges, rng_);
      }
    }
    if (!allow_zero) return Found::Nothing;
    const Potentials pi = shortest_path_tree(model.graph, model.source());
    if (auto cycle = find_zero_weight_cycle(model.graph, pi, rng_, model.source())) {
      record(StepKind::ZeroCycle, apply_cycle(g_, p_, model, *cycle));
      return Found::Zero;
    }
    return Found::Nothing;
  }

  Found iterate_advanced(bool allow_zero) {
    EligibilityState elig(g_.num_nodes());
    const BoundaryIndex boundary(g_, p_);
    PackedSearches packed =
        pack_searches(g_, p_, boundary.pairs(), cfg_.tau, cfg_.mu, elig, rng_, boundary);
    AdvancedModel model =
        build_advanced_model(p_, std::move(packed), cfg_.tau, {.conflict_free = cfg_.conflict_free});
    if (auto solved = solve_advanced(p_, model, rng_)) {
      record(StepKind::NegativeCycle,
             apply_advanced_cycle(g_, p_, solved->moves, solved->cycle.weight));
      return Found::Negative;
    }
    if (!allow_zero) return Found::Nothing;
    if (auto solved = solve_zero_advanced(p_, model, rng_)) {
      record(StepKind::ZeroCycle, apply_advanced_cycle(g_, p_, solved->moves, solved->cycle.weight));
      return Found::Zero;
    }
    return Found::Nothing;
  }

  void balance() {
    BalanceConfig bc;
    bc.tau = cfg_.mode == RefineMode::Basic ? 1 : cfg_.tau;
    bc.mu = cfg_.mu;
    bc.conflict_free = cfg_.conflict_free;
    auto outcome = balance_step(g_, p_, bc, rng_);
    if (!outcome) return;
    ++trace_.balance_steps;
    StepKind kind = StepKind::BalancePath;
    if (outcome->route == BalanceRoute::Fallback) kind = StepKind::BalanceFallback;
    if (outcome->route == BalanceRoute::Component) kind = StepKind::BalanceComponent;
    record(kind, outcome->applied);
  }

  void record(StepKind kind, const AppliedMoves& applied) {
    StepRecord step;
    step.kind = kind;
    step.round = trace_.rounds;
    step.predicted_delta = applied.predicted_delta;
    step.actual_delta = applied.actual_delta;
    step.moved_nodes = applied.moves.size();
    step.overload_after = p_.overload();
    if (cfg_.verify) {
      const EdgeWeight now = compute_cut(g_, p_.assignment());
      step.recomputed_delta = now - recount_;
      recount_ = now;
      if (step.recomputed_delta != step.predicted_delta || now != p_.cut()) {
        throw InvariantError("recounted cut change differs from model prediction");
      }
    }
    trace_.steps.push_back(step);
  }

  const Graph& g_;
  Partition& p_;
  const RefineConfig& cfg_;
  RefineTrace& trace_;
  Rng rng_;
  EdgeWeight recount_ = 0;
};

}  // namespace

Partition refine(const Graph& g, Partition p, const RefineConfig& cfg, RefineTrace* trace) {
  cfg.validate();
  RefineTrace local;
  Refiner(g, p, cfg, trace != nullptr ? *trace : local).run();
  return p;
}

}  // namespace kabar
