#include "efgsolve/mccfr/outcome_sampling.hpp"

#include <algorithm>
#include <string>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/core/regret_matching.hpp"

namespace efg {

namespace {

constexpr int kChanceSlot = 2;

// Sampling distribution epsilon / |A| + (1 - epsilon) * sigma, into `out`.
void explore(std::span<const double> sigma, double epsilon, std::vector<double>& out) {
  const double floor = epsilon / static_cast<double>(sigma.size());
  out.resize(sigma.size());
  for (std::size_t a = 0; a < sigma.size(); ++a) out[a] = floor + (1.0 - epsilon) * sigma[a];
}

void finish(const GameTree& tree, std::int32_t terminal, SampleRecord& out) {
  out.terminal = terminal;
  out.utility = tree.node(terminal).utility;
  const std::size_t n = out.steps.size();
  out.tail.assign(n + 1, 1.0);
  for (std::size_t k = n; k-- > 0;) out.tail[k] = out.tail[k + 1] * out.steps[k].policy_prob;
}

}  // namespace

void MccfrConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1], got " + std::to_string(epsilon));
  }
  if (iterations < 0) throw ParameterError("iterations must be non-negative");
}

RegretTables::RegretTables(const GameTree& t)
    : tree(&t),
      regret(t.num_infoset_actions(), 0.0),
      strategy_sum(t.num_infoset_actions(), 0.0),
      last_update(t.infosets().size(), 0),
      last_reach(t.infosets().size(), 0.0) {}

void RegretTables::current_strategy(std::int32_t infoset, std::span<double> out) const {
  const auto& info = tree->infoset(infoset);
  regret_matching({regret.data() + info.offset, static_cast<std::size_t>(info.num_actions)}, out);
}

void SampleRecord::clear() {
  terminal = -1;
  utility = 0.0;
  sample_prob = 1.0;
  steps.clear();
  policy.clear();
  tail.clear();
}

void sample_episode(const RegretTables& tables, double epsilon, UniformSource& rng,
                    SampleRecord& out, const Restriction* restriction) {
  const GameTree& tree = *tables.tree;
  out.clear();

  std::array<double, 3> reach{1.0, 1.0, 1.0};
  bool restricted_subgame = false;
  if (restriction && restriction->mode == Restriction::Mode::kRootCoin) {
    const double p = restriction->p;
    if (p > 0.0 && p < 1.0) {
      restricted_subgame = rng.next() < p;
      const double coin = restricted_subgame ? p : 1.0 - p;
      reach[kChanceSlot] = coin;
      out.sample_prob = coin;
    } else {
      restricted_subgame = p >= 1.0;
    }
  }
  const bool mixing = restriction && restriction->mode == Restriction::Mode::kPerInfoset &&
                      restriction->p > 0.0;

  thread_local std::vector<double> sampling;
  thread_local std::vector<double> learned;
  std::int32_t id = tree.root();
  while (!tree.node(id).terminal) {
    const auto& n = tree.node(id);
    EpisodeStep step;
    step.node = id;
    step.reach = reach;
    step.actor = n.player;
    std::size_t a = 0;

    if (n.player == Player::kChance) {
      const auto probs = tree.chance_probs(id);
      a = sample_index(probs, rng.next());
      step.sample_prob = step.policy_prob = probs[a];
      reach[kChanceSlot] *= probs[a];
    } else {
      const auto& info = tree.infoset(n.infoset);
      const auto num = static_cast<std::size_t>(info.num_actions);
      step.infoset = n.infoset;
      step.policy_offset = static_cast<std::int32_t>(out.policy.size());
      out.policy.resize(out.policy.size() + num);
      std::span<double> sigma(out.policy.data() + step.policy_offset, num);
      const bool restricted_actor = restriction && n.player == restriction->player;

      if (restricted_actor && restricted_subgame) {
        // Behaves like chance: follow the fixed model exactly, never update.
        const auto fixed = restriction->fixed->at(n.infoset);
        std::copy(fixed.begin(), fixed.end(), sigma.begin());
        a = sample_index(sigma, rng.next());
        step.sample_prob = step.policy_prob = sigma[a];
        reach[kChanceSlot] *= sigma[a];
      } else {
        if (restricted_actor && mixing) {
          const double p = restriction->p;
          const auto fixed = restriction->fixed->at(n.infoset);
          learned.resize(num);
          tables.current_strategy(n.infoset, learned);
          for (std::size_t k = 0; k < num; ++k) sigma[k] = p * fixed[k] + (1.0 - p) * learned[k];
        } else {
          tables.current_strategy(n.infoset, sigma);
        }
        explore(sigma, epsilon, sampling);
        a = sample_index(sampling, rng.next());
        step.learner = true;
        step.sample_prob = sampling[a];
        step.policy_prob = sigma[a];
        reach[index_of(n.player)] *= sigma[a];
      }
    }
    step.action = static_cast<ActionId>(a);
    out.sample_prob *= step.sample_prob;
    out.steps.push_back(step);
    id = n.first_child + static_cast<std::int32_t>(a);
  }
  finish(tree, id, out);
}

SampleRecord record_for_terminal(const RegretTables& tables, double epsilon,
                                 std::int32_t terminal) {
  const GameTree& tree = *tables.tree;
  if (!tree.node(terminal).terminal) throw ParameterError("node is not terminal");
  std::vector<std::int32_t> path;
  for (std::int32_t id = terminal; id != tree.root(); id = tree.node(id).parent) path.push_back(id);
  std::reverse(path.begin(), path.end());

  SampleRecord out;
  std::array<double, 3> reach{1.0, 1.0, 1.0};
  std::vector<double> sampling;
  std::int32_t id = tree.root();
  for (std::int32_t next : path) {
    const auto& n = tree.node(id);
    EpisodeStep step;
    step.node = id;
    step.reach = reach;
    step.actor = n.player;
    step.action = tree.node(next).action_from_parent;
    if (n.player == Player::kChance) {
      step.sample_prob = step.policy_prob = tree.chance_probs(id)[step.action];
      reach[kChanceSlot] *= step.policy_prob;
    } else {
      const auto num = static_cast<std::size_t>(tree.infoset(n.infoset).num_actions);
      step.infoset = n.infoset;
      step.learner = true;
      step.policy_offset = static_cast<std::int32_t>(out.policy.size());
      out.policy.resize(out.policy.size() + num);
      std::span<double> sigma(out.policy.data() + step.policy_offset, num);
      tables.current_strategy(n.infoset, sigma);
      explore(sigma, epsilon, sampling);
      step.sample_prob = sampling[step.action];
      step.policy_prob = sigma[step.action];
      reach[index_of(n.player)] *= step.policy_prob;
    }
    out.sample_prob *= step.sample_prob;
    out.steps.push_back(step);
    id = next;
  }
  finish(tree, terminal, out);
  return out;
}

namespace {

double sampled_regret_at(const SampleRecord& record, std::size_t k, ActionId a) {
  const auto& step = record.steps[k];
  const Player i = step.actor;
  const double opponent_reach = step.reach[index_of(opponent(i))] * step.reach[kChanceSlot];
  const double w = sign_of(i) * record.utility * opponent_reach / record.sample_prob;
  if (a == step.action) return w * (record.tail[k + 1] - record.tail[k]);
  return -w * record.tail[k];
}

}  // namespace

double sampled_regret(const SampleRecord& record, std::int32_t infoset, ActionId a) {
  for (std::size_t k = 0; k < record.steps.size(); ++k) {
    if (record.steps[k].infoset == infoset) return sampled_regret_at(record, k, a);
  }
  throw ParameterError("infoset " + std::to_string(infoset) + " is not on the sampled path");
}

void apply_updates(RegretTables& tables, const SampleRecord& record) {
  const GameTree& tree = *tables.tree;
  const std::int64_t t = tables.iteration;
  for (std::size_t k = record.steps.size(); k-- > 0;) {
    const auto& step = record.steps[k];
    if (!step.learner) continue;
    const auto& info = tree.infoset(step.infoset);
    const auto sigma = record.policy_at(step, info.num_actions);
    const double own_reach = step.reach[index_of(step.actor)];
    const double weight = static_cast<double>(t - tables.last_update[step.infoset]) * own_reach;
    for (std::int32_t a = 0; a < info.num_actions; ++a) {
      tables.regret[info.offset + a] += sampled_regret_at(record, k, static_cast<ActionId>(a));
      tables.strategy_sum[info.offset + a] += weight * sigma[a];
    }
    tables.last_update[step.infoset] = t;
    tables.last_reach[step.infoset] = own_reach;
  }
}

void mccfr_iteration(RegretTables& tables, double epsilon, UniformSource& rng,
                     SampleRecord& scratch, const Restriction* restriction) {
  ++tables.iteration;
  sample_episode(tables, epsilon, rng, scratch, restriction);
  apply_updates(tables, scratch);
  tables.nodes_visited += scratch.steps.size() + 1;
}

TabularPolicy average_strategy(const RegretTables& tables) {
  const GameTree& tree = *tables.tree;
  std::vector<double> weights = tables.strategy_sum;
  std::vector<double> sigma;
  for (std::int32_t id = 0; id < static_cast<std::int32_t>(tree.infosets().size()); ++id) {
    const double pending =
        static_cast<double>(tables.iteration - tables.last_update[id]) * tables.last_reach[id];
    if (pending <= 0.0) continue;
    const auto& info = tree.infoset(id);
    sigma.resize(info.num_actions);
    tables.current_strategy(id, sigma);
    for (std::int32_t a = 0; a < info.num_actions; ++a) weights[info.offset + a] += pending * sigma[a];
  }
  return normalize_weights(tree, weights);
}

MccfrSolver::MccfrSolver(const GameTree& tree, MccfrConfig config)
    : config_(config), tables_(tree), rng_(config.seed) {
  config_.validate();
}

void MccfrSolver::run(std::int64_t iterations) {
  for (std::int64_t k = 0; k < iterations; ++k) {
    mccfr_iteration(tables_, config_.epsilon, rng_, scratch_, restriction_);
  }
}

}  // namespace efg
