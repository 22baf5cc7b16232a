#pragma once

// The BridgeWorld state machine: a central home island, four food islands
// reached over bridges 0..3 (bridge i leads to island i), one food island at
// a time, and the nine-phase daily cycle with inline learning and population
// renewal.
//
// Draw discipline (one RngStream per run; inserting or removing a draw is a
// breaking change gated by golden-sequence tests):
//
//   init     per agent in roster order: courage, generosity, honesty
//            (uniform_real(-1,1) each); then the food island (choose(4)).
//   cycle    1. relocation on every FUF-th cycle (1-based): choose(4)
//            2. ask     per qualifying asker in roster order:
//                       choose(#alive-1) for the partner; on a lying
//                       response choose(3) for the wrong island
//            3. cross   per alive agent in roster order: choose(4) when
//                       beliefless, then bernoulli(FC)
//            4. rescue  per fallen agent in roster order:
//                       uniform_real(-1,1) for SL; shuffle(#candidates)
//                       when #candidates >= 1 (no draws for 0 or 1);
//                       uniform_real(-1,1) for RV when someone attempts
//            5. beg     per qualifying beggar in roster order:
//                       choose(#alive-1) for the partner
//            6. exemplar (when enabled) per alive agent in roster order:
//                       choose(#alive-1) for the partner
//            7. rebirth per dead slot in roster order: bernoulli(MC); then
//                       either three uniform_real(-1,1) (mutation, or fewer
//                       than two parents) or choose(#parents) and
//                       choose(#parents-1)

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bridgeworld/rng.hpp"
#include "bridgeworld/virtue.hpp"

namespace bridgeworld {

inline constexpr int kIslandCount = 4;

struct WorldConfig {
  double starting_reserve = 5.0;
  double maximum_reserve = 10.0;
  double food_value = 1.25;
  int food_update_frequency = 4;
  double falling_chance = 0.1;
  double mutation_chance = 0.05;
  double begging_threshold = 0.2;
  LearnConfig learn;
  int population = 100;
  EType etype = EType::None;
  bool learning_enabled = false;
  bool exemplars_enabled = false;
  // Sensitivity switch: beg with the selfishness factor 1-(g+1)/2 instead of
  // the printed (g+1)/2. Off by default.
  bool bf_use_selfishness = false;
  // Sensitivity switch: restrict asking to agents with generosity < 0.5. Off
  // by default; with the gate on, populations that learn high generosity
  // lose the food-location interaction entirely and starve accordingly.
  bool ask_gated_by_generosity = false;

  void validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (!(falling_chance >= 0.0 && falling_chance <= 1.0))
      fail("falling_chance: probability out of range");
    if (!(mutation_chance >= 0.0 && mutation_chance <= 1.0))
      fail("mutation_chance: probability out of range");
    if (!(maximum_reserve > 0.0)) fail("maximum_reserve: must be > 0");
    if (!(starting_reserve >= 0.0)) fail("starting_reserve: must be >= 0");
    if (starting_reserve > maximum_reserve)
      fail("starting_reserve: must be <= maximum_reserve");
    if (!(food_value >= 0.0)) fail("food_value: must be >= 0");
    if (food_update_frequency < 1) fail("food_update_frequency: must be >= 1");
    if (!(begging_threshold >= 0.0)) fail("begging_threshold: must be >= 0");
    if (!(learn.learning_rate > 0.0)) fail("learning_rate: must be > 0");
    if (population < 2) fail("population: must be >= 2");
  }

  friend bool operator==(const WorldConfig&, const WorldConfig&) = default;
};

struct AgentState {
  int id = 0;
  Character character;
  EType etype = EType::None;
  double e_value = 0.0;               // cumulative eudaimonic reward
  double reserve = 0.0;
  std::optional<int> belief;          // believed food island
  bool alive = true;
  // per-cycle scratch; crossing bridge i reaches island i
  int island = -1;
  bool fallen = false;
};

// One responded interaction, as seen from outside the world.
struct EventRecord {
  int responder = -1;
  MoralEvent event;
  int told_island = -1;  // island delivered by ToldTruth/Lied responses
};

struct CycleReport {
  int cycle = 0;  // 1-based index of the finished cycle
  int deaths_starved = 0;
  int deaths_drowned = 0;
  std::vector<EventRecord> events;  // empty when recording is off
  double mean_courage = 0.0;
  double mean_generosity = 0.0;
  double mean_honesty = 0.0;
};

// BegFactor: hunger times selflessness, both in [0,1].
inline double beg_factor(double reserve, double maximum_reserve, double generosity) {
  return (1.0 - reserve / maximum_reserve) * ((generosity + 1.0) / 2.0);
}

// The bf_use_selfishness variant replaces the generosity factor.
inline double beg_factor_selfish(double reserve, double maximum_reserve,
                                 double generosity) {
  return (1.0 - reserve / maximum_reserve) * (1.0 - (generosity + 1.0) / 2.0);
}

class World {
 public:
  World(WorldConfig cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) {
    cfg_.validate();
    agents_.resize(static_cast<std::size_t>(cfg_.population));
    int next_id = 0;
    for (auto& agent : agents_) {
      agent.id = next_id++;
      agent.character.courage = rng_.uniform_real(-1.0, 1.0);
      agent.character.generosity = rng_.uniform_real(-1.0, 1.0);
      agent.character.honesty = rng_.uniform_real(-1.0, 1.0);
      agent.etype = cfg_.etype;
      agent.e_value = 0.0;
      agent.reserve = cfg_.starting_reserve;
      agent.belief.reset();
    }
    food_island_ = static_cast<int>(rng_.choose(kIslandCount));
  }

  // Runs one full simulation cycle and reports on it.
  CycleReport run_cycle() {
    begin_cycle();
    update_food_location();
    phase_ask_location();
    phase_cross_bridges();
    phase_rescue();
    phase_collect_and_return();
    phase_beg();
    phase_eat();
    phase_exemplar();
    phase_rebirth();
    ++cycle_;
    return finish_report();
  }

  // --- individual phases, exposed for focused tests -------------------------

  // Clears per-cycle scratch and the pending report.
  void begin_cycle() {
    for (auto& agent : agents_) {
      agent.island = -1;
      agent.fallen = false;
    }
    report_ = CycleReport{};
    food_just_updated_ = false;
  }

  // Every FUF-th cycle the food moves and every belief becomes worthless.
  void update_food_location() {
    if ((cycle_ + 1) % cfg_.food_update_frequency != 0) return;
    food_island_ = static_cast<int>(rng_.choose(kIslandCount));
    for (auto& agent : agents_) agent.belief.reset();
    food_just_updated_ = true;
  }

  // Beliefless agents ask one other alive agent where the food is. Truthful
  // responders share their belief; deceitful ones name a wrong island whether
  // they know the truth or not. Skipped entirely right after a food
  // relocation.
  void phase_ask_location() {
    if (food_just_updated_) return;
    rebuild_alive_ids();
    if (alive_ids_.size() < 2) return;
    for (std::size_t pos = 0; pos < alive_ids_.size(); ++pos) {
      AgentState& asker = agents_[alive_ids_[pos]];
      if (asker.belief) continue;
      if (cfg_.ask_gated_by_generosity && !(asker.character.generosity < 0.5))
        continue;
      AgentState& asked = agents_[alive_ids_[other_index(pos)]];
      if (decide_excess(asked.character.honesty, 0.0) == Branch::Excess) {
        if (!asked.belief) continue;  // nothing to tell, no event
        asker.belief = asked.belief;
        respond(asked, MoralEvent{EventKind::ToldTruth, 1.0, {}}, *asked.belief);
      } else if (asked.character.honesty < 0.0) {
        const int wrong = wrong_island();
        asker.belief = wrong;
        respond(asked, MoralEvent{EventKind::Lied, 1.0, {}}, wrong);
      }
      // honesty == 0: deficiency with nothing to withhold, no event
    }
  }

  // Everyone travels: to the believed island, or to a random one. Each
  // crossing risks a fall.
  void phase_cross_bridges() {
    for (auto& agent : agents_) {
      if (!agent.alive) continue;
      agent.island = agent.belief ? *agent.belief
                                  : static_cast<int>(rng_.choose(kIslandCount));
      agent.fallen = rng_.bernoulli(cfg_.falling_chance);
    }
  }

  // Each fallen agent calls for help at a freshly drawn stream level.
  void phase_rescue() {
    for (auto& agent : agents_) {
      if (!agent.alive || !agent.fallen) continue;
      const double stream_level = rng_.uniform_real(-1.0, 1.0);
      resolve_call_for_help(agent.id, stream_level);
    }
  }

  // Resolves one call for help at the given stream level. Candidates are the
  // alive, non-fallen agents that crossed the same bridge this cycle, visited
  // in a shuffled order until one attempts or everyone has ignored. A failed
  // attempt (RV <= SL) drowns both parties; no attempt drowns the caller.
  // Public so tests can drive the rescue odds at forced stream levels.
  void resolve_call_for_help(int fallen_id, double stream_level) {
    AgentState& fallen = agents_[static_cast<std::size_t>(fallen_id)];
    candidate_ids_.clear();
    for (const auto& agent : agents_) {
      if (agent.alive && !agent.fallen && agent.id != fallen_id &&
          agent.island == fallen.island) {
        candidate_ids_.push_back(agent.id);
      }
    }
    if (!candidate_ids_.empty()) {
      const auto order = rng_.shuffle(candidate_ids_.size());
      for (const std::size_t idx : order) {
        AgentState& candidate = agents_[static_cast<std::size_t>(candidate_ids_[idx])];
        MoralEvent event;
        event.magnitude = stream_level;
        event.context.stream_level = stream_level;
        if (decide_excess(candidate.character.courage, stream_level) ==
            Branch::Excess) {
          event.kind = EventKind::AttemptedRescue;
          respond(candidate, event);
          const double rescue_value = rng_.uniform_real(-1.0, 1.0);
          if (rescue_value > stream_level) {
            fallen.fallen = false;
          } else {
            kill_drowned(fallen);
            kill_drowned(candidate);
          }
          return;
        }
        event.kind = EventKind::IgnoredRescueCall;
        respond(candidate, event);
      }
    }
    kill_drowned(fallen);
  }

  // Survivors on the food island collect (clamped at the cap) and now know
  // where the food is; agents that found their believed island empty forget
  // it. The trip home is riskless.
  void phase_collect_and_return() {
    for (auto& agent : agents_) {
      if (!agent.alive) continue;
      if (agent.island == food_island_) {
        agent.reserve = std::min(agent.reserve + cfg_.food_value, cfg_.maximum_reserve);
        agent.belief = food_island_;
      } else if (agent.belief && *agent.belief == agent.island) {
        agent.belief.reset();
      }
    }
  }

  // Hungry-enough agents beg one other alive agent. A sufficiently selfless
  // responder transfers one FV (its own reserve floored at zero, the
  // beggar's clamped at the cap); otherwise it ignores.
  void phase_beg() {
    rebuild_alive_ids();
    if (alive_ids_.size() < 2) return;
    for (std::size_t pos = 0; pos < alive_ids_.size(); ++pos) {
      AgentState& beggar = agents_[alive_ids_[pos]];
      const double factor =
          cfg_.bf_use_selfishness
              ? beg_factor_selfish(beggar.reserve, cfg_.maximum_reserve,
                                   beggar.character.generosity)
              : beg_factor(beggar.reserve, cfg_.maximum_reserve,
                           beggar.character.generosity);
      if (!(factor > cfg_.begging_threshold)) continue;
      AgentState& asked = agents_[alive_ids_[other_index(pos)]];
      MoralEvent event;
      event.context.responder_reserve = asked.reserve;
      event.context.reserve_cap = cfg_.maximum_reserve;
      if (decide_excess(asked.character.generosity, 0.0) == Branch::Excess) {
        asked.reserve = std::max(asked.reserve - cfg_.food_value, 0.0);
        beggar.reserve =
            std::min(beggar.reserve + cfg_.food_value, cfg_.maximum_reserve);
        event.kind = EventKind::GaveFood;
      } else {
        event.kind = EventKind::IgnoredBeggar;
      }
      respond(asked, event);
    }
  }

  // Eating is imposed; a reserve below 1 at consumption time is starvation.
  void phase_eat() {
    for (auto& agent : agents_) {
      if (!agent.alive) continue;
      if (agent.reserve < 1.0) {
        kill_starved(agent);
      } else {
        agent.reserve -= 1.0;
      }
    }
  }

  // Everyone sizes up one other agent against a start-of-phase snapshot and
  // copies the character of a same-e-type exemplar with strictly higher
  // e-value. Snapshot reads keep pairing order from cascading.
  void phase_exemplar() {
    if (!cfg_.exemplars_enabled) return;
    rebuild_alive_ids();
    if (alive_ids_.size() < 2) return;
    snapshots_.clear();
    snapshots_.reserve(alive_ids_.size());
    for (const int id : alive_ids_) {
      const AgentState& agent = agents_[static_cast<std::size_t>(id)];
      snapshots_.push_back({agent.etype, agent.e_value, agent.character});
    }
    for (std::size_t pos = 0; pos < alive_ids_.size(); ++pos) {
      AgentState& agent = agents_[alive_ids_[pos]];
      const std::size_t other = other_index(pos);
      if (const auto adopted =
              adopt_exemplar(agent.etype, agent.e_value, snapshots_[other])) {
        agent.character = *adopted;
      }
    }
  }

  // Every slot that died this cycle is refilled: usually a cross of two
  // distinct survivors (virtue-wise arithmetic mean), sometimes a mutant with
  // fresh random virtues. Survivor pool is fixed for the whole phase; with
  // fewer than two survivors the slot mutates.
  void phase_rebirth() {
    parent_ids_.clear();
    for (const auto& agent : agents_) {
      if (agent.alive) parent_ids_.push_back(agent.id);
    }
    for (auto& agent : agents_) {
      if (agent.alive) continue;
      const bool mutate = rng_.bernoulli(cfg_.mutation_chance);
      if (mutate || parent_ids_.size() < 2) {
        agent.character.courage = rng_.uniform_real(-1.0, 1.0);
        agent.character.generosity = rng_.uniform_real(-1.0, 1.0);
        agent.character.honesty = rng_.uniform_real(-1.0, 1.0);
      } else {
        const std::size_t first = rng_.choose(parent_ids_.size());
        std::size_t second = rng_.choose(parent_ids_.size() - 1);
        if (second >= first) ++second;
        const Character& p1 =
            agents_[static_cast<std::size_t>(parent_ids_[first])].character;
        const Character& p2 =
            agents_[static_cast<std::size_t>(parent_ids_[second])].character;
        agent.character.courage = (p1.courage + p2.courage) / 2.0;
        agent.character.generosity = (p1.generosity + p2.generosity) / 2.0;
        agent.character.honesty = (p1.honesty + p2.honesty) / 2.0;
      }
      agent.etype = cfg_.etype;
      agent.e_value = 0.0;
      agent.reserve = cfg_.starting_reserve;
      agent.belief.reset();
      agent.alive = true;
      agent.island = -1;
      agent.fallen = false;
      ++rebirths_;
    }
  }

  // --- accessors -------------------------------------------------------------

  const WorldConfig& config() const { return cfg_; }
  const std::vector<AgentState>& agents() const { return agents_; }
  AgentState& agent(int id) { return agents_[static_cast<std::size_t>(id)]; }
  int food_island() const { return food_island_; }
  int cycle() const { return cycle_; }
  int total_deaths() const { return deaths_starved_ + deaths_drowned_; }
  int deaths_starved() const { return deaths_starved_; }
  int deaths_drowned() const { return deaths_drowned_; }
  long long rebirths() const { return rebirths_; }
  RngStream& rng() { return rng_; }

  // Events recorded so far in the cycle in progress.
  const std::vector<EventRecord>& pending_events() const { return report_.events; }

  // Event recording is useful to tests and costs allocations; harness runs
  // switch it off.
  void set_record_events(bool enabled) { record_events_ = enabled; }

 private:
  void rebuild_alive_ids() {
    alive_ids_.clear();
    for (const auto& agent : agents_) {
      if (agent.alive) alive_ids_.push_back(agent.id);
    }
  }

  // One partner draw: a uniform pick over the alive roster minus the agent at
  // `pos`, mapped by index skip.
  std::size_t other_index(std::size_t pos) {
    const std::size_t idx = rng_.choose(alive_ids_.size() - 1);
    return idx >= pos ? idx + 1 : idx;
  }

  // A wrong island: one choose(3) over the islands that do not hold food.
  int wrong_island() {
    const auto idx = static_cast<int>(rng_.choose(kIslandCount - 1));
    return idx >= food_island_ ? idx + 1 : idx;
  }

  // Reward evaluation plus (when enabled) the inline learning step for one
  // responded event.
  void respond(AgentState& responder, const MoralEvent& event, int told_island = -1) {
    if (record_events_) {
      report_.events.push_back({responder.id, event, told_island});
    }
    if (responder.etype == EType::None) return;
    const double delta = eudaimonic_delta(responder.etype, event);
    responder.e_value += delta;
    if (cfg_.learning_enabled) {
      responder.character =
          learn(responder.character, virtue_of(event.kind), branch_of(event.kind),
                delta, cfg_.learn, std::abs(event.magnitude));
    }
  }

  void kill_drowned(AgentState& agent) {
    agent.alive = false;
    agent.fallen = false;
    ++deaths_drowned_;
    ++report_.deaths_drowned;
  }

  void kill_starved(AgentState& agent) {
    agent.alive = false;
    ++deaths_starved_;
    ++report_.deaths_starved;
  }

  CycleReport finish_report() {
    report_.cycle = cycle_;
    double courage = 0.0, generosity = 0.0, honesty = 0.0;
    for (const auto& agent : agents_) {
      courage += agent.character.courage;
      generosity += agent.character.generosity;
      honesty += agent.character.honesty;
    }
    const auto n = static_cast<double>(agents_.size());
    report_.mean_courage = courage / n;
    report_.mean_generosity = generosity / n;
    report_.mean_honesty = honesty / n;
    return std::move(report_);
  }

  WorldConfig cfg_;
  RngStream rng_;
  std::vector<AgentState> agents_;
  int food_island_ = 0;
  int cycle_ = 0;
  int deaths_starved_ = 0;
  int deaths_drowned_ = 0;
  long long rebirths_ = 0;
  bool food_just_updated_ = false;
  bool record_events_ = true;
  CycleReport report_;
  // phase scratch
  std::vector<int> alive_ids_;
  std::vector<int> candidate_ids_;
  std::vector<int> parent_ids_;
  std::vector<ExemplarSnapshot> snapshots_;
};

}  // namespace bridgeworld
