#pragma once

// The seven experimental conditions, repeated-run execution, and the
// death-rate statistics aggregated from them.

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bridgeworld/world.hpp"

namespace bridgeworld {

enum class Condition { NL, S, SE, PB, PBE, SS, SSE };

inline constexpr std::array<Condition, 7> kAllConditions = {
    Condition::NL, Condition::S,  Condition::SE, Condition::PB,
    Condition::PBE, Condition::SS, Condition::SSE};

struct ConditionSwitches {
  EType etype = EType::None;
  bool learning_enabled = false;
  bool exemplars_enabled = false;
};

// NL is the drift-only baseline and never enables exemplars; +E variants add
// exemplar copying on top of learning.
constexpr ConditionSwitches switches_for(Condition condition) {
  switch (condition) {
    case Condition::NL: return {EType::None, false, false};
    case Condition::S: return {EType::Selfish, true, false};
    case Condition::SE: return {EType::Selfish, true, true};
    case Condition::PB: return {EType::PraiseBlame, true, false};
    case Condition::PBE: return {EType::PraiseBlame, true, true};
    case Condition::SS: return {EType::SelfishSelfless, true, false};
    default: return {EType::SelfishSelfless, true, true};
  }
}

constexpr std::string_view condition_name(Condition condition) {
  switch (condition) {
    case Condition::NL: return "nl";
    case Condition::S: return "s";
    case Condition::SE: return "s+e";
    case Condition::PB: return "pb";
    case Condition::PBE: return "pb+e";
    case Condition::SS: return "ss";
    default: return "ss+e";
  }
}

inline std::optional<Condition> parse_condition(std::string_view name) {
  for (const Condition condition : kAllConditions) {
    if (condition_name(condition) == name) return condition;
  }
  return std::nullopt;
}

// Per-iteration record; death_rate is cumulative deaths over elapsed cycles,
// death_rate_plot the same divided by 5 (the chart scaling factor).
struct TelemetryRow {
  int iteration = 0;
  int deaths_total = 0;
  int deaths_starved = 0;
  int deaths_drowned = 0;
  double mean_courage = 0.0;
  double mean_generosity = 0.0;
  double mean_honesty = 0.0;
  double death_rate = 0.0;
  double death_rate_plot = 0.0;

  friend bool operator==(const TelemetryRow&, const TelemetryRow&) = default;
};

struct SummaryRow {
  Condition condition = Condition::NL;
  int repeats = 0;
  double mean_death_rate = 0.0;
  double sd_death_rate = 0.0;  // sample (n-1) SD; 0 when repeats < 2
  std::uint64_t base_seed = 0;
};

inline double death_rate(long long total_deaths, long long cycle) {
  if (cycle < 1) throw std::invalid_argument("death_rate: requires cycle >= 1");
  return static_cast<double>(total_deaths) / static_cast<double>(cycle);
}

// Table 2 defaults with the condition's switches applied.
inline WorldConfig make_condition_config(Condition condition, int population,
                                         WorldConfig base = WorldConfig{}) {
  const ConditionSwitches sw = switches_for(condition);
  base.etype = sw.etype;
  base.learning_enabled = sw.learning_enabled;
  base.exemplars_enabled = sw.exemplars_enabled;
  base.population = population;
  return base;
}

// Runs one world for the given number of cycles, one telemetry row per cycle.
inline std::vector<TelemetryRow> run_config(const WorldConfig& cfg, int iterations,
                                            std::uint64_t seed) {
  if (iterations < 1) throw std::invalid_argument("iterations: must be >= 1");
  World world(cfg, seed);
  world.set_record_events(false);
  std::vector<TelemetryRow> rows;
  rows.reserve(static_cast<std::size_t>(iterations));
  for (int i = 0; i < iterations; ++i) {
    const CycleReport report = world.run_cycle();
    const double rate = death_rate(world.total_deaths(), report.cycle);
    rows.push_back({report.cycle, world.total_deaths(), world.deaths_starved(),
                    world.deaths_drowned(), report.mean_courage,
                    report.mean_generosity, report.mean_honesty, rate, rate / 5.0});
  }
  return rows;
}

inline std::vector<TelemetryRow> run_condition(Condition condition, int iterations,
                                               int population, std::uint64_t seed,
                                               const WorldConfig& base = WorldConfig{}) {
  return run_config(make_condition_config(condition, population, base), iterations,
                    seed);
}

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

// Mean and sample (n-1) standard deviation; sd is 0 for fewer than 2 values.
inline MeanSd mean_and_sample_sd(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean_and_sample_sd: empty input");
  double sum = 0.0;
  for (const double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

// Runs `repeats` independent worlds per condition (run seeds are
// base_seed + run_index) and summarizes each condition's final death rates.
// Runs execute on a small worker pool; aggregation is a deterministic fold in
// condition/run order regardless of completion order.
inline std::vector<SummaryRow> run_suite(std::span<const Condition> conditions,
                                         int repeats, int iterations, int population,
                                         std::uint64_t base_seed,
                                         const WorldConfig& base = WorldConfig{},
                                         int threads = 0) {
  if (repeats < 1) throw std::invalid_argument("repeats: must be >= 1");
  struct Job {
    std::size_t condition_index;
    int run_index;
  };
  std::vector<Job> jobs;
  jobs.reserve(conditions.size() * static_cast<std::size_t>(repeats));
  for (std::size_t c = 0; c < conditions.size(); ++c) {
    for (int r = 0; r < repeats; ++r) jobs.push_back({c, r});
  }
  std::vector<std::vector<double>> final_rates(
      conditions.size(), std::vector<double>(static_cast<std::size_t>(repeats)));

  const auto run_job = [&](const Job& job) {
    const std::vector<TelemetryRow> rows =
        run_condition(conditions[job.condition_index], iterations, population,
                      base_seed + static_cast<std::uint64_t>(job.run_index), base);
    final_rates[job.condition_index][static_cast<std::size_t>(job.run_index)] =
        rows.back().death_rate;
  };

  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
  if (workers == 1) {
    for (const Job& job : jobs) run_job(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t j = next.fetch_add(1);
          if (j >= jobs.size()) return;
          run_job(jobs[j]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<SummaryRow> summaries;
  summaries.reserve(conditions.size());
  for (std::size_t c = 0; c < conditions.size(); ++c) {
    const MeanSd stats = mean_and_sample_sd(final_rates[c]);
    summaries.push_back({conditions[c], repeats, stats.mean, stats.sd, base_seed});
  }
  return summaries;
}

}  // namespace bridgeworld
