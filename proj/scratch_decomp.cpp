// Scratch: per-condition death decomposition and final virtue means.
#include <cstdio>

#include "bridgeworld/experiment.hpp"

using namespace bridgeworld;

int main() {
  std::printf("cond    run  starved  drowned  mean_c   mean_g   mean_h   scaled\n");
  for (const Condition c : kAllConditions) {
    double st = 0, dr = 0, mc = 0, mg = 0, mh = 0, rate = 0;
    const int reps = 10;
    for (int r = 0; r < reps; ++r) {
      const auto rows = run_condition(c, 1000, 100, 1000 + r);
      const auto& last = rows.back();
      st += last.deaths_starved / 1000.0 / reps;
      dr += last.deaths_drowned / 1000.0 / reps;
      mc += last.mean_courage / reps;
      mg += last.mean_generosity / reps;
      mh += last.mean_honesty / reps;
      rate += last.death_rate_plot / reps;
    }
    std::printf("%-6s  avg  %7.2f  %7.2f  %+.3f  %+.3f  %+.3f  %.3f\n",
                std::string(condition_name(c)).c_str(), st, dr, mc, mg, mh, rate);
  }
  return 0;
}
