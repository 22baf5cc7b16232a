// Scratch: measure the seven-condition suite against the published table.
#include <chrono>
#include <cstdio>

#include "bridgeworld/experiment.hpp"

int main(int argc, char** argv) {
  using namespace bridgeworld;
  const std::uint64_t base = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = run_suite(kAllConditions, 10, 1000, 100, base);
  const auto t1 = std::chrono::steady_clock::now();
  std::printf("base seed %llu  (%.1fs)\n", (unsigned long long)base,
              std::chrono::duration<double>(t1 - t0).count());
  std::printf("cond   raw_mean  raw_sd   scaled_mean  scaled_sd\n");
  for (const auto& row : rows) {
    std::printf("%-5s  %8.3f  %6.3f   %10.4f  %9.4f\n",
                std::string(condition_name(row.condition)).c_str(),
                row.mean_death_rate, row.sd_death_rate, row.mean_death_rate / 5.0,
                row.sd_death_rate / 5.0);
  }
  return 0;
}
