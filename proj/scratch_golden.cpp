// Scratch: compute golden values to freeze into tests. Not part of the build.
#include <cinttypes>
#include <cstdint>
#include <cstdio>

#include "bridgeworld/experiment.hpp"
#include "bridgeworld/rng.hpp"
#include "bridgeworld/world.hpp"

// Reference implementation typed directly from the published Blackman/Vigna
// C listings (splitmix64.c, xoshiro256starstar.c).
namespace ref {
static uint64_t sm_x;
uint64_t splitmix64_next() {
  uint64_t z = (sm_x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
static uint64_t s[4];
static inline uint64_t rotl(const uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
uint64_t next() {
  const uint64_t result = rotl(s[1] * 5, 7) * 9;
  const uint64_t t = s[1] << 17;
  s[2] ^= s[0];
  s[3] ^= s[1];
  s[1] ^= s[2];
  s[0] ^= s[3];
  s[2] ^= t;
  s[3] = rotl(s[3], 45);
  return result;
}
void seed(uint64_t v) {
  sm_x = v;
  for (auto& w : s) w = splitmix64_next();
}
}  // namespace ref

int main() {
  using namespace bridgeworld;

  ref::seed(42);
  RngStream mine(42);
  bool equal = true;
  std::printf("seed 42 first raw outputs (reference):\n");
  for (int i = 0; i < 6; ++i) {
    const uint64_t r = ref::next();
    const uint64_t m = mine.next_u64();
    if (r != m) equal = false;
    std::printf("  [%d] %" PRIu64 "  (0x%016" PRIx64 ")%s\n", i, r, r,
                r == m ? "" : "  MISMATCH");
  }
  std::printf("reference == RngStream over 6 draws: %s\n", equal ? "yes" : "NO");

  {
    RngStream s42(42);
    const double v42 = s42.uniform_real(-1.0, 1.0);
    std::printf("v42 uniform_real(-1,1) = %.17g  hex %a\n", v42, v42);
  }
  {
    RngStream s42(42);
    std::printf("b42 bernoulli(0.1) = %d\n", int(s42.bernoulli(0.1)));
  }
  {
    RngStream s42(42);
    const auto p = s42.shuffle(4);
    std::printf("p42 shuffle(4) = [%zu,%zu,%zu,%zu]\n", p[0], p[1], p[2], p[3]);
  }
  {
    WorldConfig cfg;
    cfg.population = 100;
    World w(cfg, 42);
    const auto& a0 = w.agents()[0];
    const auto& a99 = w.agents()[99];
    std::printf("init seed42 pop100: a0=(%.17g, %.17g, %.17g)\n",
                a0.character.courage, a0.character.generosity, a0.character.honesty);
    std::printf("                    a0 hex=(%a, %a, %a)\n", a0.character.courage,
                a0.character.generosity, a0.character.honesty);
    std::printf("                    a99=(%.17g, %.17g, %.17g)\n",
                a99.character.courage, a99.character.generosity,
                a99.character.honesty);
    std::printf("                    a99 hex=(%a, %a, %a)\n", a99.character.courage,
                a99.character.generosity, a99.character.honesty);
    std::printf("                    food_island=%d\n", w.food_island());
  }
  {
    // pb seed 42 first and last telemetry rows: change-detector goldens
    const auto rows = run_condition(Condition::PB, 1000, 100, 42);
    const auto& r0 = rows.front();
    const auto& rN = rows.back();
    std::printf("pb seed42 row1:    it=%d td=%d st=%d dr=%d mc=%.17g mg=%.17g mh=%.17g\n",
                r0.iteration, r0.deaths_total, r0.deaths_starved, r0.deaths_drowned,
                r0.mean_courage, r0.mean_generosity, r0.mean_honesty);
    std::printf("pb seed42 row1000: it=%d td=%d st=%d dr=%d rate=%.17g plot=%.17g\n",
                rN.iteration, rN.deaths_total, rN.deaths_starved, rN.deaths_drowned,
                rN.death_rate, rN.death_rate_plot);
  }
  return 0;
}
