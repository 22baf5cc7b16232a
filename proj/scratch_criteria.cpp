// Scratch: evaluate acceptance criteria 1-3 over 10 base seeds.
#include <cstdio>
#include <vector>

#include "bridgeworld/experiment.hpp"

using namespace bridgeworld;

int main() {
  const int kSuites = 10;
  int pass1 = 0;
  std::vector<double> nl_all, s_all, pb_all;
  double agg[7] = {};
  for (int k = 0; k < kSuites; ++k) {
    const std::uint64_t base = 1000ULL * (k + 1);
    const auto rows = run_suite(kAllConditions, 10, 1000, 100, base);
    double m[7];
    for (int c = 0; c < 7; ++c) {
      m[c] = rows[c].mean_death_rate / 5.0;  // scaled, Table 3 units
      agg[c] += m[c] / kSuites;
    }
    // order: nl s s+e pb pb+e ss ss+e
    const bool se_gt_s = m[2] > m[1];
    const bool s_gt_nl = m[1] > m[0];
    const bool nl_pb = (m[0] > m[3]) || (m[3] - m[0] <= 0.3);
    const bool ss_lt_pb = m[5] < m[3];
    const bool sse_le_ss = m[6] <= m[5];
    const bool all = se_gt_s && s_gt_nl && nl_pb && ss_lt_pb && sse_le_ss;
    pass1 += all;
    std::printf(
        "base %6llu  nl=%.3f s=%.3f s+e=%.3f pb=%.3f pb+e=%.3f ss=%.3f ss+e=%.3f"
        "  | s+e>s:%d s>nl:%d nl/pb:%d ss<pb:%d ss+e<=ss:%d => %s\n",
        (unsigned long long)base, m[0], m[1], m[2], m[3], m[4], m[5], m[6],
        se_gt_s, s_gt_nl, nl_pb, ss_lt_pb, sse_le_ss, all ? "PASS" : "FAIL");
  }
  std::printf("\ncriterion 1: %d/10 suites pass (need >= 8)\n", pass1);
  std::printf("criterion 2 (aggregate): nl=%.4f (2.452+-0.8)  s=%.4f (3.037+-0.6)  "
              "pb=%.4f (2.218+-0.5)\n", agg[0], agg[1], agg[3]);

  // criterion 3: NL virtue drift, first base seed's suite repeats
  int neg = 0;
  double courage_mean = 0;
  for (int r = 0; r < 10; ++r) {
    const auto rows = run_condition(Condition::NL, 1000, 100, 1000 + r);
    const auto& last = rows.back();
    neg += (last.mean_courage < 0.0 && last.mean_generosity < 0.0);
    courage_mean += last.mean_courage / 10.0;
  }
  std::printf("criterion 3: both-negative in %d/10 repeats (need >= 9); courage mean "
              "%.4f (need [-0.8,-0.1])\n", neg, courage_mean);
  return 0;
}
