#include "leibrack/selftest.hpp"

#include <array>
#include <cstdio>

using namespace leibrack;

namespace {

constexpr std::array<const char*, 9> kTolerance{
    "exact zero residual",
    "exact: delta^2 = 0, composition identity, dims",
    "exact eqm p+q<=6, invariance n<=5",
    "exact trilinear identity, closed form N=6",
    "exact ranks, dims (0,1,0,1)",
    "exact B recovery, N=6",
    "exact a recovery, N=8",
    "sampled residual < 1e-9, |x|<=1, 100 samples; pointedness < 1e-12; |det L_x| > 1e-12",
    "byte-identical"};

}  // namespace

int main() {
  constexpr std::uint64_t kSeed = 42;
  const auto first = run_acceptance(kSeed);
  bool all = true;
  for (const auto& r : first) {
    const bool in_time = r.seconds < r.limit_seconds;
    const bool ok = r.pass && in_time;
    all = all && ok;
    std::printf("criterion %d %-26s %s  [%s] (%.2f s, limit %.0f s)\n", r.id, r.name.c_str(), ok ? "PASS" : "FAIL",
                kTolerance[r.id - 1], r.seconds, r.limit_seconds);
    if (!r.pass) std::printf("  details: %s\n", r.details.dump().c_str());
  }
  const auto second = run_acceptance(kSeed);
  const bool same = selftest_report(first, kSeed, false).dump() == selftest_report(second, kSeed, false).dump();
  all = all && same;
  std::printf("criterion 9 %-26s %s  [%s] (two seed-42 reports)\n", "determinism", same ? "PASS" : "FAIL",
              kTolerance[8]);
  return all ? 0 : 1;
}
