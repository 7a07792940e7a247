// Acceptance runner: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <CLI11.hpp>

#include <cstdio>
#include <vector>

#include "primemodes/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"primemodes acceptance suite"};
  std::vector<int> only;
  std::uint64_t seed = 0;
  app.add_option("--only", only, "criterion ids to run (default: all)")
      ->delimiter(',')
      ->check(CLI::Range(1, primemodes::kCriterionCount));
  app.add_option("--seed", seed, "seed for randomized criteria");
  CLI11_PARSE(app, argc, argv);

  primemodes::AcceptanceOptions opt;
  opt.seed = seed;
  opt.only.insert(only.begin(), only.end());

  int failed = 0;
  for (const auto& r : primemodes::run_acceptance(opt)) {
    if (!r.passed) ++failed;
    std::printf("%s criterion %02d (%s): %s [%.3f s, budget %.0f s]\n", r.passed ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.detail.c_str(), r.seconds, r.budget_seconds);
  }
  return failed == 0 ? 0 : 1;
}
