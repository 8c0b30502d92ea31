// Compares the serial reference kernels against the OpenMP variants and
// reports end-to-end mapping throughput at a few input sizes.
#include <chrono>
#include <cstdio>

#include "simr/formats.hpp"
#include "simr/synthgen.hpp"

using namespace simr;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  const TokenRules rules = TokenRules::defaults();
  const PredicateConfig pred;
  const TranslationLexicon lex;
  const SimrParams params;

  std::printf("%-28s %10s %10s\n", "kernel", "size", "seconds");

  // Point generation over one mid-sized rectangle, serial vs parallel.
  {
    const auto text = random_source(20000, 11);
    DistortionSpec spec;
    spec.substitution_rate = 0.05;
    spec.rng_seed = 11;
    const auto bitext = generate(text, spec);
    const AxisMap ax = tokenize_cognate_mode(bitext.text_x, rules);
    const AxisMap ay = tokenize_cognate_mode(bitext.text_y, rules);
    const Rect region{0, 0, 2000, 2000};

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = generate_points(region, ax, ay, pred, lex);
    std::printf("%-28s %10d %10.4f\n", "generate_points (serial)", 2000,
                seconds_since(t0));

    t0 = std::chrono::steady_clock::now();
    const auto parallel = generate_points_parallel(region, ax, ay, pred, lex);
    std::printf("%-28s %10d %10.4f\n", "generate_points (openmp)", 2000,
                seconds_since(t0));
    if (serial != parallel) {
      std::printf("MISMATCH: parallel kernel diverged from the reference\n");
      return 1;
    }
  }

  // Full trace at increasing sizes; expected to scale roughly linearly.
  for (std::size_t chars : {10000u, 40000u, 160000u}) {
    const auto text = random_source(chars, 7);
    const AxisMap ax = tokenize_cognate_mode(text, rules);
    const auto t0 = std::chrono::steady_clock::now();
    const BitextMap map =
        run_search(ax, ax, params, SearchConfig{}, pred, lex);
    std::printf("%-28s %10zu %10.4f\n", "run_search (identity)", chars,
                seconds_since(t0));
    (void)map;
  }
  return 0;
}
