#include <cmath>

#include "doctest.h"
#include "simr/errors.hpp"
#include "simr/optimizer.hpp"
#include "simr/synthgen.hpp"

using namespace simr;

namespace {

const TokenRules kRules = TokenRules::defaults();

TrainingBitext make_training(std::size_t chars, std::uint64_t seed,
                             double sub_rate, double jitter) {
  DistortionSpec spec;
  spec.substitution_rate = sub_rate;
  spec.length_jitter = jitter;
  spec.rng_seed = seed;
  const SynthBitext bitext = generate(random_source(chars, seed), spec);
  TrainingBitext tb;
  tb.ax = tokenize_cognate_mode(bitext.text_x, kRules);
  tb.ay = tokenize_cognate_mode(bitext.text_y, kRules);
  tb.gold = bitext.gold;
  return tb;
}

bool same_trial(const Trial& a, const Trial& b) {
  return a.params.chain_size == b.params.chain_size &&
         a.params.max_point_dispersal == b.params.max_point_dispersal &&
         a.params.max_angle_deviation == b.params.max_angle_deviation &&
         a.params.max_point_ambiguity == b.params.max_point_ambiguity &&
         a.objective == b.objective && a.temperature == b.temperature &&
         a.accepted == b.accepted;
}

}  // namespace

TEST_CASE("perfect signal drives the objective to zero") {
  // Identity bitext: gold lies on the main diagonal.
  DistortionSpec spec;
  const SynthBitext bitext = generate(random_source(3000, 51), spec);
  TrainingBitext tb;
  tb.ax = tokenize_cognate_mode(bitext.text_x, kRules);
  tb.ay = tokenize_cognate_mode(bitext.text_y, kRules);
  tb.gold = bitext.gold;
  const std::vector<TrainingBitext> training{tb};
  PredicateConfig pred;
  pred.lcsr_threshold = 1.0;
  CHECK(objective(SimrParams{}, training, SearchConfig{}, pred, {}) <= 1.0);
}

TEST_CASE("a hopeless dispersal degenerates to the diagonal's honest error") {
  const TrainingBitext tb = make_training(2000, 53, 0.1, 0.3);
  const std::vector<TrainingBitext> training{tb};
  SimrParams params;
  params.max_point_dispersal = 0.001;
  params.max_angle_deviation = 1e-6;
  PredicateConfig pred;
  const double obj = objective(params, training, SearchConfig{}, pred, {});
  // Closed form: the gold TPCs' RMS scaled-vertical distance to the
  // origin-terminus line.
  const BitextSpace space{static_cast<double>(tb.ax.text_length),
                          static_cast<double>(tb.ay.text_length)};
  const double scale = space.width / std::hypot(space.width, space.height);
  double ss = 0;
  for (const Point& p : tb.gold.tpcs) {
    const double e = (p.y - space.slope() * p.x) * scale;
    ss += e * e;
  }
  CHECK(obj == doctest::Approx(std::sqrt(ss / tb.gold.tpcs.size())));
}

TEST_CASE("the pooled objective weights bitexts by TPC count") {
  const TrainingBitext t1 = make_training(1500, 55, 0.08, 0.1);
  const TrainingBitext t2 = make_training(2500, 57, 0.12, 0.1);
  PredicateConfig pred;
  const SimrParams params;
  const double o1 =
      objective(params, std::vector<TrainingBitext>{t1}, {}, pred, {});
  const double o2 =
      objective(params, std::vector<TrainingBitext>{t2}, {}, pred, {});
  const double pooled =
      objective(params, std::vector<TrainingBitext>{t1, t2}, {}, pred, {});
  const double n1 = static_cast<double>(t1.gold.tpcs.size());
  const double n2 = static_cast<double>(t2.gold.tpcs.size());
  CHECK(pooled ==
        doctest::Approx(std::sqrt((o1 * o1 * n1 + o2 * o2 * n2) / (n1 + n2))));
}

TEST_CASE("geometric cooling visits the expected temperature levels") {
  const TrainingBitext tb = make_training(1000, 59, 0.05, 0.0);
  AnnealConfig cfg;
  cfg.initial_temperature = 1.0;
  cfg.cooling_rate = 0.5;
  cfg.min_temperature = 0.1;
  cfg.steps_per_temperature = 1;
  const AnnealResult result =
      anneal(cfg, std::vector<TrainingBitext>{tb}, {}, {}, {}, SimrParams{});
  std::vector<double> temps;
  for (std::size_t i = 1; i < result.history.size(); ++i)
    if (temps.empty() || temps.back() != result.history[i].temperature)
      temps.push_back(result.history[i].temperature);
  CHECK(temps == std::vector<double>{1.0, 0.5, 0.25, 0.125});
}

TEST_CASE("annealing is deterministic under a fixed seed") {
  const TrainingBitext tb = make_training(1200, 61, 0.1, 0.1);
  const std::vector<TrainingBitext> training{tb};
  AnnealConfig cfg;
  cfg.rng_seed = 7;
  cfg.initial_temperature = 1.0;
  cfg.cooling_rate = 0.7;
  cfg.min_temperature = 0.2;
  cfg.steps_per_temperature = 5;
  const AnnealResult a = anneal(cfg, training, {}, {}, {}, SimrParams{});
  const AnnealResult b = anneal(cfg, training, {}, {}, {}, SimrParams{});
  REQUIRE(a.history.size() == b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i)
    CHECK(same_trial(a.history[i], b.history[i]));
}

TEST_CASE("trials stay within bounds on the step grid; best is the minimum") {
  const TrainingBitext tb = make_training(1200, 63, 0.1, 0.1);
  AnnealConfig cfg;
  cfg.rng_seed = 3;
  cfg.steps_per_temperature = 8;
  cfg.initial_temperature = 1.0;
  cfg.cooling_rate = 0.6;
  cfg.min_temperature = 0.15;
  const AnnealResult result =
      anneal(cfg, std::vector<TrainingBitext>{tb}, {}, {}, {}, SimrParams{});
  double best = 1e300;
  for (const Trial& t : result.history) {
    best = std::min(best, t.objective);
    CHECK(t.params.chain_size >= cfg.chain_size.min);
    CHECK(t.params.chain_size <= cfg.chain_size.max);
    CHECK(t.params.max_point_dispersal >= cfg.dispersal.min);
    CHECK(t.params.max_point_dispersal <= cfg.dispersal.max);
    const double steps = (t.params.max_point_dispersal - cfg.dispersal.min) /
                         cfg.dispersal.step;
    CHECK(std::abs(steps - std::round(steps)) < 1e-9);
    CHECK(t.params.max_point_ambiguity >= cfg.ambiguity.min);
    CHECK(t.params.max_point_ambiguity <= cfg.ambiguity.max);
  }
  CHECK(result.best.objective == doctest::Approx(best));
}

TEST_CASE("a 1-D collapsed search finds the exhaustive-scan optimum") {
  const TrainingBitext tb = make_training(2000, 65, 0.1, 0.2);
  const std::vector<TrainingBitext> training{tb};
  AnnealConfig cfg;
  cfg.rng_seed = 11;
  cfg.initial_temperature = 2.0;
  cfg.cooling_rate = 0.8;
  cfg.min_temperature = 0.05;
  cfg.steps_per_temperature = 12;
  cfg.chain_size = {6, 6, 1};
  cfg.angle_deg = {10, 10, 1};
  cfg.ambiguity = {1, 1, 1};
  cfg.dispersal = {4, 22, 2};  // 10 admissible values
  const AnnealResult result =
      anneal(cfg, training, {}, {}, {}, SimrParams{});

  double scan_best = 1e300;
  for (double d = 4; d <= 22; d += 2) {
    SimrParams p;
    p.max_point_dispersal = d;
    scan_best = std::min(scan_best, objective(p, training, {}, {}, {}));
  }
  CHECK(result.best.objective == doctest::Approx(scan_best));
}

TEST_CASE("collapsed bounds on all axes keep the walk at the start point") {
  const TrainingBitext tb = make_training(800, 67, 0.05, 0.0);
  AnnealConfig cfg;
  cfg.initial_temperature = 1.0;
  cfg.cooling_rate = 0.5;
  cfg.min_temperature = 0.3;
  cfg.steps_per_temperature = 3;
  cfg.chain_size = {6, 6, 1};
  cfg.dispersal = {15, 15, 1};
  cfg.angle_deg = {10, 10, 1};
  cfg.ambiguity = {1, 1, 1};
  const AnnealResult result =
      anneal(cfg, std::vector<TrainingBitext>{tb}, {}, {}, {}, SimrParams{});
  for (const Trial& t : result.history) {
    CHECK(t.accepted);
    CHECK(t.params.chain_size == 6);
    CHECK(t.params.max_point_dispersal == 15.0);
    CHECK(t.params.max_point_ambiguity == 1);
  }
  CHECK(result.best.objective == doctest::Approx(result.history[0].objective));
}

TEST_CASE("malformed bounds are rejected") {
  const TrainingBitext tb = make_training(800, 69, 0.0, 0.0);
  const std::vector<TrainingBitext> training{tb};
  AnnealConfig cfg;
  cfg.dispersal = {10, 5, 1};  // min > max
  CHECK_THROWS_AS(anneal(cfg, training, {}, {}, {}, SimrParams{}),
                  InvalidBounds);
  cfg = AnnealConfig{};
  cfg.chain_size = {1, 8, 1};  // chains need two points
  CHECK_THROWS_AS(anneal(cfg, training, {}, {}, {}, SimrParams{}),
                  InvalidBounds);
  cfg = AnnealConfig{};
  cfg.angle_deg = {2, 25, 0};  // zero step
  CHECK_THROWS_AS(anneal(cfg, training, {}, {}, {}, SimrParams{}),
                  InvalidBounds);
}
