#include "simr/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>

#include "simr/errors.hpp"

namespace simr {

namespace {

double snap(double value, const ParamBounds& b) {
  const double clamped = std::clamp(value, b.min, b.max);
  const double k = std::round((clamped - b.min) / b.step);
  return std::clamp(b.min + k * b.step, b.min, b.max);
}

std::array<double, 4> to_array(const SimrParams& p) {
  return {static_cast<double>(p.chain_size), p.max_point_dispersal,
          p.max_angle_deviation * 180.0 / M_PI,
          static_cast<double>(p.max_point_ambiguity)};
}

SimrParams from_array(const std::array<double, 4>& a) {
  SimrParams p;
  p.chain_size = static_cast<int>(std::lround(a[0]));
  p.max_point_dispersal = a[1];
  p.max_angle_deviation = a[2] * M_PI / 180.0;
  p.max_point_ambiguity = static_cast<int>(std::lround(a[3]));
  return p;
}

void validate(const ParamBounds& b, const char* name) {
  if (b.step <= 0 || b.min > b.max)
    throw InvalidBounds(std::string("bad bounds for ") + name);
}

}  // namespace

double objective(const SimrParams& params,
                 std::span<const TrainingBitext> training,
                 const SearchConfig& search_cfg, const PredicateConfig& pred,
                 const TranslationLexicon& lex) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(training.size());
  std::vector<double> sum_sq(training.size(), 0.0);
  std::vector<std::size_t> counts(training.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const TrainingBitext& tb = training[static_cast<std::size_t>(i)];
    const BitextMap map =
        run_search(tb.ax, tb.ay, params, search_cfg, pred, lex);
    const ErrorReport report =
        rms_perpendicular_error(map, tb.gold, map.space);
    sum_sq[static_cast<std::size_t>(i)] =
        report.rms_error * report.rms_error *
        static_cast<double>(tb.gold.tpcs.size());
    counts[static_cast<std::size_t>(i)] = tb.gold.tpcs.size();
  }
  double total_sq = 0;
  std::size_t total_n = 0;
  for (std::size_t i = 0; i < training.size(); ++i) {
    total_sq += sum_sq[i];
    total_n += counts[i];
  }
  return std::sqrt(total_sq / static_cast<double>(total_n));
}

AnnealResult anneal(const AnnealConfig& cfg,
                    std::span<const TrainingBitext> training,
                    const SearchConfig& search_cfg,
                    const PredicateConfig& pred,
                    const TranslationLexicon& lex, const SimrParams& start) {
  const std::array<ParamBounds, 4> bounds = {cfg.chain_size, cfg.dispersal,
                                             cfg.angle_deg, cfg.ambiguity};
  validate(bounds[0], "chain_size");
  validate(bounds[1], "max_point_dispersal");
  validate(bounds[2], "max_angle_deviation_deg");
  validate(bounds[3], "max_point_ambiguity");
  if (bounds[0].min < 2) throw InvalidBounds("chain_size must be >= 2");
  if (bounds[3].min < 0) throw InvalidBounds("max_point_ambiguity must be >= 0");

  // Identical parameter tuples are never re-run.
  std::map<std::array<double, 4>, double> cache;
  auto evaluate = [&](const std::array<double, 4>& a) {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    const double obj =
        objective(from_array(a), training, search_cfg, pred, lex);
    cache.emplace(a, obj);
    return obj;
  };

  std::array<double, 4> current = to_array(start);
  for (std::size_t i = 0; i < 4; ++i) current[i] = snap(current[i], bounds[i]);

  AnnealResult result;
  double current_obj = evaluate(current);
  result.history.push_back(
      {from_array(current), current_obj, cfg.initial_temperature, true});
  result.best = result.history.back();

  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_int_distribution<int> pick_param(0, 3);
  std::uniform_int_distribution<int> pick_dir(0, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (double t = cfg.initial_temperature; t >= cfg.min_temperature;
       t *= cfg.cooling_rate) {
    for (int step = 0; step < cfg.steps_per_temperature; ++step) {
      const int k = pick_param(rng);
      const double dir = pick_dir(rng) == 0 ? -1.0 : 1.0;
      std::array<double, 4> proposal = current;
      proposal[static_cast<std::size_t>(k)] =
          snap(proposal[static_cast<std::size_t>(k)] + dir * bounds[k].step,
               bounds[k]);
      const double obj = evaluate(proposal);
      const double delta = obj - current_obj;
      const bool accept = delta <= 0 || unit(rng) < std::exp(-delta / t);
      result.history.push_back({from_array(proposal), obj, t, accept});
      if (accept) {
        current = proposal;
        current_obj = obj;
      }
      if (obj < result.best.objective) result.best = result.history.back();
    }
  }
  return result;
}

}  // namespace simr
