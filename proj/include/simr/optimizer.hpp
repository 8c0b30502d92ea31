#ifndef SIMR_OPTIMIZER_HPP
#define SIMR_OPTIMIZER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "simr/evaluation.hpp"

namespace simr {

struct ParamBounds {
  double min = 0;
  double max = 0;
  double step = 1;
};

struct AnnealConfig {
  double initial_temperature = 2.0;
  double cooling_rate = 0.9;
  int steps_per_temperature = 20;
  double min_temperature = 0.05;
  std::uint64_t rng_seed = 0;
  ParamBounds chain_size{4, 10, 1};
  ParamBounds dispersal{5, 30, 1};
  ParamBounds angle_deg{2, 25, 1};
  ParamBounds ambiguity{0, 4, 1};
};

struct TrainingBitext {
  AxisMap ax;
  AxisMap ay;
  GoldTBM gold;
};

struct Trial {
  SimrParams params;
  double objective = 0;
  double temperature = 0;
  bool accepted = false;
};

struct AnnealResult {
  Trial best;
  std::vector<Trial> history;
};

// Pooled RMS perpendicular error of the maps produced with params over all
// training bitexts (square root of the TPC-weighted mean squared error).
double objective(const SimrParams& params,
                 std::span<const TrainingBitext> training,
                 const SearchConfig& search_cfg, const PredicateConfig& pred,
                 const TranslationLexicon& lex);

// Single-parameter +/- step proposals, Metropolis acceptance, geometric
// cooling.  Deterministic for a fixed rng_seed.  Throws InvalidBounds.
AnnealResult anneal(const AnnealConfig& cfg,
                    std::span<const TrainingBitext> training,
                    const SearchConfig& search_cfg,
                    const PredicateConfig& pred,
                    const TranslationLexicon& lex, const SimrParams& start);

}  // namespace simr

#endif
