// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.
#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "simr/errors.hpp"
#include "simr/formats.hpp"
#include "simr/optimizer.hpp"
#include "simr/synthgen.hpp"

using namespace simr;

namespace {

const TokenRules kRules = TokenRules::defaults();

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

long max_rss_kb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

PredicateConfig exact_cognates() {
  PredicateConfig cfg;
  cfg.lcsr_threshold = 1.0;
  return cfg;
}

double map_rms(const SynthBitext& bitext, const SimrParams& params,
               const PredicateConfig& pred) {
  const AxisMap ax = tokenize_cognate_mode(bitext.text_x, kRules);
  const AxisMap ay = tokenize_cognate_mode(bitext.text_y, kRules);
  const BitextMap map =
      run_search(ax, ay, params, SearchConfig{}, pred, {});
  return rms_perpendicular_error(map, bitext.gold, map.space).rms_error;
}

// --- criterion 1: recognizer oracle equivalence -----------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  const BitextSpace space{60, 45};
  std::size_t mismatches = 0;

  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> coord(0, 30);
    std::vector<Point> pts;
    const std::size_t n = 3 + rng() % 10;  // <= 12
    while (pts.size() < n) {
      const Point p{static_cast<double>(coord(rng)),
                    static_cast<double>(coord(rng))};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    SimrParams params;
    params.chain_size = 2 + static_cast<int>(rng() % 5);
    params.max_point_dispersal = 0.5 + (rng() % 100) / 10.0;
    params.max_angle_deviation = 0.02 + (rng() % 60) / 100.0;

    const auto got = find_chains(pts, params, space);
    const auto want = oracles::chain_windows(pts, params, space);
    if (got.size() != want.size()) {
      ++mismatches;
      continue;
    }
    for (std::size_t i = 0; i < got.size(); ++i)
      if (got[i].points != want[i]) ++mismatches;
  }

  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> coord(0, 15);
    std::vector<Point> pts;
    const std::size_t n = 5 + rng() % 46;  // <= 50
    for (std::size_t i = 0; i < n; ++i)
      pts.push_back({static_cast<double>(coord(rng)),
                     static_cast<double>(coord(rng))});
    for (const Point& p : pts)
      if (ambiguity_level(p, pts) != oracles::ambiguity(p, pts)) ++mismatches;
  }

  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "recognizer oracle equivalence (%zu mismatches, %.2f s)",
                mismatches, secs);
  report(1, mismatches == 0 && secs < 10.0, buf);
}

// --- criterion 2: identity-bitext exactness ---------------------------------

void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  const SimrParams params;
  const PredicateConfig pred = exact_cognates();
  bool ok = true;
  std::mt19937_64 rng(202);
  for (int i = 0; i < 20; ++i) {
    const std::size_t chars = 1000 + (rng() % 50) * 1000;  // 1-50 kchars
    const std::u32string text = random_source(chars, 1000 + i);
    const AxisMap ax = tokenize_cognate_mode(text, kRules);
    const BitextMap map =
        run_search(ax, ax, params, SearchConfig{}, pred, {});

    const SynthBitext identity = generate(text, DistortionSpec{});
    const double rms =
        rms_perpendicular_error(map, identity.gold, map.space).rms_error;
    if (rms > params.max_point_dispersal) ok = false;
    for (int s = 0; s < 1000; ++s) {
      const double x = map.space.width * s / 999.0;
      if (std::abs(interpolate(map, x) - x) > params.max_point_dispersal) {
        ok = false;
        break;
      }
    }
  }
  const double secs = seconds_since(t0);
  char buf[120];
  std::snprintf(buf, sizeof buf, "identity-bitext exactness (%.2f s)", secs);
  report(2, ok && secs < 30.0, buf);
}

// --- criterion 3: noise robustness ------------------------------------------

void criterion_3() {
  const double rates[3] = {0.05, 0.10, 0.15};
  const double limits[3] = {5.0, 10.0, 20.0};
  bool ok = true;
  std::string detail = "noise robustness:";
  for (int i = 0; i < 3; ++i) {
    DistortionSpec spec;
    spec.substitution_rate = rates[i];
    spec.rng_seed = 300 + i;
    const SynthBitext bitext = generate(random_source(10000, 300 + i), spec);
    double rms = map_rms(bitext, SimrParams{}, PredicateConfig{});
    if (rms > limits[i]) {
      // Defaults missed; annealing must reach the bound.
      TrainingBitext tb;
      tb.ax = tokenize_cognate_mode(bitext.text_x, kRules);
      tb.ay = tokenize_cognate_mode(bitext.text_y, kRules);
      tb.gold = bitext.gold;
      AnnealConfig cfg;
      cfg.rng_seed = 1;
      cfg.steps_per_temperature = 10;
      cfg.initial_temperature = 2.0;
      cfg.cooling_rate = 0.7;
      cfg.min_temperature = 0.2;
      const AnnealResult annealed = anneal(
          cfg, std::vector<TrainingBitext>{tb}, {}, {}, {}, SimrParams{});
      rms = annealed.best.objective;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, " %.2f@%.2f", rms, rates[i]);
    detail += buf;
    if (rms > limits[i]) ok = false;
  }
  report(3, ok, detail);
}

// --- criterion 4: omission robustness ---------------------------------------

void criterion_4() {
  const std::u32string source = random_source(10000, 404);
  DistortionSpec base;
  base.substitution_rate = 0.05;
  base.length_jitter = 0.1;
  base.rng_seed = 404;
  const SynthBitext clean = generate(source, base);
  const double baseline =
      map_rms(clean, SimrParams{}, PredicateConfig{});

  DistortionSpec omitted = base;
  omitted.omission_spans = {{4000, 500}};
  const SynthBitext gapped = generate(source, omitted);
  const AxisMap ax = tokenize_cognate_mode(gapped.text_x, kRules);
  const AxisMap ay = tokenize_cognate_mode(gapped.text_y, kRules);
  const BitextMap map = run_search(ax, ay, SimrParams{}, SearchConfig{},
                                   PredicateConfig{}, {});
  const ErrorReport rep =
      rms_perpendicular_error(map, gapped.gold, map.space);

  // The omitted span collapses to x = 4000 in the x text's coordinates.
  double ss = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < gapped.gold.tpcs.size(); ++i) {
    const double x = gapped.gold.tpcs[i].x;
    if (x >= 3800 && x <= 4200) continue;
    ss += rep.signed_errors[i] * rep.signed_errors[i];
    ++n;
  }
  const double far_rms = std::sqrt(ss / static_cast<double>(n));
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "omission robustness (far rms %.2f vs baseline %.2f)",
                far_rms, baseline);
  report(4, far_rms <= 2.0 * baseline, buf);
}

// --- criterion 5: inversion tolerance ---------------------------------------

void criterion_5() {
  bool saw_inversion = false;
  double ss_inv = 0, ss_base = 0;
  std::size_t n_inv = 0, n_base = 0;
  for (int seed = 0; seed < 10; ++seed) {
    const std::u32string source = random_source(6000, 500 + seed);
    DistortionSpec base;
    base.substitution_rate = 0.15;
    base.length_jitter = 0.4;
    base.rng_seed = 500 + seed;
    DistortionSpec inv = base;
    inv.inversion_rate = 0.1;

    for (const bool with_inversions : {false, true}) {
      const SynthBitext bitext =
          generate(source, with_inversions ? inv : base);
      const AxisMap ax = tokenize_cognate_mode(bitext.text_x, kRules);
      const AxisMap ay = tokenize_cognate_mode(bitext.text_y, kRules);
      const BitextMap map = run_search(ax, ay, SimrParams{}, SearchConfig{},
                                       PredicateConfig{}, {});
      const ErrorReport rep =
          rms_perpendicular_error(map, bitext.gold, map.space);
      const double ss = rep.rms_error * rep.rms_error *
                        static_cast<double>(bitext.gold.tpcs.size());
      if (with_inversions) {
        ss_inv += ss;
        n_inv += bitext.gold.tpcs.size();
        for (const Chain& c : map.chains) {
          for (std::size_t i = 0; i < c.points.size() && !saw_inversion; ++i)
            for (std::size_t j = i + 1; j < c.points.size(); ++j)
              if ((c.points[i].x - c.points[j].x) *
                      (c.points[i].y - c.points[j].y) <
                  0) {
                saw_inversion = true;
                break;
              }
        }
      } else {
        ss_base += ss;
        n_base += bitext.gold.tpcs.size();
      }
    }
  }
  const double rms_inv = std::sqrt(ss_inv / static_cast<double>(n_inv));
  const double rms_base = std::sqrt(ss_base / static_cast<double>(n_base));
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "inversion tolerance (inverted chain pair %s, rms %.2f vs "
                "%.2f)",
                saw_inversion ? "seen" : "missing", rms_inv, rms_base);
  report(5, saw_inversion && rms_inv <= 2.0 * rms_base, buf);
}

// --- criterion 6: annealing sanity ------------------------------------------

void criterion_6() {
  std::vector<TrainingBitext> training;
  for (int i = 0; i < 2; ++i) {
    DistortionSpec spec;
    spec.substitution_rate = 0.1;
    spec.length_jitter = 0.15;
    spec.rng_seed = 600 + i;
    const SynthBitext bitext = generate(random_source(2000, 600 + i), spec);
    TrainingBitext tb;
    tb.ax = tokenize_cognate_mode(bitext.text_x, kRules);
    tb.ay = tokenize_cognate_mode(bitext.text_y, kRules);
    tb.gold = bitext.gold;
    training.push_back(std::move(tb));
  }

  AnnealConfig cfg;
  cfg.rng_seed = 6;
  cfg.steps_per_temperature = 10;
  cfg.initial_temperature = 2.0;
  cfg.cooling_rate = 0.7;
  cfg.min_temperature = 0.1;
  const double default_obj =
      objective(SimrParams{}, training, {}, {}, {});
  const AnnealResult a = anneal(cfg, training, {}, {}, {}, SimrParams{});
  const AnnealResult b = anneal(cfg, training, {}, {}, {}, SimrParams{});

  const auto tmp = std::filesystem::temp_directory_path();
  const std::string ha = (tmp / "simr_hist_a.tsv").string();
  const std::string hb = (tmp / "simr_hist_b.tsv").string();
  write_history(ha, a);
  write_history(hb, b);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const bool deterministic = slurp(ha) == slurp(hb);

  // 1-D collapse: dispersal axis only.
  AnnealConfig one_d = cfg;
  one_d.chain_size = {6, 6, 1};
  one_d.angle_deg = {10, 10, 1};
  one_d.ambiguity = {1, 1, 1};
  one_d.dispersal = {4, 22, 2};
  one_d.steps_per_temperature = 12;
  const AnnealResult scan_result =
      anneal(one_d, training, {}, {}, {}, SimrParams{});
  double scan_best = 1e300;
  for (double d = 4; d <= 22; d += 2) {
    SimrParams p;
    p.max_point_dispersal = d;
    scan_best = std::min(scan_best, objective(p, training, {}, {}, {}));
  }
  const bool one_d_exact = scan_result.best.objective == scan_best;

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "annealing sanity (best %.3f <= default %.3f, 1-D %s, "
                "history %s)",
                a.best.objective, default_obj,
                one_d_exact ? "exact" : "off",
                deterministic ? "byte-identical" : "diverged");
  report(6, a.best.objective <= default_obj && one_d_exact && deterministic,
         buf);
}

// --- criterion 7: complexity ------------------------------------------------

void criterion_7() {
  const SimrParams params;
  const PredicateConfig pred = exact_cognates();
  double secs[3];
  long rss[3];
  const std::size_t sizes[3] = {10000, 40000, 160000};
  for (int i = 0; i < 3; ++i) {
    const std::u32string text = random_source(sizes[i], 700);
    const AxisMap ax = tokenize_cognate_mode(text, kRules);
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const BitextMap map =
          run_search(ax, ax, params, SearchConfig{}, pred, {});
      best = std::min(best, seconds_since(t0));
      (void)map;
    }
    secs[i] = best;
    rss[i] = max_rss_kb();
  }
  const double t1 = secs[1] / secs[0];
  const double t2 = secs[2] / secs[1];
  const double m1 = static_cast<double>(rss[1]) / rss[0];
  const double m2 = static_cast<double>(rss[2]) / rss[1];
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "complexity (time x%.2f, x%.2f per 4x step; rss x%.2f, "
                "x%.2f; %.3f/%.3f/%.3f s)",
                t1, t2, m1, m2, secs[0], secs[1], secs[2]);
  report(7, t1 <= 6.0 && t2 <= 6.0 && m1 <= 5.0 && m2 <= 5.0, buf);
}

// --- criterion 8: metric fidelity -------------------------------------------

void criterion_8() {
  bool ok = true;

  BitextMap poly;
  poly.space = {100, 100};
  poly.points = {{0, 0}, {30, 40}, {70, 60}, {100, 100}};
  GoldTBM on_map;
  on_map.tpcs = {{30, 40}, {50, 50}, {70, 60}};
  if (rms_perpendicular_error(poly, on_map, poly.space).rms_error > 1e-9)
    ok = false;

  BitextMap diag;
  diag.space = {1000, 1000};
  diag.points = {{0, 0}, {1000, 1000}};
  GoldTBM single;
  single.tpcs = {{500, 510}};
  const double e1 =
      rms_perpendicular_error(diag, single, diag.space).rms_error;
  if (std::abs(e1 - 10.0 / std::sqrt(2.0)) > 1e-6 * e1) ok = false;

  BitextMap big;
  big.space = {10000, 10000};
  big.points = {{0, 0}, {10000, 10000}};
  GoldTBM offset_gold;
  for (int i = 1; i <= 50; ++i)
    offset_gold.tpcs.push_back({i * 150.0, i * 150.0 + 10.0 * std::sqrt(2.0)});
  const ErrorReport rep =
      rms_perpendicular_error(big, offset_gold, big.space);
  if (std::abs(rep.rms_error - 10.0) > 1e-6 * 10.0) ok = false;
  // The exact nearest-polyline oracle agrees on a straight-line map.
  for (const Point& tpc : offset_gold.tpcs) {
    if (std::abs(oracles::polyline_distance(tpc, big.points) - 10.0) > 1e-6)
      ok = false;
  }

  // Histogram structure: 10-character bins, fractions summing to 1.
  double fractions = 0;
  std::size_t counts = 0;
  for (const HistBin& bin : rep.histogram) {
    fractions += bin.fraction;
    counts += bin.count;
    if (!std::isinf(bin.lo) && std::abs(std::remainder(bin.lo, 10.0)) > 1e-9)
      ok = false;
    if (!std::isinf(bin.hi) && !std::isinf(bin.lo) &&
        std::abs(bin.hi - bin.lo - 10.0) > 1e-9)
      ok = false;
  }
  if (std::abs(fractions - 1.0) > 1e-9) ok = false;
  if (counts != offset_gold.tpcs.size()) ok = false;

  report(8, ok, "metric fidelity (closed forms + histogram structure)");
}

// --- criterion 9: gold ingestion --------------------------------------------

void criterion_9() {
  bool ok = true;
  DistortionSpec spec;
  spec.substitution_rate = 0.1;
  spec.inversion_rate = 0.08;
  spec.length_jitter = 0.2;
  spec.omission_spans = {{1500, 200}};
  spec.rng_seed = 900;
  const SynthBitext bitext = generate(random_source(5000, 900), spec);
  const GoldTBM loaded = load_gold(bitext.segments_x, bitext.segments_y,
                                   bitext.text_x, bitext.text_y);
  if (loaded.tpcs.size() != bitext.gold.tpcs.size()) {
    ok = false;
  } else {
    for (std::size_t i = 0; i < loaded.tpcs.size(); ++i)
      if (!(loaded.tpcs[i] == bitext.gold.tpcs[i])) ok = false;
  }

  bool threw = false;
  try {
    load_gold({U"ab", U"cd"}, {U"ef"}, U"abcd", U"ef");
  } catch (const SegmentCountMismatch&) {
    threw = true;
  }
  if (!threw) ok = false;

  threw = false;
  try {
    load_gold({U"ab"}, {U"ef"}, U"xy", U"ef");
  } catch (const TextReconstructionMismatch&) {
    threw = true;
  }
  if (!threw) ok = false;

  report(9, ok, "gold ingestion round-trip and error paths");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
