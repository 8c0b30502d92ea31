// Command-line front end: map, eval, optimize, generate, tokenize.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "simr/errors.hpp"
#include "simr/formats.hpp"
#include "simr/synthgen.hpp"
#include "simr/utf8.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace simr;

// Optional key=value file named by SIMR_CONFIG supplies flag defaults.
std::map<std::string, std::string> load_env_config() {
  std::map<std::string, std::string> cfg;
  const char* path = std::getenv("SIMR_CONFIG");
  if (!path || !*path) return cfg;
  std::ifstream in(path);
  if (!in) throw ConfigError(std::string("cannot open SIMR_CONFIG file: ") + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("bad config line: " + line);
    cfg[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return cfg;
}

struct PredicateOpts {
  std::string mode = "cognate";  // cognate | lexicon | both
  std::string lexicon_path;
  std::string stop_x_path, stop_y_path, faux_amis_path;
  std::string rules_path;
  double lcsr_threshold = 0.71;
  int min_cognate_length = 4;
};

void add_predicate_flags(CLI::App* cmd, PredicateOpts& opts) {
  cmd->add_option("--mode", opts.mode, "matching mode: cognate, lexicon, both")
      ->check(CLI::IsMember({"cognate", "lexicon", "both"}));
  cmd->add_option("--lexicon", opts.lexicon_path, "translation lexicon TSV");
  cmd->add_option("--stop-x", opts.stop_x_path, "x-side stop list");
  cmd->add_option("--stop-y", opts.stop_y_path, "y-side stop list");
  cmd->add_option("--faux-amis", opts.faux_amis_path, "faux amis TSV");
  cmd->add_option("--rules", opts.rules_path, "token rules file");
  cmd->add_option("--lcsr-threshold", opts.lcsr_threshold,
                  "cognate LCSR threshold");
  cmd->add_option("--min-cognate-length", opts.min_cognate_length,
                  "minimum cognate token length");
}

struct Pipeline {
  PredicateConfig pred;
  TranslationLexicon lex;
  TokenRules rules;
  bool lexicon_tokenization = false;
};

Pipeline build_pipeline(const PredicateOpts& opts) {
  Pipeline p;
  p.rules = opts.rules_path.empty() ? TokenRules::defaults()
                                    : load_token_rules(opts.rules_path);
  p.pred.lcsr_threshold = opts.lcsr_threshold;
  p.pred.min_cognate_length = opts.min_cognate_length;
  p.pred.use_cognates = opts.mode != "lexicon";
  p.pred.use_lexicon = opts.mode != "cognate";
  p.lexicon_tokenization = opts.mode == "lexicon";
  if (p.pred.use_lexicon) {
    if (opts.lexicon_path.empty())
      throw ConfigError("mode '" + opts.mode + "' requires --lexicon");
    p.lex = load_lexicon(opts.lexicon_path);
  }
  if (!opts.stop_x_path.empty())
    p.pred.stop_list_x = load_stop_list(opts.stop_x_path);
  if (!opts.stop_y_path.empty())
    p.pred.stop_list_y = load_stop_list(opts.stop_y_path);
  if (!opts.faux_amis_path.empty())
    p.pred.faux_amis = load_faux_amis(opts.faux_amis_path);
  return p;
}

AxisMap tokenize_side(const std::u32string& text, const Pipeline& p,
                      bool x_side) {
  if (p.lexicon_tokenization) {
    return tokenize_lexicon_mode(text, x_side ? p.lex.x_vocab()
                                              : p.lex.y_vocab(),
                                 p.rules);
  }
  return tokenize_cognate_mode(text, p.rules);
}

int run_one_map(const std::string& x_path, const std::string& y_path,
                const std::string& out_path, const Pipeline& pipe,
                const SimrParams& params, const SearchConfig& search_cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto text_x = load_text(x_path);
  const auto text_y = load_text(y_path);
  const AxisMap ax = tokenize_side(text_x, pipe, true);
  const AxisMap ay = tokenize_side(text_y, pipe, false);
  const BitextMap map =
      run_search(ax, ay, params, search_cfg, pipe.pred, pipe.lex);
  write_map(out_path, map);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::cerr << x_path << " -> " << out_path << ": chains "
            << map.chains.size() << ", discarded " << map.discarded << ", "
            << ms << " ms\n";
  if (map.degenerate()) {
    std::cerr << "warning: no chains accepted, map degenerates to the main "
                 "diagonal\n";
    return 2;
  }
  return 0;
}

int cmd_map(const std::string& x_path, const std::string& y_path,
            const std::string& out_path, const std::string& batch_path,
            int jobs, const PredicateOpts& pred_opts,
            const SimrParams& params, const SearchConfig& search_cfg) {
  const Pipeline pipe = build_pipeline(pred_opts);
  if (batch_path.empty()) {
    if (x_path.empty() || y_path.empty() || out_path.empty())
      throw ConfigError("map needs --x, --y and --out (or --batch)");
    return run_one_map(x_path, y_path, out_path, pipe, params, search_cfg);
  }

  struct Entry {
    std::string x, y, out;
  };
  std::vector<Entry> entries;
  for (const auto& line : load_lines(batch_path)) {
    if (line.empty() || line[0] == U'#') continue;
    const std::string raw = encode_utf8(line);
    const auto tab1 = raw.find('\t');
    const auto tab2 = raw.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos)
      throw ConfigError("bad batch line: " + raw);
    entries.push_back({raw.substr(0, tab1), raw.substr(tab1 + 1, tab2 - tab1 - 1),
                       raw.substr(tab2 + 1)});
  }
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
  int status = 0;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(entries.size());
       ++i) {
    const auto& e = entries[static_cast<std::size_t>(i)];
    const int rc =
        run_one_map(e.x, e.y, e.out, pipe, params, search_cfg);
#pragma omp critical
    status = std::max(status, rc);
  }
  return status;
}

int cmd_eval(const std::string& map_path, const std::string& gold_x_path,
             const std::string& gold_y_path, const std::string& text_x_path,
             const std::string& text_y_path, const std::string& out_path) {
  const BitextMap map = read_map(map_path);
  const GoldTBM gold =
      load_gold(load_lines(gold_x_path), load_lines(gold_y_path),
                load_text(text_x_path), load_text(text_y_path));
  const ErrorReport report = rms_perpendicular_error(map, gold, map.space);
  if (!out_path.empty()) write_report(out_path, report);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", report.rms_error);
  std::cout << "rms\t" << buf << "\n";
  return 0;
}

ParamBounds parse_bounds(const std::string& spec, const std::string& name) {
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ConfigError("bad bounds for " + name + " (want min:max:step): " +
                      spec);
  try {
    return {std::stod(spec.substr(0, c1)),
            std::stod(spec.substr(c1 + 1, c2 - c1 - 1)),
            std::stod(spec.substr(c2 + 1))};
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad bounds for " + name + ": " + spec);
  }
}

int cmd_optimize(const std::string& train_path, const PredicateOpts& pred_opts,
                 const SimrParams& start, const SearchConfig& search_cfg,
                 const AnnealConfig& anneal_cfg,
                 const std::string& history_path,
                 const std::string& best_path) {
  const Pipeline pipe = build_pipeline(pred_opts);
  std::vector<TrainingBitext> training;
  for (const auto& uline : load_lines(train_path)) {
    if (uline.empty() || uline[0] == U'#') continue;
    const std::string line = encode_utf8(uline);
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      const auto tab = line.find('\t', pos);
      fields.push_back(line.substr(pos, tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (fields.size() != 4)
      throw ConfigError("bad training line (want x y gold_x gold_y): " + line);
    TrainingBitext tb;
    const auto text_x = load_text(fields[0]);
    const auto text_y = load_text(fields[1]);
    tb.ax = tokenize_side(text_x, pipe, true);
    tb.ay = tokenize_side(text_y, pipe, false);
    tb.gold = load_gold(load_lines(fields[2]), load_lines(fields[3]), text_x,
                        text_y);
    training.push_back(std::move(tb));
  }
  if (training.empty()) throw ConfigError("training manifest is empty");

  const AnnealResult result =
      anneal(anneal_cfg, training, search_cfg, pipe.pred, pipe.lex, start);
  if (!history_path.empty()) write_history(history_path, result);
  if (!best_path.empty()) save_params(best_path, result.best.params);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", result.best.objective);
  std::cout << "best_objective\t" << buf << "\n";
  return 0;
}

int cmd_generate(const std::string& source_path, std::size_t synth_chars,
                 std::uint64_t synth_seed, const DistortionSpec& spec,
                 const std::string& out_x, const std::string& out_y,
                 const std::string& out_gold_x, const std::string& out_gold_y) {
  const std::u32string source =
      source_path.empty() ? random_source(synth_chars, synth_seed)
                          : load_text(source_path);
  const SynthBitext bitext = generate(source, spec);
  write_text(out_x, bitext.text_x);
  write_text(out_y, bitext.text_y);
  write_lines(out_gold_x, bitext.segments_x);
  write_lines(out_gold_y, bitext.segments_y);
  std::cerr << "generated " << bitext.text_x.size() << " x "
            << bitext.text_y.size() << " chars, " << bitext.gold.tpcs.size()
            << " gold TPCs\n";
  return 0;
}

int cmd_tokenize(const std::string& text_path, const PredicateOpts& pred_opts,
                 const std::string& out_path, bool y_side) {
  const Pipeline pipe = build_pipeline(pred_opts);
  const AxisMap axis = tokenize_side(load_text(text_path), pipe, !y_side);
  write_axis_map(out_path, axis);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SIMR bitext mapper"};
  app.require_subcommand(1);

  try {
    const auto env_cfg = load_env_config();
    auto cfg_str = [&env_cfg](const char* key, std::string dflt) {
      auto it = env_cfg.find(key);
      return it == env_cfg.end() ? dflt : it->second;
    };

    // map
    auto* map_cmd = app.add_subcommand("map", "trace a bitext map");
    std::string map_x, map_y, map_out, map_batch;
    std::string map_params_path = cfg_str("params", "");
    int map_jobs = 0;
    PredicateOpts map_pred;
    map_pred.rules_path = cfg_str("rules", "");
    SearchConfig map_search;
    map_cmd->add_option("--x", map_x, "x-side text");
    map_cmd->add_option("--y", map_y, "y-side text");
    map_cmd->add_option("--out", map_out, "output map TSV");
    map_cmd->add_option("--batch", map_batch,
                        "manifest of x<TAB>y<TAB>out lines");
    map_cmd->add_option("--jobs", map_jobs, "parallel batch entries");
    map_cmd->add_option("--params", map_params_path, "SimrParams file");
    map_cmd->add_option("--initial-width", map_search.initial_width,
                        "initial rectangle width (chars)");
    map_cmd->add_option("--growth-factor", map_search.growth_factor,
                        "rectangle expansion factor");
    map_cmd->add_option("--max-expansions", map_search.max_expansions,
                        "expansions before the anchor jumps");
    map_cmd->add_flag("--parallel-generation",
                      map_search.parallel_generation,
                      "OpenMP candidate generation");
    add_predicate_flags(map_cmd, map_pred);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "score a map against gold");
    std::string eval_map, eval_gold_x, eval_gold_y, eval_text_x, eval_text_y,
        eval_out;
    eval_cmd->add_option("--map", eval_map, "map TSV")->required();
    eval_cmd->add_option("--gold-x", eval_gold_x, "x segments")->required();
    eval_cmd->add_option("--gold-y", eval_gold_y, "y segments")->required();
    eval_cmd->add_option("--text-x", eval_text_x, "raw x text")->required();
    eval_cmd->add_option("--text-y", eval_text_y, "raw y text")->required();
    eval_cmd->add_option("--out", eval_out, "histogram TSV");

    // optimize
    auto* opt_cmd = app.add_subcommand("optimize", "anneal the parameters");
    std::string opt_train, opt_history, opt_best;
    std::string opt_params_path = cfg_str("params", "");
    PredicateOpts opt_pred;
    opt_pred.rules_path = cfg_str("rules", "");
    SearchConfig opt_search;
    AnnealConfig anneal_cfg;
    std::string b_chain = "4:10:1", b_disp = "5:30:1", b_angle = "2:25:1",
                b_amb = "0:4:1";
    opt_cmd->add_option("--train", opt_train,
                        "manifest of x<TAB>y<TAB>gold_x<TAB>gold_y lines")
        ->required();
    opt_cmd->add_option("--history", opt_history, "annealing history TSV");
    opt_cmd->add_option("--best-out", opt_best, "best parameter file");
    opt_cmd->add_option("--params", opt_params_path, "starting SimrParams");
    opt_cmd->add_option("--seed", anneal_cfg.rng_seed, "RNG seed");
    opt_cmd->add_option("--initial-temp", anneal_cfg.initial_temperature);
    opt_cmd->add_option("--cooling-rate", anneal_cfg.cooling_rate);
    opt_cmd->add_option("--steps-per-temp", anneal_cfg.steps_per_temperature);
    opt_cmd->add_option("--min-temp", anneal_cfg.min_temperature);
    opt_cmd->add_option("--chain-size-bounds", b_chain, "min:max:step");
    opt_cmd->add_option("--dispersal-bounds", b_disp, "min:max:step");
    opt_cmd->add_option("--angle-bounds", b_angle, "min:max:step (degrees)");
    opt_cmd->add_option("--ambiguity-bounds", b_amb, "min:max:step");
    opt_cmd->add_option("--initial-width", opt_search.initial_width);
    opt_cmd->add_option("--growth-factor", opt_search.growth_factor);
    opt_cmd->add_option("--max-expansions", opt_search.max_expansions);
    add_predicate_flags(opt_cmd, opt_pred);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "synthesize a bitext");
    std::string gen_source, gen_x, gen_y, gen_gold_x, gen_gold_y;
    std::size_t gen_chars = 10000;
    std::uint64_t gen_source_seed = 1;
    DistortionSpec gen_spec;
    std::vector<std::string> gen_omits;
    gen_cmd->add_option("--source", gen_source, "source text file");
    gen_cmd->add_option("--synth-chars", gen_chars,
                        "random source length (when no --source)");
    gen_cmd->add_option("--synth-seed", gen_source_seed, "random source seed");
    gen_cmd->add_option("--sub-rate", gen_spec.substitution_rate);
    gen_cmd->add_option("--inversion-rate", gen_spec.inversion_rate);
    gen_cmd->add_option("--jitter", gen_spec.length_jitter);
    gen_cmd->add_option("--omit", gen_omits,
                        "omission span pos:len (repeatable)");
    gen_cmd->add_option("--seed", gen_spec.rng_seed, "distortion seed");
    gen_cmd->add_option("--out-x", gen_x)->required();
    gen_cmd->add_option("--out-y", gen_y)->required();
    gen_cmd->add_option("--out-gold-x", gen_gold_x)->required();
    gen_cmd->add_option("--out-gold-y", gen_gold_y)->required();

    // tokenize
    auto* tok_cmd = app.add_subcommand("tokenize", "dump an axis map");
    std::string tok_text, tok_out;
    bool tok_y_side = false;
    PredicateOpts tok_pred;
    tok_pred.rules_path = cfg_str("rules", "");
    tok_cmd->add_option("--text", tok_text)->required();
    tok_cmd->add_option("--out", tok_out)->required();
    tok_cmd->add_flag("--y-side", tok_y_side,
                      "tokenize as the y axis (lexicon mode)");
    add_predicate_flags(tok_cmd, tok_pred);

    CLI11_PARSE(app, argc, argv);

    if (*map_cmd) {
      const SimrParams params = map_params_path.empty()
                                    ? SimrParams{}
                                    : load_params(map_params_path);
      return cmd_map(map_x, map_y, map_out, map_batch, map_jobs, map_pred,
                     params, map_search);
    }
    if (*eval_cmd) {
      return cmd_eval(eval_map, eval_gold_x, eval_gold_y, eval_text_x,
                      eval_text_y, eval_out);
    }
    if (*opt_cmd) {
      anneal_cfg.chain_size = parse_bounds(b_chain, "chain_size");
      anneal_cfg.dispersal = parse_bounds(b_disp, "dispersal");
      anneal_cfg.angle_deg = parse_bounds(b_angle, "angle");
      anneal_cfg.ambiguity = parse_bounds(b_amb, "ambiguity");
      const SimrParams start = opt_params_path.empty()
                                   ? SimrParams{}
                                   : load_params(opt_params_path);
      return cmd_optimize(opt_train, opt_pred, start, opt_search, anneal_cfg,
                          opt_history, opt_best);
    }
    if (*gen_cmd) {
      for (const auto& o : gen_omits) {
        const auto colon = o.find(':');
        if (colon == std::string::npos)
          throw ConfigError("bad --omit (want pos:len): " + o);
        gen_spec.omission_spans.emplace_back(
            std::stoull(o.substr(0, colon)), std::stoull(o.substr(colon + 1)));
      }
      return cmd_generate(gen_source, gen_chars, gen_source_seed, gen_spec,
                          gen_x, gen_y, gen_gold_x, gen_gold_y);
    }
    if (*tok_cmd) {
      return cmd_tokenize(tok_text, tok_pred, tok_out, tok_y_side);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
