#ifndef SIMR_FORMATS_HPP
#define SIMR_FORMATS_HPP

#include <string>
#include <vector>

#include "simr/axis.hpp"
#include "simr/evaluation.hpp"
#include "simr/matching.hpp"
#include "simr/optimizer.hpp"
#include "simr/search.hpp"

namespace simr {

// Text files are UTF-8.  Loading a text drops '\r', strips one trailing
// newline, and maps interior newlines to spaces so character positions are
// stable across the pipeline.
std::u32string load_text(const std::string& path);
std::vector<std::u32string> load_lines(const std::string& path);

void write_text(const std::string& path, const std::u32string& text);
void write_lines(const std::string& path,
                 const std::vector<std::u32string>& lines);

// 4-field key/value block: chain_size, max_point_dispersal,
// max_angle_deviation_deg, max_point_ambiguity.
SimrParams load_params(const std::string& path);
void save_params(const std::string& path, const SimrParams& params);

// `letters: <ranges>` / `punct: <characters>` lines.
TokenRules load_token_rules(const std::string& path);

// Tab-separated source/target pairs; '#' starts a comment line.
TranslationLexicon load_lexicon(const std::string& path);
std::set<std::u32string> load_stop_list(const std::string& path);
std::set<std::pair<std::u32string, std::u32string>> load_faux_amis(
    const std::string& path);

// Map TSV: `# chains: M`, `# discarded: N`, header `x<TAB>y`, 2-decimal rows.
void write_map(const std::string& path, const BitextMap& map);
BitextMap read_map(const std::string& path);

// Histogram rows `lo<TAB>hi<TAB>count<TAB>fraction`, then `rms<TAB><value>`.
void write_report(const std::string& path, const ErrorReport& report);

// `step temperature chain_size dispersal angle_deg ambiguity objective
// accepted`, tab-separated.
void write_history(const std::string& path, const AnnealResult& result);

void write_axis_map(const std::string& path, const AxisMap& axis);

}  // namespace simr

#endif
