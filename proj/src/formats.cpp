#include "simr/formats.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "simr/errors.hpp"
#include "simr/utf8.hpp"

namespace simr {

namespace {

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_bytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << bytes;
}

std::vector<std::string> split_lines(const std::string& bytes) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : bytes) {
    if (c == '\r') continue;
    if (c == '\n') {
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

const char* kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::word: return "word";
    case TokenKind::number: return "number";
    default: return "punctuation";
  }
}

}  // namespace

std::u32string load_text(const std::string& path) {
  std::string bytes = read_bytes(path);
  if (!bytes.empty() && bytes.back() == '\n') bytes.pop_back();
  std::string norm;
  norm.reserve(bytes.size());
  for (char c : bytes) {
    if (c == '\r') continue;
    norm.push_back(c == '\n' ? ' ' : c);
  }
  return decode_utf8(norm);
}

std::vector<std::u32string> load_lines(const std::string& path) {
  std::vector<std::u32string> out;
  for (const auto& line : split_lines(read_bytes(path)))
    out.push_back(decode_utf8(line));
  return out;
}

void write_text(const std::string& path, const std::u32string& text) {
  write_bytes(path, encode_utf8(text));
}

void write_lines(const std::string& path,
                 const std::vector<std::u32string>& lines) {
  std::string bytes;
  for (const auto& line : lines) {
    bytes += encode_utf8(line);
    bytes += '\n';
  }
  write_bytes(path, bytes);
}

SimrParams load_params(const std::string& path) {
  SimrParams p;
  bool seen[4] = {false, false, false, false};
  for (const auto& line : split_lines(read_bytes(path))) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ConfigError("bad parameter line in " + path + ": " + line);
    const std::string key = line.substr(0, colon);
    const std::string value = line.substr(colon + 1);
    try {
      if (key == "chain_size") {
        p.chain_size = std::stoi(value);
        seen[0] = true;
      } else if (key == "max_point_dispersal") {
        p.max_point_dispersal = std::stod(value);
        seen[1] = true;
      } else if (key == "max_angle_deviation_deg") {
        p.max_angle_deviation = std::stod(value) * M_PI / 180.0;
        seen[2] = true;
      } else if (key == "max_point_ambiguity") {
        p.max_point_ambiguity = std::stoi(value);
        seen[3] = true;
      } else {
        throw ConfigError("unknown parameter in " + path + ": " + key);
      }
    } catch (const std::invalid_argument&) {
      throw ConfigError("bad value in " + path + ": " + line);
    }
  }
  for (bool s : seen) {
    if (!s) throw ConfigError("missing parameter field in " + path);
  }
  if (p.chain_size < 2 || p.max_point_dispersal <= 0 ||
      p.max_angle_deviation <= 0 || p.max_point_ambiguity < 0)
    throw ConfigError("parameter out of range in " + path);
  return p;
}

void save_params(const std::string& path, const SimrParams& params) {
  std::string out;
  out += "chain_size: " + std::to_string(params.chain_size) + "\n";
  out += "max_point_dispersal: " + fmt6(params.max_point_dispersal) + "\n";
  out += "max_angle_deviation_deg: " +
         fmt6(params.max_angle_deviation * 180.0 / M_PI) + "\n";
  out += "max_point_ambiguity: " + std::to_string(params.max_point_ambiguity) +
         "\n";
  write_bytes(path, out);
}

TokenRules load_token_rules(const std::string& path) {
  TokenRules rules;
  for (const auto& line : split_lines(read_bytes(path))) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("letters:", 0) == 0) {
      const std::u32string spec = decode_utf8(line.substr(8));
      std::u32string item;
      auto flush = [&rules, &item, &path]() {
        if (item.empty()) return;
        if (item.size() == 1) {
          rules.letter_ranges.emplace_back(item[0], item[0]);
        } else if (item.size() == 3 && item[1] == U'-') {
          rules.letter_ranges.emplace_back(item[0], item[2]);
        } else {
          throw ConfigError("bad letter range in " + path);
        }
        item.clear();
      };
      for (char32_t c : spec) {
        if (c == U' ') {
          flush();
        } else {
          item.push_back(c);
        }
      }
      flush();
    } else if (line.rfind("punct:", 0) == 0) {
      std::string rest = line.substr(6);
      if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
      rules.punct = decode_utf8(rest);
    } else {
      throw ConfigError("unknown rules line in " + path + ": " + line);
    }
  }
  return rules;
}

TranslationLexicon load_lexicon(const std::string& path) {
  TranslationLexicon lex;
  for (const auto& line : split_lines(read_bytes(path))) {
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2)
      throw ConfigError("bad lexicon line in " + path + ": " + line);
    lex.entries.emplace(fold(decode_utf8(fields[0])),
                        fold(decode_utf8(fields[1])));
  }
  return lex;
}

std::set<std::u32string> load_stop_list(const std::string& path) {
  std::set<std::u32string> stop;
  for (const auto& line : split_lines(read_bytes(path))) {
    if (line.empty() || line[0] == '#') continue;
    stop.insert(fold(decode_utf8(line)));
  }
  return stop;
}

std::set<std::pair<std::u32string, std::u32string>> load_faux_amis(
    const std::string& path) {
  std::set<std::pair<std::u32string, std::u32string>> pairs;
  for (const auto& line : split_lines(read_bytes(path))) {
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2)
      throw ConfigError("bad faux-amis line in " + path + ": " + line);
    pairs.emplace(fold(decode_utf8(fields[0])), fold(decode_utf8(fields[1])));
  }
  return pairs;
}

void write_map(const std::string& path, const BitextMap& map) {
  std::string out;
  out += "# chains: " + std::to_string(map.chains.size()) + "\n";
  out += "# discarded: " + std::to_string(map.discarded) + "\n";
  out += "x\ty\n";
  for (const Point& p : map.points)
    out += fmt2(p.x) + "\t" + fmt2(p.y) + "\n";
  write_bytes(path, out);
}

BitextMap read_map(const std::string& path) {
  BitextMap map;
  for (const auto& line : split_lines(read_bytes(path))) {
    if (line.empty() || line[0] == '#' || line == "x\ty") continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2)
      throw ConfigError("bad map line in " + path + ": " + line);
    try {
      map.points.push_back({std::stod(fields[0]), std::stod(fields[1])});
    } catch (const std::invalid_argument&) {
      throw ConfigError("bad map line in " + path + ": " + line);
    }
  }
  if (map.points.size() < 2)
    throw ConfigError("map file has fewer than 2 points: " + path);
  map.space = {map.points.back().x, map.points.back().y};
  return map;
}

void write_report(const std::string& path, const ErrorReport& report) {
  std::string out = "lo\thi\tcount\tfraction\n";
  for (const HistBin& bin : report.histogram) {
    out += (std::isinf(bin.lo) ? std::string("-inf") : fmt2(bin.lo)) + "\t";
    out += (std::isinf(bin.hi) ? std::string("+inf") : fmt2(bin.hi)) + "\t";
    out += std::to_string(bin.count) + "\t" + fmt6(bin.fraction) + "\n";
  }
  out += "rms\t" + fmt6(report.rms_error) + "\n";
  write_bytes(path, out);
}

void write_history(const std::string& path, const AnnealResult& result) {
  std::string out =
      "step\ttemperature\tchain_size\tdispersal\tangle_deg\tambiguity\t"
      "objective\taccepted\n";
  for (std::size_t i = 0; i < result.history.size(); ++i) {
    const Trial& t = result.history[i];
    out += std::to_string(i) + "\t" + fmt6(t.temperature) + "\t" +
           std::to_string(t.params.chain_size) + "\t" +
           fmt6(t.params.max_point_dispersal) + "\t" +
           fmt6(t.params.max_angle_deviation * 180.0 / M_PI) + "\t" +
           std::to_string(t.params.max_point_ambiguity) + "\t" +
           fmt6(t.objective) + "\t" + (t.accepted ? "1" : "0") + "\n";
  }
  write_bytes(path, out);
}

void write_axis_map(const std::string& path, const AxisMap& axis) {
  std::string out = "surface\tkind\tstart\tend\tposition\n";
  for (const AxisToken& t : axis.tokens) {
    out += encode_utf8(t.surface);
    out += "\t";
    out += kind_name(t.kind);
    out += "\t" + std::to_string(t.start) + "\t" + std::to_string(t.end) +
           "\t" + fmt2(t.position) + "\n";
  }
  write_bytes(path, out);
}

}  // namespace simr
