#include "efgsolve/core/strategy_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "efgsolve/core/errors.hpp"

namespace efg {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& field, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size() || errno == ERANGE) {
    throw ValidationError("line " + std::to_string(line_no) + ": bad probability '" + field +
                          "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string format_strategy(const StrategyProfile& profile) {
  std::string out;
  for (Player p : kPlayers) {
    // std::map orders keys by owner then raw bytes, which matches hex order.
    for (const auto& [key, probs] : profile[p].table()) {
      out += to_string(p);
      out += '\t';
      out += key.hex();
      out += '\t';
      for (std::size_t i = 0; i < probs.size(); ++i) {
        if (i > 0) out += ',';
        out += format_double(probs[i]);
      }
      out += '\n';
    }
  }
  return out;
}

StrategyProfile parse_strategy(std::string_view text) {
  StrategyProfile profile;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected 3 tab-separated fields");
    }
    int number = 0;
    if (fields[0] == "1") {
      number = 1;
    } else if (fields[0] == "2") {
      number = 2;
    } else {
      throw ValidationError("line " + std::to_string(line_no) + ": bad player '" + fields[0] + "'");
    }
    const Player owner = player_from_number(number);
    InfoSetKey key = InfoSetKey::from_hex(owner, fields[1]);
    if (profile[owner].contains(key)) {
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate key " + fields[1]);
    }
    std::vector<double> probs;
    for (const auto& item : split(fields[2], ',')) probs.push_back(parse_double(item, line_no));
    profile[owner].set(key, std::move(probs));
  }
  return profile;
}

void write_strategy_file(const std::filesystem::path& path, const StrategyProfile& profile) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << format_strategy(profile);
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

StrategyProfile read_strategy_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_strategy(buf.str());
}

}  // namespace efg
