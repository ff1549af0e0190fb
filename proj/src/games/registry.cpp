#include <charconv>
#include <string>
#include <vector>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/games/games.hpp"

namespace efg {

namespace {

int parse_positive(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParameterError("bad number '" + std::string(text) + "' in game '" + std::string(spec) +
                         "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

void check(const GameParams& p) {
  switch (p.kind) {
    case GameParams::Kind::kKuhn:
      return;
    case GameParams::Kind::kOcp:
    case GameParams::Kind::kGoofspiel:
    case GameParams::Kind::kBluff:
      if (p.size < 2) throw ParameterError("game size must be >= 2");
      return;
    case GameParams::Kind::kPam:
      if (p.rows < 1 || p.cols < 1 || p.rows * p.cols < 2) {
        throw ParameterError("PAM needs at least 2 cells");
      }
      if (p.horizon < 1) throw ParameterError("PAM horizon must be >= 1");
      return;
  }
}

}  // namespace

GameParams parse_game_params(std::string_view spec) {
  GameParams p;
  const auto colon = spec.find(':');
  const auto family = spec.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_args = colon != std::string_view::npos;

  if (family == "kuhn" && !has_args) {
    p.kind = GameParams::Kind::kKuhn;
    p.size = 3;
  } else if ((family == "ocp" || family == "goof" || family == "bluff") && has_args) {
    p.kind = family == "ocp"    ? GameParams::Kind::kOcp
             : family == "goof" ? GameParams::Kind::kGoofspiel
                                : GameParams::Kind::kBluff;
    p.size = parse_positive(args, spec);
  } else if (family == "pam" && has_args) {
    const auto parts = split(args, 'x');
    if (parts.size() != 3) throw ParameterError("expected pam:RxCxH, got '" + std::string(spec) + "'");
    p.kind = GameParams::Kind::kPam;
    p.size = 0;
    p.rows = parse_positive(parts[0], spec);
    p.cols = parse_positive(parts[1], spec);
    p.horizon = parse_positive(parts[2], spec);
  } else {
    throw ParameterError("unknown game '" + std::string(spec) +
                         "' (expected kuhn, ocp:N, goof:N, bluff:N or pam:RxCxH)");
  }
  check(p);
  return p;
}

std::string to_string(const GameParams& p) {
  switch (p.kind) {
    case GameParams::Kind::kKuhn: return "kuhn";
    case GameParams::Kind::kOcp: return "ocp:" + std::to_string(p.size);
    case GameParams::Kind::kGoofspiel: return "goof:" + std::to_string(p.size);
    case GameParams::Kind::kBluff: return "bluff:" + std::to_string(p.size);
    case GameParams::Kind::kPam:
      return "pam:" + std::to_string(p.rows) + "x" + std::to_string(p.cols) + "x" +
             std::to_string(p.horizon);
  }
  return "?";
}

GamePtr make_game(const GameParams& p) {
  check(p);
  switch (p.kind) {
    case GameParams::Kind::kKuhn: return make_kuhn();
    case GameParams::Kind::kOcp: return make_ocp(p.size);
    case GameParams::Kind::kGoofspiel: return make_goofspiel(p.size);
    case GameParams::Kind::kBluff: return make_bluff(p.size);
    case GameParams::Kind::kPam: return make_pam(p.rows, p.cols, p.horizon);
  }
  throw ParameterError("unknown game kind");
}

GamePtr make_game(std::string_view spec) { return make_game(parse_game_params(spec)); }

bool is_kuhn_like(const GameParams& p) {
  return p.kind == GameParams::Kind::kKuhn || (p.kind == GameParams::Kind::kOcp && p.size == 3);
}

}  // namespace efg
