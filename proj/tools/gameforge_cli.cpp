// Copyright 2026 The Gameforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gameforge/gameforge.hpp"

namespace {

using Json = nlohmann::ordered_json;

using gameforge::Game;
using gameforge::GameBijection;
using gameforge::GamePtr;
using gameforge::IsoMode;
using gameforge::Matching;
using gameforge::MixedProfile;
using gameforge::PureProfile;
using gameforge::Rational;

// Thrown by command handlers to abort with a specific process exit code.
struct ExitError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ExitError{3, "cannot read \"" + path + "\""};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct LoadedGame {
  GamePtr game;
  std::string path;
  std::string digest;
};

LoadedGame load_game(const std::string& path) {
  const std::string text = read_file(path);
  try {
    auto game = std::make_shared<const Game>(gameforge::parse_game(text));
    return {std::move(game), path, gameforge::digest_hex(text)};
  } catch (const gameforge::ParseError& error) {
    throw ExitError{3, path + ": " + error.what()};
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      items.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  items.push_back(current);
  for (std::string& item : items) {
    const auto begin = item.find_first_not_of(" \t");
    if (begin == std::string::npos) {
      item.clear();
      continue;
    }
    const auto end = item.find_last_not_of(" \t");
    item = item.substr(begin, end - begin + 1);
  }
  return items;
}

PureProfile parse_profile_arg(const Game& game, const std::string& text) {
  const std::vector<std::string> names = split_list(text);
  if (static_cast<int>(names.size()) != game.num_players()) {
    throw ExitError{3, "profile \"" + text + "\" names " +
                           std::to_string(names.size()) + " strategies but the game has " +
                           std::to_string(game.num_players()) + " players"};
  }
  PureProfile profile(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    try {
      profile[i] = game.strategy_index(static_cast<int>(i), names[i]);
    } catch (const std::invalid_argument& error) {
      throw ExitError{3, std::string(error.what())};
    }
  }
  return profile;
}

std::vector<Rational> parse_weights_arg(const std::string& text) {
  std::vector<Rational> weights;
  for (const std::string& item : split_list(text)) {
    try {
      weights.push_back(gameforge::parse_rational(item));
    } catch (const std::invalid_argument& error) {
      throw ExitError{3, std::string(error.what())};
    }
  }
  return weights;
}

int required_player(const Game& game, const std::string& name) {
  try {
    return game.player_index(name);
  } catch (const std::invalid_argument& error) {
    throw ExitError{3, std::string(error.what())};
  }
}

int required_strategy(const Game& game, int player, const std::string& name) {
  try {
    return game.strategy_index(player, name);
  } catch (const std::invalid_argument& error) {
    throw ExitError{3, std::string(error.what())};
  }
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += items[i];
  }
  return out;
}

std::vector<std::string> profile_names(const Game& game, const PureProfile& profile) {
  std::vector<std::string> names;
  names.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    names.push_back(game.strategies(static_cast<int>(i))[profile[i]]);
  }
  return names;
}

std::string profile_text(const Game& game, const PureProfile& profile) {
  return "(" + join(profile_names(game, profile), ", ") + ")";
}

std::string bijection_text(const GameBijection& b) {
  const Game& src = *b.source();
  const Game& tgt = *b.target();
  std::vector<std::string> player_parts;
  std::vector<std::string> strategy_parts;
  for (int i = 0; i < src.num_players(); ++i) {
    const int j = b.player_map()[i];
    player_parts.push_back(src.players()[i] + "->" + tgt.players()[j]);
    std::vector<std::string> moves;
    for (int x = 0; x < src.num_strategies(i); ++x) {
      moves.push_back(src.strategies(i)[x] + "->" +
                      tgt.strategies(j)[b.strategy_maps()[i][x]]);
    }
    strategy_parts.push_back(src.players()[i] + ": " + join(moves, ", "));
  }
  return "players: " + join(player_parts, ", ") +
         "; strategies: " + join(strategy_parts, "; ");
}

Json bijection_json(const GameBijection& b) {
  const Game& src = *b.source();
  const Game& tgt = *b.target();
  Json players = Json::object();
  Json strategies = Json::object();
  for (int i = 0; i < src.num_players(); ++i) {
    const int j = b.player_map()[i];
    players[src.players()[i]] = tgt.players()[j];
    Json moves = Json::object();
    for (int x = 0; x < src.num_strategies(i); ++x) {
      moves[src.strategies(i)[x]] = tgt.strategies(j)[b.strategy_maps()[i][x]];
    }
    strategies[src.players()[i]] = std::move(moves);
  }
  Json out = Json::object();
  out["players"] = std::move(players);
  out["strategies"] = std::move(strategies);
  return out;
}

std::string matching_text(const Matching& m, const Game& game) {
  std::vector<std::string> tuples;
  for (const std::vector<int>& tuple : m.tuples()) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      names.push_back(game.strategies(static_cast<int>(i))[tuple[i]]);
    }
    tuples.push_back("(" + join(names, ", ") + ")");
  }
  return join(tuples, ", ");
}

Json matching_json(const Matching& m, const Game& game) {
  Json tuples = Json::array();
  for (const std::vector<int>& tuple : m.tuples()) {
    Json names = Json::array();
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      names.push_back(game.strategies(static_cast<int>(i))[tuple[i]]);
    }
    tuples.push_back(std::move(names));
  }
  return tuples;
}

Json game_json(const Game& game) {
  Json out = Json::object();
  if (!game.title().empty()) {
    out["title"] = game.title();
  }
  out["players"] = game.players();
  Json strategies = Json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    strategies.push_back(game.strategies(i));
  }
  out["strategies"] = std::move(strategies);
  Json payoffs = Json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    Json cells = Json::array();
    for (const Rational& value : game.payoff_table(i)) {
      cells.push_back(gameforge::format_rational(value));
    }
    payoffs.push_back(std::move(cells));
  }
  out["payoffs"] = std::move(payoffs);
  return out;
}

Json input_json(const LoadedGame& loaded) {
  Json out = Json::object();
  out["path"] = loaded.path;
  out["digest"] = loaded.digest;
  return out;
}

// Accumulates one command's output in both renderings; emit() prints the
// format selected by --format.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::string text;
  int exit_code = 0;

  void line(const std::string& s) { text += s + "\n"; }
};

void emit(const Report& report, bool json_mode) {
  if (json_mode) {
    Json out = Json::object();
    out["command"] = report.command;
    out["inputs"] = report.inputs;
    out["result"] = report.result;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << report.text;
  }
}

gameforge::SearchLimits environment_limits() {
  const char* raw = std::getenv("GAMEFORGE_LIMITS");
  if (raw == nullptr) {
    return gameforge::SearchLimits{};
  }
  try {
    return gameforge::parse_search_limits(raw);
  } catch (const std::invalid_argument& error) {
    throw ExitError{2, std::string("GAMEFORGE_LIMITS: ") + error.what()};
  }
}

struct CommandContext {
  bool json_mode = false;
};

int run_info(const CommandContext& ctx, const std::string& game_path) {
  const LoadedGame loaded = load_game(game_path);
  const Game& game = *loaded.game;
  Report report;
  report.command = "info";
  report.inputs["game"] = input_json(loaded);
  if (!game.title().empty()) {
    report.result["title"] = game.title();
    report.line("title: " + game.title());
  }
  report.result["players"] = game.players();
  report.line("players: " + std::to_string(game.num_players()) + " (" +
              join(game.players(), ", ") + ")");
  Json strategies = Json::object();
  for (int i = 0; i < game.num_players(); ++i) {
    strategies[game.players()[i]] = game.strategies(i);
    report.line("strategies " + game.players()[i] + ": " +
                join(game.strategies(i), ", "));
  }
  report.result["strategies"] = std::move(strategies);
  report.result["profile_count"] = game.table_size();
  report.line("profiles: " + std::to_string(game.table_size()));
  emit(report, ctx.json_mode);
  return 0;
}

int run_payoff(const CommandContext& ctx, const std::string& game_path,
               const std::string& player, const std::string& profile_arg) {
  const LoadedGame loaded = load_game(game_path);
  const Game& game = *loaded.game;
  const int player_index = required_player(game, player);
  const PureProfile profile = parse_profile_arg(game, profile_arg);
  const Rational value = game.payoff(player_index, profile);
  Report report;
  report.command = "payoff";
  report.inputs["game"] = input_json(loaded);
  report.result["player"] = game.players()[player_index];
  report.result["profile"] = profile_names(game, profile);
  report.result["value"] = gameforge::format_rational(value);
  report.line(gameforge::format_rational(value));
  emit(report, ctx.json_mode);
  return 0;
}

int run_pure_nash(const CommandContext& ctx, const std::string& game_path) {
  const LoadedGame loaded = load_game(game_path);
  const Game& game = *loaded.game;
  const std::vector<PureProfile> equilibria = gameforge::pure_nash_equilibria(game);
  Report report;
  report.command = "pure-nash";
  report.inputs["game"] = input_json(loaded);
  report.result["count"] = equilibria.size();
  Json list = Json::array();
  for (const PureProfile& profile : equilibria) {
    list.push_back(profile_names(game, profile));
    report.line(profile_text(game, profile));
  }
  report.result["equilibria"] = std::move(list);
  if (equilibria.empty()) {
    report.line("none");
  }
  emit(report, ctx.json_mode);
  return 0;
}

int run_best_response(const CommandContext& ctx, const std::string& game_path,
                      const std::string& profile_arg, const std::string& player) {
  const LoadedGame loaded = load_game(game_path);
  const Game& game = *loaded.game;
  const PureProfile profile = parse_profile_arg(game, profile_arg);
  Report report;
  report.command = "best-response";
  report.inputs["game"] = input_json(loaded);
  report.result["profile"] = profile_names(game, profile);
  if (!player.empty()) {
    const int player_index = required_player(game, player);
    const std::vector<int> best = gameforge::pure_best_responses(game, player_index, profile);
    report.result["player"] = game.players()[player_index];
    Json list = Json::array();
    for (int strategy : best) {
      list.push_back(game.strategies(player_index)[strategy]);
      report.line(game.strategies(player_index)[strategy]);
    }
    report.result["strategies"] = std::move(list);
  } else {
    const std::vector<PureProfile> responses = gameforge::best_response_profiles(game, profile);
    Json list = Json::array();
    for (const PureProfile& response : responses) {
      list.push_back(profile_names(game, response));
      report.line(profile_text(game, response));
    }
    report.result["profiles"] = std::move(list);
  }
  emit(report, ctx.json_mode);
  return 0;
}

int run_dominance(const CommandContext& ctx, const std::string& game_path,
                  const std::string& player, const std::string& strategy,
                  const std::string& mixed, const std::string& over) {
  const LoadedGame loaded = load_game(game_path);
  const Game& game = *loaded.game;
  const int player_index = required_player(game, player);
  const int dominated = required_strategy(game, player_index, over);
  bool dominates = false;
  Report report;
  report.command = "dominance";
  report.inputs["game"] = input_json(loaded);
  report.result["player"] = game.players()[player_index];
  if (!mixed.empty()) {
    const std::vector<Rational> weights = parse_weights_arg(mixed);
    try {
      dominates = gameforge::strictly_dominates_mixed(game, player_index, weights, dominated);
    } catch (const std::invalid_argument& error) {
      throw ExitError{3, std::string(error.what())};
    }
    Json mix = Json::array();
    for (const Rational& w : weights) {
      mix.push_back(gameforge::format_rational(w));
    }
    report.result["mixed"] = std::move(mix);
  } else {
    const int dominator = required_strategy(game, player_index, strategy);
    if (dominator == dominated) {
      throw ExitError{3, "strategy \"" + over + "\" cannot be compared against itself"};
    }
    dominates = gameforge::strictly_dominates_pure(game, player_index, dominator, dominated);
    report.result["strategy"] = game.strategies(player_index)[dominator];
  }
  report.result["over"] = game.strategies(player_index)[dominated];
  report.result["dominates"] = dominates;
  report.line(dominates ? "true" : "false");
  emit(report, ctx.json_mode);
  return dominates ? 0 : 1;
}

int run_verify_ne(const CommandContext& ctx, const std::string& game_path,
                  const std::string& mix_path) {
  const LoadedGame loaded = load_game(game_path);
  const Game& game = *loaded.game;
  const std::string mix_text = read_file(mix_path);
  MixedProfile sigma;
  try {
    sigma = gameforge::parse_mixed(mix_text, game);
  } catch (const gameforge::ParseError& error) {
    throw ExitError{3, mix_path + ": " + error.what()};
  }
  const bool is_nash = gameforge::is_mixed_nash(game, sigma);
  Report report;
  report.command = "verify-ne";
  report.inputs["game"] = input_json(loaded);
  Json mix_input = Json::object();
  mix_input["path"] = mix_path;
  mix_input["digest"] = gameforge::digest_hex(mix_text);
  report.inputs["profile"] = std::move(mix_input);
  report.result["is_nash"] = is_nash;
  report.line(is_nash ? "true" : "false");
  emit(report, ctx.json_mode);
  return is_nash ? 0 : 1;
}

int run_iso(const CommandContext& ctx, const std::string& game_path_1,
            const std::string& game_path_2, const std::string& mode_name, bool all,
            std::int64_t limit, const std::string& check_path) {
  const LoadedGame first = load_game(game_path_1);
  const LoadedGame second = load_game(game_path_2);
  IsoMode mode;
  try {
    mode = gameforge::iso_mode_from_string(mode_name);
  } catch (const std::invalid_argument& error) {
    throw ExitError{2, std::string(error.what())};
  }
  Report report;
  report.command = "iso";
  report.inputs["game1"] = input_json(first);
  report.inputs["game2"] = input_json(second);
  report.result["mode"] = to_string(mode);

  if (!check_path.empty()) {
    const std::string bij_text = read_file(check_path);
    GameBijection bijection = [&] {
      try {
        return gameforge::parse_bijection(bij_text, first.game, second.game);
      } catch (const gameforge::ParseError& error) {
        throw ExitError{3, check_path + ": " + error.what()};
      }
    }();
    bool holds = false;
    std::optional<gameforge::AffineWitness> witness;
    switch (mode) {
      case IsoMode::kStrict:
        holds = gameforge::verify_strict(bijection);
        break;
      case IsoMode::kOrdinal:
        holds = gameforge::verify_ordinal(bijection);
        break;
      case IsoMode::kCardinal:
        witness = gameforge::cardinal_witness(bijection);
        holds = witness.has_value();
        break;
    }
    Json check = Json::object();
    check["path"] = check_path;
    check["digest"] = gameforge::digest_hex(bij_text);
    check["bijection"] = bijection_json(bijection);
    report.inputs["check"] = std::move(check);
    report.result["holds"] = holds;
    std::string line = "bijection is a " + std::string(to_string(mode)) +
                       " isomorphism: " + (holds ? "true" : "false");
    if (holds && witness.has_value()) {
      Json scale = Json::object();
      const Game& tgt = *second.game;
      std::vector<std::string> parts;
      for (int j = 0; j < tgt.num_players(); ++j) {
        Json entry = Json::object();
        entry["beta"] = gameforge::format_rational(witness->beta[j]);
        entry["gamma"] = gameforge::format_rational(witness->gamma[j]);
        scale[tgt.players()[j]] = std::move(entry);
        parts.push_back(tgt.players()[j] + ": beta=" +
                        gameforge::format_rational(witness->beta[j]) + ", gamma=" +
                        gameforge::format_rational(witness->gamma[j]));
      }
      report.result["witness"] = std::move(scale);
      line += "; witness: " + join(parts, "; ");
    }
    report.line(line);
    emit(report, ctx.json_mode);
    return holds ? 0 : 1;
  }

  std::size_t cap = 1;
  if (all) {
    cap = gameforge::kSearchAll;
  }
  if (limit > 0) {
    cap = static_cast<std::size_t>(limit);
  }
  const std::vector<GameBijection> found =
      gameforge::search_isomorphisms(first.game, second.game, mode, cap);
  report.result["found"] = !found.empty();
  report.result["count"] = found.size();
  Json list = Json::array();
  for (const GameBijection& bijection : found) {
    Json entry = Json::object();
    entry["players"] = bijection_json(bijection)["players"];
    entry["strategies"] = bijection_json(bijection)["strategies"];
    if (mode == IsoMode::kCardinal) {
      const auto witness = gameforge::cardinal_witness(bijection);
      if (witness.has_value()) {
        Json scale = Json::object();
        const Game& tgt = *second.game;
        for (int j = 0; j < tgt.num_players(); ++j) {
          Json w = Json::object();
          w["beta"] = gameforge::format_rational(witness->beta[j]);
          w["gamma"] = gameforge::format_rational(witness->gamma[j]);
          scale[tgt.players()[j]] = std::move(w);
        }
        entry["witness"] = std::move(scale);
      }
    }
    list.push_back(std::move(entry));
  }
  report.result["isomorphisms"] = std::move(list);
  if (found.empty()) {
    report.line("no isomorphisms found");
  } else {
    report.line("found " + std::to_string(found.size()) +
                (found.size() == 1 ? " isomorphism" : " isomorphisms"));
    for (std::size_t i = 0; i < found.size(); ++i) {
      report.line(std::to_string(i + 1) + ": " + bijection_text(found[i]));
    }
  }
  emit(report, ctx.json_mode);
  return found.empty() ? 1 : 0;
}

int run_aut(const CommandContext& ctx, const std::string& game_path) {
  const LoadedGame loaded = load_game(game_path);
  const gameforge::SymmetryGroup group = gameforge::automorphism_group(loaded.game);
  Report report;
  report.command = "aut";
  report.inputs["game"] = input_json(loaded);
  report.result["order"] = group.order();
  Json list = Json::array();
  report.line("order " + std::to_string(group.order()));
  for (std::size_t i = 0; i < group.order(); ++i) {
    list.push_back(bijection_json(group.elements()[i]));
    report.line(std::to_string(i + 1) + ": " + bijection_text(group.elements()[i]));
  }
  report.result["automorphisms"] = std::move(list);
  emit(report, ctx.json_mode);
  return 0;
}

int run_classify(const CommandContext& ctx, const std::string& game_path) {
  const LoadedGame loaded = load_game(game_path);
  const Game& game = *loaded.game;
  const gameforge::SearchLimits limits = environment_limits();
  gameforge::SymmetryReport symmetry = [&] {
    try {
      return gameforge::classify(loaded.game, limits);
    } catch (const std::invalid_argument& error) {
      throw ExitError{3, std::string(error.what())};
    }
  }();
  Report report;
  report.command = "classify";
  report.inputs["game"] = input_json(loaded);
  report.result["label"] = to_string(symmetry.label);
  report.result["symmetric"] = symmetry.symmetric;
  report.result["fully_symmetric"] = symmetry.fully_symmetric;
  report.result["standard_symmetric"] = symmetry.standard_symmetric;
  report.result["vnm_symmetric"] = symmetry.vnm_symmetric;
  report.result["dm_symmetric"] = symmetry.dm_symmetric;
  report.result["n_transitive_strategy_trivial"] = symmetry.n_transitive_strategy_trivial;
  report.result["automorphism_count"] = symmetry.automorphism_count;
  report.line("label: " + std::string(to_string(symmetry.label)));
  report.line(std::string("symmetric: ") + (symmetry.symmetric ? "true" : "false"));
  report.line(std::string("fully symmetric: ") +
              (symmetry.fully_symmetric ? "true" : "false"));
  report.line(std::string("standard symmetric: ") +
              (symmetry.standard_symmetric ? "true" : "false"));
  report.line(std::string("vnm symmetric: ") + (symmetry.vnm_symmetric ? "true" : "false"));
  report.line(std::string("dm symmetric: ") + (symmetry.dm_symmetric ? "true" : "false"));
  report.line(std::string("n-transitive strategy-trivial subgroup: ") +
              (symmetry.n_transitive_strategy_trivial ? "true" : "false"));
  report.line("automorphisms: " + std::to_string(symmetry.automorphism_count));
  if (symmetry.standard_matching.has_value()) {
    report.result["standard_matching"] = matching_json(*symmetry.standard_matching, game);
    report.line("standard matching: " + matching_text(*symmetry.standard_matching, game));
  }
  if (!symmetry.standard_player_group.empty()) {
    Json perms = Json::array();
    for (const std::vector<int>& perm : symmetry.standard_player_group) {
      Json entry = Json::object();
      for (int i = 0; i < game.num_players(); ++i) {
        entry[game.players()[i]] = game.players()[perm[i]];
      }
      perms.push_back(std::move(entry));
    }
    report.result["standard_group_order"] = symmetry.standard_player_group.size();
    report.result["standard_group"] = std::move(perms);
    report.line("standard group order: " +
                std::to_string(symmetry.standard_player_group.size()));
  }
  emit(report, ctx.json_mode);
  return 0;
}

int run_construct(const CommandContext& ctx, const std::string& generators_path,
                  const std::string& values_arg, std::int64_t seed, bool seed_given,
                  const std::string& out_path) {
  const std::string text = read_file(generators_path);
  gameforge::GeneratorSpec spec = [&] {
    try {
      return gameforge::parse_generators(text);
    } catch (const gameforge::ParseError& error) {
      throw ExitError{3, generators_path + ": " + error.what()};
    }
  }();
  gameforge::ConstructionResult result = [&] {
    try {
      if (seed_given) {
        return gameforge::construct_from_generators(*spec.shape, spec.generators,
                                                    static_cast<std::uint64_t>(seed));
      }
      const std::vector<Rational> values = parse_weights_arg(values_arg);
      return gameforge::construct_from_generators(*spec.shape, spec.generators, values);
    } catch (const std::invalid_argument& error) {
      throw ExitError{3, std::string(error.what())};
    }
  }();
  const std::string serialized = gameforge::serialize_game(result.game);
  Report report;
  report.command = "construct";
  Json gen_input = Json::object();
  gen_input["path"] = generators_path;
  gen_input["digest"] = gameforge::digest_hex(text);
  report.inputs["generators"] = std::move(gen_input);
  report.result["orbit_count"] = result.orbit_count;
  report.result["group_order"] = result.group_order;
  report.result["player_transitive"] = result.player_transitive;
  report.result["game"] = game_json(result.game);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw ExitError{3, "cannot write \"" + out_path + "\""};
    }
    out << serialized;
    report.result["written"] = out_path;
    report.line("orbit count: " + std::to_string(result.orbit_count));
    report.line("group order: " + std::to_string(result.group_order));
    report.line(std::string("player transitive: ") +
                (result.player_transitive ? "true" : "false"));
    report.line("wrote " + out_path);
  } else {
    report.text = serialized;
    std::cerr << "orbit count: " << result.orbit_count << "\n"
              << "group order: " << result.group_order << "\n"
              << "player transitive: " << (result.player_transitive ? "true" : "false")
              << "\n";
  }
  emit(report, ctx.json_mode);
  return 0;
}

int run_census(const CommandContext& ctx, const std::string& rep_dir) {
  const gameforge::OrdinalCensus2x2 census = gameforge::ordinal_census_2x2();
  Report report;
  report.command = "census-2x2";
  report.result["games_enumerated"] = census.games_enumerated;
  report.result["class_count"] = census.class_count;
  Json digests = Json::array();
  for (const Game& rep : census.representatives) {
    digests.push_back(gameforge::digest_hex(gameforge::serialize_game(rep)));
  }
  report.result["representative_digests"] = std::move(digests);
  report.line("games enumerated: " + std::to_string(census.games_enumerated));
  report.line("class count: " + std::to_string(census.class_count));
  if (!rep_dir.empty()) {
    for (std::size_t i = 0; i < census.representatives.size(); ++i) {
      std::ostringstream name;
      name << rep_dir << "/class_" << std::setw(3) << std::setfill('0') << i << ".game";
      std::ofstream out(name.str(), std::ios::binary);
      if (!out) {
        throw ExitError{3, "cannot write \"" + name.str() + "\""};
      }
      out << gameforge::serialize_game(census.representatives[i]);
    }
    report.result["written"] = census.representatives.size();
    report.line("wrote " + std::to_string(census.representatives.size()) +
                " representatives to " + rep_dir);
  }
  emit(report, ctx.json_mode);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for finite normal-form games"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string game_path;
  std::string game_path_2;
  std::string player;
  std::string profile_arg;
  std::string strategy;
  std::string over;
  std::string mixed;
  std::string mix_path;
  std::string mode_name;
  bool all = false;
  std::int64_t limit = 0;
  std::string check_path;
  std::string generators_path;
  std::string values_arg;
  std::int64_t seed = 0;
  std::string out_path;
  std::string rep_dir;

  CLI::App* info = app.add_subcommand("info", "Describe a game document");
  info->add_option("game", game_path, "Game file")->required();

  CLI::App* payoff = app.add_subcommand("payoff", "Evaluate one payoff entry");
  payoff->add_option("game", game_path, "Game file")->required();
  payoff->add_option("--player", player, "Player name")->required();
  payoff->add_option("--profile", profile_arg, "Comma-separated strategy names")->required();

  CLI::App* pure_nash = app.add_subcommand("pure-nash", "List pure Nash equilibria");
  pure_nash->add_option("game", game_path, "Game file")->required();

  CLI::App* best_response =
      app.add_subcommand("best-response", "Best responses against a profile");
  best_response->add_option("game", game_path, "Game file")->required();
  best_response->add_option("--profile", profile_arg, "Comma-separated strategy names")
      ->required();
  best_response->add_option("--player", player,
                            "Restrict to one player's best responses");

  CLI::App* dominance =
      app.add_subcommand("dominance", "Test strict dominance of one strategy");
  dominance->add_option("game", game_path, "Game file")->required();
  dominance->add_option("--player", player, "Player name")->required();
  CLI::Option* strat_opt =
      dominance->add_option("--strategy", strategy, "Candidate dominating strategy");
  CLI::Option* mixed_opt = dominance->add_option(
      "--mixed", mixed, "Candidate dominating mixed strategy (comma-separated weights)");
  strat_opt->excludes(mixed_opt);
  mixed_opt->excludes(strat_opt);
  dominance->add_option("--over", over, "Strategy claimed to be dominated")->required();

  CLI::App* verify_ne = app.add_subcommand("verify-ne", "Verify a mixed Nash equilibrium");
  verify_ne->add_option("game", game_path, "Game file")->required();
  verify_ne->add_option("profile", mix_path, "Mixed profile file")->required();

  CLI::App* iso = app.add_subcommand("iso", "Search for or check isomorphisms");
  iso->add_option("game1", game_path, "First game file")->required();
  iso->add_option("game2", game_path_2, "Second game file")->required();
  iso->add_option("--mode", mode_name, "strict, ordinal, or cardinal")->required();
  CLI::Option* all_opt = iso->add_flag("--all", all, "Enumerate every isomorphism");
  CLI::Option* limit_opt =
      iso->add_option("--limit", limit, "Stop after this many isomorphisms")
          ->check(CLI::PositiveNumber);
  CLI::Option* check_opt =
      iso->add_option("--check", check_path, "Verify a bijection file instead of searching");
  check_opt->excludes(all_opt);
  check_opt->excludes(limit_opt);
  all_opt->excludes(limit_opt);

  CLI::App* aut = app.add_subcommand("aut", "List the automorphism group");
  aut->add_option("game", game_path, "Game file")->required();

  CLI::App* classify = app.add_subcommand("classify", "Classify symmetry structure");
  classify->add_option("game", game_path, "Game file")->required();

  CLI::App* construct =
      app.add_subcommand("construct", "Construct a symmetric game from generators");
  construct->add_option("--generators", generators_path, "Generator file")->required();
  CLI::Option* values_opt = construct->add_option(
      "--values", values_arg, "Comma-separated payoff values, one per orbit");
  CLI::Option* seed_opt =
      construct->add_option("--seed", seed, "Derive distinct payoff values from a seed");
  values_opt->excludes(seed_opt);
  seed_opt->excludes(values_opt);
  construct->add_option("--out", out_path, "Write the game document to this file");

  CLI::App* census = app.add_subcommand("census-2x2", "Ordinal census of 2x2 games");
  census->add_option("--representatives-dir", rep_dir,
                     "Write one representative game file per class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  CommandContext ctx;
  ctx.json_mode = (format == "json");

  try {
    if (info->parsed()) {
      return run_info(ctx, game_path);
    }
    if (payoff->parsed()) {
      return run_payoff(ctx, game_path, player, profile_arg);
    }
    if (pure_nash->parsed()) {
      return run_pure_nash(ctx, game_path);
    }
    if (best_response->parsed()) {
      return run_best_response(ctx, game_path, profile_arg, player);
    }
    if (dominance->parsed()) {
      if (strategy.empty() && mixed.empty()) {
        std::cerr << "dominance requires --strategy or --mixed\n";
        return 2;
      }
      return run_dominance(ctx, game_path, player, strategy, mixed, over);
    }
    if (verify_ne->parsed()) {
      return run_verify_ne(ctx, game_path, mix_path);
    }
    if (iso->parsed()) {
      return run_iso(ctx, game_path, game_path_2, mode_name, all, limit, check_path);
    }
    if (aut->parsed()) {
      return run_aut(ctx, game_path);
    }
    if (classify->parsed()) {
      return run_classify(ctx, game_path);
    }
    if (construct->parsed()) {
      if (values_arg.empty() && seed_opt->count() == 0) {
        std::cerr << "construct requires --values or --seed\n";
        return 2;
      }
      return run_construct(ctx, generators_path, values_arg, seed, seed_opt->count() > 0,
                           out_path);
    }
    if (census->parsed()) {
      return run_census(ctx, rep_dir);
    }
  } catch (const ExitError& error) {
    std::cerr << error.message << "\n";
    return error.code;
  } catch (const gameforge::ParseError& error) {
    std::cerr << error.what() << "\n";
    return 3;
  } catch (const std::exception& error) {
    std::cerr << error.what() << "\n";
    return 3;
  }
  std::cerr << "no subcommand selected\n";
  return 2;
}
