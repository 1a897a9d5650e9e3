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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gameforge/bijection.hpp"
#include "gameforge/document.hpp"
#include "gameforge/game.hpp"
#include "gameforge/rational.hpp"

namespace gameforge {

namespace detail {

inline Rational parse_rational_node(const DocValue& node) {
  try {
    return parse_rational(node.as_string());
  } catch (const std::invalid_argument& error) {
    node.fail(error.what());
  }
}

struct GameHeader {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;
  std::size_t table_size = 1;
};

// Validates the shared "players" / "strategies" part of game and
// generator documents, with positioned errors.
inline GameHeader parse_game_header(const DocValue& root) {
  GameHeader header;
  const DocValue& players = root.at("players");
  std::set<std::string> seen_players;
  for (const DocValue& entry : players.items()) {
    if (!seen_players.insert(entry.as_string()).second) {
      entry.fail("duplicate player \"" + entry.as_string() + "\"");
    }
    header.players.push_back(entry.as_string());
  }
  if (header.players.size() < 2) {
    players.fail("a game needs at least two players");
  }
  const DocValue& strategies = root.at("strategies");
  if (strategies.items().size() != header.players.size()) {
    strategies.fail("expected one strategy list per player (" +
                    std::to_string(header.players.size()) + "), found " +
                    std::to_string(strategies.items().size()));
  }
  for (std::size_t i = 0; i < header.players.size(); ++i) {
    const DocValue& list = strategies.items()[i];
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const DocValue& entry : list.items()) {
      if (!seen.insert(entry.as_string()).second) {
        entry.fail("duplicate strategy \"" + entry.as_string() +
                   "\" for player \"" + header.players[i] + "\"");
      }
      names.push_back(entry.as_string());
    }
    if (names.empty()) {
      list.fail("player \"" + header.players[i] + "\" has no strategies");
    }
    header.table_size *= names.size();
    header.strategies.push_back(std::move(names));
  }
  return header;
}

// Parses a {"players": {...}, "strategies": {...}} bijection body between
// two already-known games.
inline GameBijection parse_bijection_body(const DocValue& root,
                                          const GamePtr& source,
                                          const GamePtr& target) {
  root.allow_only({"players", "strategies"});
  const int n = source->num_players();
  const DocValue& players = root.at("players");
  std::vector<int> player_map(n, -1);
  std::vector<char> target_used(n, 0);
  for (const auto& [name, value] : players.fields()) {
    int from;
    try {
      from = source->player_index(name);
    } catch (const std::invalid_argument&) {
      value.fail("unknown player \"" + name + "\"");
    }
    int to;
    try {
      to = target->player_index(value.as_string());
    } catch (const std::invalid_argument&) {
      value.fail("unknown player \"" + value.as_string() + "\"");
    }
    if (target_used[to]) {
      value.fail("player \"" + value.as_string() + "\" is used twice");
    }
    player_map[from] = to;
    target_used[to] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (player_map[i] == -1) {
      players.fail("missing player \"" + source->players()[i] + "\"");
    }
  }
  const DocValue& strategies = root.at("strategies");
  std::vector<std::vector<int>> strategy_maps(n);
  std::vector<char> have_map(n, 0);
  for (const auto& [name, mapping] : strategies.fields()) {
    int from;
    try {
      from = source->player_index(name);
    } catch (const std::invalid_argument&) {
      mapping.fail("unknown player \"" + name + "\"");
    }
    const int to = player_map[from];
    const int d = source->num_strategies(from);
    if (target->num_strategies(to) != d) {
      mapping.fail("player \"" + name +
                   "\" and its image have different strategy counts");
    }
    std::vector<int> map(d, -1);
    std::vector<char> used(d, 0);
    for (const auto& [strategy, image] : mapping.fields()) {
      int x;
      try {
        x = source->strategy_index(from, strategy);
      } catch (const std::invalid_argument&) {
        image.fail("player \"" + name + "\" has no strategy \"" + strategy +
                   "\"");
      }
      int y;
      try {
        y = target->strategy_index(to, image.as_string());
      } catch (const std::invalid_argument&) {
        image.fail("player \"" + target->players()[to] +
                   "\" has no strategy \"" + image.as_string() + "\"");
      }
      if (used[y]) {
        image.fail("strategy \"" + image.as_string() + "\" is used twice");
      }
      map[x] = y;
      used[y] = 1;
    }
    for (int x = 0; x < d; ++x) {
      if (map[x] == -1) {
        mapping.fail("missing strategy \"" +
                     source->strategies(from)[x] + "\" of player \"" + name +
                     "\"");
      }
    }
    strategy_maps[from] = std::move(map);
    have_map[from] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (!have_map[i]) {
      strategies.fail("missing strategy map for player \"" +
                      source->players()[i] + "\"");
    }
  }
  return GameBijection(source, target, std::move(player_map),
                       std::move(strategy_maps));
}

}  // namespace detail

// Reads a game document.  All validation failures carry source positions.
inline Game parse_game(std::string_view text) {
  const DocValue root = parse_document(text);
  root.allow_only({"title", "players", "strategies", "payoffs"});
  std::string title;
  if (root.has("title")) title = root.at("title").as_string();
  detail::GameHeader header = detail::parse_game_header(root);
  const DocValue& payoffs = root.at("payoffs");
  if (payoffs.items().size() != header.players.size()) {
    payoffs.fail("expected one payoff table per player (" +
                 std::to_string(header.players.size()) + "), found " +
                 std::to_string(payoffs.items().size()));
  }
  std::vector<std::vector<Rational>> tables;
  for (std::size_t i = 0; i < header.players.size(); ++i) {
    const DocValue& row = payoffs.items()[i];
    if (row.items().size() != header.table_size) {
      row.fail("payoff table for player \"" + header.players[i] + "\" has " +
               std::to_string(row.items().size()) +
               (row.items().size() == 1 ? " entry" : " entries") +
               "; expected " + std::to_string(header.table_size));
    }
    std::vector<Rational> values;
    values.reserve(header.table_size);
    for (const DocValue& entry : row.items()) {
      values.push_back(detail::parse_rational_node(entry));
    }
    tables.push_back(std::move(values));
  }
  return Game(std::move(header.players), std::move(header.strategies),
              std::move(tables), std::move(title));
}

// Reads a bijection document against known source and target games.
inline GameBijection parse_bijection(std::string_view text,
                                     const GamePtr& source,
                                     const GamePtr& target) {
  if (!source || !target) {
    throw std::invalid_argument("bijection requires source and target");
  }
  if (source->num_players() != target->num_players()) {
    throw std::invalid_argument("bijection requires equal player counts");
  }
  return detail::parse_bijection_body(parse_document(text), source, target);
}

// Reads a mixed-profile document for a known game.  Every player and
// every strategy must appear; rows must sum to exactly 1.
inline MixedProfile parse_mixed(std::string_view text, const Game& game) {
  const DocValue root = parse_document(text);
  root.allow_only({"probabilities"});
  const DocValue& probabilities = root.at("probabilities");
  const int n = game.num_players();
  MixedProfile sigma(n);
  std::vector<char> have_row(n, 0);
  for (const auto& [name, row] : probabilities.fields()) {
    int player;
    try {
      player = game.player_index(name);
    } catch (const std::invalid_argument&) {
      row.fail("unknown player \"" + name + "\"");
    }
    const int d = game.num_strategies(player);
    std::vector<Rational> probs(d);
    std::vector<char> have_entry(d, 0);
    for (const auto& [strategy, entry] : row.fields()) {
      int x;
      try {
        x = game.strategy_index(player, strategy);
      } catch (const std::invalid_argument&) {
        entry.fail("player \"" + name + "\" has no strategy \"" + strategy +
                   "\"");
      }
      Rational p = detail::parse_rational_node(entry);
      if (p < 0) {
        entry.fail("negative probability " + format_rational(p));
      }
      probs[x] = std::move(p);
      have_entry[x] = 1;
    }
    for (int x = 0; x < d; ++x) {
      if (!have_entry[x]) {
        row.fail("missing probability for strategy \"" +
                 game.strategies(player)[x] + "\"");
      }
    }
    Rational total = 0;
    for (const Rational& p : probs) total += p;
    if (total != 1) {
      row.fail("probabilities for player \"" + name + "\" sum to " +
               format_rational(total) + ", not 1");
    }
    sigma[player] = std::move(probs);
    have_row[player] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (!have_row[i]) {
      probabilities.fail("missing probabilities for player \"" +
                         game.players()[i] + "\"");
    }
  }
  return sigma;
}

// A strategy shape plus generating self-bijections, as read from a
// generator document.  The shape's payoffs are all zero; only its players
// and strategies matter.
struct GeneratorSpec {
  GamePtr shape;
  std::vector<GameBijection> generators;
};

// Reads a generator document: a game header plus a list of bijection
// bodies from the declared shape to itself.
inline GeneratorSpec parse_generators(std::string_view text) {
  const DocValue root = parse_document(text);
  root.allow_only({"title", "players", "strategies", "generators"});
  std::string title;
  if (root.has("title")) title = root.at("title").as_string();
  detail::GameHeader header = detail::parse_game_header(root);
  std::vector<std::vector<Rational>> zeros(
      header.players.size(),
      std::vector<Rational>(header.table_size, Rational(0)));
  GeneratorSpec spec;
  spec.shape = std::make_shared<const Game>(
      std::move(header.players), std::move(header.strategies),
      std::move(zeros), std::move(title));
  for (const DocValue& entry : root.at("generators").items()) {
    spec.generators.push_back(
        detail::parse_bijection_body(entry, spec.shape, spec.shape));
  }
  return spec;
}

// --- Canonical writers -----------------------------------------------------
//
// Serialization is canonical: fixed field order, fixed layout, rationals
// in lowest terms, and a trailing newline.  Writing a parsed document
// reproduces it byte for byte when it was produced by these writers.

inline std::string serialize_game(const Game& g) {
  std::string out = "{\n";
  if (!g.title().empty()) {
    out += "  \"title\": " + quote_string(g.title()) + ",\n";
  }
  out += "  \"players\": [";
  for (int i = 0; i < g.num_players(); ++i) {
    if (i > 0) out += ", ";
    out += quote_string(g.players()[i]);
  }
  out += "],\n  \"strategies\": [";
  for (int i = 0; i < g.num_players(); ++i) {
    if (i > 0) out += ", ";
    out += "[";
    const auto& names = g.strategies(i);
    for (std::size_t x = 0; x < names.size(); ++x) {
      if (x > 0) out += ", ";
      out += quote_string(names[x]);
    }
    out += "]";
  }
  out += "],\n  \"payoffs\": [\n";
  for (int i = 0; i < g.num_players(); ++i) {
    out += "    [";
    const auto& row = g.payoff_table(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ", ";
      out += quote_string(format_rational(row[k]));
    }
    out += i + 1 < g.num_players() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

inline std::string serialize_bijection(const GameBijection& b) {
  const Game& source = *b.source();
  const Game& target = *b.target();
  std::string out = "{\n  \"players\": {";
  for (int i = 0; i < source.num_players(); ++i) {
    if (i > 0) out += ", ";
    out += quote_string(source.players()[i]) + ": " +
           quote_string(target.players()[b.player_map()[i]]);
  }
  out += "},\n  \"strategies\": {\n";
  for (int i = 0; i < source.num_players(); ++i) {
    const int j = b.player_map()[i];
    out += "    " + quote_string(source.players()[i]) + ": {";
    for (int x = 0; x < source.num_strategies(i); ++x) {
      if (x > 0) out += ", ";
      out += quote_string(source.strategies(i)[x]) + ": " +
             quote_string(target.strategies(j)[b.strategy_maps()[i][x]]);
    }
    out += i + 1 < source.num_players() ? "},\n" : "}\n";
  }
  out += "  }\n}\n";
  return out;
}

inline std::string serialize_mixed(const MixedProfile& sigma,
                                   const Game& game) {
  check_mixed_profile(game, sigma);
  std::string out = "{\n  \"probabilities\": {\n";
  for (int i = 0; i < game.num_players(); ++i) {
    out += "    " + quote_string(game.players()[i]) + ": {";
    for (int x = 0; x < game.num_strategies(i); ++x) {
      if (x > 0) out += ", ";
      out += quote_string(game.strategies(i)[x]) + ": " +
             quote_string(format_rational(sigma[i][x]));
    }
    out += i + 1 < game.num_players() ? "},\n" : "}\n";
  }
  out += "  }\n}\n";
  return out;
}

// FNV-1a 64-bit digest of a document's bytes, as 16 hex characters.
// Used to tie reports to their inputs.
inline std::string digest_hex(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  }
  static const char hex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[k] = hex[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace gameforge
