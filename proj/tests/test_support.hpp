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

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gameforge/gameforge.hpp"

namespace gftest {

inline std::filesystem::path fixtures_dir() {
  return std::filesystem::path(GAMEFORGE_FIXTURES_DIR);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string fixture_text(const std::string& name) {
  return read_file(fixtures_dir() / name);
}

inline gameforge::GamePtr load_game(const std::string& name) {
  return std::make_shared<const gameforge::Game>(
      gameforge::parse_game(fixture_text(name)));
}

inline gameforge::GameBijection load_bijection(const std::string& name,
                                               gameforge::GamePtr source,
                                               gameforge::GamePtr target) {
  return gameforge::parse_bijection(fixture_text(name), std::move(source),
                                    std::move(target));
}

// Builds a game from integer payoff tensors (one flat row per player, last
// player's strategy varying fastest).
inline gameforge::GamePtr make_game(
    std::vector<std::string> players,
    std::vector<std::vector<std::string>> strategies,
    const std::vector<std::vector<long>>& tables, std::string title = "") {
  std::vector<std::vector<gameforge::Rational>> payoffs;
  payoffs.reserve(tables.size());
  for (const std::vector<long>& row : tables) {
    payoffs.emplace_back(row.begin(), row.end());
  }
  return std::make_shared<const gameforge::Game>(
      std::move(players), std::move(strategies), std::move(payoffs),
      std::move(title));
}

// Two-player shorthand with players "1", "2".
inline gameforge::GamePtr make_game2(std::vector<std::string> row_names,
                                     std::vector<std::string> col_names,
                                     const std::vector<long>& u1,
                                     const std::vector<long>& u2) {
  return make_game({"1", "2"}, {std::move(row_names), std::move(col_names)},
                   {u1, u2});
}

// Deterministic random game on a given shape: payoffs are small rationals.
inline gameforge::GamePtr random_game(std::mt19937_64& rng,
                                      const std::vector<int>& shape) {
  const int n = static_cast<int>(shape.size());
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;
  std::size_t table = 1;
  for (int i = 0; i < n; ++i) {
    players.push_back("p" + std::to_string(i + 1));
    std::vector<std::string> names;
    for (int x = 0; x < shape[i]; ++x) {
      names.push_back("s" + std::to_string(i + 1) + "_" +
                      std::to_string(x + 1));
    }
    strategies.push_back(std::move(names));
    table *= static_cast<std::size_t>(shape[i]);
  }
  std::vector<std::vector<gameforge::Rational>> payoffs(n);
  for (int i = 0; i < n; ++i) {
    payoffs[i].reserve(table);
    for (std::size_t k = 0; k < table; ++k) {
      const long num = static_cast<long>(rng() % 41) - 20;
      const long den = static_cast<long>(rng() % 7) + 1;
      payoffs[i].emplace_back(num, den);
    }
  }
  return std::make_shared<const gameforge::Game>(
      std::move(players), std::move(strategies), std::move(payoffs));
}

// A uniformly random permutation of {0, ..., n-1}.
inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// A random strict isomorphism out of `source`, built by transporting its
// payoffs through random maps onto freshly named players and strategies.
struct RandomIso {
  gameforge::GamePtr target;
  gameforge::GameBijection bijection;
};

inline RandomIso random_strict_iso(std::mt19937_64& rng,
                                   const gameforge::GamePtr& source,
                                   const std::string& tag) {
  const gameforge::Game& g = *source;
  const int n = g.num_players();
  const std::vector<int> player_map = random_permutation(rng, n);
  std::vector<std::vector<int>> strategy_maps(n);
  std::vector<std::vector<std::string>> target_strategies(n);
  std::vector<std::string> target_players(n);
  for (int i = 0; i < n; ++i) {
    strategy_maps[i] = random_permutation(rng, g.num_strategies(i));
    target_players[player_map[i]] = "q" + tag + std::to_string(player_map[i]);
    std::vector<std::string> names(g.num_strategies(i));
    for (int x = 0; x < g.num_strategies(i); ++x) {
      names[x] = "t" + tag + std::to_string(player_map[i]) + "_" +
                 std::to_string(x);
    }
    target_strategies[player_map[i]] = std::move(names);
  }
  auto target = std::make_shared<const gameforge::Game>(gameforge::transport_game(
      g, player_map, strategy_maps, target_players, target_strategies));
  gameforge::GameBijection bijection(source, target, player_map,
                                     strategy_maps);
  return {std::move(target), std::move(bijection)};
}

}  // namespace gftest
