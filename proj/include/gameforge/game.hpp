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

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gameforge/rational.hpp"

namespace gameforge {

// A pure strategy profile: one strategy index per player, in player order.
using PureProfile = std::vector<int>;

// A mixed strategy profile: one probability row per player, one entry per
// strategy, each row summing to exactly 1.
using MixedProfile = std::vector<std::vector<Rational>>;

// A finite normal-form game with at least two players.  Payoffs for each
// player are stored as a flat tensor over pure profiles in canonical order:
// the profile (s_1, ..., s_n) lives at index sum_i s_i * prod_{j>i} d_j,
// so the last player's strategy varies fastest.
class Game {
 public:
  Game(std::vector<std::string> players,
       std::vector<std::vector<std::string>> strategies,
       std::vector<std::vector<Rational>> payoffs, std::string title = "")
      : title_(std::move(title)),
        players_(std::move(players)),
        strategies_(std::move(strategies)),
        payoffs_(std::move(payoffs)) {
    if (players_.size() < 2) {
      throw std::invalid_argument("a game needs at least two players");
    }
    if (std::set<std::string>(players_.begin(), players_.end()).size() !=
        players_.size()) {
      throw std::invalid_argument("duplicate player name");
    }
    if (strategies_.size() != players_.size()) {
      throw std::invalid_argument(
          "strategy lists do not match the player count");
    }
    std::size_t table = 1;
    for (std::size_t i = 0; i < strategies_.size(); ++i) {
      const auto& names = strategies_[i];
      if (names.empty()) {
        throw std::invalid_argument("player \"" + players_[i] +
                                    "\" has no strategies");
      }
      if (std::set<std::string>(names.begin(), names.end()).size() !=
          names.size()) {
        throw std::invalid_argument("duplicate strategy name for player \"" +
                                    players_[i] + "\"");
      }
      table *= names.size();
    }
    if (payoffs_.size() != players_.size()) {
      throw std::invalid_argument(
          "payoff tables do not match the player count");
    }
    for (const auto& row : payoffs_) {
      if (row.size() != table) {
        throw std::invalid_argument(
            "payoff table size does not match the profile count");
      }
    }
    strides_.assign(players_.size(), 1);
    for (int i = static_cast<int>(players_.size()) - 2; i >= 0; --i) {
      strides_[i] =
          strides_[i + 1] * strategies_[i + 1].size();
    }
    table_size_ = table;
  }

  int num_players() const { return static_cast<int>(players_.size()); }
  int num_strategies(int player) const {
    check_player(player);
    return static_cast<int>(strategies_[player].size());
  }
  std::size_t table_size() const { return table_size_; }

  const std::string& title() const { return title_; }
  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::string>& strategies(int player) const {
    check_player(player);
    return strategies_[player];
  }
  const std::vector<Rational>& payoff_table(int player) const {
    check_player(player);
    return payoffs_[player];
  }

  std::size_t profile_index(const PureProfile& s) const {
    check_profile(s);
    std::size_t index = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      index += static_cast<std::size_t>(s[i]) * strides_[i];
    }
    return index;
  }

  PureProfile profile_at(std::size_t index) const {
    if (index >= table_size_) {
      throw std::out_of_range("profile index out of range");
    }
    PureProfile s(players_.size());
    for (std::size_t i = 0; i < players_.size(); ++i) {
      s[i] = static_cast<int>(index / strides_[i]);
      index %= strides_[i];
    }
    return s;
  }

  const Rational& payoff(int player, const PureProfile& s) const {
    check_player(player);
    return payoffs_[player][profile_index(s)];
  }
  const Rational& payoff_at(int player, std::size_t flat_index) const {
    check_player(player);
    if (flat_index >= table_size_) {
      throw std::out_of_range("profile index out of range");
    }
    return payoffs_[player][flat_index];
  }

  // Index of the named player; throws std::invalid_argument if absent.
  int player_index(const std::string& name) const {
    for (std::size_t i = 0; i < players_.size(); ++i) {
      if (players_[i] == name) return static_cast<int>(i);
    }
    throw std::invalid_argument("unknown player \"" + name + "\"");
  }

  // Index of the named strategy of a player; throws if absent.
  int strategy_index(int player, const std::string& name) const {
    check_player(player);
    const auto& names = strategies_[player];
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (names[k] == name) return static_cast<int>(k);
    }
    throw std::invalid_argument("player \"" + players_[player] +
                                "\" has no strategy \"" + name + "\"");
  }

  void check_player(int player) const {
    if (player < 0 || player >= static_cast<int>(players_.size())) {
      throw std::out_of_range("player index out of range");
    }
  }

  void check_strategy(int player, int strategy) const {
    check_player(player);
    if (strategy < 0 ||
        strategy >= static_cast<int>(strategies_[player].size())) {
      throw std::out_of_range("strategy index out of range");
    }
  }

  void check_profile(const PureProfile& s) const {
    if (s.size() != players_.size()) {
      throw std::invalid_argument("profile length does not match the game");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      check_strategy(static_cast<int>(i), s[i]);
    }
  }

  // Structural equality: same player names, strategy names, and payoffs.
  // The title is presentation only and does not participate.
  friend bool operator==(const Game& a, const Game& b) {
    if (&a == &b) return true;
    return a.players_ == b.players_ && a.strategies_ == b.strategies_ &&
           a.payoffs_ == b.payoffs_;
  }
  friend bool operator!=(const Game& a, const Game& b) { return !(a == b); }

 private:
  std::string title_;
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<std::vector<Rational>> payoffs_;
  std::vector<std::size_t> strides_;
  std::size_t table_size_ = 0;
};

using GamePtr = std::shared_ptr<const Game>;

// Validates shape, non-negativity, and exact row sums of a mixed profile.
inline void check_mixed_profile(const Game& g, const MixedProfile& sigma) {
  if (sigma.size() != static_cast<std::size_t>(g.num_players())) {
    throw std::invalid_argument(
        "mixed profile length does not match the player count");
  }
  for (int i = 0; i < g.num_players(); ++i) {
    if (sigma[i].size() != static_cast<std::size_t>(g.num_strategies(i))) {
      throw std::invalid_argument("mixed strategy for player \"" +
                                  g.players()[i] +
                                  "\" has the wrong number of entries");
    }
    Rational total = 0;
    for (const Rational& p : sigma[i]) {
      if (p < 0) {
        throw std::invalid_argument("negative probability for player \"" +
                                    g.players()[i] + "\"");
      }
      total += p;
    }
    if (total != 1) {
      throw std::invalid_argument("probabilities for player \"" +
                                  g.players()[i] +
                                  "\" sum to " + format_rational(total) +
                                  ", not 1");
    }
  }
}

// Mixed strategy that plays one pure strategy with certainty.
inline MixedProfile point_mass(const Game& g, const PureProfile& s) {
  g.check_profile(s);
  MixedProfile sigma(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    sigma[i].assign(g.num_strategies(i), Rational(0));
    sigma[i][s[i]] = 1;
  }
  return sigma;
}

// u_i(s) for a pure profile.
inline const Rational& utility(const Game& g, int player,
                               const PureProfile& s) {
  return g.payoff(player, s);
}

// Multilinear extension: sum over pure profiles of the profile's
// probability under sigma times the player's payoff, computed exactly.
inline Rational expected_utility(const Game& g, int player,
                                 const MixedProfile& sigma) {
  g.check_player(player);
  check_mixed_profile(g, sigma);
  Rational total = 0;
  const std::size_t table = g.table_size();
  for (std::size_t index = 0; index < table; ++index) {
    PureProfile s = g.profile_at(index);
    Rational prob = 1;
    for (int i = 0; i < g.num_players() && prob != 0; ++i) {
      prob *= sigma[i][s[i]];
    }
    if (prob != 0) total += prob * g.payoff_at(player, index);
  }
  return total;
}

// Strategies of `player` maximizing u_player against the others' entries in
// `opponents` (a full profile whose own component is ignored).  Ascending
// strategy order; never empty.
inline std::vector<int> pure_best_responses(const Game& g, int player,
                                            const PureProfile& opponents) {
  g.check_player(player);
  PureProfile s = opponents;
  s[player] = 0;
  g.check_profile(s);
  std::vector<int> best;
  Rational best_value;
  for (int x = 0; x < g.num_strategies(player); ++x) {
    s[player] = x;
    const Rational& value = g.payoff(player, s);
    if (best.empty() || value > best_value) {
      best_value = value;
      best.assign(1, x);
    } else if (value == best_value) {
      best.push_back(x);
    }
  }
  return best;
}

// b(s): profiles in which every player best-responds to s.  Canonical
// tensor order.
inline std::vector<PureProfile> best_response_profiles(const Game& g,
                                                       const PureProfile& s) {
  g.check_profile(s);
  std::vector<std::vector<int>> choices(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    choices[i] = pure_best_responses(g, i, s);
  }
  std::vector<PureProfile> result;
  PureProfile current(g.num_players());
  // Odometer over the per-player best-response sets; each set is already
  // ascending, so the output comes out in tensor order.
  std::vector<std::size_t> pos(g.num_players(), 0);
  while (true) {
    for (int i = 0; i < g.num_players(); ++i) current[i] = choices[i][pos[i]];
    result.push_back(current);
    int i = g.num_players() - 1;
    while (i >= 0 && ++pos[i] == choices[i].size()) {
      pos[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return result;
}

// All pure Nash equilibria (profiles that are fixed points of the
// best-response correspondence), in canonical tensor order.
inline std::vector<PureProfile> pure_nash_equilibria(const Game& g) {
  std::vector<PureProfile> result;
  const std::size_t table = g.table_size();
  for (std::size_t index = 0; index < table; ++index) {
    PureProfile s = g.profile_at(index);
    bool stable = true;
    for (int i = 0; i < g.num_players() && stable; ++i) {
      const Rational& current = g.payoff_at(i, index);
      PureProfile t = s;
      for (int x = 0; x < g.num_strategies(i); ++x) {
        t[i] = x;
        if (g.payoff(i, t) > current) {
          stable = false;
          break;
        }
      }
    }
    if (stable) result.push_back(s);
  }
  return result;
}

// True when `strategy` gives `player` strictly more than `dominated`
// against every pure opponent profile.  Quantifying over pure opponent
// profiles suffices for mixed opponents too, by multilinearity.
inline bool strictly_dominates_pure(const Game& g, int player, int strategy,
                                    int dominated) {
  g.check_strategy(player, strategy);
  g.check_strategy(player, dominated);
  if (strategy == dominated) {
    throw std::invalid_argument(
        "dominance requires two distinct strategies");
  }
  const std::size_t table = g.table_size();
  for (std::size_t index = 0; index < table; ++index) {
    PureProfile s = g.profile_at(index);
    if (s[player] != 0) continue;  // one representative per opponent profile
    s[player] = strategy;
    Rational lhs = g.payoff(player, s);
    s[player] = dominated;
    if (lhs <= g.payoff(player, s)) return false;
  }
  return true;
}

// True when the mixed strategy `mix` gives `player` strictly more than the
// pure strategy `dominated` against every pure opponent profile.
inline bool strictly_dominates_mixed(const Game& g, int player,
                                     const std::vector<Rational>& mix,
                                     int dominated) {
  g.check_strategy(player, dominated);
  if (mix.size() != static_cast<std::size_t>(g.num_strategies(player))) {
    throw std::invalid_argument(
        "mixed strategy has the wrong number of entries");
  }
  Rational total = 0;
  for (const Rational& p : mix) {
    if (p < 0) throw std::invalid_argument("negative probability");
    total += p;
  }
  if (total != 1) {
    throw std::invalid_argument("probabilities sum to " +
                                format_rational(total) + ", not 1");
  }
  const std::size_t table = g.table_size();
  for (std::size_t index = 0; index < table; ++index) {
    PureProfile s = g.profile_at(index);
    if (s[player] != 0) continue;
    Rational lhs = 0;
    for (int x = 0; x < g.num_strategies(player); ++x) {
      if (mix[x] == 0) continue;
      s[player] = x;
      lhs += mix[x] * g.payoff(player, s);
    }
    s[player] = dominated;
    if (lhs <= g.payoff(player, s)) return false;
  }
  return true;
}

// Verifies that sigma is a mixed Nash equilibrium.  For each player it
// compares the equilibrium payoff against every pure deviation; pure
// deviations are sufficient by multilinearity.
inline bool is_mixed_nash(const Game& g, const MixedProfile& sigma) {
  check_mixed_profile(g, sigma);
  const std::size_t table = g.table_size();
  for (int i = 0; i < g.num_players(); ++i) {
    // conditional[x]: payoff to i for playing x while everyone else
    // follows sigma.
    std::vector<Rational> conditional(g.num_strategies(i), Rational(0));
    for (std::size_t index = 0; index < table; ++index) {
      PureProfile s = g.profile_at(index);
      Rational prob = 1;
      for (int j = 0; j < g.num_players() && prob != 0; ++j) {
        if (j != i) prob *= sigma[j][s[j]];
      }
      if (prob != 0) conditional[s[i]] += prob * g.payoff_at(i, index);
    }
    Rational value = 0;
    for (int x = 0; x < g.num_strategies(i); ++x) {
      value += sigma[i][x] * conditional[x];
    }
    for (int x = 0; x < g.num_strategies(i); ++x) {
      if (conditional[x] > value) return false;
    }
  }
  return true;
}

}  // namespace gameforge
