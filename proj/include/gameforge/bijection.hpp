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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gameforge/game.hpp"

namespace gameforge {

namespace detail {

inline bool is_permutation_vector(const std::vector<int>& v, int n) {
  if (v.size() != static_cast<std::size_t>(n)) return false;
  std::vector<char> seen(n, 0);
  for (int x : v) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace detail

// A bijection between two games: a permutation of players together with,
// for each source player i, a bijection from i's strategies onto the
// strategies of the image player.  Acting on a pure profile s produces the
// profile whose component for the image of i is the image of s_i.
class GameBijection {
 public:
  GameBijection(GamePtr source, GamePtr target, std::vector<int> player_map,
                std::vector<std::vector<int>> strategy_maps)
      : source_(std::move(source)),
        target_(std::move(target)),
        player_map_(std::move(player_map)),
        strategy_maps_(std::move(strategy_maps)) {
    if (!source_ || !target_) {
      throw std::invalid_argument("bijection requires source and target");
    }
    const int n = source_->num_players();
    if (target_->num_players() != n) {
      throw std::invalid_argument(
          "bijection requires equal player counts");
    }
    if (!detail::is_permutation_vector(player_map_, n)) {
      throw std::invalid_argument("player map is not a permutation");
    }
    if (strategy_maps_.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument(
          "strategy maps do not match the player count");
    }
    for (int i = 0; i < n; ++i) {
      const int d = source_->num_strategies(i);
      const int e = target_->num_strategies(player_map_[i]);
      if (d != e) {
        throw std::invalid_argument(
            "player \"" + source_->players()[i] +
            "\" and its image have different strategy counts");
      }
      if (!detail::is_permutation_vector(strategy_maps_[i], d)) {
        throw std::invalid_argument("strategy map for player \"" +
                                    source_->players()[i] +
                                    "\" is not a bijection");
      }
    }
  }

  const GamePtr& source() const { return source_; }
  const GamePtr& target() const { return target_; }
  const std::vector<int>& player_map() const { return player_map_; }
  const std::vector<std::vector<int>>& strategy_maps() const {
    return strategy_maps_;
  }

  int map_player(int i) const {
    source_->check_player(i);
    return player_map_[i];
  }
  int map_strategy(int player, int strategy) const {
    source_->check_strategy(player, strategy);
    return strategy_maps_[player][strategy];
  }

  // Equality of the maps over structurally equal games.
  friend bool operator==(const GameBijection& a, const GameBijection& b) {
    return *a.source_ == *b.source_ && *a.target_ == *b.target_ &&
           a.player_map_ == b.player_map_ &&
           a.strategy_maps_ == b.strategy_maps_;
  }
  friend bool operator!=(const GameBijection& a, const GameBijection& b) {
    return !(a == b);
  }

 private:
  GamePtr source_;
  GamePtr target_;
  std::vector<int> player_map_;
  std::vector<std::vector<int>> strategy_maps_;
};

// Canonical order on bijections: lexicographic by player map, then by the
// flattened strategy maps in player order.
inline bool bijection_maps_less(const GameBijection& a,
                                const GameBijection& b) {
  if (a.player_map() != b.player_map()) {
    return a.player_map() < b.player_map();
  }
  return a.strategy_maps() < b.strategy_maps();
}

inline GameBijection identity_bijection(GamePtr game) {
  if (!game) throw std::invalid_argument("identity requires a game");
  const int n = game->num_players();
  std::vector<int> players(n);
  std::vector<std::vector<int>> strategies(n);
  for (int i = 0; i < n; ++i) {
    players[i] = i;
    strategies[i].resize(game->num_strategies(i));
    for (int x = 0; x < game->num_strategies(i); ++x) strategies[i][x] = x;
  }
  GamePtr target = game;
  return GameBijection(std::move(game), std::move(target),
                       std::move(players), std::move(strategies));
}

// (g.s) for a pure profile s of the source game.
inline PureProfile act_on_profile(const GameBijection& g,
                                  const PureProfile& s) {
  g.source()->check_profile(s);
  PureProfile t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    t[g.player_map()[i]] = g.strategy_maps()[i][s[i]];
  }
  return t;
}

// (g.sigma): the image player's probability for the image strategy equals
// the source player's probability for the source strategy.
inline MixedProfile act_on_mixed(const GameBijection& g,
                                 const MixedProfile& sigma) {
  check_mixed_profile(*g.source(), sigma);
  MixedProfile out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const int j = g.player_map()[i];
    out[j].assign(sigma[i].size(), Rational(0));
    for (std::size_t x = 0; x < sigma[i].size(); ++x) {
      out[j][g.strategy_maps()[i][x]] = sigma[i][x];
    }
  }
  return out;
}

// h after g.  Defined only when g's target is (structurally) h's source.
inline GameBijection compose(const GameBijection& h, const GameBijection& g) {
  if (*g.target() != *h.source()) {
    throw std::invalid_argument(
        "composition requires the first bijection's target to equal the "
        "second's source");
  }
  const int n = g.source()->num_players();
  std::vector<int> players(n);
  std::vector<std::vector<int>> strategies(n);
  for (int i = 0; i < n; ++i) {
    const int mid = g.player_map()[i];
    players[i] = h.player_map()[mid];
    const auto& first = g.strategy_maps()[i];
    const auto& second = h.strategy_maps()[mid];
    strategies[i].resize(first.size());
    for (std::size_t x = 0; x < first.size(); ++x) {
      strategies[i][x] = second[first[x]];
    }
  }
  return GameBijection(g.source(), h.target(), std::move(players),
                       std::move(strategies));
}

inline GameBijection invert(const GameBijection& g) {
  const int n = g.source()->num_players();
  std::vector<int> players(n);
  std::vector<std::vector<int>> strategies(n);
  for (int i = 0; i < n; ++i) {
    const int j = g.player_map()[i];
    players[j] = i;
    const auto& forward = g.strategy_maps()[i];
    strategies[j].resize(forward.size());
    for (std::size_t x = 0; x < forward.size(); ++x) {
      strategies[j][forward[x]] = static_cast<int>(x);
    }
  }
  return GameBijection(g.target(), g.source(), std::move(players),
                       std::move(strategies));
}

// The target-side game obtained by pushing a source game's payoffs through
// explicit maps, so that those maps become a strict isomorphism onto the
// result by construction.
inline Game transport_game(
    const Game& source, const std::vector<int>& player_map,
    const std::vector<std::vector<int>>& strategy_maps,
    std::vector<std::string> target_players,
    std::vector<std::vector<std::string>> target_strategies) {
  const int n = source.num_players();
  if (!detail::is_permutation_vector(player_map, n)) {
    throw std::invalid_argument("player map is not a permutation");
  }
  if (strategy_maps.size() != static_cast<std::size_t>(n) ||
      target_strategies.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("maps do not match the player count");
  }
  for (int i = 0; i < n; ++i) {
    const int d = source.num_strategies(i);
    if (target_strategies[player_map[i]].size() !=
            static_cast<std::size_t>(d) ||
        !detail::is_permutation_vector(strategy_maps[i], d)) {
      throw std::invalid_argument("strategy map for player \"" +
                                  source.players()[i] +
                                  "\" is not a bijection");
    }
  }
  std::vector<std::size_t> strides(n, 1);
  for (int i = n - 2; i >= 0; --i) {
    strides[i] = strides[i + 1] * target_strategies[i + 1].size();
  }
  std::vector<std::vector<Rational>> tables(
      n, std::vector<Rational>(source.table_size(), Rational(0)));
  const std::size_t table = source.table_size();
  for (std::size_t index = 0; index < table; ++index) {
    PureProfile s = source.profile_at(index);
    std::size_t image = 0;
    for (int i = 0; i < n; ++i) {
      image += static_cast<std::size_t>(strategy_maps[i][s[i]]) *
               strides[player_map[i]];
    }
    for (int i = 0; i < n; ++i) {
      tables[player_map[i]][image] = source.payoff_at(i, index);
    }
  }
  return Game(std::move(target_players), std::move(target_strategies),
              std::move(tables));
}

// Copy of a game with the strategy names replaced (payoffs untouched).
inline Game with_strategy_names(
    const Game& g, std::vector<std::vector<std::string>> strategies) {
  if (strategies.size() != static_cast<std::size_t>(g.num_players())) {
    throw std::invalid_argument(
        "strategy lists do not match the player count");
  }
  for (int i = 0; i < g.num_players(); ++i) {
    if (strategies[i].size() !=
        static_cast<std::size_t>(g.num_strategies(i))) {
      throw std::invalid_argument("renaming changed a strategy count");
    }
  }
  std::vector<std::vector<Rational>> tables;
  for (int i = 0; i < g.num_players(); ++i) {
    tables.push_back(g.payoff_table(i));
  }
  return Game(g.players(), std::move(strategies), std::move(tables),
              g.title());
}

// A matching of strategies across players: a partition of all strategies
// into tuples containing exactly one strategy of each player.  Requires
// every player to have the same number of strategies.  Tuples are kept in
// canonical order: tuple k contains the first player's k-th strategy.
class Matching {
 public:
  Matching(const Game& game, std::vector<PureProfile> tuples)
      : tuples_(std::move(tuples)) {
    const int n = game.num_players();
    const int d = game.num_strategies(0);
    for (int i = 1; i < n; ++i) {
      if (game.num_strategies(i) != d) {
        throw std::invalid_argument(
            "a matching requires equal strategy counts");
      }
    }
    if (tuples_.size() != static_cast<std::size_t>(d)) {
      throw std::invalid_argument(
          "a matching needs exactly one tuple per strategy");
    }
    position_.assign(n, std::vector<int>(d, -1));
    for (const PureProfile& tuple : tuples_) game.check_profile(tuple);
    std::sort(tuples_.begin(), tuples_.end(),
              [](const PureProfile& a, const PureProfile& b) {
                return a[0] < b[0];
              });
    for (std::size_t k = 0; k < tuples_.size(); ++k) {
      for (int i = 0; i < n; ++i) {
        if (position_[i][tuples_[k][i]] != -1) {
          throw std::invalid_argument(
              "a matching may use each strategy only once");
        }
        position_[i][tuples_[k][i]] = static_cast<int>(k);
      }
    }
  }

  const std::vector<PureProfile>& tuples() const { return tuples_; }
  int num_players() const { return static_cast<int>(position_.size()); }
  int num_strategies() const { return static_cast<int>(tuples_.size()); }

  // M_ij: the strategy of player j matched with the given strategy of
  // player i.
  int induced_map(int from_player, int to_player, int strategy) const {
    return tuples_[position_[from_player][strategy]][to_player];
  }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.tuples_ == b.tuples_;
  }
  friend bool operator!=(const Matching& a, const Matching& b) {
    return !(a == b);
  }

 private:
  std::vector<PureProfile> tuples_;
  std::vector<std::vector<int>> position_;  // position_[i][x] = tuple of x
};

// The matching that pairs equally named strategies across players.
// Requires every player to have the same strategy names (in any order).
inline Matching diagonal_matching(const Game& g) {
  const int n = g.num_players();
  std::vector<std::string> base = g.strategies(0);
  std::sort(base.begin(), base.end());
  for (int i = 1; i < n; ++i) {
    std::vector<std::string> other = g.strategies(i);
    std::sort(other.begin(), other.end());
    if (other != base) {
      throw std::invalid_argument(
          "a diagonal matching requires identical strategy names for every "
          "player");
    }
  }
  std::vector<PureProfile> tuples;
  for (const std::string& name : g.strategies(0)) {
    PureProfile tuple(n);
    for (int i = 0; i < n; ++i) tuple[i] = g.strategy_index(i, name);
    tuples.push_back(std::move(tuple));
  }
  return Matching(g, std::move(tuples));
}

// The bijection M_pi determined by a matching and a player permutation:
// player i goes to pi(i), and each strategy goes to its matched partner on
// pi(i)'s side.
inline GameBijection induced_bijection(const Matching& m,
                                       const std::vector<int>& pi,
                                       const GamePtr& game) {
  if (!game) throw std::invalid_argument("induced bijection requires a game");
  const int n = game->num_players();
  if (m.num_players() != n || m.num_strategies() != game->num_strategies(0)) {
    throw std::invalid_argument("matching does not fit the game");
  }
  if (!detail::is_permutation_vector(pi, n)) {
    throw std::invalid_argument("player map is not a permutation");
  }
  std::vector<std::vector<int>> strategies(n);
  for (int i = 0; i < n; ++i) {
    const int d = game->num_strategies(i);
    strategies[i].resize(d);
    for (int x = 0; x < d; ++x) {
      strategies[i][x] = m.induced_map(i, pi[i], x);
    }
  }
  return GameBijection(game, game, pi, std::move(strategies));
}

// Every permutation of {0, ..., n-1}, in lexicographic order.
inline std::vector<std::vector<int>> all_player_permutations(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> result;
  do {
    result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

// Visits matchings of g in canonical order (tuple k uses the first
// player's k-th strategy; the other components are chosen in ascending
// order by backtracking).  When equal_utility_only is set, only matchings
// whose every tuple gives all players the same utility are visited.  The
// visitor returns false to stop early; for_each_matching returns false if
// a visitor stopped it.
template <typename Visitor>
bool for_each_matching(const Game& g, bool equal_utility_only,
                       Visitor&& visit) {
  const int n = g.num_players();
  const int d = g.num_strategies(0);
  for (int i = 1; i < n; ++i) {
    if (g.num_strategies(i) != d) return true;  // no matchings exist
  }
  std::vector<std::vector<char>> used(n, std::vector<char>(d, 0));
  std::vector<PureProfile> tuples(d, PureProfile(n));

  // Chooses the strategy of player `i` in tuple `k`.
  auto solve = [&](auto&& self, int k, int i) -> bool {
    if (k == d) {
      return visit(Matching(g, tuples));
    }
    if (i == n) {
      if (equal_utility_only) {
        const Rational& first = g.payoff(0, tuples[k]);
        for (int j = 1; j < n; ++j) {
          if (g.payoff(j, tuples[k]) != first) return true;
        }
      }
      return self(self, k + 1, 1);
    }
    for (int x = 0; x < d; ++x) {
      if (used[i][x]) continue;
      used[i][x] = 1;
      tuples[k][i] = x;
      const bool keep_going = self(self, k, i + 1);
      used[i][x] = 0;
      if (!keep_going) return false;
    }
    return true;
  };

  for (int k = 0; k < d; ++k) tuples[k][0] = k;
  return solve(solve, 0, 1);
}

// All matchings of g in canonical order, optionally restricted to those
// whose tuples give every player the same utility.
inline std::vector<Matching> enumerate_matchings(const Game& g,
                                                 bool equal_utility_only) {
  std::vector<Matching> result;
  for_each_matching(g, equal_utility_only, [&](Matching m) {
    result.push_back(std::move(m));
    return true;
  });
  return result;
}

}  // namespace gameforge
