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
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gameforge/bijection.hpp"
#include "gameforge/game.hpp"
#include "gameforge/isomorphism.hpp"

namespace gameforge {

// A verified group of automorphisms of one game.  Construction checks
// that every element is a strict automorphism and that the set contains
// the identity and is closed under composition and inverses; elements are
// kept in canonical order.
class SymmetryGroup {
 public:
  SymmetryGroup(GamePtr game, std::vector<GameBijection> elements)
      : game_(std::move(game)), elements_(std::move(elements)) {
    if (!game_) throw std::invalid_argument("group requires a game");
    for (const GameBijection& g : elements_) {
      if (*g.source() != *game_ || *g.target() != *game_) {
        throw std::invalid_argument(
            "group elements must be self-bijections of the same game");
      }
      if (!verify_strict(g)) {
        throw std::invalid_argument(
            "group element is not an automorphism");
      }
    }
    std::sort(elements_.begin(), elements_.end(), bijection_maps_less);
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
    std::set<std::vector<int>> keys;
    for (const GameBijection& g : elements_) keys.insert(encode(g));
    if (!keys.count(encode(identity_bijection(game_)))) {
      throw std::invalid_argument("group is missing the identity");
    }
    for (const GameBijection& g : elements_) {
      if (!keys.count(encode(invert(g)))) {
        throw std::invalid_argument("group is not closed under inverses");
      }
    }
    // Closure under composition.  Multiplying all pairs is quadratic in
    // the order, so instead grow the subgroup generated by an incremental
    // generating subset (each new generator at least doubles it) and check
    // that it never leaves the supplied set: the generated subgroup then
    // contains every element, and equal key counts force equality.
    std::set<std::vector<int>> generated;
    generated.insert(encode(identity_bijection(game_)));
    std::vector<GameBijection> generators;
    for (const GameBijection& g : elements_) {
      if (generated.count(encode(g))) continue;
      generators.push_back(g);
      std::vector<GameBijection> frontier;
      for (const GameBijection& h : elements_) {
        if (generated.count(encode(h))) frontier.push_back(h);
      }
      generated.insert(encode(g));
      frontier.push_back(g);
      while (!frontier.empty()) {
        std::vector<GameBijection> next;
        for (const GameBijection& x : frontier) {
          for (const GameBijection& gen : generators) {
            GameBijection product = compose(gen, x);
            std::vector<int> key = encode(product);
            if (!keys.count(key)) {
              throw std::invalid_argument(
                  "group is not closed under composition");
            }
            if (generated.insert(std::move(key)).second) {
              next.push_back(std::move(product));
            }
          }
        }
        frontier = std::move(next);
      }
    }
    if (generated.size() != keys.size()) {
      throw std::invalid_argument("group is not closed under composition");
    }
  }

  const GamePtr& game() const { return game_; }
  const std::vector<GameBijection>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  static std::vector<int> encode(const GameBijection& g) {
    std::vector<int> key = g.player_map();
    for (const auto& row : g.strategy_maps()) {
      key.insert(key.end(), row.begin(), row.end());
    }
    return key;
  }

 private:
  GamePtr game_;
  std::vector<GameBijection> elements_;
};

// The full strict automorphism group of a game.
inline SymmetryGroup automorphism_group(const GamePtr& g) {
  return SymmetryGroup(g, search_isomorphisms(g, g, IsoMode::kStrict));
}

// The distinct player permutations realized by the group, sorted.
inline std::vector<std::vector<int>> player_projection(
    const SymmetryGroup& group) {
  std::set<std::vector<int>> perms;
  for (const GameBijection& g : group.elements()) {
    perms.insert(g.player_map());
  }
  return std::vector<std::vector<int>>(perms.begin(), perms.end());
}

// True when the projected player permutations act transitively on the
// players: a game with this property is symmetric.
inline bool is_player_transitive(const SymmetryGroup& group) {
  const int n = group.game()->num_players();
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const GameBijection& g : group.elements()) {
      for (int i = 0; i < n; ++i) {
        if (reached[i] && !reached[g.player_map()[i]]) {
          reached[g.player_map()[i]] = 1;
          grew = true;
        }
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(),
                     [](char c) { return c != 0; });
}

// True when the projection is all of S_N: a game with this property is
// fully symmetric.
inline bool is_player_n_transitive(const SymmetryGroup& group) {
  const int n = group.game()->num_players();
  std::size_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  return player_projection(group).size() == factorial;
}

// The subgroup fixing one player.
inline SymmetryGroup stabilizer(const SymmetryGroup& group, int player) {
  group.game()->check_player(player);
  std::vector<GameBijection> kept;
  for (const GameBijection& g : group.elements()) {
    if (g.player_map()[player] == player) kept.push_back(g);
  }
  return SymmetryGroup(group.game(), std::move(kept));
}

// True when every element's strategy maps are identity relabelings, i.e.
// the k-th strategy of each player always goes to the k-th strategy of
// the image player.
inline bool is_strategy_trivial(const SymmetryGroup& group) {
  for (const GameBijection& g : group.elements()) {
    for (const auto& row : g.strategy_maps()) {
      for (std::size_t x = 0; x < row.size(); ++x) {
        if (row[x] != static_cast<int>(x)) return false;
      }
    }
  }
  return true;
}

// Size caps for the matching searches, which enumerate (d!)^(n-1)
// candidate matchings.
struct SearchLimits {
  int max_players = 6;
  int max_strategies = 4;
};

// Parses the "players=<n>,strategies=<d>" limit format.
inline SearchLimits parse_search_limits(const std::string& text) {
  SearchLimits limits;
  bool have_players = false;
  bool have_strategies = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string field = text.substr(start, comma - start);
    const std::size_t eq = field.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(
          "malformed limits \"" + text +
          "\"; expected players=<n>,strategies=<d>");
    }
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (value.empty() ||
        !std::all_of(value.begin(), value.end(), detail::is_digit)) {
      throw std::invalid_argument("malformed limit value \"" + value + "\"");
    }
    const int parsed = std::stoi(value);
    if (parsed < 1) {
      throw std::invalid_argument("limits must be positive");
    }
    if (key == "players" && !have_players) {
      limits.max_players = parsed;
      have_players = true;
    } else if (key == "strategies" && !have_strategies) {
      limits.max_strategies = parsed;
      have_strategies = true;
    } else {
      throw std::invalid_argument("unknown or repeated limit key \"" + key +
                                  "\"");
    }
    start = comma + 1;
    if (comma == text.size()) break;
  }
  if (!have_players || !have_strategies) {
    throw std::invalid_argument(
        "malformed limits \"" + text +
        "\"; expected players=<n>,strategies=<d>");
  }
  return limits;
}

namespace detail {

inline void check_matching_limits(const Game& g, const SearchLimits& limits) {
  const int n = g.num_players();
  int d = 0;
  for (int i = 0; i < n; ++i) d = std::max(d, g.num_strategies(i));
  if (n > limits.max_players || d > limits.max_strategies) {
    throw std::invalid_argument(
        "matching search limit exceeded: game has " + std::to_string(n) +
        " players and up to " + std::to_string(d) +
        " strategies, limits allow players=" +
        std::to_string(limits.max_players) +
        ",strategies=" + std::to_string(limits.max_strategies));
  }
}

inline bool equal_strategy_counts(const Game& g) {
  for (int i = 1; i < g.num_players(); ++i) {
    if (g.num_strategies(i) != g.num_strategies(0)) return false;
  }
  return true;
}

inline bool shared_strategy_names(const Game& g) {
  std::vector<std::string> base = g.strategies(0);
  std::sort(base.begin(), base.end());
  for (int i = 1; i < g.num_players(); ++i) {
    std::vector<std::string> other = g.strategies(i);
    std::sort(other.begin(), other.end());
    if (other != base) return false;
  }
  return true;
}

// Every player transposition induces an automorphism through the given
// matching.  Transpositions generate S_N, and the permutations a matching
// turns into automorphisms form a subgroup, so this already covers every
// permutation.
inline bool matching_gives_all_transpositions(const Matching& m,
                                              const GamePtr& game) {
  const int n = game->num_players();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> pi(n);
      for (int k = 0; k < n; ++k) pi[k] = k;
      std::swap(pi[i], pi[j]);
      if (!verify_strict(induced_bijection(m, pi, game))) return false;
    }
  }
  return true;
}

// Orbit of player 0 under a set of player permutations covers everyone.
inline bool perms_transitive(const std::vector<std::vector<int>>& perms,
                             int n) {
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& pi : perms) {
      for (int i = 0; i < n; ++i) {
        if (reached[i] && !reached[pi[i]]) {
          reached[pi[i]] = 1;
          grew = true;
        }
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(),
                     [](char c) { return c != 0; });
}

}  // namespace detail

// A matching together with the player permutations it turns into
// automorphisms.  When `standard` is set, that group acts transitively on
// the players, which is exactly the standard-symmetry condition.
struct StandardSymmetryWitness {
  bool standard = false;
  std::optional<Matching> matching;
  std::vector<std::vector<int>> player_group;
};

// Searches for a matching whose induced automorphisms form a
// player-transitive group.  Only matchings whose tuples give every player
// equal utility can qualify, so only those are enumerated.
inline StandardSymmetryWitness standard_symmetric_witness(
    const GamePtr& game, const SearchLimits& limits = {}) {
  if (!game) throw std::invalid_argument("witness search requires a game");
  StandardSymmetryWitness witness;
  if (!detail::equal_strategy_counts(*game)) return witness;
  detail::check_matching_limits(*game, limits);
  const auto perms = all_player_permutations(game->num_players());
  for_each_matching(*game, /*equal_utility_only=*/true, [&](Matching m) {
    std::vector<std::vector<int>> subgroup;
    for (const auto& pi : perms) {
      if (verify_strict(induced_bijection(m, pi, game))) {
        subgroup.push_back(pi);
      }
    }
    if (detail::perms_transitive(subgroup, game->num_players())) {
      witness.standard = true;
      witness.matching = std::move(m);
      witness.player_group = std::move(subgroup);
      return false;  // stop at the first witness
    }
    return true;
  });
  return witness;
}

// Searches for a matching that turns every transposition (hence all of
// S_N) into an automorphism.  After reordering strategies along such a
// matching, the induced copy of S_N is a strategy-trivial n-transitive
// subgroup of the automorphism group.
inline bool has_n_transitive_strategy_trivial_group(
    const GamePtr& game, const SearchLimits& limits = {}) {
  if (!game) throw std::invalid_argument("witness search requires a game");
  if (!detail::equal_strategy_counts(*game)) return false;
  detail::check_matching_limits(*game, limits);
  bool found = false;
  for_each_matching(*game, /*equal_utility_only=*/true, [&](const Matching& m) {
    found = detail::matching_gives_all_transpositions(m, game);
    return !found;
  });
  return found;
}

// True when the matching of equally named strategies turns every player
// transposition into an automorphism.  This is the classical
// von-Neumann-Morgenstern notion of a symmetric game; it requires all
// players to share one strategy-name set.
inline bool is_vnm_symmetric(const Game& g) {
  if (!detail::shared_strategy_names(g)) return false;
  GamePtr shared = std::make_shared<const Game>(g);
  return detail::matching_gives_all_transpositions(diagonal_matching(g),
                                                   shared);
}

// The literal textbook condition sometimes quoted for symmetric games:
// u_i(s) = u_{pi(i)}(t) for every permutation pi, where t_k = s_{pi(k)}.
// Stronger than the von-Neumann-Morgenstern condition for three or more
// players; the two agree for two players.
inline bool is_dm_symmetric(const Game& g) {
  const int n = g.num_players();
  if (!detail::shared_strategy_names(g)) return false;
  // translate[j][k][x]: the strategy of player k named like strategy x of
  // player j.
  std::vector<std::vector<std::vector<int>>> translate(
      n, std::vector<std::vector<int>>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      translate[j][k].resize(g.num_strategies(j));
      for (int x = 0; x < g.num_strategies(j); ++x) {
        translate[j][k][x] = g.strategy_index(k, g.strategies(j)[x]);
      }
    }
  }
  const std::size_t table = g.table_size();
  for (const auto& pi : all_player_permutations(n)) {
    for (std::size_t index = 0; index < table; ++index) {
      PureProfile s = g.profile_at(index);
      PureProfile t(n);
      for (int k = 0; k < n; ++k) t[k] = translate[pi[k]][k][s[pi[k]]];
      for (int i = 0; i < n; ++i) {
        if (g.payoff_at(i, index) != g.payoff(pi[i], t)) return false;
      }
    }
  }
  return true;
}

// The four symmetry classes of symmetric games, plus "not symmetric".
enum class SymmetryClass {
  kNotSymmetric,
  kNonFullyNonStandard,
  kFullyNonStandard,
  kNonFullyStandard,
  kFullyStandard,
};

inline std::string to_string(SymmetryClass label) {
  switch (label) {
    case SymmetryClass::kNotSymmetric:
      return "not symmetric";
    case SymmetryClass::kNonFullyNonStandard:
      return "non-fully non-standard symmetric";
    case SymmetryClass::kFullyNonStandard:
      return "fully non-standard symmetric";
    case SymmetryClass::kNonFullyStandard:
      return "non-fully standard symmetric";
    case SymmetryClass::kFullyStandard:
      return "fully standard symmetric";
  }
  throw std::invalid_argument("unknown symmetry class");
}

struct SymmetryReport {
  bool symmetric = false;
  bool fully_symmetric = false;
  bool standard_symmetric = false;
  bool vnm_symmetric = false;
  bool dm_symmetric = false;
  bool n_transitive_strategy_trivial = false;
  SymmetryClass label = SymmetryClass::kNotSymmetric;
  std::size_t automorphism_count = 0;
  std::optional<Matching> standard_matching;
  std::vector<std::vector<int>> standard_player_group;
};

// Full symmetry classification of a game, with witnesses.  The matching
// searches run only when they can succeed (player-transitive automorphism
// group and equal strategy counts), and respect the search limits.
inline SymmetryReport classify(const GamePtr& game,
                               const SearchLimits& limits = {}) {
  if (!game) throw std::invalid_argument("classify requires a game");
  SymmetryReport report;
  const SymmetryGroup aut = automorphism_group(game);
  report.automorphism_count = aut.order();
  report.symmetric = is_player_transitive(aut);
  report.fully_symmetric = is_player_n_transitive(aut);
  const bool equal_d = detail::equal_strategy_counts(*game);
  if (report.symmetric && equal_d) {
    StandardSymmetryWitness witness =
        standard_symmetric_witness(game, limits);
    report.standard_symmetric = witness.standard;
    report.standard_matching = std::move(witness.matching);
    report.standard_player_group = std::move(witness.player_group);
  }
  if (report.fully_symmetric && equal_d) {
    report.n_transitive_strategy_trivial =
        has_n_transitive_strategy_trivial_group(game, limits);
  }
  report.vnm_symmetric = is_vnm_symmetric(*game);
  report.dm_symmetric = report.vnm_symmetric && is_dm_symmetric(*game);
  if (!report.symmetric) {
    report.label = SymmetryClass::kNotSymmetric;
  } else if (report.fully_symmetric) {
    report.label = report.standard_symmetric
                       ? SymmetryClass::kFullyStandard
                       : SymmetryClass::kFullyNonStandard;
  } else {
    report.label = report.standard_symmetric
                       ? SymmetryClass::kNonFullyStandard
                       : SymmetryClass::kNonFullyNonStandard;
  }
  // Cross-checks of known implications; failures would mean a bug.
  if (report.standard_symmetric && !report.symmetric) {
    throw std::logic_error("standard symmetry without symmetry");
  }
  if (report.dm_symmetric && !report.vnm_symmetric) {
    throw std::logic_error("dm symmetry without vnm symmetry");
  }
  if (report.vnm_symmetric && !report.n_transitive_strategy_trivial) {
    throw std::logic_error("vnm symmetry without an S_N witness");
  }
  if (report.n_transitive_strategy_trivial &&
      !(report.fully_symmetric && report.standard_symmetric)) {
    throw std::logic_error("an S_N witness implies fully standard");
  }
  return report;
}

// Result of building a symmetric game from generating bijections: the
// generated group's order, the number of (player, profile) orbits, and
// whether the group acts transitively on players.
struct ConstructionResult {
  Game game;
  std::size_t orbit_count = 0;
  std::size_t group_order = 0;
  bool player_transitive = false;
};

namespace detail {

struct BijMaps {
  std::vector<int> players;
  std::vector<std::vector<int>> strategies;

  std::vector<int> key() const {
    std::vector<int> out = players;
    for (const auto& row : strategies) {
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  }
};

inline BijMaps compose_maps(const BijMaps& h, const BijMaps& g) {
  const int n = static_cast<int>(g.players.size());
  BijMaps out;
  out.players.resize(n);
  out.strategies.resize(n);
  for (int i = 0; i < n; ++i) {
    const int mid = g.players[i];
    out.players[i] = h.players[mid];
    out.strategies[i].resize(g.strategies[i].size());
    for (std::size_t x = 0; x < g.strategies[i].size(); ++x) {
      out.strategies[i][x] = h.strategies[mid][g.strategies[i][x]];
    }
  }
  return out;
}

struct OrbitStructure {
  std::vector<std::size_t> orbit_of;  // (player * table + profile) -> orbit
  std::size_t orbit_count = 0;
  std::size_t group_order = 0;
  bool player_transitive = false;
};

// Closes the generators into a group and computes the orbits of the
// group's action on (player, profile) pairs.  Orbits are numbered by
// their smallest pair, profiles in canonical tensor order.
inline OrbitStructure orbit_structure(
    const Game& shape, const std::vector<GameBijection>& generators) {
  const int n = shape.num_players();
  const std::size_t table = shape.table_size();
  std::vector<BijMaps> group;
  std::set<std::vector<int>> seen;
  BijMaps identity;
  identity.players.resize(n);
  identity.strategies.resize(n);
  for (int i = 0; i < n; ++i) {
    identity.players[i] = i;
    identity.strategies[i].resize(shape.num_strategies(i));
    for (int x = 0; x < shape.num_strategies(i); ++x) {
      identity.strategies[i][x] = x;
    }
  }
  group.push_back(identity);
  seen.insert(identity.key());
  std::vector<BijMaps> basis;
  for (const GameBijection& g : generators) {
    if (*g.source() != shape || *g.target() != shape) {
      throw std::invalid_argument(
          "generators must be bijections from the declared shape to "
          "itself");
    }
    BijMaps maps{g.player_map(), g.strategy_maps()};
    basis.push_back(maps);
    if (seen.insert(maps.key()).second) group.push_back(std::move(maps));
  }
  for (std::size_t at = 0; at < group.size(); ++at) {
    for (const BijMaps& g : basis) {
      BijMaps next = compose_maps(g, group[at]);
      if (seen.insert(next.key()).second) group.push_back(std::move(next));
    }
  }

  std::vector<std::size_t> strides(n, 1);
  for (int i = n - 2; i >= 0; --i) {
    strides[i] = strides[i + 1] * shape.num_strategies(i + 1);
  }
  auto act_pair = [&](const BijMaps& g, std::size_t pair) {
    const int player = static_cast<int>(pair / table);
    std::size_t index = pair % table;
    std::size_t image = 0;
    for (int i = 0; i < n; ++i) {
      const int x = static_cast<int>(index / strides[i]);
      index %= strides[i];
      image += static_cast<std::size_t>(g.strategies[i][x]) *
               strides[g.players[i]];
    }
    return static_cast<std::size_t>(g.players[player]) * table + image;
  };

  OrbitStructure out;
  out.group_order = group.size();
  out.orbit_of.assign(static_cast<std::size_t>(n) * table, SIZE_MAX);
  for (std::size_t start = 0; start < out.orbit_of.size(); ++start) {
    if (out.orbit_of[start] != SIZE_MAX) continue;
    const std::size_t orbit = out.orbit_count++;
    std::vector<std::size_t> frontier = {start};
    out.orbit_of[start] = orbit;
    while (!frontier.empty()) {
      const std::size_t pair = frontier.back();
      frontier.pop_back();
      for (const BijMaps& g : group) {
        const std::size_t image = act_pair(g, pair);
        if (out.orbit_of[image] == SIZE_MAX) {
          out.orbit_of[image] = orbit;
          frontier.push_back(image);
        }
      }
    }
  }
  std::vector<std::vector<int>> perms;
  for (const BijMaps& g : group) perms.push_back(g.players);
  out.player_transitive = perms_transitive(perms, n);
  return out;
}

inline ConstructionResult assign_orbit_values(
    const Game& shape, const OrbitStructure& orbits,
    const std::vector<Rational>& values) {
  if (values.size() < orbits.orbit_count) {
    throw std::invalid_argument(
        "too few supplied values: the generators produce " +
        std::to_string(orbits.orbit_count) + " orbits but only " +
        std::to_string(values.size()) + " values were given");
  }
  if (values.size() > orbits.orbit_count) {
    throw std::invalid_argument(
        "too many supplied values: the generators produce " +
        std::to_string(orbits.orbit_count) + " orbits but " +
        std::to_string(values.size()) + " values were given");
  }
  const int n = shape.num_players();
  const std::size_t table = shape.table_size();
  std::vector<std::vector<Rational>> tables(n);
  for (int i = 0; i < n; ++i) {
    tables[i].reserve(table);
    for (std::size_t index = 0; index < table; ++index) {
      tables[i].push_back(
          values[orbits.orbit_of[static_cast<std::size_t>(i) * table +
                                 index]]);
    }
  }
  std::vector<std::vector<std::string>> strategies;
  for (int i = 0; i < n; ++i) strategies.push_back(shape.strategies(i));
  ConstructionResult result{
      Game(shape.players(), std::move(strategies), std::move(tables),
           shape.title()),
      orbits.orbit_count, orbits.group_order, orbits.player_transitive};
  return result;
}

}  // namespace detail

// Builds the symmetric game determined by the generating bijections and
// one payoff value per orbit of (player, profile) pairs.  The k-th value
// is shared by every pair in the k-th orbit (orbits ordered by their
// smallest pair).  The supplied value count must equal the orbit count.
inline ConstructionResult construct_from_generators(
    const Game& shape, const std::vector<GameBijection>& generators,
    const std::vector<Rational>& values) {
  return detail::assign_orbit_values(
      shape, detail::orbit_structure(shape, generators), values);
}

// Seeded variant: orbit values are distinct positive rationals drawn from
// a fixed-width deterministic generator, so the same seed always yields
// the same game on every platform.
inline ConstructionResult construct_from_generators(
    const Game& shape, const std::vector<GameBijection>& generators,
    std::uint64_t seed) {
  detail::OrbitStructure orbits = detail::orbit_structure(shape, generators);
  std::mt19937_64 engine(seed);
  std::set<Rational> used;
  std::vector<Rational> values;
  while (values.size() < orbits.orbit_count) {
    // Modulo draws keep the stream identical across standard libraries.
    const std::uint64_t num = 1 + engine() % 997;
    const std::uint64_t den = 1 + engine() % 9;
    Rational value(num, den);
    if (used.insert(value).second) values.push_back(std::move(value));
  }
  return detail::assign_orbit_values(shape, orbits, values);
}

}  // namespace gameforge
