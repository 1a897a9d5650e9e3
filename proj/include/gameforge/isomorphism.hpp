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
#include <array>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gameforge/bijection.hpp"
#include "gameforge/game.hpp"

namespace gameforge {

// The three notions of "same game", coarsest last: strict isomorphisms
// preserve payoffs exactly, cardinal ones preserve expected-utility order
// (equivalently, payoffs up to positive affine maps), ordinal ones
// preserve preference order over pure profiles.  Every strict isomorphism
// is cardinal, and every cardinal isomorphism is ordinal.
enum class IsoMode { kStrict, kOrdinal, kCardinal };

inline std::string to_string(IsoMode mode) {
  switch (mode) {
    case IsoMode::kStrict:
      return "strict";
    case IsoMode::kOrdinal:
      return "ordinal";
    case IsoMode::kCardinal:
      return "cardinal";
  }
  throw std::invalid_argument("unknown isomorphism mode");
}

inline IsoMode iso_mode_from_string(const std::string& text) {
  if (text == "strict") return IsoMode::kStrict;
  if (text == "ordinal") return IsoMode::kOrdinal;
  if (text == "cardinal") return IsoMode::kCardinal;
  throw std::invalid_argument("unknown isomorphism mode \"" + text + "\"");
}

// Per-player positive affine maps x -> beta * x + gamma witnessing a
// cardinal isomorphism: the image player's payoff at the image profile is
// beta_i * u_i(s) + gamma_i, with every beta_i > 0.
struct AffineWitness {
  std::vector<Rational> beta;
  std::vector<Rational> gamma;
};

// Checks u_i(s) = v_{g(i)}(g.s) for every player and profile.
inline bool verify_strict(const GameBijection& g) {
  const Game& a = *g.source();
  const Game& b = *g.target();
  const int n = a.num_players();
  const std::size_t table = a.table_size();
  for (std::size_t index = 0; index < table; ++index) {
    PureProfile s = a.profile_at(index);
    const std::size_t image = b.profile_index(act_on_profile(g, s));
    for (int i = 0; i < n; ++i) {
      if (a.payoff_at(i, index) != b.payoff_at(g.player_map()[i], image)) {
        return false;
      }
    }
  }
  return true;
}

// Replaces each player's payoffs by their dense ranks 0..k (equal payoffs
// share a rank).  Two games are ordinally isomorphic exactly when their
// rank forms are strictly isomorphic, since dense ranking is the canonical
// representative under surjective order-preserving maps.
inline Game rank_canonical(const Game& g) {
  std::vector<std::vector<Rational>> tables;
  for (int i = 0; i < g.num_players(); ++i) {
    std::vector<Rational> sorted = g.payoff_table(i);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Rational> row;
    row.reserve(g.table_size());
    for (const Rational& value : g.payoff_table(i)) {
      const auto at = std::lower_bound(sorted.begin(), sorted.end(), value);
      row.emplace_back(static_cast<long>(at - sorted.begin()));
    }
    tables.push_back(std::move(row));
  }
  std::vector<std::vector<std::string>> strategies;
  for (int i = 0; i < g.num_players(); ++i) {
    strategies.push_back(g.strategies(i));
  }
  return Game(g.players(), std::move(strategies), std::move(tables));
}

// Rescales each player's payoffs by the positive affine map sending their
// minimum to 0 and maximum to 1 (constant payoffs become all zeros).  Two
// games are cardinally isomorphic exactly when their rescaled forms are
// strictly isomorphic, because that affine map is the unique one with
// this normalization.
inline Game affine_canonical(const Game& g) {
  std::vector<std::vector<Rational>> tables;
  for (int i = 0; i < g.num_players(); ++i) {
    const auto& row = g.payoff_table(i);
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    std::vector<Rational> scaled;
    scaled.reserve(row.size());
    if (*lo == *hi) {
      scaled.assign(row.size(), Rational(0));
    } else {
      const Rational span = *hi - *lo;
      for (const Rational& value : row) {
        scaled.push_back((value - *lo) / span);
      }
    }
    tables.push_back(std::move(scaled));
  }
  std::vector<std::vector<std::string>> strategies;
  for (int i = 0; i < g.num_players(); ++i) {
    strategies.push_back(g.strategies(i));
  }
  return Game(g.players(), std::move(strategies), std::move(tables));
}

namespace detail {

// Rebinds the maps of `g` to structurally transformed copies of its
// endpoint games (same shapes, different payoffs).
inline GameBijection rebind(const GameBijection& g, Game source,
                            Game target) {
  return GameBijection(std::make_shared<const Game>(std::move(source)),
                       std::make_shared<const Game>(std::move(target)),
                       g.player_map(), g.strategy_maps());
}

}  // namespace detail

// Checks that g preserves each player's preference order over pure
// profiles, in both directions.
inline bool verify_ordinal(const GameBijection& g) {
  return verify_strict(
      detail::rebind(g, rank_canonical(*g.source()),
                     rank_canonical(*g.target())));
}

// If g is a cardinal isomorphism, returns the per-player positive affine
// witnesses; otherwise nothing.  The witness for a player with constant
// payoffs is pinned to beta = 1 and gamma = the constant difference.
inline std::optional<AffineWitness> cardinal_witness(const GameBijection& g) {
  if (!verify_strict(detail::rebind(g, affine_canonical(*g.source()),
                                    affine_canonical(*g.target())))) {
    return std::nullopt;
  }
  const Game& a = *g.source();
  const Game& b = *g.target();
  AffineWitness witness;
  for (int i = 0; i < a.num_players(); ++i) {
    const auto& row = a.payoff_table(i);
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    const auto& image_row = b.payoff_table(g.player_map()[i]);
    const auto [ilo, ihi] =
        std::minmax_element(image_row.begin(), image_row.end());
    if (*lo == *hi) {
      witness.beta.emplace_back(1);
      witness.gamma.push_back(*ilo - *lo);
    } else {
      Rational beta = (*ihi - *ilo) / (*hi - *lo);
      witness.beta.push_back(beta);
      witness.gamma.push_back(*ilo - beta * *lo);
    }
  }
  return witness;
}

inline bool verify_cardinal(const GameBijection& g) {
  return cardinal_witness(g).has_value();
}

inline bool verify_isomorphism(const GameBijection& g, IsoMode mode) {
  switch (mode) {
    case IsoMode::kStrict:
      return verify_strict(g);
    case IsoMode::kOrdinal:
      return verify_ordinal(g);
    case IsoMode::kCardinal:
      return verify_cardinal(g);
  }
  throw std::invalid_argument("unknown isomorphism mode");
}

inline constexpr std::size_t kSearchAll =
    std::numeric_limits<std::size_t>::max();

namespace detail {

// Backtracking search for the strict isomorphisms between two games.
// Players are assigned first (pruned by matching sorted payoff tensors),
// then strategies one slot at a time in round-robin player order; every
// payoff cell is checked exactly once, as soon as its last strategy
// component is mapped.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Game& a, const Game& b, std::size_t limit)
      : a_(a), b_(b), limit_(limit), n_(a.num_players()) {}

  struct Maps {
    std::vector<int> player_map;
    std::vector<std::vector<int>> strategy_maps;
  };

  std::vector<Maps> run() {
    if (b_.num_players() != n_) return {};
    prepare();
    pmap_.assign(n_, -1);
    target_used_.assign(n_, 0);
    smap_.resize(n_);
    assigned_.assign(n_, {});
    for (int i = 0; i < n_; ++i) {
      smap_[i].assign(a_.num_strategies(i), -1);
      assigned_[i].reserve(a_.num_strategies(i));
    }
    assign_player(0);
    return std::move(results_);
  }

 private:
  void prepare() {
    sorted_a_.resize(n_);
    sorted_b_.resize(n_);
    slices_a_.resize(n_);
    slices_b_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      sorted_a_[i] = a_.payoff_table(i);
      std::sort(sorted_a_[i].begin(), sorted_a_[i].end());
      sorted_b_[i] = b_.payoff_table(i);
      std::sort(sorted_b_[i].begin(), sorted_b_[i].end());
      slices_a_[i] = slices(a_, i);
      slices_b_[i] = slices(b_, i);
    }
    // Strategy slots in round-robin order, so each player's constraints
    // start binding early.
    int max_d = 0;
    for (int i = 0; i < n_; ++i) max_d = std::max(max_d, a_.num_strategies(i));
    for (int x = 0; x < max_d; ++x) {
      for (int p = 0; p < n_; ++p) {
        if (x < a_.num_strategies(p)) slots_.emplace_back(p, x);
      }
    }
  }

  // Sorted multiset of the player's own payoffs over profiles where they
  // play each fixed strategy; a strategy can only map to one with an
  // identical multiset.
  static std::vector<std::vector<Rational>> slices(const Game& g,
                                                   int player) {
    std::vector<std::vector<Rational>> out(g.num_strategies(player));
    const std::size_t table = g.table_size();
    for (std::size_t index = 0; index < table; ++index) {
      out[g.profile_at(index)[player]].push_back(g.payoff_at(player, index));
    }
    for (auto& slice : out) std::sort(slice.begin(), slice.end());
    return out;
  }

  bool assign_player(int i) {
    if (i == n_) return assign_slot(0);
    for (int j = 0; j < n_; ++j) {
      if (target_used_[j]) continue;
      if (a_.num_strategies(i) != b_.num_strategies(j)) continue;
      if (sorted_a_[i] != sorted_b_[j]) continue;
      pmap_[i] = j;
      target_used_[j] = 1;
      const bool keep_going = assign_player(i + 1);
      target_used_[j] = 0;
      pmap_[i] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  bool assign_slot(std::size_t t) {
    if (t == slots_.size()) {
      results_.push_back(Maps{pmap_, smap_});
      return results_.size() < limit_;
    }
    const auto [p, x] = slots_[t];
    const int j = pmap_[p];
    const int d = b_.num_strategies(j);
    for (int y = 0; y < d; ++y) {
      if (smap_used(p, y)) continue;
      if (slices_a_[p][x] != slices_b_[j][y]) continue;
      smap_[p][x] = y;
      assigned_[p].push_back(x);
      const bool consistent = check_new_cells(p, x);
      bool keep_going = true;
      if (consistent) keep_going = assign_slot(t + 1);
      assigned_[p].pop_back();
      smap_[p][x] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  bool smap_used(int p, int y) const {
    for (int x : assigned_[p]) {
      if (smap_[p][x] == y) return true;
    }
    return false;
  }

  // Verifies every profile whose components are all assigned and whose
  // p-th component is the just-assigned x.
  bool check_new_cells(int p, int x) {
    PureProfile s(n_);
    s[p] = x;
    return cells_recurse(p, 0, s);
  }

  bool cells_recurse(int p, int q, PureProfile& s) {
    if (q == n_) {
      PureProfile t(n_);
      for (int i = 0; i < n_; ++i) t[pmap_[i]] = smap_[i][s[i]];
      const std::size_t from = a_.profile_index(s);
      const std::size_t to = b_.profile_index(t);
      for (int i = 0; i < n_; ++i) {
        if (a_.payoff_at(i, from) != b_.payoff_at(pmap_[i], to)) {
          return false;
        }
      }
      return true;
    }
    if (q == p) return cells_recurse(p, q + 1, s);
    for (int x_q : assigned_[q]) {
      s[q] = x_q;
      if (!cells_recurse(p, q + 1, s)) return false;
    }
    return true;
  }

  const Game& a_;
  const Game& b_;
  std::size_t limit_;
  int n_;
  std::vector<std::vector<Rational>> sorted_a_, sorted_b_;
  std::vector<std::vector<std::vector<Rational>>> slices_a_, slices_b_;
  std::vector<std::pair<int, int>> slots_;
  std::vector<int> pmap_;
  std::vector<char> target_used_;
  std::vector<std::vector<int>> smap_;
  std::vector<std::vector<int>> assigned_;
  std::vector<Maps> results_;
};

}  // namespace detail

// All isomorphisms from g1 to g2 under the given mode (up to `limit` of
// them), in canonical order: lexicographic by player map, then by the
// flattened strategy maps.
inline std::vector<GameBijection> search_isomorphisms(
    const GamePtr& g1, const GamePtr& g2, IsoMode mode,
    std::size_t limit = kSearchAll) {
  if (!g1 || !g2) throw std::invalid_argument("search requires two games");
  if (limit == 0) return {};
  Game left = *g1;
  Game right = *g2;
  if (mode == IsoMode::kOrdinal) {
    left = rank_canonical(left);
    right = rank_canonical(right);
  } else if (mode == IsoMode::kCardinal) {
    left = affine_canonical(left);
    right = affine_canonical(right);
  }
  detail::IsomorphismSearch search(left, right, limit);
  std::vector<GameBijection> result;
  for (auto& maps : search.run()) {
    result.emplace_back(g1, g2, std::move(maps.player_map),
                        std::move(maps.strategy_maps));
  }
  std::sort(result.begin(), result.end(), bijection_maps_less);
  return result;
}

inline bool are_equivalent(const GamePtr& g1, const GamePtr& g2,
                           IsoMode mode) {
  return !search_isomorphisms(g1, g2, mode, 1).empty();
}

// Census of the 2x2 games whose per-player payoffs are a permutation of
// {1, 2, 3, 4}, grouped by ordinal equivalence with player roles kept
// fixed (strategy relabelings only).  That is the notion under which the
// classical census arrives at 144 classes: a game and its player-swapped
// mirror stay distinct; allowing player exchange as well would merge the
// mirror pairs and leave 78.  Representatives are the first member of
// each class in enumeration order (first player's payoff permutation in
// lexicographic order, then the second player's).
struct OrdinalCensus2x2 {
  std::size_t games_enumerated = 0;
  std::size_t class_count = 0;
  std::vector<Game> representatives;
};

inline OrdinalCensus2x2 ordinal_census_2x2() {
  const std::vector<std::string> players = {"1", "2"};
  const std::vector<std::vector<std::string>> strategies = {{"a", "b"},
                                                            {"a", "b"}};
  // Payoffs are 1..4 with no ties, so each tensor is its own rank form
  // and tensor equality after relabeling is ordinal equivalence.
  using Tensor = std::array<int, 4>;
  auto relabel = [](const Tensor& u, int s1swap, int s2swap) {
    Tensor out{};
    for (int s1 = 0; s1 < 2; ++s1) {
      for (int s2 = 0; s2 < 2; ++s2) {
        const int t1 = s1swap ? 1 - s1 : s1;
        const int t2 = s2swap ? 1 - s2 : s2;
        out[t1 * 2 + t2] = u[s1 * 2 + s2];
      }
    }
    return out;
  };
  // Class key: the minimum of the tensor pair over the four strategy
  // relabelings.
  auto class_key = [&](const Tensor& u1, const Tensor& u2) {
    std::vector<int> best;
    for (int s1swap = 0; s1swap < 2; ++s1swap) {
      for (int s2swap = 0; s2swap < 2; ++s2swap) {
        const Tensor v1 = relabel(u1, s1swap, s2swap);
        const Tensor v2 = relabel(u2, s1swap, s2swap);
        std::vector<int> key(v1.begin(), v1.end());
        key.insert(key.end(), v2.begin(), v2.end());
        if (best.empty() || key < best) best = std::move(key);
      }
    }
    return best;
  };

  OrdinalCensus2x2 census;
  std::map<std::vector<int>, std::size_t> class_of;  // key -> rep index
  std::vector<std::pair<Tensor, Tensor>> rep_tensors;
  Tensor u1 = {1, 2, 3, 4};
  do {
    Tensor u2 = {1, 2, 3, 4};
    do {
      ++census.games_enumerated;
      const std::vector<int> key = class_key(u1, u2);
      auto found = class_of.find(key);
      if (found == class_of.end()) {
        std::vector<std::vector<Rational>> tables(2);
        for (int k = 0; k < 4; ++k) {
          tables[0].emplace_back(u1[k]);
          tables[1].emplace_back(u2[k]);
        }
        class_of.emplace(key, census.representatives.size());
        rep_tensors.emplace_back(u1, u2);
        census.representatives.emplace_back(players, strategies,
                                            std::move(tables));
      } else {
        // Confirm the hash bucketing: find the relabeling onto the
        // representative and verify it with the general ordinal checker.
        const auto& [r1, r2] = rep_tensors[found->second];
        bool confirmed = false;
        for (int s1swap = 0; s1swap < 2 && !confirmed; ++s1swap) {
          for (int s2swap = 0; s2swap < 2 && !confirmed; ++s2swap) {
            if (relabel(u1, s1swap, s2swap) != r1 ||
                relabel(u2, s1swap, s2swap) != r2) {
              continue;
            }
            std::vector<std::vector<Rational>> tables(2);
            for (int k = 0; k < 4; ++k) {
              tables[0].emplace_back(u1[k]);
              tables[1].emplace_back(u2[k]);
            }
            GameBijection witness(
                std::make_shared<const Game>(players, strategies,
                                             std::move(tables)),
                std::make_shared<const Game>(
                    census.representatives[found->second]),
                {0, 1},
                {s1swap ? std::vector<int>{1, 0} : std::vector<int>{0, 1},
                 s2swap ? std::vector<int>{1, 0} : std::vector<int>{0, 1}});
            confirmed = verify_ordinal(witness);
          }
        }
        if (!confirmed) {
          throw std::logic_error(
              "census bucketing disagrees with the ordinal checker");
        }
      }
    } while (std::next_permutation(u2.begin(), u2.end()));
  } while (std::next_permutation(u1.begin(), u1.end()));
  census.class_count = census.representatives.size();
  return census;
}

}  // namespace gameforge
