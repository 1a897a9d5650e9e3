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
//
// Randomized and exhaustive property suites tying the algebra together:
// groupoid laws for bijection composition, the strict => cardinal =>
// ordinal inclusion chain, the rank-reduction shortcut against the
// definitional double-loop oracle, transport of equilibria and best
// responses along isomorphisms, and idempotence of the canonical forms.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gameforge/gameforge.hpp"
#include "test_support.hpp"

namespace gameforge {
namespace {

using gftest::load_bijection;
using gftest::load_game;
using gftest::random_game;
using gftest::random_strict_iso;

const std::vector<std::vector<int>> kShapes = {
    {2, 2}, {3, 2}, {2, 3}, {2, 2, 2}, {3, 2, 2}, {2, 3, 2}, {4, 2}, {3, 3}};

const std::vector<std::string> kGameFixtures = {
    "pd_classic.game",
    "pd_a.game",
    "pd_b.game",
    "three_player_intro.game",
    "strict_pair_a.game",
    "strict_pair_b.game",
    "matching_pennies.game",
    "rps.game",
    "vnm_two_player.game",
    "vnm_three_player.game",
    "fully_standard_3p.game",
    "nonfully_standard_3p.game",
    "nonfully_standard_2x2x2.game",
    "nonfully_nonstandard_4p_a.game",
    "nonfully_nonstandard_4p_b.game",
    "fully_nonstandard_4p.game",
};

MixedProfile uniform_profile(const Game& g) {
  MixedProfile sigma(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    sigma[i].assign(g.num_strategies(i),
                    Rational(1, g.num_strategies(i)));
  }
  return sigma;
}

// Rebuilds a game with every payoff passed through `f(player, value)`,
// keeping all names.
Game transformed_game(const Game& g,
                      const std::function<Rational(int, const Rational&)>& f) {
  std::vector<std::vector<std::string>> strategies;
  std::vector<std::vector<Rational>> payoffs(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    strategies.push_back(g.strategies(i));
    payoffs[i].reserve(g.table_size());
    for (const Rational& v : g.payoff_table(i)) payoffs[i].push_back(f(i, v));
  }
  return Game(g.players(), std::move(strategies), std::move(payoffs),
              g.title());
}

// The textbook definition of an ordinal isomorphism, written as the naive
// double loop over ordered pairs of profiles: every within-player payoff
// comparison must be mirrored exactly on the other side.
bool ordinal_by_definition(const GameBijection& g) {
  const Game& u = *g.source();
  const Game& v = *g.target();
  for (int i = 0; i < u.num_players(); ++i) {
    const int j = g.map_player(i);
    for (std::size_t s = 0; s < u.table_size(); ++s) {
      const PureProfile sp = u.profile_at(s);
      const Rational& us = u.payoff_table(i)[s];
      const Rational& vs = utility(v, j, act_on_profile(g, sp));
      for (std::size_t t = 0; t < u.table_size(); ++t) {
        const PureProfile tp = u.profile_at(t);
        const Rational& ut = u.payoff_table(i)[t];
        const Rational& vt = utility(v, j, act_on_profile(g, tp));
        if ((us < ut) != (vs < vt)) return false;
      }
    }
  }
  return true;
}

TEST(PropertiesTest, GroupoidLawsHoldOverRandomComposites) {
  std::mt19937_64 rng(20260823);
  std::size_t composites = 0;
  const auto composed = [&](const GameBijection& h, const GameBijection& g) {
    ++composites;
    return compose(h, g);
  };
  for (int iter = 0; iter < 130; ++iter) {
    const std::vector<int>& shape = kShapes[iter % kShapes.size()];
    const GamePtr a = random_game(rng, shape);
    const auto [b, g1] = random_strict_iso(rng, a, "a" + std::to_string(iter));
    const auto [c, g2] = random_strict_iso(rng, b, "b" + std::to_string(iter));
    const auto [d, g3] = random_strict_iso(rng, c, "c" + std::to_string(iter));
    ASSERT_EQ(d->num_players(), a->num_players());

    // Associativity.
    ASSERT_EQ(composed(g3, composed(g2, g1)), composed(composed(g3, g2), g1));

    // Left and right identities.
    ASSERT_EQ(composed(g1, identity_bijection(a)), g1);
    ASSERT_EQ(composed(identity_bijection(b), g1), g1);

    // Two-sided inverses.
    ASSERT_EQ(composed(invert(g1), g1), identity_bijection(a));
    ASSERT_EQ(composed(g1, invert(g1)), identity_bijection(b));

    // The action is functorial: acting by a composite equals acting twice.
    const GameBijection h = composed(g2, g1);
    for (int k = 0; k < 3; ++k) {
      const PureProfile s = a->profile_at(rng() % a->table_size());
      ASSERT_EQ(act_on_profile(h, s), act_on_profile(g2, act_on_profile(g1, s)));
      ASSERT_EQ(act_on_profile(invert(g1), act_on_profile(g1, s)), s);
    }
    const MixedProfile sigma = uniform_profile(*a);
    ASSERT_EQ(act_on_mixed(h, sigma),
              act_on_mixed(g2, act_on_mixed(g1, sigma)));
  }
  EXPECT_GE(composites, 1000u);
}

TEST(PropertiesTest, IsomorphismModesFormAnInclusionChain) {
  std::mt19937_64 rng(404001);
  std::size_t witnesses = 0;
  for (int iter = 0; iter < 90; ++iter) {
    const std::vector<int>& shape = kShapes[iter % kShapes.size()];
    const GamePtr a = random_game(rng, shape);
    const auto [b, strict] =
        random_strict_iso(rng, a, "s" + std::to_string(iter));

    // A strict isomorphism is also cardinal and ordinal.
    ASSERT_TRUE(verify_strict(strict));
    EXPECT_TRUE(verify_cardinal(strict));
    EXPECT_TRUE(verify_ordinal(strict));
    ++witnesses;

    // Rescaling the target by a positive per-player affine map keeps the
    // same maps cardinal (hence ordinal) but in general not strict.
    const Rational beta(static_cast<long>(rng() % 5) + 1,
                        static_cast<long>(rng() % 3) + 1);
    const Rational gamma(static_cast<long>(rng() % 9) - 4);
    const GamePtr scaled = std::make_shared<const Game>(transformed_game(
        *b, [&](int, const Rational& v) { return beta * v + gamma; }));
    const GameBijection cardinal(a, scaled, strict.player_map(),
                                 strict.strategy_maps());
    ASSERT_TRUE(verify_cardinal(cardinal));
    EXPECT_TRUE(verify_ordinal(cardinal));
    if (beta != 1 || gamma != 0) {
      EXPECT_FALSE(verify_strict(cardinal));
    }
    ++witnesses;

    // A strictly increasing (cubic) transform of the target keeps the maps
    // ordinal; the chain never runs the other way on such witnesses.
    const GamePtr cubed = std::make_shared<const Game>(transformed_game(
        *b, [](int, const Rational& v) { return v * v * v + 5 * v; }));
    const GameBijection ordinal(a, cubed, strict.player_map(),
                                strict.strategy_maps());
    ASSERT_TRUE(verify_ordinal(ordinal));
    if (verify_strict(ordinal)) {
      EXPECT_TRUE(verify_cardinal(ordinal));
    }
    ++witnesses;
  }
  EXPECT_GE(witnesses, 200u);
}

TEST(PropertiesTest, OrdinalReductionMatchesDefinitionOracleOnCensusPairs) {
  const OrdinalCensus2x2 census = ordinal_census_2x2();
  ASSERT_EQ(census.class_count, 144u);
  std::vector<GamePtr> reps;
  reps.reserve(census.representatives.size());
  for (const Game& rep : census.representatives) {
    reps.push_back(std::make_shared<const Game>(rep));
  }

  const std::vector<std::vector<int>> player_maps = {{0, 1}, {1, 0}};
  const std::vector<std::vector<int>> strategy_swaps = {{0, 1}, {1, 0}};
  std::size_t combos = 0;
  std::size_t agreements_true = 0;
  std::size_t agreements_false = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (int k = 0; k < 5; ++k) {
      // Deterministic sample of partner classes, including i itself (k=0).
      const std::size_t j = k == 0 ? i : (i * 37 + k * 11 + 3) % reps.size();
      for (const auto& pmap : player_maps) {
        for (const auto& s1 : strategy_swaps) {
          for (const auto& s2 : strategy_swaps) {
            const GameBijection b(reps[i], reps[j], pmap, {s1, s2});
            const bool fast = verify_ordinal(b);
            const bool slow = ordinal_by_definition(b);
            ASSERT_EQ(fast, slow)
                << "representatives " << i << " and " << j
                << " disagree under player map (" << pmap[0] << pmap[1] << ")";
            ++combos;
            if (fast) ++agreements_true;
            else ++agreements_false;
          }
        }
      }
    }
  }
  EXPECT_GE(combos, 5000u);
  // The identity on a representative is always an ordinal isomorphism, and
  // cross-class pairs supply genuine negatives, so both branches ran.
  EXPECT_GE(agreements_true, census.class_count);
  EXPECT_GT(agreements_false, 0u);
}

// Checks every game-theoretic object transports along a strict
// isomorphism: pure equilibria, best responses, strict dominance, mixed
// equilibria, and expected utilities.
void expect_transport(const GameBijection& g) {
  const Game& u = *g.source();
  const Game& v = *g.target();
  ASSERT_TRUE(verify_strict(g));

  // Pure equilibria map onto pure equilibria, bijectively.
  const std::vector<PureProfile> source_ne = pure_nash_equilibria(u);
  const std::vector<PureProfile> target_ne = pure_nash_equilibria(v);
  std::set<PureProfile> target_set(target_ne.begin(), target_ne.end());
  ASSERT_EQ(source_ne.size(), target_ne.size());
  for (const PureProfile& s : source_ne) {
    EXPECT_TRUE(target_set.count(act_on_profile(g, s)))
        << "equilibrium image is not an equilibrium";
  }

  // Best responses at every profile map to best responses at the image.
  for (std::size_t idx = 0; idx < u.table_size(); ++idx) {
    const PureProfile s = u.profile_at(idx);
    const PureProfile gs = act_on_profile(g, s);
    for (int i = 0; i < u.num_players(); ++i) {
      const int j = g.map_player(i);
      std::vector<int> mapped;
      for (int x : pure_best_responses(u, i, s)) {
        mapped.push_back(g.map_strategy(i, x));
      }
      std::sort(mapped.begin(), mapped.end());
      ASSERT_EQ(mapped, pure_best_responses(v, j, gs));
    }
  }

  // Strict dominance between pure strategies is preserved both ways.
  for (int i = 0; i < u.num_players(); ++i) {
    const int j = g.map_player(i);
    for (int x = 0; x < u.num_strategies(i); ++x) {
      for (int y = 0; y < u.num_strategies(i); ++y) {
        if (x == y) continue;
        ASSERT_EQ(strictly_dominates_pure(u, i, x, y),
                  strictly_dominates_pure(v, j, g.map_strategy(i, x),
                                          g.map_strategy(i, y)));
      }
    }
  }

  // Mixed equilibria and expected utilities transport through the action.
  const MixedProfile sigma = uniform_profile(u);
  const MixedProfile image = act_on_mixed(g, sigma);
  ASSERT_EQ(is_mixed_nash(u, sigma), is_mixed_nash(v, image));
  for (int i = 0; i < u.num_players(); ++i) {
    ASSERT_EQ(expected_utility(u, i, sigma),
              expected_utility(v, g.map_player(i), image));
  }
  for (const PureProfile& s : source_ne) {
    ASSERT_TRUE(is_mixed_nash(v, act_on_mixed(g, point_mass(u, s))));
  }
}

TEST(PropertiesTest, EquilibriaTransportAlongEveryFixtureIsomorphism) {
  // Every automorphism of every fixture game.
  std::size_t checked = 0;
  for (const std::string& name : kGameFixtures) {
    const GamePtr game = load_game(name);
    const SymmetryGroup group = automorphism_group(game);
    for (const GameBijection& g : group.elements()) {
      SCOPED_TRACE(name);
      expect_transport(g);
      ++checked;
    }
  }
  EXPECT_GE(checked, 90u);

  // The cross-game isomorphisms shipped as fixtures.
  const GamePtr pda = load_game("pd_a.game");
  const GamePtr pdb = load_game("pd_b.game");
  const std::vector<GameBijection> isos =
      search_isomorphisms(pda, pdb, IsoMode::kStrict);
  ASSERT_EQ(isos.size(), 2u);
  for (const GameBijection& g : isos) expect_transport(g);

  const GamePtr sa = load_game("strict_pair_a.game");
  const GamePtr sb = load_game("strict_pair_b.game");
  expect_transport(load_bijection("strict_pair.bij", sa, sb));
}

TEST(PropertiesTest, EquilibriaTransportAlongRandomIsomorphisms) {
  std::mt19937_64 rng(9117);
  for (int iter = 0; iter < 24; ++iter) {
    const GamePtr a = random_game(rng, kShapes[iter % kShapes.size()]);
    const auto [b, g] = random_strict_iso(rng, a, "t" + std::to_string(iter));
    ASSERT_EQ(*g.target(), *b);
    expect_transport(g);
  }
}

TEST(PropertiesTest, CanonicalFormsAreIdempotentAndTransformInvariant) {
  std::mt19937_64 rng(555202);
  std::size_t checked = 0;
  for (int iter = 0; iter < 210; ++iter) {
    const std::vector<int>& shape = kShapes[iter % kShapes.size()];
    const Game g = *random_game(rng, shape);

    const Game rank = rank_canonical(g);
    ASSERT_EQ(rank_canonical(rank), rank);
    const Game affine = affine_canonical(g);
    ASSERT_EQ(affine_canonical(affine), affine);

    // Monotone payoff transforms leave the rank form unchanged; affine
    // ones leave the affine form unchanged.
    const Game monotone = transformed_game(
        g, [](int, const Rational& v) { return v * v * v + 2 * v; });
    ASSERT_EQ(rank_canonical(monotone), rank);
    const Rational beta(static_cast<long>(rng() % 6) + 1);
    const Rational gamma(static_cast<long>(rng() % 11) - 5,
                         static_cast<long>(rng() % 4) + 1);
    const Game rescaled = transformed_game(
        g, [&](int, const Rational& v) { return beta * v + gamma; });
    ASSERT_EQ(affine_canonical(rescaled), affine);

    // The affine form is itself rank-preserving, so both reductions agree
    // on ordinal structure.
    ASSERT_EQ(rank_canonical(affine), rank);
    ++checked;
  }
  EXPECT_GE(checked, 200u);
}

TEST(PropertiesTest, SharedNameRenamingLinksVnmToTransitiveTrivialGroups) {
  // Renaming every player's strategies to one shared, index-aligned list
  // makes the diagonal matching the index matching, so the renamed game is
  // VNM-symmetric exactly when the original group contains every player
  // permutation acting trivially on strategy indices.
  const std::vector<std::string> names = {
      "fully_standard_3p.game", "nonfully_standard_3p.game", "rps.game",
      "pd_a.game", "matching_pennies.game", "strict_pair_a.game"};
  for (const std::string& name : names) {
    SCOPED_TRACE(name);
    const GamePtr game = load_game(name);
    std::vector<std::vector<std::string>> shared(game->num_players());
    for (int i = 0; i < game->num_players(); ++i) {
      for (int x = 0; x < game->num_strategies(i); ++x) {
        shared[i].push_back("n" + std::to_string(x));
      }
    }
    const Game renamed = with_strategy_names(*game, shared);
    EXPECT_EQ(is_vnm_symmetric(renamed),
              has_n_transitive_strategy_trivial_group(game));
    // Renaming never changes the classification.
    EXPECT_EQ(classify(std::make_shared<const Game>(renamed)).label,
              classify(game).label);
  }
}

TEST(PropertiesTest, DmSymmetryImpliesVnmSymmetryAcrossCorpus) {
  std::size_t dm_count = 0;
  for (const std::string& name : kGameFixtures) {
    SCOPED_TRACE(name);
    const GamePtr game = load_game(name);
    if (is_dm_symmetric(*game)) {
      ++dm_count;
      EXPECT_TRUE(is_vnm_symmetric(*game));
    }
    if (game->num_players() == 2 && is_vnm_symmetric(*game)) {
      // For two players the two notions coincide.
      EXPECT_TRUE(is_dm_symmetric(*game));
    }
  }
  EXPECT_GE(dm_count, 2u);
}

}  // namespace
}  // namespace gameforge
