#include <cstdio>
#include <fstream>

#include "doctest.h"

#include "gridpursuit/errors.hpp"
#include "gridpursuit/experiments.hpp"
#include "gridpursuit/robber_strategies.hpp"

using namespace gridpursuit;

namespace {

Position pos(std::vector<Coord> coords) { return Position{std::move(coords)}; }

}  // namespace

TEST_CASE("greedy evaluators maximize over neighbors") {
  const GridShape shape({5, 5});

  SUBCASE("sum of squared Euclidean distances, tie broken by neighbor order") {
    // Single cop (0,0), robber (1,1): scores are 1, 5, 1, 5 in neighbor
    // order, so the first 5 wins: (2,1).
    const Configuration c{{pos({0, 0})}, pos({1, 1})};
    const Jump jump = greedy_next(GreedyMetric::SumSquaredEuclidean, c, shape);
    CHECK(jump == Jump{0, 1});
  }

  SUBCASE("sum of Manhattan distances, four-way tie") {
    // Cops (0,0) and (4,4), robber (1,1): all four candidates score 8, so
    // the first neighbor in order wins: (0,1) via axis 0 downward.
    const Configuration c{{pos({0, 0}), pos({4, 4})}, pos({1, 1})};
    const Jump jump = greedy_next(GreedyMetric::SumManhattan, c, shape);
    CHECK(jump == Jump{0, -1});
  }

  SUBCASE("sum of Euclidean distances prefers the diagonal escape") {
    // Cop (0,0), robber (2,2): sqrt scores favor (3,2)/(2,3) over the
    // closer candidates; the first maximal is (3,2).
    const Configuration c{{pos({0, 0})}, pos({2, 2})};
    const Jump jump = greedy_next(GreedyMetric::SumEuclidean, c, shape);
    CHECK(jump == Jump{0, 1});
  }

  SUBCASE("corner leaves only n candidates, still legal") {
    const Configuration c{{pos({4, 4})}, pos({0, 0})};
    for (GreedyMetric metric :
         {GreedyMetric::SumSquaredEuclidean, GreedyMetric::SumManhattan,
          GreedyMetric::SumEuclidean}) {
      const Jump jump = greedy_next(metric, c, shape);
      CHECK(jump_in_bounds(c.robber, jump, shape));
    }
  }
}

TEST_CASE("greedy legality and determinism under fuzzing") {
  const std::vector<GridShape> shapes = {GridShape({3, 3}), GridShape({6, 4}),
                                         GridShape({2, 2, 2}),
                                         GridShape({4, 3, 2})};
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    const GridShape& shape = shapes[trial % shapes.size()];
    const std::size_t m = 1 + trial % 3;
    const Configuration config = random_initial_configuration(
        shape, m, derive_trial_seed(0xF022, trial));
    for (GreedyMetric metric :
         {GreedyMetric::SumSquaredEuclidean, GreedyMetric::SumManhattan,
          GreedyMetric::SumEuclidean}) {
      const Jump jump = greedy_next(metric, config, shape);
      CHECK(jump_in_bounds(config.robber, jump, shape));
      CHECK(greedy_next(metric, config, shape) == jump);
    }
  }
}

TEST_CASE("parity evader") {
  const GridShape shape({3, 3});

  SUBCASE("picks the max-min-distance safe neighbor, ties by order") {
    // Neighbors of (1,0) are (0,0), (2,0), (1,1); the cop sits on (0,0);
    // both safe candidates are at distance 2, so order gives (2,0).
    const Configuration c{{pos({0, 0})}, pos({1, 0})};
    const Jump jump = parity_evader_next(c, shape);
    CHECK(jump == Jump{0, 1});
  }

  SUBCASE("first-safe mode takes the earliest unoccupied neighbor") {
    const GridShape wide({5, 5});
    // Robber (3,0), cop (0,0): first-safe settles for (2,0); max-min walks
    // away to (4,0).
    const Configuration c{{pos({0, 0})}, pos({3, 0})};
    CHECK(parity_evader_next(c, wide, EvaderMode::FirstSafe) == Jump{0, -1});
    CHECK(parity_evader_next(c, wide, EvaderMode::MaxMinDistance) ==
          Jump{0, 1});
  }

  SUBCASE("too many cops") {
    const Configuration c{{pos({0, 0}), pos({2, 2})}, pos({1, 0})};
    CHECK_THROWS_WITH_AS(parity_evader_next(c, shape),
                         doctest::Contains("fewer cops"),
                         EvaderInapplicableError);
  }

  SUBCASE("even-parity cop is named") {
    const Configuration c{{pos({1, 1})}, pos({1, 1})};
    CHECK_THROWS_WITH_AS(parity_evader_next(c, shape),
                         doctest::Contains("cop 0"), EvaderInapplicableError);
  }

  SUBCASE("never steps onto a cop") {
    const GridShape cube({3, 3, 3});
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
      const Configuration config = random_initial_configuration(
          cube, 2, derive_trial_seed(0xE7A, trial));
      const DistanceReport d = distance_report(config);
      const bool applicable = d.cops[0].parity == 1 && d.cops[1].parity == 1;
      if (!applicable) continue;
      const Jump jump = parity_evader_next(config, cube);
      const Position landed = apply_jump(config.robber, jump, cube);
      for (const Position& cop : config.cops) CHECK_FALSE(cop == landed);
    }
  }
}

TEST_CASE("scripted robber") {
  const std::vector<Jump> script = {Jump{0, 1}, Jump{1, -1}, Jump{0, -1}};
  CHECK(scripted_next(script, 0) == Jump{0, 1});
  CHECK(scripted_next(script, 2) == Jump{0, -1});
  CHECK_THROWS_AS(scripted_next(script, 3), ScriptExhaustedError);
  CHECK_THROWS_AS(scripted_next({}, 0), ScriptExhaustedError);
}

TEST_CASE("robber strategy specs") {
  CHECK(RobberStrategySpec::parse("greedy1").metric ==
        GreedyMetric::SumSquaredEuclidean);
  CHECK(RobberStrategySpec::parse("greedy2").metric ==
        GreedyMetric::SumManhattan);
  CHECK(RobberStrategySpec::parse("greedy3").metric ==
        GreedyMetric::SumEuclidean);
  CHECK(RobberStrategySpec::parse("evader").kind ==
        RobberStrategySpec::Kind::ParityEvader);
  CHECK(RobberStrategySpec::parse("evader:first-safe").evader_mode ==
        EvaderMode::FirstSafe);
  CHECK(RobberStrategySpec::parse("scripted:moves.txt").script_path ==
        "moves.txt");
  CHECK(RobberStrategySpec::parse("interactive").kind ==
        RobberStrategySpec::Kind::Interactive);
  CHECK_THROWS_AS(RobberStrategySpec::parse("greedy4"), InvalidDimensionError);
  CHECK_THROWS_AS(RobberStrategySpec::parse("scripted:"),
                  InvalidDimensionError);
  CHECK(RobberStrategySpec::parse("greedy2").canonical_name() == "greedy2");

  // Interactive needs the play-mode callback.
  CHECK_THROWS_AS(make_robber_strategy(RobberStrategySpec::parse("interactive"),
                                       GridShape({3, 3})),
                  InvalidDimensionError);
}

TEST_CASE("jump scripts load from disk") {
  const GridShape shape({3, 3});
  const std::string path = "test_script_tmp.txt";
  {
    std::ofstream out(path);
    out << "# robber moves\n0:+1\n1:-1\n\n0:-1  \n";
  }
  const std::vector<Jump> script = load_jump_script(path, shape);
  std::remove(path.c_str());
  REQUIRE(script.size() == 3);
  CHECK(script[0] == Jump{0, 1});
  CHECK(script[1] == Jump{1, -1});
  CHECK(script[2] == Jump{0, -1});
  CHECK_THROWS_AS(load_jump_script("no_such_file_here.txt", shape),
                  InvalidDimensionError);
}
