#include <algorithm>
#include <functional>

#include "doctest.h"

#include "gridpursuit/cop_strategies.hpp"
#include "gridpursuit/errors.hpp"
#include "gridpursuit/experiments.hpp"
#include "gridpursuit/robber_strategies.hpp"
#include "gridpursuit/verification.hpp"

using namespace gridpursuit;

namespace {

Position pos(std::vector<Coord> coords) { return Position{std::move(coords)}; }

std::vector<CopStrategy*> raw(std::vector<std::unique_ptr<CopStrategy>>& owned) {
  std::vector<CopStrategy*> ptrs;
  for (auto& cop : owned) ptrs.push_back(cop.get());
  return ptrs;
}

GameTrace play(const GridShape& shape, const Configuration& initial,
               std::vector<CopStrategy*>& cops, RobberStrategy& robber,
               std::int64_t cap) {
  return run(initial, robber, cops, shape, cap);
}

// Independent check for the oracle: plain depth-limited recursion over robber
// moves with no memoization, no cycle detection, no shared state. Only viable
// for tiny horizons, which is the point - it shares nothing with the
// implementation under test.
std::int64_t naive_max_survival(const GridShape& shape,
                                const std::vector<CopStrategy*>& cops,
                                const Configuration& config,
                                std::int64_t horizon) {
  if (terminating(config)) return 0;
  if (horizon == 0) return 0;
  std::int64_t best = 0;
  for (const Jump& move : neighbor_jumps(config.robber, shape)) {
    Configuration after = config;
    after.robber = apply_jump(config.robber, move, shape);
    std::int64_t branch;
    if (terminating(after)) {
      branch = 1;
    } else {
      Configuration child = after;
      for (std::size_t i = 0; i < cops.size(); ++i) {
        const auto jump = cops[i]->next(i, after, shape, 0);
        child.cops[i] = apply_jump(after.cops[i], *jump, shape);
      }
      if (terminating(child)) {
        branch = 1;
      } else {
        branch = 1 + naive_max_survival(shape, cops, child, horizon - 1);
      }
    }
    best = std::max(best, branch);
  }
  return std::min(best, horizon);
}

}  // namespace

TEST_CASE("trace invariants hold on engine output") {
  const GridShape shape({5, 5});
  for (std::uint64_t k = 0; k < 40; ++k) {
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
    owned.push_back(std::make_unique<AlgorithmOneCop>(1, shape));
    auto cops = raw(owned);
    GreedyRobber robber(k % 2 == 0 ? GreedyMetric::SumSquaredEuclidean
                                   : GreedyMetric::SumEuclidean);
    const Configuration initial =
        random_initial_configuration(shape, 2, derive_trial_seed(50, k));
    const GameTrace trace = play(shape, initial, cops, robber, 108);
    const ClaimReport report = check_trace_invariants(trace);
    CHECK(report.verdict == Verdict::Holds);
  }
}

TEST_CASE("corrupted traces are caught at the offending tick") {
  const GridShape shape({5, 5});
  std::vector<std::unique_ptr<CopStrategy>> owned;
  owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
  owned.push_back(std::make_unique<AlgorithmOneCop>(1, shape));
  auto cops = raw(owned);
  GreedyRobber robber(GreedyMetric::SumEuclidean);
  const Configuration initial{{pos({0, 0}), pos({4, 4})}, pos({2, 2})};
  const GameTrace trace = play(shape, initial, cops, robber, 108);
  REQUIRE(trace.ticks.size() >= 3);

  SUBCASE("teleported robber: the distance jumps by more than one") {
    GameTrace bad = trace;
    // Shift the robber two nodes in one tick; both the replay and the
    // alternation checks see it.
    bad.ticks[1].after_robber.robber = pos({0, 4});
    bad.ticks[1].after_cops.robber = pos({0, 4});
    const ClaimReport report = check_trace_invariants(bad);
    CHECK(report.verdict == Verdict::Violated);
    CHECK(report.note.find("tick 1") != std::string::npos);
    REQUIRE(report.witness.has_value());
    // The witness is the violating trace itself: re-checking it reproduces
    // the verdict deterministically.
    CHECK(check_trace_invariants(*report.witness).verdict ==
          Verdict::Violated);
  }

  SUBCASE("forged capture flag") {
    GameTrace bad = trace;
    bad.ticks[0].capture = true;
    bad.ticks[0].capture_half = HalfStep::CopMove;
    bad.ticks[0].capturing_cop = 0;
    CHECK(check_trace_invariants(bad).verdict == Verdict::Violated);
  }

  SUBCASE("outcome disagreeing with the final tick") {
    GameTrace bad = trace;
    bad.outcome.robber_jumps += 1;
    CHECK(check_trace_invariants(bad).verdict == Verdict::Violated);
  }
}

TEST_CASE("oracle agrees with the naive search on small cases") {
  SUBCASE("one Algorithm-1 cop on 2x3") {
    const GridShape shape({2, 3});
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
    auto cops = raw(owned);
    AdversarialOracle oracle(shape, cops);
    for (std::uint64_t c = 0; c < 6; ++c) {
      for (std::uint64_t r = 0; r < 6; ++r) {
        const Configuration config{{node_at(c, shape)}, node_at(r, shape)};
        for (std::int64_t horizon : {1, 2, 3, 5, 7}) {
          CHECK(oracle.max_survival(config, horizon) ==
                naive_max_survival(shape, cops, config, horizon));
        }
      }
    }
  }
  SUBCASE("one Algorithm-2 cop on 3x3") {
    const GridShape shape({3, 3});
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(
        std::make_unique<AlgorithmTwoCop>(shape, TieRule::Deterministic, 0, 0));
    auto cops = raw(owned);
    AdversarialOracle oracle(shape, cops);
    for (std::uint64_t c = 0; c < 9; ++c) {
      for (std::uint64_t r = 0; r < 9; ++r) {
        const Configuration config{{node_at(c, shape)}, node_at(r, shape)};
        for (std::int64_t horizon : {1, 3, 6}) {
          CHECK(oracle.max_survival(config, horizon) ==
                naive_max_survival(shape, cops, config, horizon));
        }
      }
    }
  }
}

TEST_CASE("oracle fundamentals") {
  const GridShape shape({3, 3});

  SUBCASE("odd-distance single cop: survival caps at any horizon") {
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
    auto cops = raw(owned);
    const Configuration config{{pos({0, 0})}, pos({1, 0})};
    CHECK(adversarial_survival(shape, cops, config, 1000) == 1000);
    CHECK(adversarial_survival(shape, cops, config, 50) == 50);
  }

  SUBCASE("even-distance Algorithm-2 cop: capture is forced") {
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(
        std::make_unique<AlgorithmTwoCop>(shape, TieRule::Deterministic, 0, 0));
    auto cops = raw(owned);
    const Configuration config{{pos({0, 0})}, pos({2, 0})};
    const std::int64_t survival = adversarial_survival(shape, cops, config, 1000);
    CHECK(survival < 1000);
    CHECK(survival >= 1);
  }

  SUBCASE("terminating initial configuration survives zero jumps") {
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
    auto cops = raw(owned);
    const Configuration config{{pos({1, 1})}, pos({1, 1})};
    CHECK(adversarial_survival(shape, cops, config, 10) == 0);
  }

  SUBCASE("monotone in the horizon") {
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
    owned.push_back(std::make_unique<AlgorithmOneCop>(1, shape));
    auto cops = raw(owned);
    AdversarialOracle oracle(shape, cops);
    const Configuration config{{pos({0, 0}), pos({2, 2})}, pos({1, 1})};
    std::int64_t previous = 0;
    for (std::int64_t horizon = 1; horizon <= 20; ++horizon) {
      const std::int64_t s = oracle.max_survival(config, horizon);
      CHECK(s >= previous);
      previous = s;
    }
  }

  SUBCASE("the best line replays to exactly the claimed survival") {
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
    owned.push_back(std::make_unique<AlgorithmOneCop>(1, shape));
    auto cops = raw(owned);
    AdversarialOracle oracle(shape, cops);
    for (std::uint64_t k = 0; k < 30; ++k) {
      const Configuration config =
          random_initial_configuration(shape, 2, derive_trial_seed(8, k));
      const std::int64_t survival = oracle.max_survival(config, 13);
      ScriptedRobber robber(oracle.best_line(config, 13));
      const GameTrace trace = play(shape, config, cops, robber, 13);
      CHECK(trace.outcome.robber_jumps == survival);
    }
  }

  SUBCASE("node budget is enforced, never silently truncated") {
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
    auto cops = raw(owned);
    AdversarialOracle oracle(shape, cops, /*node_budget=*/3);
    const Configuration config{{pos({0, 0})}, pos({1, 0})};
    CHECK_THROWS_AS(oracle.max_survival(config, 100), OracleInfeasibleError);
  }

  SUBCASE("randomized strategies are rejected by precondition") {
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(std::make_unique<AlgorithmTwoCop>(
        shape, TieRule::SeededRandom, 4, 0));
    auto cops = raw(owned);
    CHECK_THROWS_AS(AdversarialOracle(shape, cops), std::invalid_argument);
  }
}

TEST_CASE("capture-with-n-cops sweeps") {
  // Expected max capture times were computed independently by an exhaustive
  // prototype search and are pinned here as regression values.
  struct Case {
    GridShape shape;
    std::int64_t bound;
    std::int64_t max_time;
  };
  const Case cases[] = {
      {GridShape({2, 2}), 8, 2},
      {GridShape({2, 3}), 10, 3},
      {GridShape({3, 3}), 12, 4},
      {GridShape({2, 2, 2}), 18, 4},
  };
  for (const Case& c : cases) {
    const ClaimReport report = check_theorem2(c.shape);
    CHECK(report.verdict == Verdict::Holds);
    const auto num_nodes = c.shape.num_nodes();
    std::uint64_t expect_configs = num_nodes;
    for (std::size_t i = 0; i < c.shape.n(); ++i) expect_configs *= num_nodes;
    CHECK(report.cases_checked == static_cast<std::int64_t>(expect_configs));
    for (const auto& [key, value] : report.stats) {
      if (key == "bound") CHECK(value == std::to_string(c.bound));
      if (key == "max_capture_time") CHECK(value == std::to_string(c.max_time));
    }
  }
}

TEST_CASE("evasion with too few cops") {
  const ClaimReport report = check_theorem1(GridShape({3, 3}), 1, 300);
  CHECK(report.verdict == Verdict::Holds);
  // 2 * 5 * 4 position pairs have odd distance on 3x3.
  CHECK(report.cases_checked == 40);
  CHECK(report.cases_inapplicable == 41);
  CHECK_THROWS_AS(check_theorem1(GridShape({3, 3}), 2, 10),
                  InvalidDimensionError);
}

TEST_CASE("single-cop even-parity sweeps with the linear-time regression") {
  // T_max values pinned from the independent prototype sweep.
  const ClaimReport base = check_theorem3_and_5(GridShape({4, 4}));
  CHECK(base.verdict == Verdict::Holds);
  std::int64_t c = 0;
  for (const auto& [key, value] : base.stats) {
    if (key == "t_max") CHECK(value == "5");
    if (key == "c") c = std::stoll(value);
  }
  REQUIRE(c >= 1);

  const ClaimReport five = check_theorem3_and_5(GridShape({5, 5}), c);
  CHECK(five.verdict == Verdict::Holds);
  for (const auto& [key, value] : five.stats) {
    if (key == "t_max") CHECK(value == "7");
  }
  CHECK(five.cases_checked == 313);  // even-distance pairs on 5x5

  CHECK_THROWS_AS(check_theorem3_and_5(GridShape({2, 2, 2})),
                  InvalidDimensionError);
}

TEST_CASE("parity fraction enumeration") {
  const auto frac = [](std::int64_t num, std::int64_t den) {
    return std::pair<std::int64_t, std::int64_t>(num, den);
  };
  const auto as_pair = [](const Rational& r) {
    return std::pair<std::int64_t, std::int64_t>(r.num, r.den);
  };
  CHECK(as_pair(enumerate_parity_fraction(GridShape({2, 2}))) == frac(1, 2));
  CHECK(as_pair(enumerate_parity_fraction(GridShape({10, 10}))) == frac(1, 2));
  CHECK(as_pair(enumerate_parity_fraction(GridShape({12, 12}))) == frac(1, 2));
  CHECK(as_pair(enumerate_parity_fraction(GridShape({3, 3}))) == frac(41, 81));
  CHECK(as_pair(enumerate_parity_fraction(GridShape({5, 5}))) ==
        frac(313, 625));
  // Odd dimensions skew the fraction above one half.
  const Rational odd = enumerate_parity_fraction(GridShape({3, 3}));
  CHECK(2 * odd.num > odd.den);
  CHECK_THROWS_AS(enumerate_parity_fraction(GridShape({2, 2, 2})),
                  InvalidDimensionError);
}

TEST_CASE("theorem4 report flags odd-dimension shapes") {
  const ClaimReport odd = check_theorem4(GridShape({3, 3}));
  CHECK(odd.verdict == Verdict::Holds);
  CHECK(odd.note.find("exceeds 1/2") != std::string::npos);

  const ClaimReport even = check_theorem4(GridShape({4, 4}));
  CHECK(even.note.empty());

  const ClaimReport mc = check_theorem4(GridShape({4, 4}), 1500, 1);
  CHECK(mc.verdict == Verdict::Holds);
}

TEST_CASE("favorable-jump budget (lemma 3)") {
  const GridShape shape({3, 3});
  std::vector<std::unique_ptr<CopStrategy>> owned;
  owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
  owned.push_back(std::make_unique<AlgorithmOneCop>(1, shape));
  auto cops = raw(owned);

  SUBCASE("holds on winning-set games for every cop") {
    for (std::uint64_t k = 0; k < 60; ++k) {
      const Configuration initial =
          random_initial_configuration(shape, 2, derive_trial_seed(3, k));
      GreedyRobber robber(GreedyMetric::SumEuclidean);
      const GameTrace trace = play(shape, initial, cops, robber, 20);
      REQUIRE(trace.outcome.captured);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(check_lemma3(trace, i, shape).verdict == Verdict::Holds);
      }
    }
  }

  SUBCASE("axis-0 jumps feed cop 1's favorable budget") {
    // The robber only ever moves along axis 0, each such jump favorable to
    // cop 1 by the rotation lemma; capture must come within sum(d) = 6 of
    // them.
    ScriptedRobber robber({Jump{0, 1}, Jump{0, -1}, Jump{0, 1}, Jump{0, -1},
                           Jump{0, 1}, Jump{0, -1}, Jump{0, 1}, Jump{0, -1}});
    const Configuration initial{{pos({0, 2}), pos({2, 2})}, pos({1, 0})};
    const GameTrace trace = play(shape, initial, cops, robber, 8);
    CHECK(trace.outcome.captured);
    CHECK(trace.outcome.robber_jumps <= 6);
    CHECK(check_lemma3(trace, 1, shape).verdict == Verdict::Holds);
  }

  SUBCASE("a zero-tick capture holds trivially") {
    GreedyRobber robber(GreedyMetric::SumEuclidean);
    const Configuration initial{{pos({1, 1}), pos({0, 0})}, pos({1, 1})};
    const GameTrace trace = play(shape, initial, cops, robber, 8);
    CHECK(trace.ticks.empty());
    CHECK(check_lemma3(trace, 0, shape).verdict == Verdict::Holds);
  }
}

namespace {

// Cop that replays a fixed jump list; lets tests build traces that a real
// strategy would never produce.
class ScriptedCop final : public CopStrategy {
 public:
  explicit ScriptedCop(std::vector<Jump> jumps) : jumps_(std::move(jumps)) {}

  std::optional<Jump> next(std::size_t, const Configuration&, const GridShape&,
                           std::int64_t tick) override {
    return jumps_.at(static_cast<std::size_t>(tick));
  }
  std::string name() const override { return "scripted-cop"; }

 private:
  std::vector<Jump> jumps_;
};

}  // namespace

TEST_CASE("axis-sign stability (lemma 4)") {
  const GridShape shape({5, 5});

  SUBCASE("holds on Algorithm-2 games from even starts") {
    for (std::uint64_t k = 0; k < 200; ++k) {
      const Configuration initial =
          random_initial_configuration(shape, 1, derive_trial_seed(44, k));
      if (manhattan(initial.cops[0], initial.robber) % 2 != 0) continue;
      std::vector<std::unique_ptr<CopStrategy>> owned;
      owned.push_back(std::make_unique<AlgorithmTwoCop>(
          shape, TieRule::Deterministic, 0, 0));
      auto cops = raw(owned);
      GreedyRobber robber(k % 2 == 0 ? GreedyMetric::SumManhattan
                                     : GreedyMetric::SumEuclidean);
      const GameTrace trace = play(shape, initial, cops, robber, 100);
      CHECK(check_lemma4(trace).verdict == Verdict::Holds);
    }
  }

  SUBCASE("odd parity and multi-cop traces are inapplicable") {
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
    auto cops = raw(owned);
    ParityEvaderRobber robber;
    const Configuration initial{{pos({0, 0})}, pos({1, 0})};
    const GameTrace trace = play(shape, initial, cops, robber, 10);
    CHECK(check_lemma4(trace).verdict == Verdict::Inapplicable);
  }

  SUBCASE("a backtracking cop violates the sign claim") {
    // Cop crosses the robber's axis-0 coordinate and returns: sign goes
    // minus, zero, plus. Algorithm 2 can never do this; a scripted cop can.
    std::vector<std::unique_ptr<CopStrategy>> owned;
    owned.push_back(std::make_unique<ScriptedCop>(std::vector<Jump>{
        Jump{0, 1}, Jump{0, 1}, Jump{0, -1}, Jump{0, -1}}));
    auto cops = raw(owned);
    ScriptedRobber robber(
        {Jump{1, 1}, Jump{1, -1}, Jump{1, 1}, Jump{1, -1}});
    const Configuration initial{{pos({1, 0})}, pos({2, 1})};
    const GameTrace trace = play(shape, initial, cops, robber, 4);
    REQUIRE_FALSE(trace.outcome.captured);
    const ClaimReport report = check_lemma4(trace);
    CHECK(report.verdict == Verdict::Violated);
    CHECK(report.note.find("axis 0") != std::string::npos);
  }
}

TEST_CASE("random-game drivers") {
  const GridShape shapes[] = {GridShape({3, 3}), GridShape({4, 4})};
  SUBCASE("trace invariants") {
    const ClaimReport report = check_lemma1_random_games(shapes, 60, 9);
    CHECK(report.verdict == Verdict::Holds);
    CHECK(report.cases_checked == 60);
  }
  SUBCASE("favorable budgets") {
    const ClaimReport report = check_lemma3_random_games(shapes, 40, 9);
    CHECK(report.verdict == Verdict::Holds);
  }
  SUBCASE("sign stability") {
    const GridShape flat[] = {GridShape({4, 4}), GridShape({5, 5})};
    const ClaimReport report = check_lemma4_random_games(flat, 40, 9);
    CHECK(report.verdict == Verdict::Holds);
    CHECK(report.cases_checked + report.cases_inapplicable == 40);
  }
}

TEST_CASE("claim reports format as single lines") {
  ClaimReport report;
  report.claim_id = "theorem2";
  report.scope = "shape=3x3";
  report.verdict = Verdict::Holds;
  report.cases_checked = 729;
  report.add_stat("bound", "12");
  const std::string line = format_claim_report(report);
  CHECK(line ==
        "claim=theorem2 scope=shape=3x3 verdict=holds checked=729 "
        "inapplicable=0 bound=12");
}
