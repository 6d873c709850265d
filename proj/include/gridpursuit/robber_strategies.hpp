#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridpursuit/grid.hpp"
#include "gridpursuit/strategy.hpp"

namespace gridpursuit {

/// The three greedy evaluators: for every in-bounds neighbor of the robber,
/// sum the per-cop term over all cops and move to the first maximizer in
/// neighbor order.
enum class GreedyMetric {
  SumSquaredEuclidean,  // strategy 1
  SumManhattan,         // strategy 2
  SumEuclidean,         // strategy 3
};

Jump greedy_next(GreedyMetric metric, const Configuration& config,
                 const GridShape& shape);

enum class EvaderMode {
  MaxMinDistance,  // among safe neighbors, maximize the closest-cop distance
  FirstSafe,       // the proof's minimal requirement: any unoccupied neighbor
};

/// Theorem-1 evader. Requires fewer cops than dimensions and every cop at odd
/// Manhattan distance; throws EvaderInapplicableError naming the violation
/// otherwise. Safety of the returned jump is guaranteed by counting: the
/// robber has at least n neighbors and there are fewer than n cops.
Jump parity_evader_next(const Configuration& config, const GridShape& shape,
                        EvaderMode mode = EvaderMode::MaxMinDistance);

/// script[tick], or ScriptExhaustedError past the end.
Jump scripted_next(std::span<const Jump> script, std::int64_t tick);

class GreedyRobber final : public RobberStrategy {
 public:
  explicit GreedyRobber(GreedyMetric metric) : metric_(metric) {}

  Jump next(const Configuration& config, const GridShape& shape,
            std::int64_t tick) override;
  std::string name() const override;

 private:
  GreedyMetric metric_;
};

class ParityEvaderRobber final : public RobberStrategy {
 public:
  explicit ParityEvaderRobber(EvaderMode mode = EvaderMode::MaxMinDistance)
      : mode_(mode) {}

  Jump next(const Configuration& config, const GridShape& shape,
            std::int64_t tick) override;
  std::string name() const override;

 private:
  EvaderMode mode_;
};

class ScriptedRobber final : public RobberStrategy {
 public:
  explicit ScriptedRobber(std::vector<Jump> script)
      : script_(std::move(script)) {}

  Jump next(const Configuration& config, const GridShape& shape,
            std::int64_t tick) override;
  std::string name() const override { return "scripted"; }

 private:
  std::vector<Jump> script_;
};

/// Delegates to a blocking callback (the CLI's prompt loop). Single-game,
/// single-task use only.
class InteractiveRobber final : public RobberStrategy {
 public:
  using MoveFn = std::function<Jump(const Configuration&, const GridShape&,
                                    std::int64_t tick)>;

  explicit InteractiveRobber(MoveFn fn) : fn_(std::move(fn)) {}

  Jump next(const Configuration& config, const GridShape& shape,
            std::int64_t tick) override {
    return fn_(config, shape, tick);
  }
  std::string name() const override { return "interactive"; }

 private:
  MoveFn fn_;
};

/// Parsed form of a robber strategy name: "greedy1|greedy2|greedy3",
/// "evader[:first-safe]", "scripted:<file>", "interactive".
struct RobberStrategySpec {
  enum class Kind { Greedy, ParityEvader, Scripted, Interactive };

  Kind kind = Kind::Greedy;
  GreedyMetric metric = GreedyMetric::SumSquaredEuclidean;
  EvaderMode evader_mode = EvaderMode::MaxMinDistance;
  std::string script_path;

  std::string canonical_name() const;

  static RobberStrategySpec parse(std::string_view name);
};

/// Loads a jump script: one "axis:+1" / "axis:-1" token per line, '#' starts
/// a comment.
std::vector<Jump> load_jump_script(const std::string& path,
                                   const GridShape& shape);

/// Instantiates a robber strategy. Interactive specs need `interactive_fn`;
/// scripted specs read their file here.
std::unique_ptr<RobberStrategy> make_robber_strategy(
    const RobberStrategySpec& spec, const GridShape& shape,
    InteractiveRobber::MoveFn interactive_fn = nullptr);

}  // namespace gridpursuit
