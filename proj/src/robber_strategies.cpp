#include "gridpursuit/robber_strategies.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "gridpursuit/errors.hpp"

namespace gridpursuit {

namespace {

using Wide = __int128;  // exact squared-sum scores at any in-scope coordinate

Wide squared_euclidean(const Position& a, const Position& b) {
  Wide total = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const std::int64_t gap =
        static_cast<std::int64_t>(a.coords[i]) - b.coords[i];
    total += static_cast<Wide>(gap) * gap;
  }
  return total;
}

// Relative tolerance for sums of square roots; exact comparison of sums of
// radicals is out of scope. Candidate scores on desk-scale grids are far
// apart relative to this except at true geometric ties.
bool euclid_scores_equal(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  return std::fabs(a - b) <= 1e-12 * scale;
}

template <typename Score, typename Eval, typename Tie>
Jump pick_first_maximal(const std::vector<Jump>& moves,
                        const Configuration& config, const GridShape& shape,
                        Eval eval, Tie scores_equal) {
  std::size_t best = 0;
  Score best_score{};
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const Position candidate = apply_jump(config.robber, moves[k], shape);
    const Score score = eval(candidate);
    if (k == 0 ||
        (score > best_score && !scores_equal(score, best_score))) {
      best = k;
      best_score = score;
    }
  }
  return moves[best];
}

}  // namespace

Jump greedy_next(GreedyMetric metric, const Configuration& config,
                 const GridShape& shape) {
  require_configuration(config, shape);
  const std::vector<Jump> moves = neighbor_jumps(config.robber, shape);

  switch (metric) {
    case GreedyMetric::SumSquaredEuclidean:
      return pick_first_maximal<Wide>(
          moves, config, shape,
          [&](const Position& candidate) {
            Wide total = 0;
            for (const Position& cop : config.cops) {
              total += squared_euclidean(candidate, cop);
            }
            return total;
          },
          [](Wide, Wide) { return false; });
    case GreedyMetric::SumManhattan:
      return pick_first_maximal<std::int64_t>(
          moves, config, shape,
          [&](const Position& candidate) {
            std::int64_t total = 0;
            for (const Position& cop : config.cops) {
              total += manhattan(candidate, cop);
            }
            return total;
          },
          [](std::int64_t, std::int64_t) { return false; });
    case GreedyMetric::SumEuclidean:
      return pick_first_maximal<double>(
          moves, config, shape,
          [&](const Position& candidate) {
            double total = 0;
            for (const Position& cop : config.cops) {
              total += std::sqrt(
                  static_cast<double>(squared_euclidean(candidate, cop)));
            }
            return total;
          },
          euclid_scores_equal);
  }
  throw InternalConsistencyError("unhandled greedy metric");
}

Jump parity_evader_next(const Configuration& config, const GridShape& shape,
                        EvaderMode mode) {
  require_configuration(config, shape);
  if (config.num_cops() >= shape.n()) {
    throw EvaderInapplicableError(
        "parity evader needs fewer cops than dimensions; got " +
        std::to_string(config.num_cops()) + " cops in " +
        std::to_string(shape.n()) + " dimensions");
  }
  const DistanceReport report = distance_report(config);
  for (std::size_t i = 0; i < report.cops.size(); ++i) {
    if (report.cops[i].parity == 0) {
      throw EvaderInapplicableError(
          "parity evader needs every cop at odd Manhattan distance; cop " +
          std::to_string(i) + " is at distance " +
          std::to_string(report.cops[i].total));
    }
  }

  const std::vector<Jump> moves = neighbor_jumps(config.robber, shape);
  const auto occupied = [&](const Position& node) {
    for (const Position& cop : config.cops) {
      if (cop == node) return true;
    }
    return false;
  };

  bool found = false;
  std::size_t best = 0;
  std::int64_t best_closest = -1;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const Position candidate = apply_jump(config.robber, moves[k], shape);
    if (occupied(candidate)) continue;
    if (mode == EvaderMode::FirstSafe) return moves[k];
    std::int64_t closest = std::numeric_limits<std::int64_t>::max();
    for (const Position& cop : config.cops) {
      closest = std::min(closest, manhattan(candidate, cop));
    }
    if (!found || closest > best_closest) {
      found = true;
      best = k;
      best_closest = closest;
    }
  }
  if (!found) {
    // Unreachable: at least n neighbors, fewer than n cops.
    throw InternalConsistencyError("parity evader found no safe neighbor");
  }
  return moves[best];
}

Jump scripted_next(std::span<const Jump> script, std::int64_t tick) {
  if (tick < 0 || static_cast<std::size_t>(tick) >= script.size()) {
    throw ScriptExhaustedError("scripted robber has no jump for tick " +
                               std::to_string(tick) + " (script length " +
                               std::to_string(script.size()) + ")");
  }
  return script[static_cast<std::size_t>(tick)];
}

Jump GreedyRobber::next(const Configuration& config, const GridShape& shape,
                        std::int64_t /*tick*/) {
  return greedy_next(metric_, config, shape);
}

std::string GreedyRobber::name() const {
  switch (metric_) {
    case GreedyMetric::SumSquaredEuclidean: return "greedy1";
    case GreedyMetric::SumManhattan: return "greedy2";
    case GreedyMetric::SumEuclidean: return "greedy3";
  }
  return {};
}

Jump ParityEvaderRobber::next(const Configuration& config,
                              const GridShape& shape, std::int64_t /*tick*/) {
  return parity_evader_next(config, shape, mode_);
}

std::string ParityEvaderRobber::name() const {
  return mode_ == EvaderMode::FirstSafe ? "evader:first-safe" : "evader";
}

Jump ScriptedRobber::next(const Configuration& /*config*/,
                          const GridShape& /*shape*/, std::int64_t tick) {
  return scripted_next(script_, tick);
}

std::string RobberStrategySpec::canonical_name() const {
  switch (kind) {
    case Kind::Greedy:
      switch (metric) {
        case GreedyMetric::SumSquaredEuclidean: return "greedy1";
        case GreedyMetric::SumManhattan: return "greedy2";
        case GreedyMetric::SumEuclidean: return "greedy3";
      }
      return {};
    case Kind::ParityEvader:
      return evader_mode == EvaderMode::FirstSafe ? "evader:first-safe"
                                                  : "evader";
    case Kind::Scripted:
      return "scripted:" + script_path;
    case Kind::Interactive:
      return "interactive";
  }
  return {};
}

RobberStrategySpec RobberStrategySpec::parse(std::string_view name) {
  RobberStrategySpec spec;
  if (name == "greedy1" || name == "greedy2" || name == "greedy3") {
    spec.kind = Kind::Greedy;
    spec.metric = name == "greedy1" ? GreedyMetric::SumSquaredEuclidean
                  : name == "greedy2" ? GreedyMetric::SumManhattan
                                      : GreedyMetric::SumEuclidean;
    return spec;
  }
  if (name == "evader") {
    spec.kind = Kind::ParityEvader;
    return spec;
  }
  if (name == "evader:first-safe") {
    spec.kind = Kind::ParityEvader;
    spec.evader_mode = EvaderMode::FirstSafe;
    return spec;
  }
  if (name.starts_with("scripted:")) {
    spec.kind = Kind::Scripted;
    spec.script_path = std::string(name.substr(9));
    if (spec.script_path.empty()) {
      throw InvalidDimensionError("scripted robber needs a file path");
    }
    return spec;
  }
  if (name == "interactive") {
    spec.kind = Kind::Interactive;
    return spec;
  }
  throw InvalidDimensionError(
      "unknown robber strategy '" + std::string(name) +
      "' (expected greedy1|greedy2|greedy3|evader[:first-safe]|scripted:<file>|interactive)");
}

std::vector<Jump> load_jump_script(const std::string& path,
                                   const GridShape& shape) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidDimensionError("cannot open jump script '" + path + "'");
  }
  std::vector<Jump> script;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::size_t last = line.find_last_not_of(" \t\r");
    script.push_back(parse_jump(
        std::string_view(line).substr(first, last - first + 1), shape));
  }
  return script;
}

std::unique_ptr<RobberStrategy> make_robber_strategy(
    const RobberStrategySpec& spec, const GridShape& shape,
    InteractiveRobber::MoveFn interactive_fn) {
  switch (spec.kind) {
    case RobberStrategySpec::Kind::Greedy:
      return std::make_unique<GreedyRobber>(spec.metric);
    case RobberStrategySpec::Kind::ParityEvader:
      return std::make_unique<ParityEvaderRobber>(spec.evader_mode);
    case RobberStrategySpec::Kind::Scripted:
      return std::make_unique<ScriptedRobber>(
          load_jump_script(spec.script_path, shape));
    case RobberStrategySpec::Kind::Interactive:
      if (!interactive_fn) {
        throw InvalidDimensionError(
            "interactive robber is only available in play mode");
      }
      return std::make_unique<InteractiveRobber>(std::move(interactive_fn));
  }
  throw InternalConsistencyError("unhandled robber strategy kind");
}

}  // namespace gridpursuit
