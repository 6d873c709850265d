#include "gridpursuit/cop_strategies.hpp"

#include <charconv>
#include <cstdlib>

#include "gridpursuit/errors.hpp"

namespace gridpursuit {

std::optional<Jump> algorithm_one_next(int assigned_index, const Position& cop,
                                       const Position& robber_new,
                                       const GridShape& shape) {
  require_position(cop, shape, "cop position");
  require_position(robber_new, shape, "robber position");
  const int n = static_cast<int>(shape.n());
  for (int j = 0; j < n; ++j) {
    const auto axis =
        static_cast<std::size_t>(wrap_index(assigned_index, j, n));
    if (robber_new.coords[axis] == cop.coords[axis]) continue;
    const int dir = robber_new.coords[axis] < cop.coords[axis] ? -1 : +1;
    return Jump{static_cast<int>(axis), dir};
  }
  return std::nullopt;  // j reached n: already on the robber's node
}

std::optional<Jump> algorithm_two_next(const Position& cop,
                                       const Position& robber_new,
                                       const GridShape& shape,
                                       SplitMix64* tie_rng) {
  if (shape.n() != 2) {
    throw InvalidDimensionError("strategy S is defined for two dimensions only");
  }
  require_position(cop, shape, "cop position");
  require_position(robber_new, shape, "robber position");
  const std::int64_t g0 = std::llabs(
      static_cast<std::int64_t>(cop.coords[0]) - robber_new.coords[0]);
  const std::int64_t g1 = std::llabs(
      static_cast<std::int64_t>(cop.coords[1]) - robber_new.coords[1]);
  if (g0 == 0 && g1 == 0) return std::nullopt;

  const auto toward = [&](int axis) {
    return Jump{axis, robber_new.coords[static_cast<std::size_t>(axis)] <
                              cop.coords[static_cast<std::size_t>(axis)]
                          ? -1
                          : +1};
  };
  if (g0 > g1) return toward(0);
  if (g0 < g1) return toward(1);
  // Equal nonzero gaps: "jump to any adjacent node". Both axes differ here,
  // so the deterministic rule resolves to axis 0 toward the robber. Note the
  // tie is unreachable in even-initial-parity games: the gap sum is odd at
  // every cop decision point.
  if (tie_rng == nullptr) {
    if (cop.coords[0] != robber_new.coords[0]) return toward(0);
    return toward(1);
  }
  const std::vector<Jump> moves = neighbor_jumps(cop, shape);
  return moves[static_cast<std::size_t>(tie_rng->next_below(moves.size()))];
}

std::string CopStrategySpec::canonical_name() const {
  switch (kind) {
    case Kind::AlgorithmOne:
      return "alg1:" + std::to_string(assigned_index);
    case Kind::AlgorithmTwoS:
      if (tie_rule == TieRule::SeededRandom) {
        return "alg2s:random-tie:" + std::to_string(tie_seed);
      }
      return "alg2s";
  }
  return {};
}

CopStrategySpec CopStrategySpec::parse(std::string_view name) {
  CopStrategySpec spec;
  if (name.starts_with("alg1:")) {
    const std::string_view arg = name.substr(5);
    int idx = -1;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), idx);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || idx < 0) {
      throw InvalidDimensionError("bad Algorithm-1 index in '" +
                                  std::string(name) + "'");
    }
    spec.kind = Kind::AlgorithmOne;
    spec.assigned_index = idx;
    return spec;
  }
  if (name == "alg2s") {
    spec.kind = Kind::AlgorithmTwoS;
    return spec;
  }
  if (name.starts_with("alg2s:random-tie:")) {
    const std::string_view arg = name.substr(17);
    std::uint64_t seed = 0;
    auto [ptr, ec] =
        std::from_chars(arg.data(), arg.data() + arg.size(), seed);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw InvalidDimensionError("bad tie seed in '" + std::string(name) +
                                  "'");
    }
    spec.kind = Kind::AlgorithmTwoS;
    spec.tie_rule = TieRule::SeededRandom;
    spec.tie_seed = seed;
    return spec;
  }
  throw InvalidDimensionError("unknown cop strategy '" + std::string(name) +
                              "' (expected alg1:<i> or alg2s[:random-tie:<seed>])");
}

std::vector<CopStrategySpec> parse_cop_specs(std::string_view comma_separated) {
  std::vector<CopStrategySpec> specs;
  std::size_t start = 0;
  while (start <= comma_separated.size()) {
    std::size_t pos = comma_separated.find(',', start);
    if (pos == std::string_view::npos) pos = comma_separated.size();
    specs.push_back(
        CopStrategySpec::parse(comma_separated.substr(start, pos - start)));
    start = pos + 1;
  }
  return specs;
}

AlgorithmOneCop::AlgorithmOneCop(int assigned_index, const GridShape& shape)
    : assigned_index_(assigned_index) {
  if (assigned_index < 0 ||
      static_cast<std::size_t>(assigned_index) >= shape.n()) {
    throw InvalidDimensionError("Algorithm-1 index " +
                                std::to_string(assigned_index) +
                                " out of range for shape " +
                                format_shape(shape));
  }
}

std::optional<Jump> AlgorithmOneCop::next(std::size_t cop_index,
                                          const Configuration& config,
                                          const GridShape& shape,
                                          std::int64_t /*tick*/) {
  return algorithm_one_next(assigned_index_, config.cops.at(cop_index),
                            config.robber, shape);
}

std::string AlgorithmOneCop::name() const {
  return "alg1:" + std::to_string(assigned_index_);
}

AlgorithmTwoCop::AlgorithmTwoCop(const GridShape& shape, TieRule tie_rule,
                                 std::uint64_t tie_seed,
                                 std::uint64_t stream_seed)
    : tie_rule_(tie_rule),
      tie_seed_(tie_seed),
      rng_(SplitMix64::mix(tie_seed + SplitMix64::kGolden * (stream_seed + 1))) {
  if (shape.n() != 2) {
    throw InvalidDimensionError("strategy S requires a two-dimensional grid");
  }
}

std::optional<Jump> AlgorithmTwoCop::next(std::size_t cop_index,
                                          const Configuration& config,
                                          const GridShape& shape,
                                          std::int64_t /*tick*/) {
  SplitMix64* rng = tie_rule_ == TieRule::SeededRandom ? &rng_ : nullptr;
  return algorithm_two_next(config.cops.at(cop_index), config.robber, shape,
                            rng);
}

std::string AlgorithmTwoCop::name() const {
  CopStrategySpec spec;
  spec.kind = CopStrategySpec::Kind::AlgorithmTwoS;
  spec.tie_rule = tie_rule_;
  spec.tie_seed = tie_seed_;
  return spec.canonical_name();
}

std::unique_ptr<CopStrategy> make_cop_strategy(const CopStrategySpec& spec,
                                               const GridShape& shape,
                                               std::uint64_t stream_seed) {
  switch (spec.kind) {
    case CopStrategySpec::Kind::AlgorithmOne:
      return std::make_unique<AlgorithmOneCop>(spec.assigned_index, shape);
    case CopStrategySpec::Kind::AlgorithmTwoS:
      return std::make_unique<AlgorithmTwoCop>(shape, spec.tie_rule,
                                               spec.tie_seed, stream_seed);
  }
  throw InternalConsistencyError("unhandled cop strategy kind");
}

}  // namespace gridpursuit
