#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridpursuit/grid.hpp"
#include "gridpursuit/rng.hpp"
#include "gridpursuit/strategy.hpp"

namespace gridpursuit {

/// Strategy S_i: scan axes in cyclic order i, i*1, ..., i*(n-1); move one step
/// toward the robber on the first axis where the coordinates differ. Returns
/// nullopt when the cop already stands on the robber's node (the scan finds no
/// differing axis). A pure function of its inputs; it never consults the
/// other cops.
std::optional<Jump> algorithm_one_next(int assigned_index, const Position& cop,
                                       const Position& robber_new,
                                       const GridShape& shape);

/// Strategy S (two dimensions): move on the axis with the larger coordinate
/// gap to the robber, toward the robber. A tie with nonzero gaps permits any
/// adjacent node; `tie_rng` selects the seeded-random resolution, null
/// selects the deterministic rule (axis 0 toward the robber). Returns
/// nullopt when both gaps are zero.
std::optional<Jump> algorithm_two_next(const Position& cop,
                                       const Position& robber_new,
                                       const GridShape& shape,
                                       SplitMix64* tie_rng = nullptr);

enum class TieRule { Deterministic, SeededRandom };

/// Parsed form of a cop strategy name: "alg1:<i>" or
/// "alg2s[:random-tie:<seed>]".
struct CopStrategySpec {
  enum class Kind { AlgorithmOne, AlgorithmTwoS };

  Kind kind = Kind::AlgorithmOne;
  int assigned_index = 0;                    // AlgorithmOne
  TieRule tie_rule = TieRule::Deterministic; // AlgorithmTwoS
  std::uint64_t tie_seed = 0;

  std::string canonical_name() const;

  static CopStrategySpec parse(std::string_view name);
};

std::vector<CopStrategySpec> parse_cop_specs(std::string_view comma_separated);

class AlgorithmOneCop final : public CopStrategy {
 public:
  AlgorithmOneCop(int assigned_index, const GridShape& shape);

  std::optional<Jump> next(std::size_t cop_index, const Configuration& config,
                           const GridShape& shape, std::int64_t tick) override;
  std::string name() const override;
  bool deterministic_memoryless() const override { return true; }
  std::optional<int> algorithm_one_index() const override {
    return assigned_index_;
  }

 private:
  int assigned_index_;
};

class AlgorithmTwoCop final : public CopStrategy {
 public:
  /// `stream_seed` feeds the private tie RNG (combined with the spec's tie
  /// seed); it is ignored under the deterministic rule.
  AlgorithmTwoCop(const GridShape& shape, TieRule tie_rule,
                  std::uint64_t tie_seed, std::uint64_t stream_seed);

  std::optional<Jump> next(std::size_t cop_index, const Configuration& config,
                           const GridShape& shape, std::int64_t tick) override;
  std::string name() const override;
  bool deterministic_memoryless() const override {
    return tie_rule_ == TieRule::Deterministic;
  }

 private:
  TieRule tie_rule_;
  std::uint64_t tie_seed_;
  SplitMix64 rng_;
};

/// Instantiates a strategy from its spec. `stream_seed` decorrelates any
/// internal randomness between trials; deterministic strategies ignore it.
std::unique_ptr<CopStrategy> make_cop_strategy(const CopStrategySpec& spec,
                                               const GridShape& shape,
                                               std::uint64_t stream_seed);

}  // namespace gridpursuit
